// Copyright 2026 The fdr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fdr/projection.h"

#include <algorithm>
#include <cassert>
#include <utility>

namespace fdr {

bool positivity(const SelectionPath& path) {
  bool positive = true;
  for (Selector s : path) {
    if (s == Selector::Dom) positive = !positive;
  }
  return positive;
}

std::string formatPath(const SelectionPath& path) {
  std::string out;
  for (Selector s : path) {
    switch (s) {
      case Selector::Dom: out += "dom"; break;
      case Selector::Ran: out += "ran"; break;
      case Selector::Fst: out += "fst"; break;
      case Selector::Snd: out += "snd"; break;
    }
    out += "·";
  }
  return out + "•";
}

std::optional<Selector> selectorOf(TypeKind projection) {
  switch (projection) {
    case TypeKind::Dom: return Selector::Dom;
    case TypeKind::Range: return Selector::Ran;
    case TypeKind::Fst: return Selector::Fst;
    case TypeKind::Snd: return Selector::Snd;
    default: return std::nullopt;
  }
}

TypeKind projectionOf(Selector s) {
  switch (s) {
    case Selector::Dom: return TypeKind::Dom;
    case Selector::Ran: return TypeKind::Range;
    case Selector::Fst: return TypeKind::Fst;
    case Selector::Snd: return TypeKind::Snd;
  }
  return TypeKind::Dom;
}

Spine spineOf(const TypePtr& t) {
  Spine s;
  TypePtr cur = t;
  while (cur->isProjection()) {
    s.path.push_back(*selectorOf(cur->kind()));
    cur = cur->inner();
  }
  std::reverse(s.path.begin(), s.path.end());
  s.base = cur;
  return s;
}

TypePtr rebuildSpine(const SelectionPath& path, const TypePtr& base) {
  TypePtr cur = base;
  for (Selector s : path) cur = Type::projection(projectionOf(s), cur);
  return cur;
}

namespace {

Rule congrRule(Selector s) {
  switch (s) {
    case Selector::Dom: return Rule::DomCongr;
    case Selector::Ran: return Rule::RangeCongr;
    case Selector::Fst: return Rule::FstCongr;
    case Selector::Snd: return Rule::SndCongr;
  }
  return Rule::DomCongr;
}

// Lifts `d : a <: b` through one projection. Dom reverses the direction.
DerivationPtr liftThrough(Selector s, const DerivationPtr& d) {
  TypeKind k = projectionOf(s);
  if (s == Selector::Dom) {
    return makeDerivation(Rule::DomCongr, d->ctx, Type::projection(k, d->rhs),
                          Type::projection(k, d->lhs), {d});
  }
  return makeDerivation(congrRule(s), d->ctx, Type::projection(k, d->lhs),
                        Type::projection(k, d->rhs), {d});
}

DerivationPtr axiom(Rule r, const Context& ctx, TypePtr lhs, TypePtr rhs) {
  return makeDerivation(r, ctx, std::move(lhs), std::move(rhs));
}

// Certificates for `P<base> == result` where P is the selector.
std::optional<Rewrite> resolveLocal(const Context& ctx, Selector s, const TypePtr& base) {
  TypePtr proj = Type::projection(projectionOf(s), base);
  const TypePtr top = Type::top();
  const TypePtr bot = Type::bot();
  auto make = [&](TypePtr to, DerivationPtr fwd, DerivationPtr bwd) {
    return Rewrite{proj, std::move(to), std::move(fwd), std::move(bwd)};
  };

  switch (base->kind()) {
    case TypeKind::Arrow:
      if (s == Selector::Dom) {
        return make(base->param(), axiom(Rule::DomElim, ctx, proj, base->param()),
                    axiom(Rule::DomIntro, ctx, base->param(), proj));
      }
      if (s == Selector::Ran) {
        return make(base->result(), axiom(Rule::RangeElim, ctx, proj, base->result()),
                    axiom(Rule::RangeIntro, ctx, base->result(), proj));
      }
      return std::nullopt;
    case TypeKind::Pair:
      if (s == Selector::Fst) {
        return make(base->first(), axiom(Rule::FstElim, ctx, proj, base->first()),
                    axiom(Rule::FstIntro, ctx, base->first(), proj));
      }
      if (s == Selector::Snd) {
        return make(base->second(), axiom(Rule::SndElim, ctx, proj, base->second()),
                    axiom(Rule::SndIntro, ctx, base->second(), proj));
      }
      return std::nullopt;
    case TypeKind::Top:
      if (s == Selector::Dom) {
        // Dom<Top> <: Dom<Bot -> Bot> <: Bot
        TypePtr witness = Type::arrow(bot, bot);
        TypePtr domWitness = Type::dom(witness);
        auto congr = makeDerivation(Rule::DomCongr, ctx, proj, domWitness,
                                    {axiom(Rule::Top, ctx, witness, top)});
        return make(bot, chain(congr, axiom(Rule::DomElim, ctx, domWitness, bot)),
                    axiom(Rule::Bot, ctx, bot, proj));
      }
      if (s == Selector::Ran) {
        // Top <: Range<Top -> Top> <: Range<Top>
        TypePtr witness = Type::arrow(top, top);
        TypePtr rangeWitness = Type::range(witness);
        auto congr = makeDerivation(Rule::RangeCongr, ctx, rangeWitness, proj,
                                    {axiom(Rule::Top, ctx, witness, top)});
        return make(top, axiom(Rule::Top, ctx, proj, top),
                    chain(axiom(Rule::RangeIntro, ctx, top, rangeWitness), congr));
      }
      {
        // Top <: Fst<[Top, Top]> <: Fst<Top>, and the Snd analogue.
        TypePtr witness = Type::pair(top, top);
        TypePtr projWitness = Type::projection(projectionOf(s), witness);
        auto congr = makeDerivation(congrRule(s), ctx, projWitness, proj,
                                    {axiom(Rule::Top, ctx, witness, top)});
        Rule intro = s == Selector::Fst ? Rule::FstIntro : Rule::SndIntro;
        return make(top, axiom(Rule::Top, ctx, proj, top),
                    chain(axiom(intro, ctx, top, projWitness), congr));
      }
    case TypeKind::Bot:
      if (s == Selector::Dom) {
        // Top <: Dom<Top -> Top> <: Dom<Bot>
        TypePtr witness = Type::arrow(top, top);
        TypePtr domWitness = Type::dom(witness);
        auto congr = makeDerivation(Rule::DomCongr, ctx, domWitness, proj,
                                    {axiom(Rule::Bot, ctx, bot, witness)});
        return make(top, axiom(Rule::Top, ctx, proj, top),
                    chain(axiom(Rule::DomIntro, ctx, top, domWitness), congr));
      }
      if (s == Selector::Ran) {
        // Range<Bot> <: Range<Top -> Bot> <: Bot
        TypePtr witness = Type::arrow(top, bot);
        TypePtr rangeWitness = Type::range(witness);
        auto congr = makeDerivation(Rule::RangeCongr, ctx, proj, rangeWitness,
                                    {axiom(Rule::Bot, ctx, bot, witness)});
        return make(bot, chain(congr, axiom(Rule::RangeElim, ctx, rangeWitness, bot)),
                    axiom(Rule::Bot, ctx, bot, proj));
      }
      {
        // Fst<Bot> <: Fst<[Bot, Bot]> <: Bot, and the Snd analogue.
        TypePtr witness = Type::pair(bot, bot);
        TypePtr projWitness = Type::projection(projectionOf(s), witness);
        auto congr = makeDerivation(congrRule(s), ctx, proj, projWitness,
                                    {axiom(Rule::Bot, ctx, bot, witness)});
        Rule elim = s == Selector::Fst ? Rule::FstElim : Rule::SndElim;
        return make(bot, chain(congr, axiom(elim, ctx, projWitness, bot)),
                    axiom(Rule::Bot, ctx, bot, proj));
      }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<Rewrite> resolveStep(const Context& ctx, const TypePtr& t) {
  Spine spine = spineOf(t);
  if (spine.path.empty()) return std::nullopt;
  auto local = resolveLocal(ctx, spine.path.front(), spine.base);
  if (!local) return std::nullopt;

  TypePtr to = local->to;
  DerivationPtr fwd = local->forward;
  DerivationPtr bwd = local->backward;
  for (std::size_t i = 1; i < spine.path.size(); ++i) {
    Selector s = spine.path[i];
    to = Type::projection(projectionOf(s), to);
    DerivationPtr liftedFwd = liftThrough(s, s == Selector::Dom ? bwd : fwd);
    DerivationPtr liftedBwd = liftThrough(s, s == Selector::Dom ? fwd : bwd);
    fwd = std::move(liftedFwd);
    bwd = std::move(liftedBwd);
  }
  return Rewrite{t, to, fwd, bwd};
}

HeadNormal headNormalize(const Context& ctx, const TypePtr& t) {
  HeadNormal out;
  auto refl = makeDerivation(Rule::Refl, ctx, t, t);
  out.rewrite = Rewrite{t, t, refl, refl};
  while (auto step = resolveStep(ctx, out.rewrite.to)) {
    out.rewrite.forward = chain(out.rewrite.forward, step->forward);
    out.rewrite.backward = chain(step->backward, out.rewrite.backward);
    out.rewrite.to = step->to;
    out.steps.push_back(std::move(*step));
  }
  return out;
}

std::optional<BaseReplacement> replaceBase(const Context& ctx, const TypePtr& t) {
  Spine spine = spineOf(t);
  if (!spine.base->is(TypeKind::Var)) return std::nullopt;
  auto bound = ctx.typeBound(spine.base->index());
  if (!bound) return std::nullopt;

  // d relates the old and new type at the current level; `upward` says
  // whether it reads old <: new.
  DerivationPtr d = makeDerivation(Rule::Var, ctx, spine.base, *bound);
  bool upward = true;
  for (Selector s : spine.path) {
    d = liftThrough(s, d);
    if (s == Selector::Dom) upward = !upward;
  }
  return BaseReplacement{rebuildSpine(spine.path, *bound), upward, d};
}

std::optional<BaseReplacement> promote(const Context& ctx, const TypePtr& t) {
  auto r = replaceBase(ctx, t);
  if (!r || !r->upward) return std::nullopt;
  return r;
}

std::optional<BaseReplacement> demote(const Context& ctx, const TypePtr& t) {
  auto r = replaceBase(ctx, t);
  if (!r || r->upward) return std::nullopt;
  return r;
}

namespace {

ExposureKind headKind(const TypePtr& t) {
  switch (t->kind()) {
    case TypeKind::Arrow: return ExposureKind::Arrow;
    case TypeKind::All: return ExposureKind::All;
    case TypeKind::Pair: return ExposureKind::Pair;
    case TypeKind::Base: return ExposureKind::Base;
    case TypeKind::Top: return ExposureKind::Top;
    case TypeKind::Bot: return ExposureKind::Bot;
    default: return ExposureKind::Opaque;
  }
}

}  // namespace

Exposure expose(const Context& ctx, const TypePtr& t) {
  Exposure out;
  out.derivation = makeDerivation(Rule::Refl, ctx, t, t);
  TypePtr cur = t;
  for (;;) {
    HeadNormal hn = headNormalize(ctx, cur);
    for (auto& step : hn.steps) {
      out.chain.push_back(ExposureStep{ExposureStep::Kind::Resolution, step.from, step.to,
                                       step.forward, step.backward});
    }
    out.derivation = chain(out.derivation, hn.rewrite.forward);
    cur = hn.rewrite.to;
    ExposureKind kind = headKind(cur);
    if (kind != ExposureKind::Opaque) {
      out.kind = kind;
      out.head = cur;
      return out;
    }
    auto up = promote(ctx, cur);
    if (!up) {
      out.kind = ExposureKind::Opaque;
      out.head = cur;
      return out;
    }
    out.chain.push_back(
        ExposureStep{ExposureStep::Kind::Promotion, cur, up->to, up->derivation, nullptr});
    out.derivation = chain(out.derivation, up->derivation);
    cur = up->to;
  }
}

std::string_view exposureName(ExposureKind kind) {
  switch (kind) {
    case ExposureKind::Arrow: return "arrow";
    case ExposureKind::All: return "forall";
    case ExposureKind::Pair: return "pair";
    case ExposureKind::Base: return "base";
    case ExposureKind::Top: return "top";
    case ExposureKind::Bot: return "bot";
    case ExposureKind::Opaque: return "opaque";
  }
  return "?";
}

}  // namespace fdr
