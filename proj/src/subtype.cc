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

#include "fdr/subtype.h"

#include <fmt/format.h>

#include <utility>

#include "fdr/printer.h"
#include "fdr/projection.h"

namespace fdr {

std::string RejectionTrace::format() const {
  std::string out;
  int depth = 0;
  for (const auto& g : goals) {
    out += fmt::format("{:{}}{} <: {}\n", "", depth, printType(g.ctx, g.lhs),
                       printType(g.ctx, g.rhs));
    depth += 2;
  }
  return out;
}

namespace {

class Subtyper {
 public:
  DerivationPtr run(const Context& ctx, const TypePtr& s, const TypePtr& t) {
    return check(ctx, s, t);
  }

  RejectionTrace takeTrace() { return RejectionTrace{std::move(deepest_)}; }

 private:
  struct Frame {
    Subtyper& self;
    Frame(Subtyper& s, const Context& ctx, const TypePtr& lhs, const TypePtr& rhs) : self(s) {
      self.stack_.push_back(SubtypeGoal{ctx, lhs, rhs});
    }
    ~Frame() { self.stack_.pop_back(); }
  };

  DerivationPtr fail() {
    if (stack_.size() > deepest_.size()) deepest_ = stack_;
    return nullptr;
  }

  DerivationPtr check(const Context& ctx, const TypePtr& s, const TypePtr& t) {
    Frame frame(*this, ctx, s, t);

    if (t->is(TypeKind::Top)) return makeDerivation(Rule::Top, ctx, s, t);
    if (s->is(TypeKind::Bot)) return makeDerivation(Rule::Bot, ctx, s, t);
    if (sameType(s, t)) return makeDerivation(Rule::Refl, ctx, s, t);

    HeadNormal hs = headNormalize(ctx, s);
    HeadNormal ht = headNormalize(ctx, t);
    if (!hs.steps.empty() || !ht.steps.empty()) {
      DerivationPtr inner = check(ctx, hs.rewrite.to, ht.rewrite.to);
      if (!inner) return nullptr;
      return chain(hs.rewrite.forward, chain(inner, ht.rewrite.backward));
    }

    if (DerivationPtr d = structural(ctx, s, t)) return d;
    if (DerivationPtr d = congruence(ctx, s, t)) return d;

    if (auto up = promote(ctx, s)) {
      if (DerivationPtr d = check(ctx, up->to, t)) return chain(up->derivation, d);
    }
    if (auto down = demote(ctx, t)) {
      if (DerivationPtr d = check(ctx, s, down->to)) return chain(d, down->derivation);
    }
    return fail();
  }

  DerivationPtr structural(const Context& ctx, const TypePtr& s, const TypePtr& t) {
    if (s->kind() != t->kind()) return nullptr;
    switch (s->kind()) {
      case TypeKind::Arrow: {
        DerivationPtr params = check(ctx, t->param(), s->param());
        if (!params) return nullptr;
        DerivationPtr results = check(ctx, s->result(), t->result());
        if (!results) return nullptr;
        return makeDerivation(Rule::Fun, ctx, s, t, {params, results});
      }
      case TypeKind::Pair: {
        DerivationPtr firsts = check(ctx, s->first(), t->first());
        if (!firsts) return nullptr;
        DerivationPtr seconds = check(ctx, s->second(), t->second());
        if (!seconds) return nullptr;
        return makeDerivation(Rule::Pair, ctx, s, t, {firsts, seconds});
      }
      case TypeKind::All: {
        if (!sameType(s->bound(), t->bound())) return fail();
        Context inner = ctx.extendType(s->hint().empty() ? "X" : s->hint(), s->bound());
        DerivationPtr bodies = check(inner, s->body(), t->body());
        if (!bodies) return nullptr;
        return makeDerivation(Rule::All, ctx, s, t, {bodies});
      }
      default:
        return nullptr;
    }
  }

  DerivationPtr congruence(const Context& ctx, const TypePtr& s, const TypePtr& t) {
    if (!s->isProjection() || s->kind() != t->kind()) return nullptr;
    switch (s->kind()) {
      case TypeKind::Dom: {
        DerivationPtr d = check(ctx, t->inner(), s->inner());
        return d ? makeDerivation(Rule::DomCongr, ctx, s, t, {d}) : nullptr;
      }
      case TypeKind::Range:
      case TypeKind::Fst:
      case TypeKind::Snd: {
        DerivationPtr d = check(ctx, s->inner(), t->inner());
        if (!d) return nullptr;
        Rule r = s->is(TypeKind::Range) ? Rule::RangeCongr
                 : s->is(TypeKind::Fst) ? Rule::FstCongr
                                        : Rule::SndCongr;
        return makeDerivation(r, ctx, s, t, {d});
      }
      default:
        return nullptr;
    }
  }

  std::vector<SubtypeGoal> stack_;
  std::vector<SubtypeGoal> deepest_;
};

}  // namespace

SubtypeResult subtype(const Context& ctx, const TypePtr& s, const TypePtr& t) {
  if (!wellFormed(ctx, s)) {
    throw IllFormedType("left-hand type is not well-formed: " + printType(ctx, s));
  }
  if (!wellFormed(ctx, t)) {
    throw IllFormedType("right-hand type is not well-formed: " + printType(ctx, t));
  }
  Subtyper subtyper;
  SubtypeResult result;
  result.derivation = subtyper.run(ctx, s, t);
  if (!result.derivation) result.trace = subtyper.takeTrace();
  return result;
}

}  // namespace fdr
