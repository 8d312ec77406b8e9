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

#include "fdr/fuzz.h"

#include <fmt/format.h>

#include <functional>
#include <set>
#include <utility>

#include "fdr/printer.h"
#include "fdr/projection.h"
#include "fdr/subtype.h"
#include "fdr/typing.h"

namespace fdr {

namespace {

// Upper bound on generator calls for one top-level request, so that goals
// without inhabitants are abandoned quickly.
constexpr int kCallBudget = 4000;

bool below(const Context& ctx, const TypePtr& s, const TypePtr& t) {
  return subtype(ctx, s, t).accepted();
}

TypePtr pairTop() { return Type::pair(Type::top(), Type::top()); }

// Term variables visible in ctx with their (shifted) declared types, most
// recent first and without shadowed duplicates.
std::vector<std::pair<std::string, TypePtr>> termVars(const Context& ctx) {
  std::vector<std::pair<std::string, TypePtr>> out;
  std::set<std::string> seen;
  const auto& entries = ctx.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->kind != Context::EntryKind::Term || !seen.insert(it->name).second) continue;
    out.emplace_back(it->name, *ctx.termType(it->name));
  }
  return out;
}

class Generator {
 public:
  Generator(Rng& rng, const GenConfig& config) : rng_(rng), config_(config) {}

  std::optional<TermPtr> run(const Context& ctx, const TypePtr& goal, int depth) {
    budget_ = kCallBudget;
    return gen(ctx, goal, depth);
  }

  // A small type, well formed in ctx, used for intermediate choices.
  TypePtr smallType(const Context& ctx) {
    TypePtr b = Type::base();
    std::vector<TypePtr> choices = {
        b,
        Type::top(),
        Type::arrow(b, b),
        Type::arrow(Type::top(), b),
        Type::all("X", Type::top(), Type::arrow(Type::var(0, "X"), Type::var(0, "X"))),
    };
    if (config_.pairs) {
      choices.push_back(Type::pair(b, b));
      choices.push_back(Type::pair(Type::arrow(b, b), b));
    }
    for (int i = 0; i < ctx.numTypeVars(); ++i) {
      choices.push_back(Type::var(i, ctx.typeVarName(i).value_or("X")));
    }
    return choices[rng_.below(choices.size())];
  }

 private:
  using Attempt = std::function<std::optional<TermPtr>()>;

  unsigned weight(Strategy s) const {
    auto it = config_.weights.find(s);
    return it == config_.weights.end() ? 1 : it->second;
  }

  std::string freshTerm() { return fmt::format("x{}", ++fresh_); }
  std::string freshType() { return fmt::format("X{}", ++fresh_); }

  std::optional<TermPtr> gen(const Context& ctx, const TypePtr& goal, int depth) {
    if (--budget_ < 0 || depth < 0) return std::nullopt;
    const TypePtr g = headNormalize(ctx, goal).rewrite.to;

    std::vector<std::pair<unsigned, Attempt>> options;
    auto offer = [&](Strategy s, Attempt a) {
      if (unsigned w = weight(s)) options.emplace_back(w, std::move(a));
    };

    const auto vars = termVars(ctx);

    // Leaves.
    if (below(ctx, Type::base(), goal)) {
      offer(Strategy::Const, [] { return std::optional<TermPtr>(Term::constant()); });
    }
    for (const auto& [name, type] : vars) {
      if (below(ctx, type, goal)) {
        offer(Strategy::Var, [name = name] { return std::optional<TermPtr>(Term::var(name)); });
      }
    }

    if (depth > 0) {
      // Introductions.
      if (g->is(TypeKind::Arrow)) {
        offer(Strategy::Abs, [&, depth]() -> std::optional<TermPtr> {
          std::string x = freshTerm();
          auto body = gen(ctx.extendTerm(x, g->param()), g->result(), depth - 1);
          if (!body) return std::nullopt;
          return Term::abs(x, g->param(), *body);
        });
      }
      if (g->is(TypeKind::All)) {
        offer(Strategy::TAbs, [&, depth]() -> std::optional<TermPtr> {
          const std::string& hint = g->hint().empty() ? "X" : g->hint();
          auto body = gen(ctx.extendType(hint, g->bound()), g->body(), depth - 1);
          if (!body) return std::nullopt;
          return Term::tabs(hint, g->bound(), *body);
        });
      }
      if (g->is(TypeKind::Pair)) {
        offer(Strategy::Pair, [&, depth]() -> std::optional<TermPtr> {
          auto l = gen(ctx, g->first(), depth - 1);
          if (!l) return std::nullopt;
          auto r = gen(ctx, g->second(), depth - 1);
          if (!r) return std::nullopt;
          return Term::pair(*l, *r);
        });
      }

      // Eliminations of variables in scope.
      for (const auto& [name, type] : vars) {
        TypePtr range = headNormalize(ctx, Type::range(type)).rewrite.to;
        if (below(ctx, range, goal)) {
          offer(Strategy::Apply, [&, depth, name = name, type = type]() -> std::optional<TermPtr> {
            auto arg = gen(ctx, Type::dom(type), depth - 1);
            if (!arg) return std::nullopt;
            return Term::app(Term::var(name), *arg);
          });
        }
        if (below(ctx, type, pairTop())) {
          for (bool first : {true, false}) {
            TypePtr part = first ? Type::fst(type) : Type::snd(type);
            if (!below(ctx, headNormalize(ctx, part).rewrite.to, goal)) continue;
            offer(Strategy::Project, [name = name, first] {
              TermPtr v = Term::var(name);
              return std::optional<TermPtr>(first ? Term::fst(v) : Term::snd(v));
            });
          }
        }
      }

      if (g->is(TypeKind::Top)) {
        offer(Strategy::Widen, [&, depth] { return gen(ctx, smallType(ctx), depth - 1); });
      }
    }

    if (depth > 1) {
      // Redexes, which give the evaluator something to do.
      offer(Strategy::Beta, [&, depth]() -> std::optional<TermPtr> {
        TypePtr a = smallType(ctx);
        std::string x = freshTerm();
        auto body = gen(ctx.extendTerm(x, a), goal, depth - 1);
        if (!body) return std::nullopt;
        auto arg = gen(ctx, a, depth - 1);
        if (!arg) return std::nullopt;
        return Term::app(Term::abs(x, a, *body), *arg);
      });
      offer(Strategy::TypeBeta, [&, depth]() -> std::optional<TermPtr> {
        TypePtr s = smallType(ctx);
        std::string hint = freshType();
        auto body = gen(ctx.extendType(hint, Type::top()), shiftType(goal, 1), depth - 1);
        if (!body) return std::nullopt;
        return Term::tapp(Term::tabs(hint, Type::top(), *body), s);
      });
      offer(Strategy::PolyId, [&, depth]() -> std::optional<TermPtr> {
        auto arg = gen(ctx, goal, depth - 1);
        if (!arg) return std::nullopt;
        std::string hint = freshType();
        std::string x = freshTerm();
        TermPtr id = Term::tabs(hint, Type::top(),
                                Term::abs(x, Type::var(0, hint), Term::var(x)));
        return Term::app(Term::tapp(id, goal), *arg);
      });
      if (config_.pairs) {
        offer(Strategy::Split, [&, depth]() -> std::optional<TermPtr> {
          bool first = rng_.chance(50);
          TypePtr other = smallType(ctx);
          TypePtr want = first ? Type::pair(goal, other) : Type::pair(other, goal);
          auto inner = gen(ctx, want, depth - 1);
          if (!inner) return std::nullopt;
          return first ? Term::fst(*inner) : Term::snd(*inner);
        });
      }
    }

    if (depth > 2) {
      // (tfun (F <: Top) => fun (f : F) => fun (x : Dom<F>) => f x) [A -> goal] g a
      offer(Strategy::Eta, [&, depth]() -> std::optional<TermPtr> {
        TypePtr a = smallType(ctx);
        TypePtr fnType = Type::arrow(a, goal);
        auto fn = gen(ctx, fnType, depth - 1);
        if (!fn) return std::nullopt;
        auto arg = gen(ctx, a, depth - 1);
        if (!arg) return std::nullopt;
        std::string hint = freshType();
        std::string f = freshTerm();
        std::string x = freshTerm();
        TypePtr var = Type::var(0, hint);
        TermPtr eta = Term::tabs(
            hint, Type::top(),
            Term::abs(f, var, Term::abs(x, Type::dom(var), Term::app(Term::var(f), Term::var(x)))));
        return Term::app(Term::app(Term::tapp(eta, fnType), *fn), *arg);
      });
    }

    // Try the options in a weighted random order until one succeeds.
    while (!options.empty()) {
      unsigned total = 0;
      for (const auto& o : options) total += o.first;
      std::size_t roll = rng_.below(total);
      std::size_t pick = 0;
      while (roll >= options[pick].first) roll -= options[pick++].first;
      Attempt attempt = std::move(options[pick].second);
      options.erase(options.begin() + static_cast<std::ptrdiff_t>(pick));
      if (auto t = attempt()) return t;
      if (budget_ < 0) return std::nullopt;
    }
    return std::nullopt;
  }

  Rng& rng_;
  const GenConfig& config_;
  int budget_ = 0;
  int fresh_ = 0;
};

// The reason a term fails, or nothing when it is well behaved.
struct Verdict {
  std::optional<SoundnessFailure::Kind> kind;
  std::string detail;
  bool skipped = false;
};

Verdict judge(const TermPtr& t, const TypePtr& goal, std::size_t fuel, EvalStats* stats) {
  TypePtr type;
  try {
    type = synthesize(Context(), t).type;
  } catch (const TypeError& e) {
    return {SoundnessFailure::Kind::Check, fmt::format("{}: {}", typeErrorName(e.kind()), e.what())};
  }
  if (!below(Context(), type, goal)) {
    return {SoundnessFailure::Kind::Check,
            fmt::format("synthesized {} is not below the goal", printType(Context(), type))};
  }
  EvalOutcome out = eval(ValueEnv(), t, fuel, stats);
  switch (out.status) {
    case EvalOutcome::Status::OutOfFuel:
      return {SoundnessFailure::Kind::OutOfFuel, fmt::format("after {} steps", out.steps)};
    case EvalOutcome::Status::Stuck:
      return {SoundnessFailure::Kind::Stuck, out.reason};
    case EvalOutcome::Status::Value:
      break;
  }
  switch (shapeCheck(*out.value, type)) {
    case ShapeVerdict::Mismatch:
      return {SoundnessFailure::Kind::Shape,
              fmt::format("value {} at type {}", printValue(*out.value), printType(Context(), type))};
    case ShapeVerdict::Skipped:
      return {std::nullopt, {}, true};
    case ShapeVerdict::Pass:
      break;
  }
  return {};
}

// Subterms in preorder.
void collect(const TermPtr& t, std::vector<TermPtr>& out) {
  out.push_back(t);
  if (t->left()) collect(t->left(), out);
  if (t->right()) collect(t->right(), out);
}

TermPtr replaceAt(const TermPtr& t, std::size_t& index, const TermPtr& replacement) {
  if (index == 0) return replacement;
  --index;
  TermPtr l = t->left() ? replaceAt(t->left(), index, replacement) : nullptr;
  TermPtr r = t->right() ? replaceAt(t->right(), index, replacement) : nullptr;
  if (l == t->left() && r == t->right()) return t;
  switch (t->kind()) {
    case TermKind::Abs: return Term::abs(t->name(), t->type(), l, t->span());
    case TermKind::TAbs: return Term::tabs(t->name(), t->type(), l, t->span());
    case TermKind::App: return Term::app(l, r, t->span());
    case TermKind::TApp: return Term::tapp(l, t->type(), t->span());
    case TermKind::Pair: return Term::pair(l, r, t->span());
    case TermKind::Fst: return Term::fst(l, t->span());
    case TermKind::Snd: return Term::snd(l, t->span());
    case TermKind::Const:
    case TermKind::Var: break;
  }
  return t;
}

// Greedily replaces subterms by `c` while the term still type checks and
// still fails the same way.
TermPtr minimize(TermPtr t, SoundnessFailure::Kind kind, std::size_t fuel) {
  const TermPtr c = Term::constant();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<TermPtr> subterms;
    collect(t, subterms);
    for (std::size_t i = 0; i < subterms.size(); ++i) {
      if (subterms[i]->is(TermKind::Const)) continue;
      std::size_t index = i;
      TermPtr candidate = replaceAt(t, index, c);
      TypePtr type;
      try {
        type = synthesize(Context(), candidate).type;
      } catch (const TypeError&) {
        continue;
      }
      if (judge(candidate, type, fuel, nullptr).kind == kind) {
        t = candidate;
        changed = true;
        break;
      }
    }
  }
  return t;
}

std::string_view failureName(SoundnessFailure::Kind kind) {
  switch (kind) {
    case SoundnessFailure::Kind::Check: return "check";
    case SoundnessFailure::Kind::OutOfFuel: return "out-of-fuel";
    case SoundnessFailure::Kind::Stuck: return "stuck";
    case SoundnessFailure::Kind::Shape: return "shape";
  }
  return "?";
}

// A random closed type of at most maxSize nodes.
TypePtr randomType(Rng& rng, std::size_t maxSize, bool pairs, int binders) {
  std::vector<TypeKind> kinds = {TypeKind::Base, TypeKind::Top};
  if (binders > 0) kinds.push_back(TypeKind::Var);
  if (maxSize >= 2) {
    kinds.insert(kinds.end(), {TypeKind::Dom, TypeKind::Range});
    if (pairs) kinds.insert(kinds.end(), {TypeKind::Fst, TypeKind::Snd});
  }
  if (maxSize >= 3) {
    kinds.insert(kinds.end(), {TypeKind::Arrow, TypeKind::Arrow, TypeKind::All});
    if (pairs) kinds.push_back(TypeKind::Pair);
  }
  TypeKind k = kinds[rng.below(kinds.size())];
  switch (k) {
    case TypeKind::Base: return Type::base();
    case TypeKind::Top: return Type::top();
    case TypeKind::Var: return Type::var(static_cast<int>(rng.below(binders)), "Y");
    case TypeKind::Dom:
    case TypeKind::Range:
    case TypeKind::Fst:
    case TypeKind::Snd:
      return Type::projection(k, randomType(rng, maxSize - 1, pairs, binders));
    case TypeKind::Arrow:
    case TypeKind::Pair:
    case TypeKind::All: {
      std::size_t leftSize = 1 + rng.below(maxSize - 2);
      TypePtr l = randomType(rng, leftSize, pairs, binders);
      TypePtr r = randomType(rng, maxSize - 1 - l->size(), pairs, binders + (k == TypeKind::All));
      if (k == TypeKind::Arrow) return Type::arrow(l, r);
      if (k == TypeKind::Pair) return Type::pair(l, r);
      return Type::all("Y", l, r);
    }
    case TypeKind::Bot: break;
  }
  return Type::base();
}

}  // namespace

std::optional<TermPtr> genWellTypedTerm(const Context& ctx, const TypePtr& goal, int depth,
                                        Rng& rng, const GenConfig& config) {
  Generator g(rng, config);
  auto t = g.run(ctx, goal, depth);
  if (!t) return std::nullopt;
  try {
    TypePtr type = synthesize(ctx, *t).type;
    if (below(ctx, type, goal)) return t;
  } catch (const TypeError&) {
  }
  throw GeneratorError(fmt::format("generated term {} does not check against {}",
                                   printTerm(ctx, *t), printType(ctx, goal)));
}

ShapeVerdict shapeCheck(const Value& v, const TypePtr& type) {
  Exposure e = expose(Context(), type);
  switch (e.kind) {
    case ExposureKind::Top: return ShapeVerdict::Pass;
    case ExposureKind::Bot: return ShapeVerdict::Mismatch;
    case ExposureKind::Opaque: return ShapeVerdict::Skipped;
    case ExposureKind::Base:
      return v.is(Value::Kind::Const) ? ShapeVerdict::Pass : ShapeVerdict::Mismatch;
    case ExposureKind::Arrow:
      return v.is(Value::Kind::Closure) ? ShapeVerdict::Pass : ShapeVerdict::Mismatch;
    case ExposureKind::All:
      return v.is(Value::Kind::TypeClosure) ? ShapeVerdict::Pass : ShapeVerdict::Mismatch;
    case ExposureKind::Pair: {
      if (!v.is(Value::Kind::Pair)) return ShapeVerdict::Mismatch;
      ShapeVerdict a = shapeCheck(*v.first, e.head->first());
      ShapeVerdict b = shapeCheck(*v.second, e.head->second());
      if (a == ShapeVerdict::Mismatch || b == ShapeVerdict::Mismatch) return ShapeVerdict::Mismatch;
      if (a == ShapeVerdict::Skipped || b == ShapeVerdict::Skipped) return ShapeVerdict::Skipped;
      return ShapeVerdict::Pass;
    }
  }
  return ShapeVerdict::Skipped;
}

std::vector<TypePtr> goalPool(Rng& rng, const GenConfig& config) {
  TypePtr b = Type::base();
  TypePtr top = Type::top();
  TypePtr bb = Type::arrow(b, b);
  TypePtr x = Type::var(0, "X");
  std::vector<TypePtr> pool = {
      b,
      top,
      bb,
      Type::arrow(bb, b),
      Type::arrow(b, bb),
      Type::arrow(top, b),
      Type::all("X", top, Type::arrow(x, x)),
      Type::all("X", bb, Type::arrow(x, b)),
      Type::all("F", top, Type::arrow(x, Type::arrow(Type::dom(x), Type::range(x)))),
      Type::all("F", bb, Type::arrow(x, Type::arrow(Type::dom(x), Type::range(x)))),
      Type::range(bb),
      Type::arrow(Type::dom(bb), b),
  };
  if (config.pairs) {
    TypePtr pt = Type::pair(top, top);
    pool.push_back(Type::pair(b, b));
    pool.push_back(Type::pair(bb, b));
    pool.push_back(Type::arrow(Type::pair(b, bb), bb));
    pool.push_back(Type::fst(Type::pair(b, bb)));
    pool.push_back(Type::all("X", pt, Type::arrow(x, Type::fst(x))));
    pool.push_back(Type::all("X", Type::pair(b, bb), Type::arrow(x, Type::snd(x))));
  }
  for (int i = 0; i < 8; ++i) {
    pool.push_back(randomType(rng, config.maxTypeSize, config.pairs, 0));
  }
  return pool;
}

SoundnessReport runSoundness(const GenConfig& config) {
  SoundnessReport report;
  report.config = config;
  Rng rng(config.seed);
  const std::vector<TypePtr> pool = goalPool(rng, config);

  std::size_t next = 0;
  // Every goal in the pool may turn out uninhabited; give up on a request
  // after trying each of them once.
  while (report.generated < config.count) {
    std::optional<TermPtr> term;
    TypePtr goal;
    for (std::size_t tries = 0; tries < pool.size() && !term; ++tries) {
      goal = pool[next++ % pool.size()];
      Generator g(rng, config);
      term = g.run(Context(), goal, config.maxTermDepth);
      if (!term) ++report.goalsWithoutInhabitant;
    }
    if (!term) break;
    ++report.generated;

    Verdict v = judge(*term, goal, config.fuel, &report.evalStats);
    if (v.skipped) ++report.skippedOpaque;
    if (!v.kind) continue;
    switch (*v.kind) {
      case SoundnessFailure::Kind::Check: ++report.checkFailures; break;
      case SoundnessFailure::Kind::OutOfFuel: ++report.outOfFuel; break;
      case SoundnessFailure::Kind::Stuck: ++report.stuck; break;
      case SoundnessFailure::Kind::Shape: ++report.shapeMismatches; break;
    }
    TermPtr witness = *v.kind == SoundnessFailure::Kind::Check
                          ? *term
                          : minimize(*term, *v.kind, config.fuel);
    report.failures.push_back(SoundnessFailure{*v.kind, goal, witness, v.detail});
  }
  return report;
}

std::string SoundnessReport::serialize() const {
  std::string out = fmt::format("FUZZ seed={} count={} depth={} fuel={}\n", config.seed,
                                config.count, config.maxTermDepth, config.fuel);
  for (const auto& f : failures) {
    out += fmt::format("FAIL {} goal={} term={} detail={}\n", failureName(f.kind),
                       printType(Context(), f.goal), printTerm(Context(), f.term), f.detail);
  }
  out += "RULES";
  for (std::size_t i = 0; i < kEvalRuleCount; ++i) {
    out += fmt::format(" {}={}", evalRuleName(static_cast<EvalRule>(i)), evalStats.applications[i]);
  }
  out += "\n";
  out += fmt::format(
      "SUMMARY generated={} check_failures={} out_of_fuel={} stuck={} shape_mismatches={} "
      "skipped_opaque={} uninhabited_attempts={}\n",
      generated, checkFailures, outOfFuel, stuck, shapeMismatches, skippedOpaque,
      goalsWithoutInhabitant);
  return out;
}

}  // namespace fdr
