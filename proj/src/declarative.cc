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

#include "fdr/declarative.h"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>

#include "fdr/printer.h"

namespace fdr {

// ---------------------------------------------------------------------------
// Derivation checking

namespace {

std::size_t arity(Rule r) {
  switch (r) {
    case Rule::Trans:
    case Rule::Fun:
    case Rule::Pair:
      return 2;
    case Rule::All:
    case Rule::DomCongr:
    case Rule::RangeCongr:
    case Rule::FstCongr:
    case Rule::SndCongr:
      return 1;
    default:
      return 0;
  }
}

bool is(const TypePtr& t, TypeKind k) { return t && t->is(k); }

class Checker {
 public:
  CheckVerdict verdict;

  bool check(const Derivation& d) {
    if (!d.lhs || !d.rhs) return fail(d, "missing conclusion type");
    if (!wellFormed(d.ctx, d.lhs)) return fail(d, "left-hand side is not well-formed");
    if (!wellFormed(d.ctx, d.rhs)) return fail(d, "right-hand side is not well-formed");
    if (d.premises.size() != arity(d.rule)) {
      return fail(d, fmt::format("{} takes {} premises, found {}", ruleName(d.rule),
                                 arity(d.rule), d.premises.size()));
    }
    for (const auto& p : d.premises) {
      if (!p) return fail(d, "missing premise");
    }
    if (d.rule != Rule::All) {
      for (const auto& p : d.premises) {
        if (!(p->ctx == d.ctx)) return fail(d, "premise context differs from conclusion");
      }
    }
    if (!schema(d)) return false;
    for (const auto& p : d.premises) {
      if (!check(*p)) return false;
    }
    return true;
  }

 private:
  bool fail(const Derivation& d, std::string reason) {
    verdict.ok = false;
    verdict.offending = &d;
    verdict.reason = std::move(reason);
    return false;
  }

  // Premise i must conclude lhs <: rhs.
  bool premise(const Derivation& d, std::size_t i, const TypePtr& lhs, const TypePtr& rhs) {
    const Derivation& p = *d.premises[i];
    if (sameType(p.lhs, lhs) && sameType(p.rhs, rhs)) return true;
    return fail(d, fmt::format("premise {} concludes {} <: {}, expected {} <: {}", i + 1,
                               printType(p.ctx, p.lhs), printType(p.ctx, p.rhs),
                               printType(p.ctx, lhs), printType(p.ctx, rhs)));
  }

  bool shape(const Derivation& d, bool ok) {
    return ok || fail(d, fmt::format("conclusion does not match {}", ruleName(d.rule)));
  }

  // For intro/elim: `wrapped` must be P<structure> and `component` the
  // selected part of the structure.
  bool projectionAxiom(const Derivation& d, const TypePtr& wrapped, const TypePtr& component,
                       TypeKind proj, TypeKind structure, bool firstComponent) {
    if (!is(wrapped, proj) || !is(wrapped->inner(), structure)) return shape(d, false);
    const TypePtr& s = wrapped->inner();
    return shape(d, sameType(firstComponent ? s->left() : s->right(), component));
  }

  bool schema(const Derivation& d) {
    const TypePtr& l = d.lhs;
    const TypePtr& r = d.rhs;
    switch (d.rule) {
      case Rule::Top:
        return shape(d, is(r, TypeKind::Top));
      case Rule::Bot:
        return shape(d, is(l, TypeKind::Bot));
      case Rule::Refl:
        return shape(d, sameType(l, r));
      case Rule::Var: {
        if (!is(l, TypeKind::Var)) return shape(d, false);
        auto bound = d.ctx.typeBound(l->index());
        if (!bound) return fail(d, "type variable is not bound in the context");
        return shape(d, sameType(*bound, r));
      }
      case Rule::Trans: {
        const Derivation& a = *d.premises[0];
        const Derivation& b = *d.premises[1];
        if (!sameType(a.lhs, l)) return fail(d, "first premise does not start at the left side");
        if (!sameType(b.rhs, r)) return fail(d, "second premise does not end at the right side");
        if (!sameType(a.rhs, b.lhs)) return fail(d, "premises do not meet at a middle type");
        return true;
      }
      case Rule::Fun:
        if (!is(l, TypeKind::Arrow) || !is(r, TypeKind::Arrow)) return shape(d, false);
        return premise(d, 0, r->param(), l->param()) && premise(d, 1, l->result(), r->result());
      case Rule::Pair:
        if (!is(l, TypeKind::Pair) || !is(r, TypeKind::Pair)) return shape(d, false);
        return premise(d, 0, l->first(), r->first()) && premise(d, 1, l->second(), r->second());
      case Rule::All: {
        if (!is(l, TypeKind::All) || !is(r, TypeKind::All)) return shape(d, false);
        if (!sameType(l->bound(), r->bound())) return fail(d, "quantifier bounds differ");
        Context inner = d.ctx.extendType(l->hint(), l->bound());
        if (!(d.premises[0]->ctx == inner)) {
          return fail(d, "premise context is not the conclusion context extended with the bound");
        }
        return premise(d, 0, l->body(), r->body());
      }
      case Rule::DomIntro:
        return projectionAxiom(d, r, l, TypeKind::Dom, TypeKind::Arrow, true);
      case Rule::DomElim:
        return projectionAxiom(d, l, r, TypeKind::Dom, TypeKind::Arrow, true);
      case Rule::RangeIntro:
        return projectionAxiom(d, r, l, TypeKind::Range, TypeKind::Arrow, false);
      case Rule::RangeElim:
        return projectionAxiom(d, l, r, TypeKind::Range, TypeKind::Arrow, false);
      case Rule::FstIntro:
        return projectionAxiom(d, r, l, TypeKind::Fst, TypeKind::Pair, true);
      case Rule::FstElim:
        return projectionAxiom(d, l, r, TypeKind::Fst, TypeKind::Pair, true);
      case Rule::SndIntro:
        return projectionAxiom(d, r, l, TypeKind::Snd, TypeKind::Pair, false);
      case Rule::SndElim:
        return projectionAxiom(d, l, r, TypeKind::Snd, TypeKind::Pair, false);
      case Rule::DomCongr:
        if (!is(l, TypeKind::Dom) || !is(r, TypeKind::Dom)) return shape(d, false);
        return premise(d, 0, r->inner(), l->inner());
      case Rule::RangeCongr:
        if (!is(l, TypeKind::Range) || !is(r, TypeKind::Range)) return shape(d, false);
        return premise(d, 0, l->inner(), r->inner());
      case Rule::FstCongr:
        if (!is(l, TypeKind::Fst) || !is(r, TypeKind::Fst)) return shape(d, false);
        return premise(d, 0, l->inner(), r->inner());
      case Rule::SndCongr:
        if (!is(l, TypeKind::Snd) || !is(r, TypeKind::Snd)) return shape(d, false);
        return premise(d, 0, l->inner(), r->inner());
    }
    return fail(d, "unknown rule");
  }
};

}  // namespace

CheckVerdict checkDerivation(const Derivation& d, std::optional<std::size_t> maxHeight) {
  Checker checker;
  if (!wellFormedContext(d.ctx)) {
    checker.verdict = CheckVerdict{false, &d, "context is not well-formed"};
    return checker.verdict;
  }
  if (maxHeight) {
    std::size_t h = d.height();
    if (h > *maxHeight) {
      return CheckVerdict{false, &d,
                          fmt::format("height {} exceeds the bound {}", h, *maxHeight)};
    }
  }
  checker.check(d);
  return checker.verdict;
}

// ---------------------------------------------------------------------------
// Candidate pool

namespace {

class Pool {
 public:
  explicit Pool(const Context& ctx) : ctx_(ctx) {}

  int find(const TypePtr& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
  }

  int add(const TypePtr& t) {
    auto [it, inserted] = index_.emplace(t, static_cast<int>(types_.size()));
    if (inserted) types_.push_back(t);
    return it->second;
  }

  // Adds t and all of its subterms that are well-formed in the pool's
  // context (subterms under a binder are kept when they do not mention it).
  void addWithSubterms(const TypePtr& t, int depth = 0) {
    if (depth == 0) {
      add(t);
    } else {
      auto free = freeTypeVars(t);
      if (free.empty() || *free.begin() >= depth) add(shiftType(t, -depth));
    }
    if (t->is(TypeKind::All)) {
      addWithSubterms(t->bound(), depth);
      addWithSubterms(t->body(), depth + 1);
    } else {
      if (t->left()) addWithSubterms(t->left(), depth);
      if (t->right()) addWithSubterms(t->right(), depth);
    }
  }

  const std::vector<TypePtr>& types() const { return types_; }
  int size() const { return static_cast<int>(types_.size()); }
  const Context& ctx() const { return ctx_; }

 private:
  Context ctx_;
  std::vector<TypePtr> types_;
  std::unordered_map<TypePtr, int, TypePtrHash, TypePtrEq> index_;
};

bool mentionsPairs(const TypePtr& t) {
  if (t->is(TypeKind::Pair) || t->is(TypeKind::Fst) || t->is(TypeKind::Snd)) return true;
  return (t->left() && mentionsPairs(t->left())) || (t->right() && mentionsPairs(t->right()));
}

// One rewrite of the outermost projection spine: the innermost projection is
// resolved against an arrow, pair, Top or Bot, or the variable at the base is
// replaced by its bound. Deliberately independent of the algorithmic side.
std::vector<TypePtr> oneStepRewrites(const Context& ctx, const TypePtr& t) {
  std::vector<TypeKind> path;  // outermost first
  TypePtr base = t;
  while (base->isProjection()) {
    path.push_back(base->kind());
    base = base->inner();
  }
  auto rebuild = [&](TypePtr inner, std::size_t drop) {
    for (std::size_t i = path.size() - drop; i-- > 0;) inner = Type::projection(path[i], inner);
    return inner;
  };

  std::vector<TypePtr> out;
  if (base->is(TypeKind::Var)) {
    if (auto bound = ctx.typeBound(base->index())) out.push_back(rebuild(*bound, 0));
  }
  if (path.empty()) return out;
  TypeKind innermost = path.back();
  std::optional<TypePtr> resolved;
  switch (base->kind()) {
    case TypeKind::Arrow:
      if (innermost == TypeKind::Dom) resolved = base->param();
      if (innermost == TypeKind::Range) resolved = base->result();
      break;
    case TypeKind::Pair:
      if (innermost == TypeKind::Fst) resolved = base->first();
      if (innermost == TypeKind::Snd) resolved = base->second();
      break;
    case TypeKind::Top:
      resolved = innermost == TypeKind::Dom ? Type::bot() : Type::top();
      break;
    case TypeKind::Bot:
      resolved = innermost == TypeKind::Dom ? Type::top() : Type::bot();
      break;
    default:
      break;
  }
  if (resolved) out.push_back(rebuild(*resolved, 1));
  return out;
}

Pool buildPool(const Context& ctx, const TypePtr& s, const TypePtr& t, const CutPool& options) {
  Pool pool(ctx);
  pool.add(Type::top());
  pool.add(Type::bot());
  for (int i = 0; i < ctx.numTypeVars(); ++i) {
    pool.add(Type::var(i, ctx.typeVarName(i).value_or("")));
    pool.addWithSubterms(*ctx.typeBound(i));
  }
  pool.addWithSubterms(s);
  pool.addWithSubterms(t);

  bool pairs = options.pairs;
  for (const auto& x : pool.types()) pairs = pairs || mentionsPairs(x);

  // Rewrites may enable further rewrites (a promotion exposing an arrow,
  // say); one round over the original members is what the pool promises.
  std::vector<TypePtr> members = pool.types();
  for (const auto& x : members) {
    for (const auto& r : oneStepRewrites(ctx, x)) pool.addWithSubterms(r);
  }

  members = pool.types();
  const TypePtr top = Type::top();
  const TypePtr bot = Type::bot();
  for (const auto& x : members) {
    pool.add(Type::dom(x));
    pool.add(Type::range(x));
    if (pairs) {
      pool.add(Type::fst(x));
      pool.add(Type::snd(x));
    }
    if (options.witnesses) {
      for (const auto& other : {top, bot}) {
        pool.addWithSubterms(Type::dom(Type::arrow(x, other)));
        pool.addWithSubterms(Type::range(Type::arrow(other, x)));
        if (pairs) {
          pool.addWithSubterms(Type::fst(Type::pair(x, other)));
          pool.addWithSubterms(Type::snd(Type::pair(other, x)));
        }
      }
    }
  }
  return pool;
}

// ---------------------------------------------------------------------------
// Saturation

// A square bit matrix over pool indices.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

  bool get(int a, int b) const { return (row(a)[b >> 6] >> (b & 63)) & 1u; }
  void set(int a, int b) { bits_[std::size_t(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63); }
  const std::uint64_t* row(int a) const { return bits_.data() + std::size_t(a) * words_; }
  int words() const { return words_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Pool members grouped by one of their children, in compressed rows.
class Groups {
 public:
  Groups() = default;
  Groups(int n, const std::vector<std::pair<int, int>>& keyed) : start_(n + 2, 0) {
    for (auto [key, value] : keyed) ++start_[key + 2];
    for (int i = 2; i < n + 2; ++i) start_[i] += start_[i - 1];
    items_.resize(keyed.size());
    for (auto [key, value] : keyed) items_[start_[key + 1]++] = value;
  }
  const int* begin(int key) const { return items_.data() + start_[key]; }
  const int* end(int key) const { return items_.data() + start_[key + 1]; }

 private:
  std::vector<int> start_;
  std::vector<int> items_;
};

std::optional<int> selectorIndex(TypeKind k) {
  switch (k) {
    case TypeKind::Dom: return 0;
    case TypeKind::Range: return 1;
    case TypeKind::Fst: return 2;
    case TypeKind::Snd: return 3;
    default: return std::nullopt;
  }
}

struct AllCandidate {
  int a, b;
  std::vector<std::size_t> level;      // per layer; 0 when underivable
  std::vector<DerivationPtr> premise;  // per layer
};

class Saturation {
 public:
  Saturation(Pool pool, const SearchBudget& budget)
      : pool_(std::move(pool)),
        budget_(budget),
        n_(pool_.size()),
        unconstrained_(budget.maxTransCut + 1 >= budget.maxDepth),
        layers_(unconstrained_ ? 1 : static_cast<int>(budget.maxTransCut) + 1) {
    for (int l = 0; l < layers_; ++l) {
      layer_.push_back(Layer{BitMatrix(n_), BitMatrix(n_), BitMatrix(n_), BitMatrix(n_),
                             std::vector<std::uint8_t>(std::size_t(n_) * n_, 0), {}, {}});
    }
    collectCandidates();
  }

  // Runs levels until (s, t) appears in the top layer, a fixpoint, or the
  // depth budget. Returns the height at which (s, t) was found, or 0.
  std::size_t run(int s, int t) {
    if (budget_.maxDepth == 0) return 0;
    addAxioms();
    commit();
    explored_ = 1;
    if (height(top(), s, t)) return 1;
    for (std::size_t k = 2; k <= budget_.maxDepth; ++k) {
      for (int l = 0; l < layers_; ++l) stepLayer(l, k);
      bool progress = commit();
      explored_ = k;
      if (height(top(), s, t)) return k;
      if (!progress && !allPending(k)) break;
    }
    return 0;
  }

  DerivationPtr reconstruct(int s, int t) { return build(top(), s, t); }

  std::size_t explored() const { return explored_; }

 private:
  struct Layer {
    BitMatrix r, rt;   // facts of previous levels, and the transpose
    BitMatrix k, kt;   // facts known so far, including the current level
    std::vector<std::uint8_t> h;
    std::vector<std::pair<int, int>> delta;  // added at the previous level
    std::vector<std::pair<int, int>> fresh;  // added at the current level
  };

  int top() const { return layers_ - 1; }
  std::size_t height(int l, int a, int b) const { return layer_[l].h[std::size_t(a) * n_ + b]; }
  const TypePtr& type(int i) const { return pool_.types()[i]; }
  int idx(const TypePtr& t) const { return pool_.find(t); }

  void add(int l, int a, int b, std::size_t level) {
    Layer& L = layer_[l];
    std::uint8_t& h = L.h[std::size_t(a) * n_ + b];
    if (h) return;
    h = static_cast<std::uint8_t>(level);
    L.k.set(a, b);
    L.kt.set(b, a);
    L.fresh.emplace_back(a, b);
  }

  bool commit() {
    bool progress = false;
    for (Layer& L : layer_) {
      for (auto [a, b] : L.fresh) {
        L.r.set(a, b);
        L.rt.set(b, a);
      }
      progress = progress || !L.fresh.empty();
      std::swap(L.delta, L.fresh);
      L.fresh.clear();
    }
    return progress;
  }

  // Whether an s-all judgment is still waiting for its level.
  bool allPending(std::size_t k) const {
    for (const auto& c : alls_) {
      for (std::size_t lv : c.level) {
        if (lv > k) return true;
      }
    }
    return false;
  }

  std::optional<Rule> axiomRule(int a, int b) const {
    const TypePtr& l = type(a);
    const TypePtr& r = type(b);
    if (r->is(TypeKind::Top)) return Rule::Top;
    if (l->is(TypeKind::Bot)) return Rule::Bot;
    if (a == b) return Rule::Refl;
    if (l->is(TypeKind::Var)) {
      auto bound = pool_.ctx().typeBound(l->index());
      if (bound && sameType(*bound, r)) return Rule::Var;
    }
    auto projected = [](const TypePtr& p, TypeKind proj, TypeKind structure,
                        bool first) -> TypePtr {
      if (!p->is(proj) || !p->inner()->is(structure)) return nullptr;
      return first ? p->inner()->left() : p->inner()->right();
    };
    struct Case {
      TypeKind proj, structure;
      bool first;
      Rule intro, elim;
    };
    static const Case cases[] = {
        {TypeKind::Dom, TypeKind::Arrow, true, Rule::DomIntro, Rule::DomElim},
        {TypeKind::Range, TypeKind::Arrow, false, Rule::RangeIntro, Rule::RangeElim},
        {TypeKind::Fst, TypeKind::Pair, true, Rule::FstIntro, Rule::FstElim},
        {TypeKind::Snd, TypeKind::Pair, false, Rule::SndIntro, Rule::SndElim},
    };
    for (const Case& c : cases) {
      if (TypePtr comp = projected(r, c.proj, c.structure, c.first); comp && sameType(comp, l)) {
        return c.intro;
      }
      if (TypePtr comp = projected(l, c.proj, c.structure, c.first); comp && sameType(comp, r)) {
        return c.elim;
      }
    }
    return std::nullopt;
  }

  void addAxioms() {
    const int topIdx = idx(Type::top());
    const int botIdx = idx(Type::bot());
    std::vector<std::pair<int, int>> axioms;
    for (int a = 0; a < n_; ++a) {
      const TypePtr& x = type(a);
      if (x->is(TypeKind::Var)) {
        if (auto bound = pool_.ctx().typeBound(x->index())) {
          int b = idx(*bound);
          if (b >= 0) axioms.emplace_back(a, b);
        }
      }
      if (!x->isProjection()) continue;
      const int inner = left_[a];
      const TypeKind structure = type(inner)->kind();
      int comp = -1;
      if (x->is(TypeKind::Dom) && structure == TypeKind::Arrow) comp = left_[inner];
      if (x->is(TypeKind::Range) && structure == TypeKind::Arrow) comp = right_[inner];
      if (x->is(TypeKind::Fst) && structure == TypeKind::Pair) comp = left_[inner];
      if (x->is(TypeKind::Snd) && structure == TypeKind::Pair) comp = right_[inner];
      if (comp >= 0) {
        axioms.emplace_back(comp, a);
        axioms.emplace_back(a, comp);
      }
    }
    for (int l = 0; l < layers_; ++l) {
      for (int a = 0; a < n_; ++a) {
        add(l, a, a, 1);
        add(l, a, topIdx, 1);
        add(l, botIdx, a, 1);
      }
      for (auto [a, b] : axioms) add(l, a, b, 1);
    }
  }

  void collectCandidates() {
    left_.assign(n_, -1);
    right_.assign(n_, -1);
    for (auto& p : parent_) p.assign(n_, -1);
    std::map<TypeKind, std::vector<int>> byKind;
    std::vector<std::pair<int, int>> byParam, byResult, byFirst, bySecond;
    for (int i = 0; i < n_; ++i) {
      const TypePtr& x = type(i);
      byKind[x->kind()].push_back(i);
      if (x->is(TypeKind::All)) continue;
      if (x->left()) left_[i] = idx(x->left());
      if (x->right()) right_[i] = idx(x->right());
      switch (x->kind()) {
        case TypeKind::Arrow:
          byParam.emplace_back(left_[i], i);
          byResult.emplace_back(right_[i], i);
          break;
        case TypeKind::Pair:
          byFirst.emplace_back(left_[i], i);
          bySecond.emplace_back(right_[i], i);
          break;
        case TypeKind::Dom:
        case TypeKind::Range:
        case TypeKind::Fst:
        case TypeKind::Snd:
          parent_[static_cast<int>(*selectorIndex(x->kind()))][left_[i]] = i;
          break;
        default:
          break;
      }
    }
    byParam_ = Groups(n_, byParam);
    byResult_ = Groups(n_, byResult);
    byFirst_ = Groups(n_, byFirst);
    bySecond_ = Groups(n_, bySecond);
    auto pairsOf = [&](TypeKind k, auto&& emit) {
      for (int a : byKind[k]) {
        for (int b : byKind[k]) {
          if (a != b) emit(a, b);
        }
      }
    };
    if (budget_.maxDepth < 2) return;
    pairsOf(TypeKind::All, [&](int a, int b) {
      const TypePtr& x = type(a);
      const TypePtr& y = type(b);
      if (!sameType(x->bound(), y->bound())) return;
      AllCandidate c{a, b, {}, {}};
      Context inner = pool_.ctx().extendType(x->hint(), x->bound());
      for (int l = 0; l < layers_; ++l) {
        SearchBudget sub = budget_;
        sub.maxDepth = budget_.maxDepth - 1;
        if (!unconstrained_) sub.maxTransCut = static_cast<std::size_t>(l);
        SearchResult r = search(inner, x->body(), y->body(), sub);
        c.level.push_back(r ? r.derivation->height() + 1 : 0);
        c.premise.push_back(r.derivation);
      }
      alls_.push_back(std::move(c));
    });
  }

  void stepLayer(int l, std::size_t k) {
    Layer& L = layer_[l];
    const int words = L.r.words();

    if (unconstrained_ || l > 0) {
      const Layer& S = layer_[unconstrained_ ? l : l - 1];
      // New compositions involve at least one fact from the previous level.
      for (auto [a, b] : S.delta) {
        const std::uint64_t* from = S.r.row(b);
        const std::uint64_t* known = L.k.row(a);
        for (int w = 0; w < words; ++w) {
          std::uint64_t m = from[w] & ~known[w];
          while (m) {
            int c = w * 64 + std::countr_zero(m);
            m &= m - 1;
            add(l, a, c, k);
          }
        }
        const std::uint64_t* into = S.rt.row(a);
        const std::uint64_t* knownT = L.kt.row(b);
        for (int w = 0; w < words; ++w) {
          std::uint64_t m = into[w] & ~knownT[w];
          while (m) {
            int z = w * 64 + std::countr_zero(m);
            m &= m - 1;
            add(l, z, b, k);
          }
        }
      }
    }

    // A structural rule can only fire once its last premise has arrived,
    // so it suffices to look at the conclusions each new fact feeds.
    for (auto [p, q] : L.delta) {
      if (int a = parent_[0][q], b = parent_[0][p]; a >= 0 && b >= 0) add(l, a, b, k);
      for (int sel = 1; sel < 4; ++sel) {
        if (int a = parent_[sel][p], b = parent_[sel][q]; a >= 0 && b >= 0) add(l, a, b, k);
      }
      // (p <: q) as the parameter premise of q->_ <: p->_.
      for (const int* a = byParam_.begin(q); a != byParam_.end(q); ++a) {
        for (const int* b = byParam_.begin(p); b != byParam_.end(p); ++b) {
          if (L.r.get(right_[*a], right_[*b])) add(l, *a, *b, k);
        }
      }
      // (p <: q) as the result premise of _->p <: _->q.
      for (const int* a = byResult_.begin(p); a != byResult_.end(p); ++a) {
        for (const int* b = byResult_.begin(q); b != byResult_.end(q); ++b) {
          if (L.r.get(left_[*b], left_[*a])) add(l, *a, *b, k);
        }
      }
      for (const int* a = byFirst_.begin(p); a != byFirst_.end(p); ++a) {
        for (const int* b = byFirst_.begin(q); b != byFirst_.end(q); ++b) {
          if (L.r.get(right_[*a], right_[*b])) add(l, *a, *b, k);
        }
      }
      for (const int* a = bySecond_.begin(p); a != bySecond_.end(p); ++a) {
        for (const int* b = bySecond_.begin(q); b != bySecond_.end(q); ++b) {
          if (L.r.get(left_[*a], left_[*b])) add(l, *a, *b, k);
        }
      }
    }
    for (const AllCandidate& c : alls_) {
      if (c.level[l] == k) add(l, c.a, c.b, k);
    }
  }

  DerivationPtr build(int l, int a, int b) {
    const std::size_t h = height(l, a, b);
    const Context& ctx = pool_.ctx();
    const TypePtr& x = type(a);
    const TypePtr& y = type(b);
    if (h == 1) return makeDerivation(*axiomRule(a, b), ctx, x, y);

    auto below = [&](int layer, int p, int q) {
      std::size_t hp = height(layer, p, q);
      return hp != 0 && hp < h;
    };
    if (x->kind() == y->kind()) {
      switch (x->kind()) {
        case TypeKind::Arrow: {
          int p1 = idx(y->param()), q1 = idx(x->param());
          int p2 = idx(x->result()), q2 = idx(y->result());
          if (below(l, p1, q1) && below(l, p2, q2)) {
            return makeDerivation(Rule::Fun, ctx, x, y, {build(l, p1, q1), build(l, p2, q2)});
          }
          break;
        }
        case TypeKind::Pair: {
          int p1 = idx(x->first()), q1 = idx(y->first());
          int p2 = idx(x->second()), q2 = idx(y->second());
          if (below(l, p1, q1) && below(l, p2, q2)) {
            return makeDerivation(Rule::Pair, ctx, x, y, {build(l, p1, q1), build(l, p2, q2)});
          }
          break;
        }
        case TypeKind::Dom: {
          int p = idx(y->inner()), q = idx(x->inner());
          if (below(l, p, q)) return makeDerivation(Rule::DomCongr, ctx, x, y, {build(l, p, q)});
          break;
        }
        case TypeKind::Range:
        case TypeKind::Fst:
        case TypeKind::Snd: {
          int p = idx(x->inner()), q = idx(y->inner());
          if (below(l, p, q)) {
            Rule r = x->is(TypeKind::Range) ? Rule::RangeCongr
                     : x->is(TypeKind::Fst) ? Rule::FstCongr
                                            : Rule::SndCongr;
            return makeDerivation(r, ctx, x, y, {build(l, p, q)});
          }
          break;
        }
        case TypeKind::All:
          for (const AllCandidate& c : alls_) {
            if (c.a == a && c.b == b && c.level[l] != 0 && c.level[l] <= h) {
              return makeDerivation(Rule::All, ctx, x, y, {c.premise[l]});
            }
          }
          break;
        default:
          break;
      }
    }
    int src = unconstrained_ ? l : l - 1;
    for (int m = 0; src >= 0 && m < n_; ++m) {
      if (below(src, a, m) && below(src, m, b)) {
        return makeDerivation(Rule::Trans, ctx, x, y, {build(src, a, m), build(src, m, b)});
      }
    }
    return nullptr;  // unreachable for facts produced by run()
  }

  Pool pool_;
  SearchBudget budget_;
  int n_;
  bool unconstrained_;
  int layers_;
  std::vector<Layer> layer_;
  std::vector<int> left_, right_;  // pool index of each member's children
  // parent_[sel][i]: the pool index of P<i> for selector sel (Dom, Range,
  // Fst, Snd), or -1.
  std::array<std::vector<int>, 4> parent_;
  Groups byParam_, byResult_, byFirst_, bySecond_;
  std::vector<AllCandidate> alls_;
  std::size_t explored_ = 0;
};

}  // namespace

SearchResult search(const Context& ctx, const TypePtr& s, const TypePtr& t,
                    const SearchBudget& budget) {
  SearchResult result;
  if (!wellFormed(ctx, s) || !wellFormed(ctx, t) || budget.maxDepth == 0) return result;
  // Heights are stored in a byte per judgment.
  SearchBudget b = budget;
  b.maxDepth = std::min<std::size_t>(b.maxDepth, 255);

  Pool pool = buildPool(ctx, s, t, b.pool);
  int si = pool.find(s);
  int ti = pool.find(t);
  result.poolSize = static_cast<std::size_t>(pool.size());
  Saturation sat(std::move(pool), b);
  std::size_t found = sat.run(si, ti);
  result.exploredDepth = sat.explored();
  if (found) result.derivation = sat.reconstruct(si, ti);
  return result;
}

// ---------------------------------------------------------------------------
// Enumeration

Signature functionSignature() {
  return {TypeKind::Top, TypeKind::Bot, TypeKind::Base, TypeKind::Arrow, TypeKind::Dom,
          TypeKind::Range};
}

Signature pairSignature() {
  Signature s = functionSignature();
  s.insert({TypeKind::Pair, TypeKind::Fst, TypeKind::Snd});
  return s;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Signature& sig, const Context& ctx) : sig_(sig), ctx_(ctx) {}

  // Types of exactly `size` nodes under `depth` extra binders.
  const std::vector<TypePtr>& exactly(std::size_t size, int depth) {
    auto key = std::make_pair(size, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<TypePtr> out;
    for (TypeKind k : sig_) generate(k, size, depth, out);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  bool has(TypeKind k) const { return sig_.count(k) != 0; }

  void binary(std::size_t size, int leftDepth, int rightDepth,
              const std::function<void(const TypePtr&, const TypePtr&)>& emit) {
    if (size < 3) return;
    for (std::size_t i = 1; i + 1 < size; ++i) {
      const auto& lefts = exactly(i, leftDepth);
      const auto& rights = exactly(size - 1 - i, rightDepth);
      for (const auto& l : lefts) {
        for (const auto& r : rights) emit(l, r);
      }
    }
  }

  void generate(TypeKind k, std::size_t size, int depth, std::vector<TypePtr>& out) {
    switch (k) {
      case TypeKind::Base:
        if (size == 1) out.push_back(Type::base());
        break;
      case TypeKind::Top:
        if (size == 1) out.push_back(Type::top());
        break;
      case TypeKind::Bot:
        if (size == 1) out.push_back(Type::bot());
        break;
      case TypeKind::Var:
        if (size == 1) {
          for (int i = 0; i < depth + ctx_.numTypeVars(); ++i) {
            std::string hint = i < depth ? "Y" : ctx_.typeVarName(i - depth).value_or("");
            out.push_back(Type::var(i, hint));
          }
        }
        break;
      case TypeKind::Arrow:
        binary(size, depth, depth,
               [&](const TypePtr& l, const TypePtr& r) { out.push_back(Type::arrow(l, r)); });
        break;
      case TypeKind::Pair:
        binary(size, depth, depth,
               [&](const TypePtr& l, const TypePtr& r) { out.push_back(Type::pair(l, r)); });
        break;
      case TypeKind::All:
        binary(size, depth, depth + 1, [&](const TypePtr& l, const TypePtr& r) {
          out.push_back(Type::all("Y", l, r));
        });
        break;
      case TypeKind::Dom:
      case TypeKind::Range:
      case TypeKind::Fst:
      case TypeKind::Snd:
        if (size >= 2) {
          for (const auto& inner : exactly(size - 1, depth)) {
            out.push_back(Type::projection(k, inner));
          }
        }
        break;
    }
  }

  Signature sig_;
  Context ctx_;
  std::map<std::pair<std::size_t, int>, std::vector<TypePtr>> memo_;
};

}  // namespace

std::vector<TypePtr> enumerateTypes(const Signature& signature, std::size_t maxSize,
                                    const Context& ctx) {
  Enumerator e(signature, ctx);
  std::vector<TypePtr> out;
  for (std::size_t size = 1; size <= maxSize; ++size) {
    const auto& level = e.exactly(size, 0);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace fdr
