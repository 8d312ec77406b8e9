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

#include "fdr/type.h"

#include <cassert>
#include <functional>
#include <utility>

namespace fdr {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Type::Type(TypeKind kind, TypePtr left, TypePtr right, int index,
           std::string hint)
    : kind_(kind),
      left_(std::move(left)),
      right_(std::move(right)),
      index_(index),
      hint_(std::move(hint)) {
  hash_ = mix(static_cast<std::size_t>(kind_) + 1, static_cast<std::size_t>(index_ + 2));
  if (left_) {
    size_ += left_->size();
    hash_ = mix(hash_, left_->hash());
  }
  if (right_) {
    size_ += right_->size();
    hash_ = mix(hash_, right_->hash());
  }
}

TypePtr Type::base() {
  static const TypePtr instance(new Type(TypeKind::Base, nullptr, nullptr, -1, {}));
  return instance;
}

TypePtr Type::top() {
  static const TypePtr instance(new Type(TypeKind::Top, nullptr, nullptr, -1, {}));
  return instance;
}

TypePtr Type::bot() {
  static const TypePtr instance(new Type(TypeKind::Bot, nullptr, nullptr, -1, {}));
  return instance;
}

TypePtr Type::arrow(TypePtr param, TypePtr result) {
  assert(param && result);
  return TypePtr(new Type(TypeKind::Arrow, std::move(param), std::move(result), -1, {}));
}

TypePtr Type::all(std::string hint, TypePtr bound, TypePtr body) {
  assert(bound && body);
  return TypePtr(new Type(TypeKind::All, std::move(bound), std::move(body), -1,
                          std::move(hint)));
}

TypePtr Type::pair(TypePtr first, TypePtr second) {
  assert(first && second);
  return TypePtr(new Type(TypeKind::Pair, std::move(first), std::move(second), -1, {}));
}

TypePtr Type::dom(TypePtr inner) { return projection(TypeKind::Dom, std::move(inner)); }
TypePtr Type::range(TypePtr inner) { return projection(TypeKind::Range, std::move(inner)); }
TypePtr Type::fst(TypePtr inner) { return projection(TypeKind::Fst, std::move(inner)); }
TypePtr Type::snd(TypePtr inner) { return projection(TypeKind::Snd, std::move(inner)); }

TypePtr Type::projection(TypeKind kind, TypePtr inner) {
  assert(inner);
  assert(kind == TypeKind::Dom || kind == TypeKind::Range || kind == TypeKind::Fst ||
         kind == TypeKind::Snd);
  return TypePtr(new Type(kind, std::move(inner), nullptr, -1, {}));
}

TypePtr Type::var(int index, std::string hint) {
  assert(index >= 0);
  return TypePtr(new Type(TypeKind::Var, nullptr, nullptr, index, std::move(hint)));
}

bool Type::isProjection() const {
  switch (kind_) {
    case TypeKind::Dom:
    case TypeKind::Range:
    case TypeKind::Fst:
    case TypeKind::Snd:
      return true;
    default:
      return false;
  }
}

bool operator==(const Type& a, const Type& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind() || a.hash() != b.hash() || a.size() != b.size()) return false;
  if (a.kind() == TypeKind::Var) return a.index() == b.index();
  if (a.left() && !(*a.left() == *b.left())) return false;
  if (a.right() && !(*a.right() == *b.right())) return false;
  return true;
}

bool sameType(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string_view kindName(TypeKind kind) {
  switch (kind) {
    case TypeKind::Base: return "Base";
    case TypeKind::Top: return "Top";
    case TypeKind::Bot: return "Bot";
    case TypeKind::Arrow: return "Arrow";
    case TypeKind::All: return "All";
    case TypeKind::Pair: return "Pair";
    case TypeKind::Dom: return "Dom";
    case TypeKind::Range: return "Range";
    case TypeKind::Fst: return "Fst";
    case TypeKind::Snd: return "Snd";
    case TypeKind::Var: return "Var";
  }
  return "?";
}

namespace {

// Rebuilds `t` with `f` applied to variables; `depth` counts binders passed.
template <typename F>
TypePtr mapVars(const TypePtr& t, int depth, const F& f) {
  switch (t->kind()) {
    case TypeKind::Base:
    case TypeKind::Top:
    case TypeKind::Bot:
      return t;
    case TypeKind::Var:
      return f(t, depth);
    case TypeKind::All: {
      TypePtr bound = mapVars(t->bound(), depth, f);
      TypePtr body = mapVars(t->body(), depth + 1, f);
      if (bound == t->bound() && body == t->body()) return t;
      return Type::all(t->hint(), std::move(bound), std::move(body));
    }
    case TypeKind::Arrow:
    case TypeKind::Pair: {
      TypePtr l = mapVars(t->left(), depth, f);
      TypePtr r = mapVars(t->right(), depth, f);
      if (l == t->left() && r == t->right()) return t;
      return t->kind() == TypeKind::Arrow ? Type::arrow(std::move(l), std::move(r))
                                          : Type::pair(std::move(l), std::move(r));
    }
    case TypeKind::Dom:
    case TypeKind::Range:
    case TypeKind::Fst:
    case TypeKind::Snd: {
      TypePtr in = mapVars(t->inner(), depth, f);
      if (in == t->inner()) return t;
      return Type::projection(t->kind(), std::move(in));
    }
  }
  return t;
}

}  // namespace

TypePtr shiftType(const TypePtr& t, int amount, int cutoff) {
  if (amount == 0) return t;
  return mapVars(t, cutoff, [amount](const TypePtr& v, int c) -> TypePtr {
    if (v->index() < c) return v;
    assert(v->index() + amount >= 0);
    return Type::var(v->index() + amount, v->hint());
  });
}

TypePtr substType(const TypePtr& target, int index, const TypePtr& replacement) {
  return mapVars(target, 0, [&](const TypePtr& v, int depth) -> TypePtr {
    if (v->index() == index + depth) return shiftType(replacement, depth);
    return v;
  });
}

TypePtr instantiate(const TypePtr& body, const TypePtr& arg) {
  return shiftType(substType(body, 0, shiftType(arg, 1)), -1);
}

std::set<int> freeTypeVars(const TypePtr& t) {
  std::set<int> out;
  mapVars(t, 0, [&out](const TypePtr& v, int depth) -> TypePtr {
    if (v->index() >= depth) out.insert(v->index() - depth);
    return v;
  });
  return out;
}

bool closedUnder(const TypePtr& t, int scopeSize) {
  std::set<int> fv = freeTypeVars(t);
  return fv.empty() || *fv.rbegin() < scopeSize;
}

}  // namespace fdr
