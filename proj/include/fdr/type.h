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

#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace fdr {

enum class TypeKind {
  Base,
  Top,
  Bot,
  Arrow,
  All,
  Pair,
  Dom,
  Range,
  Fst,
  Snd,
  Var,
};

class Type;
using TypePtr = std::shared_ptr<const Type>;

/**
 * An immutable type node.
 *
 * Type variables are nameless: a Var holds a de Bruijn index counting
 * enclosing `All` binders first and then type bindings of the ambient
 * context, innermost first. Binder and variable names are kept only as
 * printing hints and never take part in equality or hashing, so two types
 * are equal exactly when they are alpha-equivalent.
 */
class Type {
 public:
  static TypePtr base();
  static TypePtr top();
  static TypePtr bot();
  static TypePtr arrow(TypePtr param, TypePtr result);
  static TypePtr all(std::string hint, TypePtr bound, TypePtr body);
  static TypePtr pair(TypePtr first, TypePtr second);
  static TypePtr dom(TypePtr inner);
  static TypePtr range(TypePtr inner);
  static TypePtr fst(TypePtr inner);
  static TypePtr snd(TypePtr inner);
  static TypePtr var(int index, std::string hint = {});
  // Builds the projection of the given kind (Dom, Range, Fst or Snd).
  static TypePtr projection(TypeKind kind, TypePtr inner);

  TypeKind kind() const { return kind_; }
  bool is(TypeKind k) const { return kind_ == k; }
  bool isProjection() const;

  // Arrow: param. All: bound. Pair: first. Projections: inner.
  const TypePtr& left() const { return left_; }
  // Arrow: result. All: body. Pair: second.
  const TypePtr& right() const { return right_; }

  const TypePtr& param() const { return left_; }
  const TypePtr& result() const { return right_; }
  const TypePtr& bound() const { return left_; }
  const TypePtr& body() const { return right_; }
  const TypePtr& first() const { return left_; }
  const TypePtr& second() const { return right_; }
  const TypePtr& inner() const { return left_; }

  int index() const { return index_; }
  const std::string& hint() const { return hint_; }

  // Number of AST nodes.
  std::size_t size() const { return size_; }
  std::size_t hash() const { return hash_; }

 private:
  Type(TypeKind kind, TypePtr left, TypePtr right, int index,
       std::string hint);

  TypeKind kind_;
  TypePtr left_;
  TypePtr right_;
  int index_ = -1;
  std::string hint_;
  std::size_t size_ = 1;
  std::size_t hash_ = 0;
};

bool operator==(const Type& a, const Type& b);

// Structural (alpha-) equality through pointers.
bool sameType(const TypePtr& a, const TypePtr& b);

struct TypePtrHash {
  std::size_t operator()(const TypePtr& t) const { return t->hash(); }
};
struct TypePtrEq {
  bool operator()(const TypePtr& a, const TypePtr& b) const {
    return sameType(a, b);
  }
};

std::string_view kindName(TypeKind kind);

// Adds `amount` to every variable index >= cutoff.
TypePtr shiftType(const TypePtr& t, int amount, int cutoff = 0);

// Capture-avoiding replacement of free variable `index` by `replacement`.
// Other variables keep their indices; `replacement` is interpreted in the
// same scope as `target`.
TypePtr substType(const TypePtr& target, int index,
                  const TypePtr& replacement);

// Instantiates the body of a quantifier with `arg`: the body's variable 0 is
// replaced and the binder is removed. `arg` lives in the quantifier's scope.
TypePtr instantiate(const TypePtr& body, const TypePtr& arg);

// Indices of the free variables of `t`, relative to t's own scope.
std::set<int> freeTypeVars(const TypePtr& t);

// True iff every free variable index of t is below `scopeSize`.
bool closedUnder(const TypePtr& t, int scopeSize);

}  // namespace fdr
