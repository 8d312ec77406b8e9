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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdr/type.h"

namespace fdr {

/**
 * The typing environment: one ordered list holding both term bindings
 * `x : T` and type bindings `X <: U`.
 *
 * Types stored in an entry are expressed in the scope of the type bindings
 * that precede it. Only type bindings count towards de Bruijn indices, so
 * adding a term binding never shifts anything. Contexts are immutable;
 * extension returns a new context sharing nothing mutable with the old one.
 */
class Context {
 public:
  enum class EntryKind { Term, Type };
  struct Entry {
    EntryKind kind;
    std::string name;
    TypePtr type;  // declared type, or upper bound
  };

  Context();

  Context extendTerm(std::string name, TypePtr type) const;
  Context extendType(std::string name, TypePtr bound) const;

  const std::vector<Entry>& entries() const { return *entries_; }
  bool empty() const { return entries_->empty(); }
  int numTypeVars() const { return numTypeVars_; }

  // Upper bound of type variable `index` (0 = innermost), shifted into the
  // scope of the full context. Empty when the index is out of range.
  std::optional<TypePtr> typeBound(int index) const;
  std::optional<std::string> typeVarName(int index) const;

  // Declared type of the most recent binding of `name`, shifted into the
  // scope of the full context.
  std::optional<TypePtr> termType(const std::string& name) const;

  // Names of type variables, outermost first (index 0 is the last element).
  std::vector<std::string> typeVarNames() const;

  // Type bindings only; the part of the context subtyping depends on.
  Context typeBindingsOnly() const;

  friend bool operator==(const Context& a, const Context& b);

 private:
  std::shared_ptr<const std::vector<Entry>> entries_;
  // Position in entries_ of each type binding, outermost first.
  std::shared_ptr<const std::vector<int>> typePositions_;
  int numTypeVars_ = 0;
};

// True iff every free type variable of t is bound in ctx.
bool wellFormed(const Context& ctx, const TypePtr& t);

// True iff every entry only references type bindings that precede it.
bool wellFormedContext(const Context& ctx);

}  // namespace fdr
