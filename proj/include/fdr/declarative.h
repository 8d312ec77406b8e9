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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fdr/context.h"
#include "fdr/derivation.h"
#include "fdr/type.h"

namespace fdr {

// Result of validating a derivation tree against the declarative rules.
struct CheckVerdict {
  bool ok = true;
  const Derivation* offending = nullptr;  // first bad node, preorder
  std::string reason;

  explicit operator bool() const { return ok; }
};

/**
 * Checks that every node of d instantiates its rule schema exactly, that all
 * types are well-formed in the node's context, and that premises live in the
 * same context (or, for s-all, in the context extended with the shared
 * bound). With maxHeight set, derivations taller than that are rejected.
 *
 * The checker shares no code with the algorithmic subtyper or the
 * projection machinery.
 */
CheckVerdict checkDerivation(const Derivation& d,
                             std::optional<std::size_t> maxHeight = std::nullopt);

// Which types may serve as the middle of an s-trans step.
struct CutPool {
  // Subterms of the goal and context, their one-step rewrites, Top, Bot and
  // one level of projection wrappers. Always on.
  // Arrow and pair witnesses for the intro/elim rules: for each base member
  // x, the arrows x->Top, x->Bot, Top->x, Bot->x wrapped in Dom/Range (and
  // with pairs on, [x,Top], [x,Bot], [Top,x], [Bot,x] wrapped in Fst/Snd).
  bool witnesses = true;
  // Adds Fst/Snd wrappers and pair witnesses even if the goal mentions no
  // pair constructor.
  bool pairs = false;
};

struct SearchBudget {
  std::size_t maxDepth = 12;
  // Maximum number of s-trans nodes on any root-to-leaf branch. Values of
  // maxDepth - 1 or more impose no constraint.
  std::size_t maxTransCut = 11;
  CutPool pool;
};

struct SearchResult {
  DerivationPtr derivation;  // absent when nothing was found in budget
  std::size_t poolSize = 0;
  // The largest height explored. Smaller than maxDepth when saturation
  // reached a fixpoint first.
  std::size_t exploredDepth = 0;

  explicit operator bool() const { return derivation != nullptr; }
};

/**
 * Bounded declarative proof search. Computes, bottom up over a finite
 * candidate pool, every judgment between pool members derivable with height
 * at most maxDepth, and returns a minimal-height derivation of ctx |- s <: t
 * if one exists among them. Any derivation returned passes checkDerivation.
 */
SearchResult search(const Context& ctx, const TypePtr& s, const TypePtr& t,
                    const SearchBudget& budget = {});

// Constructors available to enumerateTypes. Var stands for the type
// variables of the enumeration context.
using Signature = std::set<TypeKind>;

Signature functionSignature();  // Top, Bot, B, ->, Dom, Range
Signature pairSignature();      // the above plus [,], Fst, Snd

/**
 * All types over the signature that are well-formed in ctx and have at most
 * maxSize nodes, each exactly once. Ordered by size, then by constructor in
 * TypeKind order, then by children in enumeration order.
 */
std::vector<TypePtr> enumerateTypes(const Signature& signature, std::size_t maxSize,
                                    const Context& ctx = Context());

}  // namespace fdr
