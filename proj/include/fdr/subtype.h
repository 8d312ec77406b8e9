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

#include <stdexcept>
#include <string>
#include <vector>

#include "fdr/context.h"
#include "fdr/derivation.h"
#include "fdr/type.h"

namespace fdr {

class IllFormedType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SubtypeGoal {
  Context ctx;
  TypePtr lhs;
  TypePtr rhs;
};

// The goal stack, root first, leading to the deepest goal that failed.
struct RejectionTrace {
  std::vector<SubtypeGoal> goals;
  std::string format() const;
};

struct SubtypeResult {
  DerivationPtr derivation;  // set on acceptance
  RejectionTrace trace;      // set on rejection

  bool accepted() const { return derivation != nullptr; }
  explicit operator bool() const { return accepted(); }
};

/**
 * Decides `ctx |- s <: t`.
 *
 * The algorithm is syntax directed. Both sides are first brought to head
 * normal form by resolving projections over exposed structure; then it
 * applies the structural rules (s-fun, s-pair, and s-all with identical
 * bounds), projection congruence, promotion of a left-hand variable sitting
 * at a positive selection path, and demotion of a right-hand variable sitting
 * at a negative one. Every acceptance carries a derivation in the
 * declarative rule system.
 *
 * Throws IllFormedType if either side mentions a type variable not bound in
 * ctx.
 */
SubtypeResult subtype(const Context& ctx, const TypePtr& s, const TypePtr& t);

}  // namespace fdr
