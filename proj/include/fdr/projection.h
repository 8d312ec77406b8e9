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

#include <optional>
#include <string>
#include <vector>

#include "fdr/context.h"
#include "fdr/derivation.h"
#include "fdr/type.h"

namespace fdr {

enum class Selector { Dom, Ran, Fst, Snd };

// Delayed projections. Element 0 is the selector adjacent to the projected
// type, i.e. the innermost projection, which is resolved first. The empty
// path is the root.
using SelectionPath = std::vector<Selector>;

// Root is positive, dom flips, ran/fst/snd preserve.
bool positivity(const SelectionPath& path);

std::string formatPath(const SelectionPath& path);

std::optional<Selector> selectorOf(TypeKind projection);
TypeKind projectionOf(Selector s);

// A type seen as a stack of projections over a non-projection base.
struct Spine {
  SelectionPath path;
  TypePtr base;
};

Spine spineOf(const TypePtr& t);
TypePtr rebuildSpine(const SelectionPath& path, const TypePtr& base);

// An equivalence `from == to` with a certificate in each direction.
struct Rewrite {
  TypePtr from;
  TypePtr to;
  DerivationPtr forward;   // from <: to
  DerivationPtr backward;  // to <: from
};

// Resolves the innermost projection of t's spine against exposed structure:
// Dom/Range over arrows, Fst/Snd over pairs, and the Top/Bot absorptions.
// Absent when the innermost projection sits on Base, a variable, a
// quantifier, or mismatched structure.
std::optional<Rewrite> resolveStep(const Context& ctx, const TypePtr& t);

// Repeats resolveStep until the spine is stuck. Always an equivalence.
struct HeadNormal {
  Rewrite rewrite;
  std::vector<Rewrite> steps;
};
HeadNormal headNormalize(const Context& ctx, const TypePtr& t);

// Replaces the variable at the base of t's spine by its upper bound. When the
// variable sits at a positive path the result is a supertype of t (a
// promotion); at a negative path it is a subtype (a demotion).
struct BaseReplacement {
  TypePtr to;
  bool upward = true;
  DerivationPtr derivation;  // t <: to when upward, to <: t otherwise
};
std::optional<BaseReplacement> replaceBase(const Context& ctx, const TypePtr& t);

std::optional<BaseReplacement> promote(const Context& ctx, const TypePtr& t);
std::optional<BaseReplacement> demote(const Context& ctx, const TypePtr& t);

enum class ExposureKind { Arrow, All, Pair, Base, Top, Bot, Opaque };

struct ExposureStep {
  enum class Kind { Promotion, Resolution };
  Kind kind;
  TypePtr from;
  TypePtr to;
  DerivationPtr forward;   // from <: to
  DerivationPtr backward;  // to <: from; null for promotions
};

// The structural head a type is known to sit below, with the rewrites used.
struct Exposure {
  ExposureKind kind;
  TypePtr head;
  std::vector<ExposureStep> chain;
  DerivationPtr derivation;  // input <: head

  bool is(ExposureKind k) const { return kind == k; }
};

Exposure expose(const Context& ctx, const TypePtr& t);

std::string_view exposureName(ExposureKind kind);

}  // namespace fdr
