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
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdr/context.h"
#include "fdr/eval.h"
#include "fdr/term.h"
#include "fdr/type.h"

namespace fdr {

// Deterministic random source. Only the raw engine output is used, since the
// standard distributions may differ between library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

// Generation strategies, used as keys of GenConfig::weights.
enum class Strategy {
  Const,     // c
  Var,       // a variable whose type fits
  Abs,       // fun for an arrow goal
  TAbs,      // tfun for a quantified goal
  Pair,      // (t, t) for a pair goal
  Apply,     // a variable applied to a generated argument
  Project,   // .1 or .2 of a variable
  Beta,      // (fun (x : A) => body) arg
  TypeBeta,  // (tfun (X <: Top) => body) [S]
  PolyId,    // (tfun (X <: Top) => fun (x : X) => x) [goal] arg
  Eta,       // the eta wrapper instantiated at A -> goal, applied twice
  Split,     // .1 or .2 of a generated pair
  Widen,     // any term, for goal Top
};

inline constexpr std::size_t kStrategyCount = 13;

struct GenConfig {
  std::uint64_t seed = 42;
  int maxTermDepth = 6;
  std::size_t maxTypeSize = 5;
  std::size_t count = 100;
  std::size_t fuel = kDefaultFuel;
  bool pairs = true;
  // Relative weights; strategies missing from the map weigh 1, weight 0
  // disables a strategy.
  std::map<Strategy, unsigned> weights;
};

class GeneratorError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Generates a term whose synthesized type is a subtype of goal in ctx, or
 * nothing when no inhabitant was found within depth. A produced term that
 * fails this postcondition raises GeneratorError.
 */
std::optional<TermPtr> genWellTypedTerm(const Context& ctx, const TypePtr& goal, int depth,
                                        Rng& rng, const GenConfig& config = {});

enum class ShapeVerdict { Pass, Mismatch, Skipped };

// Whether a value has the shape the closed type exposes to.
ShapeVerdict shapeCheck(const Value& v, const TypePtr& type);

struct SoundnessFailure {
  enum class Kind { Check, OutOfFuel, Stuck, Shape };
  Kind kind;
  TypePtr goal;
  TermPtr term;  // minimized when possible
  std::string detail;
};

struct SoundnessReport {
  GenConfig config;
  std::size_t generated = 0;
  std::size_t checkFailures = 0;
  std::size_t outOfFuel = 0;
  std::size_t stuck = 0;
  std::size_t shapeMismatches = 0;
  std::size_t skippedOpaque = 0;
  std::size_t goalsWithoutInhabitant = 0;  // generation attempts that found nothing
  std::vector<SoundnessFailure> failures;
  EvalStats evalStats;

  bool passed() const {
    return checkFailures == 0 && outOfFuel == 0 && stuck == 0 && shapeMismatches == 0;
  }
  std::string serialize() const;
};

// The closed goal types runSoundness rotates through, including randomly
// drawn ones.
std::vector<TypePtr> goalPool(Rng& rng, const GenConfig& config);

SoundnessReport runSoundness(const GenConfig& config);

}  // namespace fdr
