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

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdr/context.h"
#include "fdr/type.h"

namespace fdr {

// Declarative subtyping rules, function fragment first, then pairs.
enum class Rule {
  Top,
  Bot,
  Refl,
  Var,
  Trans,
  Fun,
  All,
  DomIntro,
  DomElim,
  RangeIntro,
  RangeElim,
  DomCongr,
  RangeCongr,
  Pair,
  FstIntro,
  FstElim,
  SndIntro,
  SndElim,
  FstCongr,
  SndCongr,
};

inline constexpr std::array<Rule, 20> kAllRules = {
    Rule::Top,        Rule::Bot,        Rule::Refl,       Rule::Var,      Rule::Trans,
    Rule::Fun,        Rule::All,        Rule::DomIntro,   Rule::DomElim,  Rule::RangeIntro,
    Rule::RangeElim,  Rule::DomCongr,   Rule::RangeCongr, Rule::Pair,     Rule::FstIntro,
    Rule::FstElim,    Rule::SndIntro,   Rule::SndElim,    Rule::FstCongr, Rule::SndCongr,
};

std::string_view ruleName(Rule rule);
std::optional<Rule> ruleFromName(std::string_view name);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

// One node of a proof tree for the judgment `ctx |- lhs <: rhs`.
struct Derivation {
  Rule rule;
  Context ctx;
  TypePtr lhs;
  TypePtr rhs;
  std::vector<DerivationPtr> premises;

  std::size_t height() const;
  std::size_t nodeCount() const;
};

DerivationPtr makeDerivation(Rule rule, Context ctx, TypePtr lhs, TypePtr rhs,
                             std::vector<DerivationPtr> premises = {});

// Chains `a <: b` and `b <: c`. Reflexive sides are dropped instead of
// producing a trivial s-trans node.
DerivationPtr chain(const DerivationPtr& first, const DerivationPtr& second);

// Every rule used anywhere in the tree.
void collectRules(const Derivation& d, std::vector<bool>& seen);

// Indented tree, conclusion first, one node per line.
std::string formatDerivation(const Derivation& d);

}  // namespace fdr
