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

#include "fdr/derivation.h"

#include <fmt/format.h>

#include <algorithm>
#include <cassert>
#include <utility>

#include "fdr/printer.h"

namespace fdr {

std::string_view ruleName(Rule rule) {
  switch (rule) {
    case Rule::Top: return "s-top";
    case Rule::Bot: return "s-bot";
    case Rule::Refl: return "s-refl";
    case Rule::Var: return "s-var";
    case Rule::Trans: return "s-trans";
    case Rule::Fun: return "s-fun";
    case Rule::All: return "s-all";
    case Rule::DomIntro: return "s-dom-intro";
    case Rule::DomElim: return "s-dom-elim";
    case Rule::RangeIntro: return "s-range-intro";
    case Rule::RangeElim: return "s-range-elim";
    case Rule::DomCongr: return "s-dom-congr";
    case Rule::RangeCongr: return "s-range-congr";
    case Rule::Pair: return "s-pair";
    case Rule::FstIntro: return "s-fst-intro";
    case Rule::FstElim: return "s-fst-elim";
    case Rule::SndIntro: return "s-snd-intro";
    case Rule::SndElim: return "s-snd-elim";
    case Rule::FstCongr: return "s-fst-congr";
    case Rule::SndCongr: return "s-snd-congr";
  }
  return "?";
}

std::optional<Rule> ruleFromName(std::string_view name) {
  for (Rule r : kAllRules) {
    if (ruleName(r) == name) return r;
  }
  return std::nullopt;
}

std::size_t Derivation::height() const {
  std::size_t h = 0;
  for (const auto& p : premises) h = std::max(h, p->height());
  return h + 1;
}

std::size_t Derivation::nodeCount() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p->nodeCount();
  return n;
}

DerivationPtr makeDerivation(Rule rule, Context ctx, TypePtr lhs, TypePtr rhs,
                             std::vector<DerivationPtr> premises) {
  return std::make_shared<const Derivation>(
      Derivation{rule, std::move(ctx), std::move(lhs), std::move(rhs), std::move(premises)});
}

DerivationPtr chain(const DerivationPtr& first, const DerivationPtr& second) {
  assert(sameType(first->rhs, second->lhs));
  if (first->rule == Rule::Refl) return second;
  if (second->rule == Rule::Refl) return first;
  return makeDerivation(Rule::Trans, first->ctx, first->lhs, second->rhs, {first, second});
}

void collectRules(const Derivation& d, std::vector<bool>& seen) {
  seen.resize(kAllRules.size(), false);
  seen[static_cast<std::size_t>(d.rule)] = true;
  for (const auto& p : d.premises) collectRules(*p, seen);
}

namespace {

void format(const Derivation& d, int indent, std::string& out) {
  out += fmt::format("{:{}}{} <: {}   [{}]\n", "", indent, printType(d.ctx, d.lhs),
                     printType(d.ctx, d.rhs), ruleName(d.rule));
  for (const auto& p : d.premises) format(*p, indent + 2, out);
}

}  // namespace

std::string formatDerivation(const Derivation& d) {
  std::string out;
  format(d, 0, out);
  return out;
}

}  // namespace fdr
