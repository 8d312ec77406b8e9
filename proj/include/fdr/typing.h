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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdr/context.h"
#include "fdr/derivation.h"
#include "fdr/subtype.h"
#include "fdr/term.h"
#include "fdr/type.h"

namespace fdr {

enum class TypingRule { Cst, Var, Abs, AppDR, TAbs, TApp, Sub, Pair, Fst, Snd };

std::string_view typingRuleName(TypingRule rule);

struct TypingStep {
  TermPtr term;
  TypingRule rule;
  // Subtyping facts the step relies on: the t-app-dr argument check, the
  // t-tapp bound check, the t-fst/t-snd pair check, or the t-sub premise.
  std::vector<DerivationPtr> derivations;
};

struct TypingResult {
  TypePtr type;
  std::vector<TypingStep> trace;  // children before parents
};

enum class TypeErrorKind {
  UnboundVariable,
  NotAFunction,
  ArgumentMismatch,
  NotAQuantifier,
  BoundViolation,
  NotAPair,
  AnnotationMismatch,
  IllFormedAnnotation,
};

std::string_view typeErrorName(TypeErrorKind kind);

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorKind kind, const std::string& message, TermPtr term,
            std::optional<RejectionTrace> trace = std::nullopt);

  TypeErrorKind kind() const { return kind_; }
  const TermPtr& term() const { return term_; }
  const SourceSpan& span() const { return term_->span(); }
  const std::optional<RejectionTrace>& trace() const { return trace_; }

 private:
  TypeErrorKind kind_;
  TermPtr term_;
  std::optional<RejectionTrace> trace_;
};

/**
 * Synthesizes a type for t. Application is typed by the domain/range rule:
 * the argument must be a subtype of Dom<F> and the result is Range<F> in
 * head normal form. Pair projections require the operand to be below
 * [Top, Top] and yield Fst<T> or Snd<T>, again head normalized.
 *
 * Throws TypeError.
 */
TypingResult synthesize(const Context& ctx, const TermPtr& t);

// Synthesizes, then checks the result against `expected` with a t-sub step.
TypingResult checkAgainst(const Context& ctx, const TermPtr& t, const TypePtr& expected);

}  // namespace fdr
