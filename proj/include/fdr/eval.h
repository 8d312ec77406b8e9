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

#include "fdr/term.h"

namespace fdr {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// An immutable environment mapping term variables to values. Extension
// shares the existing bindings; lookup finds the most recent binding.
class ValueEnv {
 public:
  ValueEnv() = default;

  ValueEnv extend(std::string name, ValuePtr value) const;
  ValuePtr lookup(std::string_view name) const;  // null when unbound
  bool empty() const { return head_ == nullptr; }

 private:
  struct Node {
    std::string name;
    ValuePtr value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
};

struct Value {
  enum class Kind { Const, Closure, TypeClosure, Pair };

  Kind kind;
  ValueEnv env;       // closures: the captured environment
  std::string param;  // Closure: the parameter
  TermPtr body;       // closures: the body
  ValuePtr first;     // Pair
  ValuePtr second;    // Pair

  static ValuePtr constant();
  static ValuePtr closure(ValueEnv env, std::string param, TermPtr body);
  static ValuePtr typeClosure(ValueEnv env, TermPtr body);
  static ValuePtr pair(ValuePtr first, ValuePtr second);

  bool is(Kind k) const { return kind == k; }
};

// `c`, `<closure>`, `<tclosure>`, or `(v1, v2)`.
std::string printValue(const Value& v);

enum class EvalRule { Cst, Var, Abs, App, TAbs, TApp, Pair, Fst, Snd };
inline constexpr std::size_t kEvalRuleCount = 9;

std::string_view evalRuleName(EvalRule rule);

struct EvalStats {
  std::array<std::size_t, kEvalRuleCount> applications{};

  std::size_t count(EvalRule r) const { return applications[static_cast<std::size_t>(r)]; }
};

inline constexpr std::size_t kDefaultFuel = 1'000'000;

struct EvalOutcome {
  enum class Status { Value, OutOfFuel, Stuck };

  Status status;
  ValuePtr value;      // Status::Value
  std::string reason;  // Status::Stuck
  std::size_t steps = 0;

  bool ok() const { return status == Status::Value; }
};

/**
 * Big-step, call-by-value evaluation with left-to-right premises. Every rule
 * application consumes one unit of fuel. Annotations and type arguments are
 * never looked at: a type application runs the body of the type closure in
 * its captured environment.
 *
 * The evaluator keeps its own continuation stack, so deep evaluations do not
 * consume native stack.
 */
EvalOutcome eval(const ValueEnv& env, const TermPtr& t, std::size_t fuel = kDefaultFuel,
                 EvalStats* stats = nullptr);

}  // namespace fdr
