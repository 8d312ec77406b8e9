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

#include "fdr/eval.h"

#include <utility>
#include <vector>

namespace fdr {

ValueEnv ValueEnv::extend(std::string name, ValuePtr value) const {
  ValueEnv out;
  out.head_ = std::make_shared<const Node>(Node{std::move(name), std::move(value), head_});
  return out;
}

ValuePtr ValueEnv::lookup(std::string_view name) const {
  for (const Node* n = head_.get(); n; n = n->next.get()) {
    if (n->name == name) return n->value;
  }
  return nullptr;
}

ValuePtr Value::constant() {
  static const ValuePtr instance = std::make_shared<const Value>(Value{Kind::Const, {}, {}, {}, {}, {}});
  return instance;
}

ValuePtr Value::closure(ValueEnv env, std::string param, TermPtr body) {
  return std::make_shared<const Value>(
      Value{Kind::Closure, std::move(env), std::move(param), std::move(body), {}, {}});
}

ValuePtr Value::typeClosure(ValueEnv env, TermPtr body) {
  return std::make_shared<const Value>(
      Value{Kind::TypeClosure, std::move(env), {}, std::move(body), {}, {}});
}

ValuePtr Value::pair(ValuePtr first, ValuePtr second) {
  return std::make_shared<const Value>(
      Value{Kind::Pair, {}, {}, {}, std::move(first), std::move(second)});
}

std::string printValue(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Const: return "c";
    case Value::Kind::Closure: return "<closure>";
    case Value::Kind::TypeClosure: return "<tclosure>";
    case Value::Kind::Pair: return "(" + printValue(*v.first) + ", " + printValue(*v.second) + ")";
  }
  return "?";
}

std::string_view evalRuleName(EvalRule rule) {
  switch (rule) {
    case EvalRule::Cst: return "e-cst";
    case EvalRule::Var: return "e-var";
    case EvalRule::Abs: return "e-abs";
    case EvalRule::App: return "e-app";
    case EvalRule::TAbs: return "e-tabs";
    case EvalRule::TApp: return "e-tapp";
    case EvalRule::Pair: return "e-pair";
    case EvalRule::Fst: return "e-fst";
    case EvalRule::Snd: return "e-snd";
  }
  return "?";
}

namespace {

EvalRule ruleFor(TermKind k) {
  switch (k) {
    case TermKind::Const: return EvalRule::Cst;
    case TermKind::Var: return EvalRule::Var;
    case TermKind::Abs: return EvalRule::Abs;
    case TermKind::App: return EvalRule::App;
    case TermKind::TAbs: return EvalRule::TAbs;
    case TermKind::TApp: return EvalRule::TApp;
    case TermKind::Pair: return EvalRule::Pair;
    case TermKind::Fst: return EvalRule::Fst;
    case TermKind::Snd: return EvalRule::Snd;
  }
  return EvalRule::Cst;
}

// What to do with the value of a finished premise.
struct Frame {
  enum class Kind {
    AppFunction,  // function done; evaluate the argument next
    AppArgument,  // argument done; enter the closure in `value`
    TypeApp,      // function done; enter the type closure
    PairLeft,     // left done; evaluate the right next
    PairRight,    // right done; `value` holds the left
    First,
    Second,
  };
  Kind kind;
  TermPtr term;
  ValueEnv env;
  ValuePtr value;
};

EvalOutcome stuck(std::string reason, std::size_t steps) {
  return EvalOutcome{EvalOutcome::Status::Stuck, nullptr, std::move(reason), steps};
}

}  // namespace

EvalOutcome eval(const ValueEnv& env, const TermPtr& t, std::size_t fuel, EvalStats* stats) {
  std::vector<Frame> stack;
  TermPtr term = t;
  ValueEnv cur = env;
  ValuePtr result;
  std::size_t steps = 0;

  for (;;) {
    if (term) {
      if (fuel == 0) return EvalOutcome{EvalOutcome::Status::OutOfFuel, nullptr, {}, steps};
      --fuel;
      ++steps;
      if (stats) ++stats->applications[static_cast<std::size_t>(ruleFor(term->kind()))];
      switch (term->kind()) {
        case TermKind::Const:
          result = Value::constant();
          break;
        case TermKind::Var:
          result = cur.lookup(term->name());
          if (!result) return stuck("unbound-variable " + term->name(), steps);
          break;
        case TermKind::Abs:
          result = Value::closure(cur, term->name(), term->body());
          break;
        case TermKind::TAbs:
          result = Value::typeClosure(cur, term->body());
          break;
        case TermKind::App:
          stack.push_back(Frame{Frame::Kind::AppFunction, term->arg(), cur, nullptr});
          term = term->fn();
          continue;
        case TermKind::TApp:
          stack.push_back(Frame{Frame::Kind::TypeApp, nullptr, {}, nullptr});
          term = term->fn();
          continue;
        case TermKind::Pair:
          stack.push_back(Frame{Frame::Kind::PairLeft, term->right(), cur, nullptr});
          term = term->left();
          continue;
        case TermKind::Fst:
        case TermKind::Snd:
          stack.push_back(Frame{term->is(TermKind::Fst) ? Frame::Kind::First : Frame::Kind::Second,
                                nullptr, {}, nullptr});
          term = term->inner();
          continue;
      }
      term = nullptr;
    }

    if (stack.empty()) return EvalOutcome{EvalOutcome::Status::Value, result, {}, steps};
    Frame frame = std::move(stack.back());
    stack.pop_back();
    switch (frame.kind) {
      case Frame::Kind::AppFunction:
        if (!result->is(Value::Kind::Closure)) return stuck("apply-non-closure", steps);
        stack.push_back(Frame{Frame::Kind::AppArgument, nullptr, {}, result});
        term = frame.term;
        cur = frame.env;
        break;
      case Frame::Kind::AppArgument:
        cur = frame.value->env.extend(frame.value->param, result);
        term = frame.value->body;
        break;
      case Frame::Kind::TypeApp:
        if (!result->is(Value::Kind::TypeClosure)) return stuck("type-apply-non-type-closure", steps);
        cur = result->env;
        term = result->body;
        break;
      case Frame::Kind::PairLeft:
        stack.push_back(Frame{Frame::Kind::PairRight, nullptr, {}, result});
        term = frame.term;
        cur = frame.env;
        break;
      case Frame::Kind::PairRight:
        result = Value::pair(frame.value, result);
        break;
      case Frame::Kind::First:
      case Frame::Kind::Second:
        if (!result->is(Value::Kind::Pair)) return stuck("project-non-pair", steps);
        result = frame.kind == Frame::Kind::First ? result->first : result->second;
        break;
    }
  }
}

}  // namespace fdr
