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


#include <gtest/gtest.h>
#include <pthread.h>

#include "fdr/eval.h"
#include "fdr/fuzz.h"
#include "fdr/parser.h"
#include "fdr/printer.h"

namespace fdr {
namespace {

EvalOutcome run(const std::string& src, std::size_t fuel = 100, EvalStats* stats = nullptr) {
  return eval(ValueEnv(), parseTerm(src), fuel, stats);
}

TEST(Eval, Beta) {
  EvalStats stats;
  EvalOutcome r = run("(fun (x : B) => x) c", 100, &stats);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.value->is(Value::Kind::Const));
  EXPECT_EQ(stats.count(EvalRule::Abs), 1u);
  EXPECT_EQ(stats.count(EvalRule::Cst), 1u);
  EXPECT_EQ(stats.count(EvalRule::App), 1u);
  EXPECT_EQ(stats.count(EvalRule::Var), 1u);
  EXPECT_EQ(r.steps, 4u);
}

TEST(Eval, TypeApplicationRunsCapturedBody) {
  EvalStats stats;
  EvalOutcome r = run("(tfun (X <: Top) => fun (x : B) => x) [B] c", 100, &stats);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.value->is(Value::Kind::Const));
  EXPECT_EQ(stats.count(EvalRule::TAbs), 1u);
  EXPECT_EQ(stats.count(EvalRule::TApp), 1u);
}

TEST(Eval, PairsAndProjections) {
  EvalStats stats;
  EvalOutcome r = run("(c, (fun (x : B) => x) c).1", 100, &stats);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(printValue(*r.value), "c");
  EXPECT_EQ(stats.count(EvalRule::Pair), 1u);
  EXPECT_EQ(stats.count(EvalRule::Fst), 1u);
  EvalOutcome second = run("(c, fun (x : B) => x).2", 100, &stats);
  ASSERT_TRUE(second.ok());
  EXPECT_EQ(printValue(*second.value), "<closure>");
  EXPECT_EQ(stats.count(EvalRule::Snd), 1u);
}

TEST(Eval, PrintsValues) {
  EXPECT_EQ(printValue(*run("(c, (tfun (X <: Top) => c, c))").value), "(c, (<tclosure>, c))");
}

TEST(Eval, StuckReasons) {
  EvalOutcome a = run("c c");
  EXPECT_EQ(a.status, EvalOutcome::Status::Stuck);
  EXPECT_EQ(a.reason, "apply-non-closure");
  EXPECT_EQ(run("c [B]").reason, "type-apply-non-type-closure");
  EXPECT_EQ(run("c.1").reason, "project-non-pair");
  EXPECT_EQ(run("y").reason, "unbound-variable y");
}

TEST(Eval, ArgumentIsNotEvaluatedWhenFunctionIsStuck) {
  // The argument would run forever; the function check comes first.
  std::string omega = "(fun (x : Top) => x x) (fun (x : Top) => x x)";
  EvalOutcome r = run("c (" + omega + ")", 1000);
  EXPECT_EQ(r.status, EvalOutcome::Status::Stuck);
}

TEST(Eval, FuelExhaustion) {
  std::string omega = "(fun (x : Top) => x x) (fun (x : Top) => x x)";
  EvalOutcome r = run(omega, 1000);
  EXPECT_EQ(r.status, EvalOutcome::Status::OutOfFuel);
  EXPECT_EQ(r.steps, 1000u);
  EXPECT_EQ(run("c", 0).status, EvalOutcome::Status::OutOfFuel);
  EXPECT_TRUE(run("c", 1).ok());
}

TEST(Eval, DeepTermsUseNoNativeStack) {
  constexpr int kDepth = 20000;
  TermPtr t = Term::constant();
  TermPtr id = parseTerm("fun (x : B) => x");
  for (int i = 0; i < kDepth; ++i) t = Term::app(id, t);

  // Evaluate on a thread whose stack is far too small for one native frame
  // per nesting level.
  struct Job {
    TermPtr term;
    EvalOutcome outcome;
  } job{t, {}};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, 256 * 1024);
  pthread_t thread;
  auto body = [](void* arg) -> void* {
    auto* j = static_cast<Job*>(arg);
    j->outcome = eval(ValueEnv(), j->term, kDefaultFuel);
    return nullptr;
  };
  ASSERT_EQ(pthread_create(&thread, &attr, body, &job), 0);
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  ASSERT_TRUE(job.outcome.ok());
  EXPECT_EQ(job.outcome.steps, static_cast<std::size_t>(kDepth) * 3 + 1);
}

TEST(Eval, ClosuresCaptureTheirEnvironment) {
  EvalOutcome r = run("(fun (x : B -> B) => fun (y : B) => x y) (fun (z : B) => z) c");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(printValue(*r.value), "c");
}

TEST(EvalProperty, DeterministicFuelMonotoneAndErasureFaithful) {
  Rng rng(17);
  GenConfig config;
  std::vector<TypePtr> goals = goalPool(rng, config);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto t = genWellTypedTerm(Context(), goals[i % goals.size()], 5, rng, config);
    if (!t) continue;
    ++checked;
    EvalOutcome a = eval(ValueEnv(), *t);
    EvalOutcome b = eval(ValueEnv(), *t);
    ASSERT_TRUE(a.ok()) << printTerm(*t);
    ASSERT_EQ(a.steps, b.steps);
    ASSERT_EQ(printValue(*a.value), printValue(*b.value));

    EvalOutcome exact = eval(ValueEnv(), *t, a.steps);
    ASSERT_TRUE(exact.ok());
    ASSERT_EQ(printValue(*exact.value), printValue(*a.value));
    ASSERT_EQ(eval(ValueEnv(), *t, a.steps - 1).status, EvalOutcome::Status::OutOfFuel);

    EvalOutcome erased = eval(ValueEnv(), replaceAnnotations(*t, Type::top()));
    ASSERT_EQ(erased.status, a.status);
    ASSERT_EQ(erased.steps, a.steps);
    ASSERT_EQ(printValue(*erased.value), printValue(*a.value));
  }
  EXPECT_GT(checked, 200);
}

}  // namespace
}  // namespace fdr
