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

#include <algorithm>

#include "fdr/declarative.h"
#include "fdr/fuzz.h"
#include "fdr/parser.h"
#include "fdr/printer.h"
#include "support.h"

namespace fdr {
namespace {

using testing::ty;

TEST(ParseType, Examples) {
  TypePtr arrow = ty("B -> B");
  ASSERT_TRUE(arrow->is(TypeKind::Arrow));
  EXPECT_TRUE(arrow->param()->is(TypeKind::Base));
  EXPECT_TRUE(arrow->result()->is(TypeKind::Base));

  TypePtr dom = ty("Dom<forall X <: Top . X>");
  ASSERT_TRUE(dom->is(TypeKind::Dom));
  ASSERT_TRUE(dom->inner()->is(TypeKind::All));
  EXPECT_TRUE(dom->inner()->bound()->is(TypeKind::Top));
  ASSERT_TRUE(dom->inner()->body()->is(TypeKind::Var));
  EXPECT_EQ(dom->inner()->body()->index(), 0);

  TypePtr pair = ty("[B, B -> Top]");
  ASSERT_TRUE(pair->is(TypeKind::Pair));
  EXPECT_TRUE(pair->first()->is(TypeKind::Base));
  EXPECT_TRUE(sameType(pair->second(), Type::arrow(Type::base(), Type::top())));
}

TEST(ParseType, ArrowIsRightAssociative) {
  EXPECT_TRUE(sameType(ty("B -> B -> B"), Type::arrow(Type::base(), ty("B -> B"))));
  EXPECT_TRUE(sameType(ty("(B -> B) -> B"), Type::arrow(ty("B -> B"), Type::base())));
}

TEST(ParseTerm, Examples) {
  TermPtr id = parseTerm("fun (x : B) => x");
  ASSERT_TRUE(id->is(TermKind::Abs));
  EXPECT_EQ(id->name(), "x");
  EXPECT_TRUE(id->type()->is(TypeKind::Base));
  EXPECT_TRUE(id->body()->is(TermKind::Var));

  TermPtr eta = parseTerm("tfun (F <: Top) => fun (f : F) => fun (x : Dom<F>) => f x");
  ASSERT_TRUE(eta->is(TermKind::TAbs));
  const TermPtr& inner = eta->body()->body();
  ASSERT_TRUE(inner->is(TermKind::Abs));
  EXPECT_TRUE(sameType(inner->type(), Type::dom(Type::var(0))));
  EXPECT_TRUE(inner->body()->is(TermKind::App));

  TermPtr proj = parseTerm("(c, c).1");
  ASSERT_TRUE(proj->is(TermKind::Fst));
  ASSERT_TRUE(proj->inner()->is(TermKind::Pair));
  EXPECT_TRUE(proj->inner()->left()->is(TermKind::Const));
}

TEST(ParseTerm, ApplicationIsLeftAssociative) {
  TermPtr t = parseTerm("f x y", {});
  ASSERT_TRUE(t->is(TermKind::App));
  EXPECT_TRUE(t->fn()->is(TermKind::App));
  EXPECT_EQ(t->arg()->name(), "y");
}

TEST(ParseProgram, LetDesugarsToApplication) {
  TermPtr p = parseProgram("// comment\nlet x : B = c;\nx");
  ASSERT_TRUE(p->is(TermKind::App));
  EXPECT_TRUE(p->fn()->is(TermKind::Abs));
  EXPECT_EQ(p->fn()->name(), "x");
  EXPECT_TRUE(p->arg()->is(TermKind::Const));
}

TEST(Print, Examples) {
  EXPECT_EQ(printType(Type::arrow(Type::base(), ty("B -> B"))), "B -> B -> B");
  EXPECT_EQ(printType(Type::dom(ty("B -> Top"))), "Dom<B -> Top>");
  EXPECT_EQ(printType(Type::all("X", ty("[Top, Top]"), Type::fst(Type::var(0)))),
            "forall X <: [Top, Top] . Fst<X>");
}

TEST(Print, DisambiguatesClashingBinderHints) {
  // Both binders carry the hint X; the inner one shadows the outer one in
  // the printed text unless renamed.
  TypePtr t = Type::all("X", Type::top(),
                        Type::all("X", Type::top(), Type::arrow(Type::var(1), Type::var(0))));
  EXPECT_TRUE(sameType(ty(printType(t)), t)) << printType(t);
}

void expectSpanInside(const std::string& src) {
  try {
    parseTerm(src);
    FAIL() << "expected a parse error for: " << src;
  } catch (const ParseError& e) {
    const SourceSpan& s = e.span();
    ASSERT_TRUE(s.valid()) << src;
    int lines = 1 + static_cast<int>(std::count(src.begin(), src.end(), '\n'));
    EXPECT_LE(s.startLine, lines) << src;
    EXPECT_LE(s.endLine, lines) << src;
    EXPECT_GE(s.startColumn, 1) << src;
  }
}

TEST(ParseError, SpansStayInsideInput) {
  for (const char* src : {"", "fun", "fun (x : ) => x", "(c, c).3", "c c)", "tfun (X <: Y) => c",
                          "fun (x : B) =>\n", "[B, B]", "forall"}) {
    expectSpanInside(src);
  }
}

TEST(ParseError, ReportsExpectedTokens) {
  try {
    parseType("Dom<B");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.expected(), std::vector<std::string>{"'>'"});
  }
}

TEST(ParseContext, ReadsCommaSeparatedBindings) {
  Context ctx = parseContext("X <: B -> B, x : X, Y <: X");
  EXPECT_EQ(ctx.numTypeVars(), 2);
  EXPECT_EQ(printContext(ctx), "X <: B -> B, x : X, Y <: X");
  EXPECT_TRUE(parseContext("").empty());
  EXPECT_THROW(parseContext("Y <: X"), ParseError);
}

TEST(RoundTrip, EnumeratedTypes) {
  Signature sig = pairSignature();
  sig.insert(TypeKind::Var);
  Context ctx = parseContext("X <: Top");
  for (const TypePtr& t : enumerateTypes(sig, 4, ctx)) {
    ASSERT_TRUE(sameType(parseType(printType(ctx, t), ctx), t)) << printType(ctx, t);
  }
}

TEST(RoundTrip, GeneratedTerms) {
  Rng rng(3);
  GenConfig config;
  std::vector<TypePtr> goals = goalPool(rng, config);
  int produced = 0;
  for (int i = 0; i < 300; ++i) {
    auto t = genWellTypedTerm(Context(), goals[i % goals.size()], 5, rng, config);
    if (!t) continue;
    ++produced;
    std::string text = printTerm(*t);
    ASSERT_TRUE(sameTerm(parseTerm(text), *t)) << text;
  }
  EXPECT_GT(produced, 200);
}

}  // namespace
}  // namespace fdr
