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

#include "fdr/declarative.h"
#include "fdr/fuzz.h"
#include "fdr/printer.h"
#include "fdr/projection.h"
#include "support.h"

namespace fdr {
namespace {

using testing::ctxOf;
using testing::ty;

TEST(Positivity, Examples) {
  EXPECT_TRUE(positivity({}));
  EXPECT_FALSE(positivity({Selector::Dom}));
  EXPECT_TRUE(positivity({Selector::Dom, Selector::Dom}));
  // fst applied after dom, i.e. Fst<Dom<...>> read from the base outwards.
  EXPECT_FALSE(positivity({Selector::Dom, Selector::Fst}));
  EXPECT_FALSE(positivity({Selector::Fst, Selector::Dom}));
}

TEST(PositivityProperty, EvenNumberOfDoms) {
  Rng rng(5);
  const std::vector<Selector> all = {Selector::Dom, Selector::Ran, Selector::Fst, Selector::Snd};
  for (int i = 0; i < 500; ++i) {
    SelectionPath path;
    std::size_t len = rng.below(8);
    int doms = 0;
    for (std::size_t j = 0; j < len; ++j) {
      path.push_back(all[rng.below(4)]);
      doms += path.back() == Selector::Dom;
    }
    EXPECT_EQ(positivity(path), doms % 2 == 0) << formatPath(path);
  }
}

TEST(ResolveStep, DomOfArrow) {
  auto r = resolveStep(Context(), ty("Dom<B -> Top>"));
  ASSERT_TRUE(r);
  EXPECT_TRUE(sameType(r->to, Type::base()));
  EXPECT_TRUE(checkDerivation(*r->forward).ok);
  EXPECT_TRUE(checkDerivation(*r->backward).ok);
}

TEST(ResolveStep, DomOfBotIsTop) {
  // Both directions must be derivable before the rewrite may be used.
  ASSERT_TRUE(search(Context(), Type::top(), ty("Dom<Bot>")));
  ASSERT_TRUE(search(Context(), ty("Dom<Bot>"), Type::top()));
  auto r = resolveStep(Context(), ty("Dom<Bot>"));
  ASSERT_TRUE(r);
  EXPECT_TRUE(sameType(r->to, Type::top()));
  EXPECT_TRUE(checkDerivation(*r->forward).ok);
  EXPECT_TRUE(checkDerivation(*r->backward).ok);
}

TEST(ResolveStep, DomOfBaseStaysPut) {
  EXPECT_FALSE(search(Context(), ty("Dom<B>"), Type::bot()));
  EXPECT_FALSE(search(Context(), Type::top(), ty("Dom<B>")));
  EXPECT_FALSE(resolveStep(Context(), ty("Dom<B>")));
}

TEST(ResolveStep, InnermostProjectionFirst) {
  auto r = resolveStep(Context(), ty("Range<Dom<(B -> B) -> Top>>"));
  ASSERT_TRUE(r);
  EXPECT_EQ(printType(r->to), "Range<B -> B>");
}

TEST(HeadNormalize, ResolvesWholeSpine) {
  HeadNormal hn = headNormalize(Context(), ty("Range<Dom<(B -> B) -> Top>>"));
  EXPECT_EQ(printType(hn.rewrite.to), "B");
  EXPECT_EQ(hn.steps.size(), 2u);
  EXPECT_TRUE(checkDerivation(*hn.rewrite.forward).ok);
  EXPECT_TRUE(checkDerivation(*hn.rewrite.backward).ok);
}

TEST(Expose, PromotesVariable) {
  Context ctx = ctxOf("X <: B -> B");
  Exposure e = expose(ctx, ty("X", ctx));
  ASSERT_TRUE(e.is(ExposureKind::Arrow));
  EXPECT_EQ(printType(ctx, e.head), "B -> B");
  ASSERT_EQ(e.chain.size(), 1u);
  EXPECT_EQ(e.chain[0].kind, ExposureStep::Kind::Promotion);
  EXPECT_TRUE(checkDerivation(*e.derivation).ok);
}

TEST(Expose, RangeOfArrowFromDomTop) {
  Exposure e = expose(Context(), ty("Range<Dom<Top> -> Top>"));
  EXPECT_TRUE(e.is(ExposureKind::Top));
}

TEST(Expose, AbstractDomIsOpaque) {
  Context ctx = ctxOf("F <: Top");
  Exposure e = expose(ctx, ty("Dom<F>", ctx));
  ASSERT_TRUE(e.is(ExposureKind::Opaque));
  EXPECT_EQ(printType(ctx, e.head), "Dom<F>");
}

TEST(Expose, PromotionUnderRangeIsUpward) {
  Context ctx = ctxOf("F <: B -> Top");
  Exposure e = expose(ctx, ty("Range<F>", ctx));
  EXPECT_TRUE(e.is(ExposureKind::Top));
  EXPECT_TRUE(checkDerivation(*e.derivation).ok);
}

TEST(Expose, NoPromotionUnderDom) {
  // Promoting F inside Dom would produce a subtype, not an upper bound.
  Context ctx = ctxOf("F <: B -> B");
  Exposure e = expose(ctx, ty("Dom<F>", ctx));
  EXPECT_TRUE(e.is(ExposureKind::Opaque));
}

TEST(ReplaceBase, DirectionFollowsPositivity) {
  Context ctx = ctxOf("F <: B -> B");
  auto up = promote(ctx, ty("Range<F>", ctx));
  ASSERT_TRUE(up);
  EXPECT_TRUE(up->upward);
  EXPECT_EQ(printType(ctx, up->to), "Range<B -> B>");
  EXPECT_FALSE(promote(ctx, ty("Dom<F>", ctx)));
  auto down = demote(ctx, ty("Dom<F>", ctx));
  ASSERT_TRUE(down);
  EXPECT_FALSE(down->upward);
  EXPECT_TRUE(checkDerivation(*down->derivation).ok);
}

class ExposeProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(ExposeProperty, IdempotentAndRewritesAreDeclarativeEquivalences) {
  Context ctx = ctxOf(GetParam());
  Signature sig = pairSignature();
  if (ctx.numTypeVars()) sig.insert(TypeKind::Var);
  SearchBudget budget;
  budget.maxDepth = 6;
  budget.maxTransCut = 5;
  for (const TypePtr& t : enumerateTypes(sig, 4, ctx)) {
    Exposure e = expose(ctx, t);
    ASSERT_TRUE(checkDerivation(*e.derivation).ok) << printType(ctx, t);
    Exposure again = expose(ctx, e.head);
    ASSERT_EQ(again.kind, e.kind) << printType(ctx, t);
    ASSERT_TRUE(sameType(again.head, e.head)) << printType(ctx, t);
    ASSERT_TRUE(again.chain.empty()) << printType(ctx, t);

    auto r = resolveStep(ctx, t);
    if (!r) continue;
    ASSERT_TRUE(search(ctx, r->from, r->to, budget))
        << printType(ctx, r->from) << " <: " << printType(ctx, r->to);
    ASSERT_TRUE(search(ctx, r->to, r->from, budget))
        << printType(ctx, r->to) << " <: " << printType(ctx, r->from);
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, ExposeProperty,
                         ::testing::Values("", "X <: B -> B", "X <: [B, Top]"));

}  // namespace
}  // namespace fdr
