// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "mdepth/closure.h"
#include "mdepth/decomposition.h"
#include "mdepth/families.h"
#include "mdepth/graph.h"
#include "mdepth/io.h"

namespace mdepth {
namespace {

TEST(TreeHelpers, PathAndStar) {
  EXPECT_EQ(Radius({-1, 0, 1, 2, 3}), 2);
  EXPECT_EQ(RootedHeight({-1, 0, 1, 2, 3}), 4);
  EXPECT_EQ(Radius({-1, 0, 0, 0}), 1);
  EXPECT_TRUE(IsTree({-1, 0, 0}));
  EXPECT_FALSE(IsTree({-1, 2, 1}));
}

TEST(BranchWidth, KnownValuesAndSelfDual) {
  EXPECT_EQ(BranchWidth(Uniform(2, 4)), 2);
  // Width counts lambda without the +1 offset.
  EXPECT_EQ(BranchWidth(FreeMatroid(3)), 0);
  for (const RankTable& m : AllMatroids(5)) EXPECT_EQ(BranchWidth(m), BranchWidth(Dual(m)));
}

TEST(BranchDepth, TinyHasNoTree) {
  const auto r = BranchDepth(Uniform(1, 1));
  EXPECT_EQ(r.value, 0);
  EXPECT_FALSE(r.tree.has_value());
}

TEST(BranchDepth, TreeVerifiesAndRoundTrips) {
  for (const RankTable& m : AllMatroids(5)) {
    const auto r = BranchDepth(m);
    if (!r.tree) continue;
    EXPECT_TRUE(VerifyBranchDepth(m, *r.tree, r.value, r.value));
    if (r.value > 0) EXPECT_FALSE(VerifyBranchDepth(m, *r.tree, r.value - 1, r.value - 1));
    const LeafTree back = LeafTreeFromJson(LeafTreeToJson(*r.tree));
    EXPECT_EQ(back.parent, r.tree->parent);
    EXPECT_EQ(back.sigma, r.tree->sigma);
  }
}

TEST(Omega, Conventions) {
  const RankTable m = Uniform(2, 4);
  EXPECT_EQ(Omega(m, {}), 2);
  EXPECT_EQ(Omega(m, {0b0011, 0b1100}), 2);
  EXPECT_THROW(Omega(m, {0b0011, 0b0110}), InputError);
}

TEST(MatroidTreeDepth, RankZeroIsZeroAndDecompositionFits) {
  EXPECT_EQ(MatroidTreeDepth(LoopMatroid(3)).value, 0);
  for (const RankTable& m : AllMatroids(5)) {
    const auto r = MatroidTreeDepth(m);
    EXPECT_LE(TdWidth(m, r.decomposition), r.value);
    EXPECT_LE(Radius(r.decomposition.parent), r.value);
    EXPECT_LE(MatroidTreeWidth(m), r.value);
    const TreeDecomp back = TreeDecompFromJson(TreeDecompToJson(r.decomposition));
    EXPECT_EQ(back.tau, r.decomposition.tau);
  }
}

TEST(CsdToTreeDecomp, WidthAndRadiusBounded) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(5)) {
    const int c = s.Value(m, Measure::kCStar);
    const TreeDecomp d = CsdToTreeDecomp(m, s);
    EXPECT_LE(TdWidth(m, d), c);
    EXPECT_LE(Radius(d.parent), IsConnected(m) && m.size() >= 2 ? c - 1 : c);
  }
}

TEST(CstarDecomp, CycleOfFourHasHeightCsdMinusOne) {
  DepthSolver s;
  const RankTable m = CycleMatroid(CycleGraph(4));
  const CStarDecomp d = BuildCstarDecomp(m, s);
  EXPECT_TRUE(VerifyCstarDecomp(m, d));
  EXPECT_EQ(CstarDecompDepth(d), s.Value(m, Measure::kCStar) - 1);
  const CStarDecomp back = CstarDecompFromJson(CstarDecompToJson(d));
  EXPECT_TRUE(VerifyCstarDecomp(m, back));
}

TEST(CstarDecomp, MinimumHeightAgainstCsd) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(4)) {
    const int k = CstarDecompMinHeight(m).value;
    const int c = s.Value(m, Measure::kCStar);
    if (OnlyLoopsAndColoops(m) && m.FullRank() > 0) {
      EXPECT_EQ(k, 1);
      EXPECT_EQ(c, 1);
    } else {
      EXPECT_EQ(k, c - 1);
    }
  }
}

TEST(CstarDecomp, VerifierRejectsShortTree) {
  // Rank two needs two edges.
  CStarDecomp d{{-1, 0}, {1, 1, 1}};
  EXPECT_FALSE(VerifyCstarDecomp(Uniform(2, 3), d));
}

TEST(Closure, RestrictionWitnessReachesCsd) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(5)) {
    const ClosureWitness w = RestrictionClosureWitness(m, s);
    EXPECT_EQ(Restrict(w.extended, m.ground()), m);
    EXPECT_EQ(ApplyTrace(m, w.trace), w.extended);
    EXPECT_EQ(s.Value(w.extended, Measure::kC), s.Value(m, Measure::kCStar));
  }
}

TEST(Closure, ContractionWitnessReachesDsd) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(4)) {
    const ClosureWitness w = ContractionClosureWitness(m, s);
    EXPECT_EQ(Contract(w.extended, w.extended.ground() & ~m.ground()), m);
    EXPECT_EQ(s.Value(w.extended, Measure::kD), s.Value(m, Measure::kDStar));
  }
}

}  // namespace
}  // namespace mdepth
