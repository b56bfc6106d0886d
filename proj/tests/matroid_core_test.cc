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

#include "mdepth/families.h"
#include "mdepth/io.h"
#include "mdepth/rank_table.h"
#include "oracles.h"

namespace mdepth {
namespace {

TEST(Families, LabeledMatroidCounts) {
  const std::vector<std::size_t> expect = {1, 2, 5, 16, 68, 406, 3807};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(AllMatroids(n).size(), expect[n]) << n;
}

TEST(RankAxioms, HoldOnFamilyAndFailOnBrokenTable) {
  for (int n = 0; n <= 5; ++n) {
    for (const RankTable& m : AllMatroids(n)) EXPECT_FALSE(ValidateRankAxioms(m));
  }
  // r({0}) = 2 breaks the unit increase.
  EXPECT_TRUE(ValidateRankAxioms(RankTable(1, {0, 2})));
  // r({0,1}) = 2 > r({0}) + r({1}) = 0 breaks submodularity.
  EXPECT_TRUE(ValidateRankAxioms(RankTable(2, {0, 0, 0, 2})));
}

TEST(Dual, InvolutionAndOracleFormula) {
  for (int n = 0; n <= 5; ++n) {
    for (const RankTable& m : AllMatroids(n)) {
      EXPECT_EQ(Dual(Dual(m)), m);
      EXPECT_EQ(Dual(m), oracle::DualOf(m));
    }
  }
}

TEST(Minors, MatchOracleFormulas) {
  for (const RankTable& m : AllMatroids(5)) {
    for (Mask x = 0; x <= m.ground(); x += 5) {
      EXPECT_EQ(Delete(m, x), oracle::Sub(m, m.ground() & ~x, 0));
      EXPECT_EQ(Contract(m, x), oracle::Sub(m, m.ground() & ~x, x));
      EXPECT_EQ(Dual(Contract(m, x)), Delete(Dual(m), x));
    }
  }
}

TEST(Lambda, SymmetricAndZeroOnComponents) {
  for (const RankTable& m : AllMatroids(5)) {
    for (Mask x = 0; x <= m.ground(); ++x) {
      EXPECT_EQ(Lambda(m, x), Lambda(m, m.ground() & ~x));
      EXPECT_EQ(Lambda(m, x), Lambda(Dual(m), x));
    }
    for (Mask c : Components(m)) EXPECT_EQ(Lambda(m, c), 0);
  }
}

TEST(Components, MatchCircuitOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (const RankTable& m : AllMatroids(n)) {
      auto got = Components(m);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::ComponentsByCircuits(m));
      EXPECT_EQ(IsConnected(m), got.size() == 1);
    }
  }
}

TEST(Uniform, CircuitsAndCircumference) {
  EXPECT_EQ(Circuits(Uniform(2, 4)).size(), 4u);
  EXPECT_EQ(Circumference(Uniform(2, 4)), 3);
  EXPECT_EQ(Cocircumference(Uniform(2, 4)), 3);
  // No circuits gives 1 by convention.
  EXPECT_EQ(Circumference(FreeMatroid(3)), 1);
  EXPECT_EQ(Circumference(LoopMatroid(2)), 1);
}

TEST(LoopsColoops, Detection) {
  const RankTable m = DirectSum(LoopMatroid(1), FreeMatroid(1));
  EXPECT_TRUE(IsLoop(m, 0));
  EXPECT_TRUE(IsColoop(m, 1));
  EXPECT_TRUE(OnlyLoopsAndColoops(m));
  EXPECT_FALSE(OnlyLoopsAndColoops(Uniform(1, 2)));
}

TEST(Closure, IsAFlatContainingTheSet) {
  for (const RankTable& m : AllMatroids(4)) {
    for (Mask x = 0; x <= m.ground(); ++x) {
      const Mask c = Closure(m, x);
      EXPECT_EQ(c & x, x);
      EXPECT_EQ(m.Rank(c), m.Rank(x));
      EXPECT_TRUE(IsFlat(m, c));
    }
  }
}

TEST(Bispan, ConnectedBispanOfU24) {
  const RankTable m = Uniform(2, 4);
  EXPECT_TRUE(IsBispan(m, 0b0011, 0b1100));
  EXPECT_TRUE(IsConnectedBispan(m, 0b0011, 0b1100));
  EXPECT_FALSE(IsConnectedBispan(DirectSum(Uniform(1, 2), Uniform(1, 2)), 0b0011, 0b1100));
  EXPECT_TRUE(IsModularPair(m, 0b0001, 0b0010));
}

TEST(OracleMatroid, MaterializesAndMemoizes) {
  int calls = 0;
  OracleMatroid o(3, [&calls](Mask x) {
    ++calls;
    return std::min(std::popcount(x), 2);
  });
  EXPECT_EQ(o.Rank(0b111), 2);
  EXPECT_EQ(o.Rank(0b111), 2);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(o.Materialize(), Uniform(2, 3));
}

TEST(MatroidJson, RoundTripsEveryKind) {
  for (const RankTable& m : AllMatroids(4)) {
    EXPECT_EQ(MatroidFromJson(MatroidToJson(m)), m);
  }
  const Json linear = {{"kind", "linear"}, {"field", "gf2"}, {"matrix", {{1, 0, 1}, {0, 1, 1}}}};
  EXPECT_EQ(MatroidFromJson(linear), Uniform(2, 3));
  EXPECT_EQ(Dump(MatroidToJson(MatroidFromJson(MatroidToJson(Uniform(2, 4))))),
            Dump(MatroidToJson(Uniform(2, 4))));
  EXPECT_THROW(MatroidFromJson(Json{{"kind", "nope"}}), InputError);
}

TEST(Named, FanoIsRankThreeWithSevenLines) {
  const RankTable f = Named("fano", Json::object());
  EXPECT_EQ(f.size(), 7);
  EXPECT_EQ(f.FullRank(), 3);
  int lines = 0;
  for (Mask c : Circuits(f)) lines += std::popcount(c) == 3;
  EXPECT_EQ(lines, 7);
}

}  // namespace
}  // namespace mdepth
