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

#include "mdepth/extensions.h"
#include "mdepth/families.h"
#include "mdepth/rank_table.h"
#include "oracles.h"

namespace mdepth {
namespace {

// Every modular cut gives a distinct extension, and every extension arises.
TEST(ModularCuts, CountEqualsExtensionOracle) {
  for (int n = 0; n <= 4; ++n) {
    for (const RankTable& m : AllMatroids(n)) {
      const auto cuts = EnumerateModularCuts(m);
      EXPECT_EQ(static_cast<int>(cuts.size()), oracle::CountExtensions(m, AllMatroids(n + 1)));
      for (const auto& c : cuts) EXPECT_FALSE(ValidateModularCut(m, c.members));
    }
  }
}

TEST(ModularCuts, U23HasSixExtensions) {
  // Coloop, free, parallel to each point, loop.
  EXPECT_EQ(EnumerateModularCuts(Uniform(2, 3)).size(),
            static_cast<std::size_t>(oracle::CountExtensions(Uniform(2, 3), AllMatroids(4))));
  EXPECT_EQ(EnumerateModularCuts(Uniform(2, 3)).size(), 6u);
}

TEST(ModularCuts, CutFromMinimalRoundTrips) {
  for (const RankTable& m : AllMatroids(4)) {
    for (const auto& c : EnumerateModularCuts(m)) {
      EXPECT_EQ(CutFromMinimal(m, c.Minimal()), c);
    }
  }
}

TEST(ModularCuts, RejectsNonModularFamily) {
  // Two points of U_{2,3} form a non-modular pair whose meet is missing.
  const RankTable m = Uniform(2, 3);
  EXPECT_TRUE(ValidateModularCut(m, {0b001, 0b010, 0b111}));
}

TEST(Extend, DeletionGivesBackAndAxiomsHold) {
  for (const RankTable& m : AllMatroids(4)) {
    for (const auto& c : EnumerateModularCuts(m)) {
      const RankTable e = Extend(m, ExtensionSpec::ByCut(c.members)).Materialize();
      EXPECT_FALSE(ValidateRankAxioms(e));
      EXPECT_EQ(Delete(e, Mask{1} << m.size()), m);
    }
    const RankTable f = Extend(m, ExtensionSpec::Free()).Materialize();
    EXPECT_EQ(f.FullRank(), m.FullRank());
  }
}

TEST(Coextend, IsDualOfExtension) {
  for (const RankTable& m : AllMatroids(3)) {
    const RankTable c = Coextend(m, ExtensionSpec::Free()).Materialize();
    EXPECT_EQ(Contract(c, Mask{1} << m.size()), m);
  }
}

TEST(RelativelyFree, LandsInBothClosures) {
  const RankTable m = Uniform(2, 4);
  const RankTable e = Extend(m, ExtensionSpec::RelativelyFree(0b0011, 0b1100)).Materialize();
  EXPECT_FALSE(IsLoop(e, 4));
  EXPECT_EQ(e.Rank(0b10011), e.Rank(0b00011));
  EXPECT_EQ(e.Rank(0b11100), e.Rank(0b01100));
  EXPECT_THROW(Extend(m, ExtensionSpec::RelativelyFree(0b0001, 0b0010)).Materialize(), InputError);
}

TEST(Transformations, PreserveGroundSetAndNeverRaiseRankOfDual) {
  for (const RankTable& m : AllMatroids(3)) {
    for (const auto& t : CstarTransformations(m)) {
      EXPECT_EQ(t.result.size(), m.size());
      EXPECT_LE(t.result.FullRank(), m.FullRank());
      EXPECT_EQ(CstarByCut(m, t.cut_minimal), t.result);
    }
    for (const auto& t : DstarTransformations(m)) EXPECT_EQ(t.result.size(), m.size());
  }
}

TEST(Guts, SplitHasZeroLambdaAndTraceReplays) {
  for (const RankTable& m : AllMatroids(4)) {
    for (Mask a = 1; a < m.ground(); ++a) {
      const GutsResult g = GutsContract(m, a);
      EXPECT_EQ(g.steps, Lambda(m, a));
      EXPECT_EQ(Lambda(g.result, a), 0);
      EXPECT_EQ(GutsSplit(m, a), g.result);
      EXPECT_EQ(TraceFromJson(TraceToJson(g.trace)).size(), g.trace.size());
    }
  }
}

}  // namespace
}  // namespace mdepth
