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

#include <random>
#include <thread>

#include "mdepth/depth.h"
#include "mdepth/families.h"
#include "mdepth/graph.h"
#include "mdepth/io.h"
#include "oracles.h"

namespace mdepth {
namespace {

using M = Measure;

TEST(Depth, CDAndCdMatchDefinitionOracle) {
  DepthSolver s;
  oracle::DepthOracle o;
  for (int n = 1; n <= 5; ++n) {
    for (const RankTable& m : AllMatroids(n)) {
      EXPECT_EQ(s.Value(m, M::kC), o.Depth(m, true, false));
      EXPECT_EQ(s.Value(m, M::kD), o.Depth(m, false, true));
      EXPECT_EQ(s.Value(m, M::kCD), o.Depth(m, true, true));
    }
  }
}

TEST(Depth, ExactEqualsBruteOnSixElements) {
  DepthSolver s;
  std::mt19937_64 rng(17);
  const auto& all = AllMatroids(6);
  for (int t = 0; t < 40; ++t) {
    const RankTable& m = all[rng() % all.size()];
    for (Measure mu : AllMeasures()) EXPECT_EQ(s.Value(m, mu), s.BruteValue(m, mu));
  }
}

TEST(Depth, SingleElementIsOne) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(1)) {
    for (Measure mu : AllMeasures()) EXPECT_EQ(s.Value(m, mu), 1);
  }
}

TEST(Depth, WitnessesReplayAndRoundTrip) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(4)) {
    for (Measure mu : AllMeasures()) {
      const DepthResult r = s.Depth(m, mu);
      EXPECT_EQ(ReplayWitness(m, mu, r.witness), r.value);
      const WitnessStep back = WitnessFromJson(WitnessToJson(r.witness));
      EXPECT_EQ(Dump(WitnessToJson(back)), Dump(WitnessToJson(r.witness)));
    }
  }
}

TEST(Depth, ReplayRejectsWrongMove) {
  DepthSolver s;
  const RankTable m = Uniform(1, 2);
  WitnessStep w = s.Depth(m, M::kC).witness;
  // A c-depth certificate is not a d-depth certificate.
  EXPECT_THROW(ReplayWitness(m, M::kD, w), InputError);
}

TEST(Depth, DualityIdentities) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(5)) {
    for (Measure mu : AllMeasures()) EXPECT_EQ(s.Value(m, mu), s.Value(Dual(m), DualMeasure(mu)));
  }
}

TEST(Depth, CycleValues) {
  DepthSolver s;
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(s.Value(CycleMatroid(CycleGraph(n)), M::kD), 2) << n;
  EXPECT_EQ(s.Value(CycleMatroid(CycleGraph(2)), M::kC), 2);
  EXPECT_EQ(s.Value(CycleMatroid(CycleGraph(4)), M::kC), 4);
  EXPECT_EQ(s.Value(CycleMatroid(CycleGraph(8)), M::kC), 8);
}

TEST(Depth, FanoValues) {
  DepthSolver s;
  const RankTable f = Named("fano", Json::object());
  EXPECT_EQ(s.Value(f, M::kC), 4);
  EXPECT_EQ(s.Value(f, M::kD), 5);
  EXPECT_EQ(s.Value(f, M::kCD), 4);
  EXPECT_EQ(s.Value(f, M::kCStar), 4);
  EXPECT_EQ(s.Value(f, M::kDStar), 4);
  EXPECT_EQ(s.Value(f, M::kCStarD), 4);
  EXPECT_EQ(s.Value(f, M::kCDStar), 4);
  EXPECT_THROW(s.Value(f, M::kCStarDStar), CapError);
}

TEST(Depth, FatCycleValues) {
  DepthSolver s;
  EXPECT_EQ(s.Value(CycleMatroid(FatCycle(4, 2)), M::kCStarD), 3);
  EXPECT_EQ(s.Value(CycleMatroid(FatCycle(4, 2)), M::kCDStar), 3);
  EXPECT_EQ(s.Value(CycleMatroid(FatCycleWithSimpleEdge(4, 2)), M::kCD), 3);
}

TEST(Depth, CapsAreEnforced) {
  Caps caps;
  caps.Apply("depth_cstar_n=3");
  DepthSolver s(caps);
  EXPECT_THROW(s.Value(Uniform(2, 4), M::kCStar), CapError);
  EXPECT_THROW(caps.Apply("depth_cstar_n=99"), InputError);
  EXPECT_THROW(caps.Apply("bogus=1"), InputError);
}

TEST(Depth, ThreadSafeUnderConcurrentQueries) {
  DepthSolver shared;
  DepthSolver fresh;
  const auto& all = AllMatroids(5);
  std::vector<std::thread> pool;
  std::vector<int> got(all.size());
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < all.size(); i += 4) got[i] = shared.Value(all[i], M::kCStarD);
    });
  }
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(got[i], fresh.Value(all[i], M::kCStarD));
}

TEST(BoundChecks, AllPassOnFamily) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(5)) {
    for (const auto& b : CircumferenceBoundsCheck(s, m)) EXPECT_TRUE(b.pass) << b.name;
    for (const auto& b : ChainCheck(s, m)) EXPECT_TRUE(b.pass) << b.name;
  }
}

}  // namespace
}  // namespace mdepth
