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

#include "mdepth/depth.h"
#include "mdepth/families.h"
#include "mdepth/graph.h"
#include "oracles.h"

namespace mdepth {
namespace {

TEST(CycleMatroid, MatchesUnionFindOracle) {
  for (const MultiGraph& g : Multigraphs(5, true)) {
    EXPECT_EQ(CycleMatroid(g), oracle::GraphMatroid(g));
  }
}

TEST(TreeDepth, MatchesEliminationOracle) {
  for (const MultiGraph& g : Multigraphs(6, true)) {
    EXPECT_EQ(TreeDepth(g), oracle::GraphTreeDepth(g)) << FormatGraphText(g);
  }
}

TEST(TreeDepth, KnownValues) {
  EXPECT_EQ(TreeDepth(CompleteGraph(4)), 4);
  EXPECT_EQ(TreeDepth(CycleGraph(4)), 3);
  EXPECT_EQ(TreeDepth(CompleteBipartite(3, 3)), 4);
  EXPECT_EQ(TreeDepth(CompleteBipartite(3, 4)), 4);
}

TEST(TwoTreeDepth, SmallValues) {
  MultiGraph k1;
  k1.vertices = 1;
  EXPECT_EQ(TwoTreeDepth(k1), 1);
  EXPECT_EQ(TwoTreeDepth(CompleteGraph(2)), 2);
  EXPECT_EQ(TwoTreeDepth(CycleGraph(3)), 3);
  // A path of blocks costs no more than one block.
  MultiGraph path;
  path.vertices = 4;
  path.AddEdge(0, 1);
  path.AddEdge(1, 2);
  path.AddEdge(2, 3);
  EXPECT_EQ(TwoTreeDepth(path), 2);
}

TEST(Blocks, MatchMatroidComponents) {
  for (const MultiGraph& g : Multigraphs(5, true)) {
    if (g.EdgeCount() == 0) continue;
    std::vector<Mask> blocks;
    for (const auto& b : Blocks(g)) {
      Mask x = 0;
      for (int e : b) x |= Mask{1} << e;
      blocks.push_back(x);
    }
    std::sort(blocks.begin(), blocks.end());
    EXPECT_EQ(blocks, oracle::ComponentsByCircuits(CycleMatroid(g)));
  }
}

TEST(Generators, Shapes) {
  EXPECT_EQ(FatCycle(6, 5).EdgeCount(), 30);
  EXPECT_EQ(FatCycleWithSimpleEdge(4, 2).EdgeCount(), 9);
  EXPECT_EQ(CompleteBipartite(3, 4).EdgeCount(), 12);
  EXPECT_EQ(CycleMatroid(CycleGraph(5)), Uniform(4, 5));
}

TEST(GraphMinors, MatchMatroidMinors) {
  for (const MultiGraph& g : Multigraphs(4, true)) {
    const RankTable m = CycleMatroid(g);
    for (int e = 0; e < g.EdgeCount(); ++e) {
      EXPECT_EQ(CycleMatroid(DeleteEdge(g, e)), Delete(m, Mask{1} << e));
      EXPECT_EQ(CycleMatroid(ContractEdge(g, e)), Contract(m, Mask{1} << e));
    }
  }
}

TEST(GraphicCsdsd, SandwichedOnSmallGraphs) {
  DepthSolver s;
  for (const MultiGraph& g : Multigraphs(5, true)) {
    const RankTable m = CycleMatroid(g);
    const int v = GraphicCsdsd(g);
    EXPECT_LE(s.Value(m, Measure::kCStarDStar), v);
    EXPECT_LE(v, s.Value(m, Measure::kCD));
  }
}

TEST(MatrixGraphs, SupportGraphs) {
  const GfMatrix a = GfMatrix::FromRows(2, {{1, 1, 0}, {0, 1, 1}});
  EXPECT_EQ(PrimalGraph(a).vertices, 3);
  EXPECT_EQ(DualGraph(a).vertices, 2);
  EXPECT_EQ(IncidenceGraph(a).vertices, 5);
  EXPECT_EQ(IncidenceGraph(a).EdgeCount(), 4);
}

TEST(GraphText, RoundTripsAndRejects) {
  for (const MultiGraph& g : Multigraphs(4, true)) {
    EXPECT_EQ(ParseGraphText(FormatGraphText(g)), g);
  }
  EXPECT_THROW(ParseGraphText("graph 2 1\n0 5"), InputError);
}

}  // namespace
}  // namespace mdepth
