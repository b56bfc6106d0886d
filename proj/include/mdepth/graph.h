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

#ifndef MDEPTH_GRAPH_H_
#define MDEPTH_GRAPH_H_

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "mdepth/caps.h"
#include "mdepth/common.h"
#include "mdepth/gf_matrix.h"
#include "mdepth/rank_table.h"

namespace mdepth {

// Multigraph on vertices 0..V-1. Loops and parallel edges are allowed; the
// position of an edge in `edges` is its index.
struct MultiGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int EdgeCount() const { return static_cast<int>(edges.size()); }
  void AddEdge(int u, int v) { edges.emplace_back(u, v); }
  bool operator==(const MultiGraph& other) const = default;
};

void ValidateGraph(const MultiGraph& g);

RankTable CycleMatroid(const MultiGraph& g);

// Tree-depth of the underlying simple graph (loops and multiplicities
// ignored). The graph with no vertices has tree-depth 0.
int TreeDepth(const MultiGraph& g, const Caps& caps = {});
int TwoTreeDepth(const MultiGraph& g, const Caps& caps = {});

// Edge classes: blocks on non-loop edges, each loop alone. Ordered by the
// lowest edge index.
std::vector<std::vector<int>> Blocks(const MultiGraph& g);

// Removes isolated vertices and renumbers the rest by first appearance.
MultiGraph DropIsolatedVertices(const MultiGraph& g);
// Contracts edge `e` (loops are deleted) keeping the other edges in order.
MultiGraph ContractEdge(const MultiGraph& g, int e);
MultiGraph DeleteEdge(const MultiGraph& g, int e);
MultiGraph EdgeSubgraph(const MultiGraph& g, const std::vector<int>& edges);

// Exact c*d*-depth of a graph, moves taken inside the class of graphs.
class GraphicDepthSolver {
 public:
  explicit GraphicDepthSolver(Caps caps = {}) : caps_(caps) {}
  int Depth(const MultiGraph& g);

 private:
  bool AtMost(const MultiGraph& g, int k);
  std::vector<MultiGraph> Moves(const MultiGraph& g);

  struct Bounds {
    int proven_true = 1 << 20;  // smallest k with depth <= k shown
    int proven_false = 0;       // largest k with depth > k shown
  };
  Caps caps_;
  std::map<std::vector<std::pair<int, int>>, Bounds> memo_;
};

int GraphicCsdsd(const MultiGraph& g, const Caps& caps = {});

MultiGraph CycleGraph(int n);
// Cycle of length i with every edge replaced by j parallel edges.
MultiGraph FatCycle(int i, int j);
// Cycle of length i+1 where every edge but the last is replaced by j
// parallel edges.
MultiGraph FatCycleWithSimpleEdge(int i, int j);
MultiGraph CompleteBipartite(int a, int b);
MultiGraph CompleteGraph(int n);
// Adds two new vertices adjacent to every vertex of `tree` and each other.
MultiGraph TreePlusTwoUniversal(const MultiGraph& tree);

MultiGraph PrimalGraph(const GfMatrix& a);
MultiGraph DualGraph(const GfMatrix& a);
// Rows are vertices 0..m-1, columns m..m+n-1.
MultiGraph IncidenceGraph(const GfMatrix& a);

// Text format: "graph V E" then E lines "u v", 1-indexed.
MultiGraph ParseGraphText(const std::string& text);
std::string FormatGraphText(const MultiGraph& g);

}  // namespace mdepth

#endif  // MDEPTH_GRAPH_H_
