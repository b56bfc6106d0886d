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

#ifndef MDEPTH_FAMILIES_H_
#define MDEPTH_FAMILIES_H_

#include <vector>

#include "mdepth/caps.h"
#include "mdepth/gf_matrix.h"
#include "mdepth/graph.h"
#include "mdepth/rank_table.h"

namespace mdepth {

// Every labeled matroid on exactly n elements, built by extending each
// matroid on n-1 elements by each of its modular cuts. Sorted by rank table.
const std::vector<RankTable>& AllMatroids(int n);
// Concatenation of AllMatroids(0..n).
std::vector<RankTable> AllMatroidsUpTo(int n);

// Every p-ary matrix with 1..max_rows rows and 1..max_cols columns, in
// (rows, cols, entries) order.
std::vector<GfMatrix> AllMatrices(int p, int max_rows, int max_cols);

// Connected multigraphs with 1..max_edges edges and no isolated vertices,
// one per isomorphism class.
std::vector<MultiGraph> ConnectedMultigraphs(int max_edges, bool loops);
// All multigraphs without isolated vertices with 1..max_edges edges up to
// isomorphism: disjoint unions of the connected ones.
std::vector<MultiGraph> Multigraphs(int max_edges, bool loops);

// Canonical form under vertex relabeling and edge reordering.
MultiGraph CanonicalGraph(const MultiGraph& g);

}  // namespace mdepth

#endif  // MDEPTH_FAMILIES_H_
