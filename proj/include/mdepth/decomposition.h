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

#ifndef MDEPTH_DECOMPOSITION_H_
#define MDEPTH_DECOMPOSITION_H_

#include <optional>
#include <vector>

#include "mdepth/caps.h"
#include "mdepth/depth.h"
#include "mdepth/io.h"
#include "mdepth/rank_table.h"

namespace mdepth {

// Trees are parent arrays with node 0 as the root (parent -1) and
// parent[i] < i is not required.
std::vector<std::vector<int>> Children(const std::vector<int>& parent);
// Minimum eccentricity over all nodes of the unrooted tree.
int Radius(const std::vector<int>& parent);
// Longest root-to-node path, in edges.
int RootedHeight(const std::vector<int>& parent);
bool IsTree(const std::vector<int>& parent);

// Branch-decomposition or branch-depth decomposition: sigma maps each
// element to a leaf.
struct LeafTree {
  std::vector<int> parent;
  std::vector<int> sigma;
};

// Width of the tree edge between `child` and its parent.
int EdgeWidth(const RankTable& m, const LeafTree& t, int child);
int BranchWidth(const RankTable& m, const Caps& caps = {});

// Maximum lambda over unions of the leaf sets of the components of T - v.
int BdNodeWidth(const RankTable& m, const LeafTree& t, int v);
bool VerifyBranchDepth(const RankTable& m, const LeafTree& t, int width, int radius);

struct BranchDepthResult {
  int value = 0;
  std::optional<LeafTree> tree;  // absent when |E| <= 1
};
BranchDepthResult BranchDepth(const RankTable& m, const Caps& caps = {});

// sum r(E - X_i) - (k-1) r(M); k = 0 gives r(M). Throws on overlap.
int Omega(const RankTable& m, const std::vector<Mask>& parts);

struct TreeDecomp {
  std::vector<int> parent;
  std::vector<int> tau;  // element -> node
};

int TdNodeWidth(const RankTable& m, const TreeDecomp& d, int u);
int TdWidth(const RankTable& m, const TreeDecomp& d);

struct TreeDepthResult {
  int value = 0;
  TreeDecomp decomposition;
};
TreeDepthResult MatroidTreeDepth(const RankTable& m, const Caps& caps = {});
int MatroidTreeWidth(const RankTable& m, const Caps& caps = {});

// Width and radius at most csd(M); radius at most csd(M)-1 when M is
// connected.
TreeDecomp CsdToTreeDecomp(const RankTable& m, DepthSolver& solver);

// Rooted tree with rank-many edges; f maps elements to leaves.
struct CStarDecomp {
  std::vector<int> parent;
  std::vector<int> f;
};

bool VerifyCstarDecomp(const RankTable& m, const CStarDecomp& d);
// Height in edges, i.e. the height in nodes minus one.
int CstarDecompDepth(const CStarDecomp& d);

struct CStarDecompResult {
  int value = 0;
  CStarDecomp decomposition;
};
CStarDecompResult CstarDecompMinHeight(const RankTable& m, const Caps& caps = {});
// Recursive construction from an optimal guts bipartition; coloops hang
// directly below the root.
CStarDecomp BuildCstarDecomp(const RankTable& m, DepthSolver& solver);

Json LeafTreeToJson(const LeafTree& t);
LeafTree LeafTreeFromJson(const Json& j);
Json TreeDecompToJson(const TreeDecomp& d);
TreeDecomp TreeDecompFromJson(const Json& j);
Json CstarDecompToJson(const CStarDecomp& d);
CStarDecomp CstarDecompFromJson(const Json& j);

}  // namespace mdepth

#endif  // MDEPTH_DECOMPOSITION_H_
