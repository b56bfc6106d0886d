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

#include "mdepth/decomposition.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "mdepth/extensions.h"

namespace mdepth {

namespace {

std::vector<std::vector<int>> Adjacency(const std::vector<int>& parent) {
  std::vector<std::vector<int>> adj(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] >= 0) {
      adj[v].push_back(parent[v]);
      adj[parent[v]].push_back(static_cast<int>(v));
    }
  }
  return adj;
}

// For every node, the elements mapped into its rooted subtree.
std::vector<Mask> SubtreeElements(const std::vector<int>& parent,
                                  const std::vector<int>& map) {
  const int nodes = static_cast<int>(parent.size());
  std::vector<Mask> below(nodes, 0);
  for (std::size_t e = 0; e < map.size(); ++e) below[map[e]] |= Mask{1} << e;
  // Children may carry any index, so order nodes by depth first.
  std::vector<int> depth(nodes, 0);
  std::vector<int> order(nodes);
  for (int v = 0; v < nodes; ++v) {
    order[v] = v;
    for (int u = v; parent[u] >= 0; u = parent[u]) ++depth[v];
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  for (int v : order) {
    if (parent[v] >= 0) below[parent[v]] |= below[v];
  }
  return below;
}

// Element sets of the components of T - v.
std::vector<Mask> BranchParts(const std::vector<int>& parent,
                              const std::vector<int>& map, int v, Mask ground) {
  const auto below = SubtreeElements(parent, map);
  const auto kids = Children(parent);
  std::vector<Mask> parts;
  for (int c : kids[v]) parts.push_back(below[c]);
  if (parent[v] >= 0) parts.push_back(ground & ~below[v]);
  return parts;
}

int MaxUnionLambda(const RankTable& m, const std::vector<Mask>& parts) {
  int best = 0;
  const std::size_t k = parts.size();
  for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
    Mask u = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((pick >> i) & 1) u |= parts[i];
    }
    best = std::max(best, Lambda(m, u));
  }
  return best;
}

// Calls visit(blocks) for every partition of `set` into nonempty blocks
// accepted by `block_ok`; stops when visit returns true.
bool ForEachPartition(Mask set, const std::function<bool(Mask)>& block_ok,
                      std::vector<Mask>& blocks,
                      const std::function<bool(const std::vector<Mask>&)>& visit) {
  if (set == 0) return visit(blocks);
  const Mask low = set & (~set + 1);
  const Mask rest = set & ~low;
  for (Mask sub = rest;; sub = (sub - 1) & rest) {
    const Mask block = sub | low;
    if (block_ok(block)) {
      blocks.push_back(block);
      const bool done = ForEachPartition(set & ~block, block_ok, blocks, visit);
      blocks.pop_back();
      if (done) return true;
    }
    if (sub == 0) break;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> Children(const std::vector<int>& parent) {
  std::vector<std::vector<int>> out(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] >= 0) out[parent[v]].push_back(static_cast<int>(v));
  }
  return out;
}

bool IsTree(const std::vector<int>& parent) {
  const int nodes = static_cast<int>(parent.size());
  if (nodes == 0 || parent[0] != -1) return false;
  for (int v = 1; v < nodes; ++v) {
    if (parent[v] < 0 || parent[v] >= nodes) return false;
    int steps = 0;
    for (int u = v; u != 0; u = parent[u]) {
      if (++steps > nodes) return false;
    }
  }
  return true;
}

int Radius(const std::vector<int>& parent) {
  const auto adj = Adjacency(parent);
  const int nodes = static_cast<int>(parent.size());
  int best = nodes;
  for (int s = 0; s < nodes; ++s) {
    std::vector<int> dist(nodes, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int ecc = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ecc = std::max(ecc, dist[u]);
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    best = std::min(best, ecc);
  }
  return best;
}

int RootedHeight(const std::vector<int>& parent) {
  int h = 0;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    int d = 0;
    for (int u = static_cast<int>(v); parent[u] >= 0; u = parent[u]) ++d;
    h = std::max(h, d);
  }
  return h;
}

int EdgeWidth(const RankTable& m, const LeafTree& t, int child) {
  if (child <= 0 || child >= static_cast<int>(t.parent.size())) {
    throw InputError("edge_width: not a tree edge");
  }
  return Lambda(m, SubtreeElements(t.parent, t.sigma)[child]);
}

int BranchWidth(const RankTable& m, const Caps& caps) {
  const int n = m.size();
  CheckCap(n <= caps.bw_n, "branch_width ground set size");
  if (n <= 1) return 0;
  const Mask full = m.ground();
  for (int k = 0;; ++k) {
    std::vector<char> dec(std::size_t{1} << n, 0);
    std::vector<Mask> order;
    for (Mask s = 1; s <= full; ++s) order.push_back(s);
    std::stable_sort(order.begin(), order.end(),
                     [](Mask a, Mask b) { return Popcount(a) < Popcount(b); });
    for (Mask s : order) {
      if (Lambda(m, s) > k) continue;
      if (Popcount(s) == 1) {
        dec[s] = 1;
        continue;
      }
      const Mask low = s & (~s + 1);
      const Mask rest = s & ~low;
      for (Mask sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
        const Mask a = sub | low;
        if (dec[a] && dec[s & ~a]) {
          dec[s] = 1;
          break;
        }
        if (sub == 0) break;
      }
    }
    for (Mask rest = 0; rest < (full >> 1); ++rest) {
      const Mask a = (rest << 1) | 1u;
      if (dec[a] && dec[full & ~a]) return k;
    }
  }
}

int BdNodeWidth(const RankTable& m, const LeafTree& t, int v) {
  return MaxUnionLambda(m, BranchParts(t.parent, t.sigma, v, m.ground()));
}

bool VerifyBranchDepth(const RankTable& m, const LeafTree& t, int width,
                       int radius) {
  const int n = m.size();
  const int nodes = static_cast<int>(t.parent.size());
  if (!IsTree(t.parent) || static_cast<int>(t.sigma.size()) != n) return false;
  const auto adj = Adjacency(t.parent);
  std::vector<int> owner(nodes, -1);
  for (int e = 0; e < n; ++e) {
    const int v = t.sigma[e];
    if (v < 0 || v >= nodes || adj[v].size() > 1 || owner[v] >= 0) return false;
    owner[v] = e;
  }
  bool has_inner = false;
  for (int v = 0; v < nodes; ++v) {
    if (adj[v].size() <= 1) {
      if (owner[v] < 0) return false;  // leaves are exactly the images
      continue;
    }
    has_inner = true;
    if (BdNodeWidth(m, t, v) > width) return false;
  }
  return has_inner && Radius(t.parent) <= radius;
}

BranchDepthResult BranchDepth(const RankTable& m, const Caps& caps) {
  const int n = m.size();
  CheckCap(n <= caps.bd_n, "branch_depth ground set size");
  BranchDepthResult out;
  if (n <= 1) return out;
  const Mask full = m.ground();
  for (int k = 1;; ++k) {
    // memo[(S,h)] = chosen child parts, empty vector for a leaf.
    std::map<std::pair<Mask, int>, std::optional<std::vector<Mask>>> memo;
    std::function<bool(Mask, int)> feasible = [&](Mask s, int h) -> bool {
      if (Popcount(s) == 1) return h >= 0;
      if (h <= 0) return false;
      auto key = std::make_pair(s, h);
      if (auto it = memo.find(key); it != memo.end()) return it->second.has_value();
      std::optional<std::vector<Mask>> found;
      std::vector<Mask> blocks;
      ForEachPartition(
          s, [&](Mask b) { return b != s && feasible(b, h - 1); }, blocks,
          [&](const std::vector<Mask>& parts) {
            std::vector<Mask> all = parts;
            if (s != full) all.push_back(full & ~s);
            if (MaxUnionLambda(m, all) <= k) {
              found = parts;
              return true;
            }
            return false;
          });
      memo[key] = found;
      return found.has_value();
    };
    if (!feasible(full, k)) continue;
    LeafTree t;
    t.sigma.assign(n, -1);
    std::function<void(Mask, int, int)> build = [&](Mask s, int h, int par) {
      const int id = static_cast<int>(t.parent.size());
      t.parent.push_back(par);
      if (Popcount(s) == 1) {
        t.sigma[LowestElement(s)] = id;
        return;
      }
      for (Mask part : *memo.at({s, h})) build(part, h - 1, id);
    };
    build(full, k, -1);
    out.value = k;
    out.tree = t;
    return out;
  }
}

int Omega(const RankTable& m, const std::vector<Mask>& parts) {
  Mask seen = 0;
  int total = 0;
  for (Mask p : parts) {
    if ((p & seen) || (p & ~m.ground())) throw InputError("omega: parts overlap");
    seen |= p;
    total += m.Rank(m.ground() & ~p);
  }
  return total - (static_cast<int>(parts.size()) - 1) * m.FullRank();
}

int TdNodeWidth(const RankTable& m, const TreeDecomp& d, int u) {
  const auto adj = Adjacency(d.parent);
  const int nodes = static_cast<int>(d.parent.size());
  // Label each node by the neighbor of u it is reached through.
  std::vector<int> via(nodes, -1);
  for (int w : adj[u]) {
    std::vector<int> stack = {w};
    via[w] = w;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (y != u && via[y] < 0) {
          via[y] = w;
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<Mask> parts;
  for (int w : adj[u]) {
    Mask part = 0;
    for (std::size_t e = 0; e < d.tau.size(); ++e) {
      if (via[d.tau[e]] == w) part |= Mask{1} << e;
    }
    parts.push_back(part);
  }
  return Omega(m, parts);
}

int TdWidth(const RankTable& m, const TreeDecomp& d) {
  if (!IsTree(d.parent) || static_cast<int>(d.tau.size()) != m.size()) {
    throw InputError("not a tree-decomposition of this matroid");
  }
  for (int t : d.tau) {
    if (t < 0 || t >= static_cast<int>(d.parent.size())) {
      throw InputError("tau maps outside the tree");
    }
  }
  int w = 0;
  for (std::size_t u = 0; u < d.parent.size(); ++u) {
    w = std::max(w, TdNodeWidth(m, d, static_cast<int>(u)));
  }
  return w;
}

namespace {

// Rooted search for tree-decompositions. Subtrees without elements are
// dropped (an empty part leaves omega unchanged), and a node with an empty
// bag and a single child is contracted into the child; neither change
// raises any width or the height. Hence every node either holds an element
// or has at least two children, and each subtree owns a nonempty set S.
class TdSearch {
 public:
  TdSearch(const RankTable& m, int width) : m_(m), t_(width) {}

  bool Feasible(Mask s, int h) {
    auto key = std::make_pair(s, h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.has_value();
    std::optional<Choice> found;
    const Mask full = m_.ground();
    const int rest_rank = m_.Rank(s);  // omega contribution of the part E - S
    for (Mask bag = s;; bag = (bag - 1) & s) {
      const Mask rest = s & ~bag;
      if (h == 0 && rest != 0) {
        if (bag == 0) break;
        continue;
      }
      std::vector<Mask> blocks;
      ForEachPartition(
          rest, [&](Mask b) { return Feasible(b, h - 1); }, blocks,
          [&](const std::vector<Mask>& parts) {
            if (bag == 0 && parts.size() < 2) return false;
            int w = rest_rank;
            for (Mask p : parts) w += m_.Rank(full & ~p);
            w -= static_cast<int>(parts.size()) * m_.FullRank();
            if (w > t_) return false;
            found = Choice{bag, parts};
            return true;
          });
      if (found || bag == 0) break;
    }
    memo_[key] = found;
    return found.has_value();
  }

  void Build(Mask s, int h, int par, TreeDecomp& d) {
    const Choice& c = *memo_.at({s, h});
    const int id = static_cast<int>(d.parent.size());
    d.parent.push_back(par);
    for (int e : Elements(c.bag)) d.tau[e] = id;
    for (Mask p : c.parts) Build(p, h - 1, id, d);
  }

 private:
  struct Choice {
    Mask bag;
    std::vector<Mask> parts;
  };
  const RankTable& m_;
  int t_;
  std::map<std::pair<Mask, int>, std::optional<Choice>> memo_;
};

}  // namespace

TreeDepthResult MatroidTreeDepth(const RankTable& m, const Caps& caps) {
  const int n = m.size();
  CheckCap(n <= caps.mtd_n, "matroid_tree_depth ground set size");
  TreeDepthResult out;
  out.decomposition.parent = {-1};
  out.decomposition.tau.assign(n, 0);
  if (n == 0) return out;
  for (int k = 0;; ++k) {
    TdSearch search(m, k);
    if (!search.Feasible(m.ground(), k)) continue;
    out.value = k;
    out.decomposition.parent.clear();
    search.Build(m.ground(), k, -1, out.decomposition);
    return out;
  }
}

int MatroidTreeWidth(const RankTable& m, const Caps& caps) {
  const int n = m.size();
  CheckCap(n <= caps.mtd_n, "matroid_tree_width ground set size");
  if (n == 0) return 0;
  for (int t = 0;; ++t) {
    TdSearch search(m, t);
    if (search.Feasible(m.ground(), n)) return t;
  }
}

TreeDecomp CsdToTreeDecomp(const RankTable& m, DepthSolver& solver) {
  const int n = m.size();
  TreeDecomp d;
  d.parent = {-1};
  d.tau.assign(n, 0);
  if (n <= 1) return d;
  const auto comps = Components(m);
  if (comps.size() == 1) {
    // Guts contraction reaches the split in lambda c*-steps, each raising
    // every node width by at most one when undone.
    const Mask a = solver.CstarOptimalBipartitions(m).at(0);
    return CsdToTreeDecomp(GutsSplit(m, a), solver);
  }
  for (Mask c : comps) {
    const TreeDecomp sub = CsdToTreeDecomp(Restrict(m, c), solver);
    const int offset = static_cast<int>(d.parent.size());
    for (int p : sub.parent) d.parent.push_back(p < 0 ? 0 : p + offset);
    const auto elems = Elements(c);
    for (std::size_t i = 0; i < elems.size(); ++i) d.tau[elems[i]] = sub.tau[i] + offset;
  }
  return d;
}

bool VerifyCstarDecomp(const RankTable& m, const CStarDecomp& d) {
  const int n = m.size();
  const int nodes = static_cast<int>(d.parent.size());
  if (!IsTree(d.parent) || static_cast<int>(d.f.size()) != n) return false;
  if (nodes - 1 != m.FullRank()) return false;
  const auto kids = Children(d.parent);
  std::vector<Mask> path(nodes, 0);  // tree edges named by their lower node
  for (int v = 0; v < nodes; ++v) {
    for (int u = v; d.parent[u] >= 0; u = d.parent[u]) path[v] |= Mask{1} << u;
  }
  std::vector<Mask> edges(std::size_t{1} << n, 0);
  for (int e = 0; e < n; ++e) {
    if (d.f[e] < 0 || d.f[e] >= nodes || !kids[d.f[e]].empty()) return false;
  }
  for (Mask x = 1; x <= m.ground() && n > 0; ++x) {
    const int e = LowestElement(x);
    edges[x] = edges[x & (x - 1)] | path[d.f[e]];
    if (m.Rank(x) > Popcount(edges[x])) return false;
  }
  return true;
}

int CstarDecompDepth(const CStarDecomp& d) { return RootedHeight(d.parent); }

namespace {

std::string Ahu(const std::vector<std::vector<int>>& kids, int v) {
  std::vector<std::string> parts;
  for (int c : kids[v]) parts.push_back(Ahu(kids, c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  return s + ")";
}

// One parent array per unlabeled rooted tree with `nodes` nodes.
std::vector<std::vector<int>> RootedTrees(int nodes) {
  std::vector<std::vector<int>> out;
  std::set<std::string> seen;
  std::vector<int> parent(nodes, -1);
  std::function<void(int)> rec = [&](int v) {
    if (v == nodes) {
      if (seen.insert(Ahu(Children(parent), 0)).second) out.push_back(parent);
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[v] = p;
      rec(v + 1);
    }
  };
  rec(1);
  return out;
}

}  // namespace

CStarDecompResult CstarDecompMinHeight(const RankTable& m, const Caps& caps) {
  const int n = m.size();
  CheckCap(n <= caps.cstar_decomp_n, "contraction*-depth ground set size");
  const int r = m.FullRank();
  auto trees = RootedTrees(r + 1);
  std::stable_sort(trees.begin(), trees.end(), [](const auto& a, const auto& b) {
    return RootedHeight(a) < RootedHeight(b);
  });
  for (const auto& parent : trees) {
    const int nodes = r + 1;
    const auto kids = Children(parent);
    std::vector<int> leaves;
    std::vector<Mask> path(nodes, 0);
    for (int v = 0; v < nodes; ++v) {
      if (kids[v].empty()) leaves.push_back(v);
      for (int u = v; parent[u] >= 0; u = parent[u]) path[v] |= Mask{1} << u;
    }
    std::vector<Mask> edges(std::size_t{1} << n, 0);
    std::vector<int> f(n, -1);
    std::function<bool(int)> assign = [&](int e) -> bool {
      if (e == n) return true;
      const Mask bit = Mask{1} << e;
      for (int leaf : leaves) {
        bool ok = true;
        for (Mask y = 0; y < bit; ++y) {  // subsets of the assigned elements
          const Mask x = y | bit;
          edges[x] = edges[y] | path[leaf];
          if (m.Rank(x) > Popcount(edges[x])) {
            ok = false;
            break;
          }
        }
        if (ok) {
          f[e] = leaf;
          if (assign(e + 1)) return true;
        }
      }
      return false;
    };
    if (assign(0)) {
      return {RootedHeight(parent), {parent, f}};
    }
  }
  throw std::logic_error("no contraction*-depth decomposition found");
}

namespace {

bool HasNonTrivialElement(const RankTable& m) {
  return !(OnlyLoopsAndColoops(m) && m.FullRank() > 0);
}

}  // namespace

CStarDecomp BuildCstarDecomp(const RankTable& m, DepthSolver& solver) {
  const int n = m.size();
  const int r = m.FullRank();
  CStarDecomp d;
  if (r == 0) {
    d.parent = {-1};
    d.f.assign(n, 0);
    return d;
  }
  if (OnlyLoopsAndColoops(m)) {
    d.parent.assign(r + 1, 0);
    d.parent[0] = -1;
    d.f.assign(n, 1);
    int next = 1;
    for (int e = 0; e < n; ++e) {
      if (IsColoop(m, e)) d.f[e] = next++;
    }
    return d;
  }
  Mask coloops = 0;
  for (int e = 0; e < n; ++e) {
    if (IsColoop(m, e)) coloops |= Mask{1} << e;
  }
  if (coloops) {
    const Mask rest = m.ground() & ~coloops;
    const CStarDecomp sub = BuildCstarDecomp(ContractRestrict(m, coloops, rest), solver);
    d.parent = sub.parent;
    d.f.assign(n, 0);
    const auto elems = Elements(rest);
    for (std::size_t i = 0; i < elems.size(); ++i) d.f[elems[i]] = sub.f[i];
    for (int e : Elements(coloops)) {
      d.f[e] = static_cast<int>(d.parent.size());
      d.parent.push_back(0);
    }
    return d;
  }
  const auto options = solver.CstarOptimalBipartitions(m);
  Mask a = options.at(0);
  for (Mask cand : options) {
    const Mask b = m.ground() & ~cand;
    if (HasNonTrivialElement(ContractRestrict(m, cand, b)) &&
        HasNonTrivialElement(ContractRestrict(m, b, cand))) {
      a = cand;
      break;
    }
  }
  const Mask b = m.ground() & ~a;
  const int lam = Lambda(m, a);
  const CStarDecomp t1 = BuildCstarDecomp(ContractRestrict(m, a, b), solver);
  const CStarDecomp t2 = BuildCstarDecomp(ContractRestrict(m, b, a), solver);
  // Path of length lambda from the new root down to the merged root.
  for (int i = 0; i <= lam; ++i) d.parent.push_back(i - 1);
  const int merged = lam;
  d.f.assign(n, -1);
  auto graft = [&](const CStarDecomp& t, Mask side) {
    std::vector<int> id(t.parent.size(), merged);
    for (std::size_t v = 1; v < t.parent.size(); ++v) {
      id[v] = static_cast<int>(d.parent.size());
      d.parent.push_back(-2);  // fixed below
    }
    for (std::size_t v = 1; v < t.parent.size(); ++v) d.parent[id[v]] = id[t.parent[v]];
    const auto elems = Elements(side);
    for (std::size_t i = 0; i < elems.size(); ++i) d.f[elems[i]] = id[t.f[i]];
  };
  graft(t1, b);
  graft(t2, a);
  // Elements of a side that collapsed to its root may now sit on an inner
  // node; any leaf dominates the root path, so move them to the first one.
  const auto kids = Children(d.parent);
  int first_leaf = 0;
  while (!kids[first_leaf].empty()) ++first_leaf;
  for (int& v : d.f) {
    if (!kids[v].empty()) v = first_leaf;
  }
  return d;
}

namespace {

std::vector<int> IntArray(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw InputError(std::string("decomposition JSON needs array '") + key + "'");
  }
  return j[key].get<std::vector<int>>();
}

}  // namespace

Json LeafTreeToJson(const LeafTree& t) {
  Json j;
  j["parent"] = t.parent;
  j["sigma"] = t.sigma;
  return j;
}

LeafTree LeafTreeFromJson(const Json& j) {
  return {IntArray(j, "parent"), IntArray(j, "sigma")};
}

Json TreeDecompToJson(const TreeDecomp& d) {
  Json j;
  j["parent"] = d.parent;
  j["tau"] = d.tau;
  return j;
}

TreeDecomp TreeDecompFromJson(const Json& j) {
  return {IntArray(j, "parent"), IntArray(j, "tau")};
}

Json CstarDecompToJson(const CStarDecomp& d) {
  Json j;
  j["parent"] = d.parent;
  j["f"] = d.f;
  return j;
}

CStarDecomp CstarDecompFromJson(const Json& j) {
  return {IntArray(j, "parent"), IntArray(j, "f")};
}

}  // namespace mdepth
