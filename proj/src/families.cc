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

#include "mdepth/families.h"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "mdepth/extensions.h"

namespace mdepth {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList Relabel(const MultiGraph& g, const std::vector<int>& perm) {
  EdgeList out;
  for (auto [u, v] : g.edges) {
    int a = perm[u], b = perm[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<RankTable>& AllMatroids(int n) {
  static std::mutex mu;
  static std::vector<std::vector<RankTable>> levels;
  std::lock_guard<std::mutex> lock(mu);
  CheckCap(n >= 0 && n <= 7, "matroid family size");
  if (levels.empty()) levels.push_back({RankTable()});
  while (static_cast<int>(levels.size()) <= n) {
    std::vector<RankTable> next;
    for (const RankTable& m : levels.back()) {
      for (const ModularCut& cut : EnumerateModularCuts(m)) {
        next.push_back(Extend(m, ExtensionSpec::ByCut(cut.members)).Materialize());
      }
    }
    std::sort(next.begin(), next.end(), [](const RankTable& a, const RankTable& b) {
      return a.ranks() < b.ranks();
    });
    levels.push_back(std::move(next));
  }
  return levels[n];
}

std::vector<RankTable> AllMatroidsUpTo(int n) {
  std::vector<RankTable> out;
  for (int k = 0; k <= n; ++k) {
    const auto& level = AllMatroids(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<GfMatrix> AllMatrices(int p, int max_rows, int max_cols) {
  std::vector<GfMatrix> out;
  for (int r = 1; r <= max_rows; ++r) {
    for (int c = 1; c <= max_cols; ++c) {
      ForEachVector(p, r * c, std::int64_t{1} << 24, [&](const Vec& v) {
        out.emplace_back(p, r, c, v);
        return true;
      });
    }
  }
  return out;
}

MultiGraph CanonicalGraph(const MultiGraph& g) {
  const int n = g.vertices;
  // Vertex invariant: (degree, loops); only permutations respecting the
  // invariant order are tried.
  std::vector<std::pair<int, int>> inv(n, {0, 0});
  for (auto [u, v] : g.edges) {
    inv[u].first++;
    inv[v].first++;
    if (u == v) inv[u].second++;
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return inv[a] != inv[b] ? inv[a] < inv[b] : a < b; });
  std::vector<std::pair<int, int>> groups;  // [start, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    groups.push_back({i, j});
    i = j;
  }
  EdgeList best;
  bool have = false;
  std::vector<int> perm(n);
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      for (int pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
      EdgeList e = Relabel(g, perm);
      if (!have || e < best) {
        best = std::move(e);
        have = true;
      }
      return;
    }
    auto [s, t] = groups[gi];
    std::sort(order.begin() + s, order.begin() + t);
    do {
      rec(gi + 1);
    } while (std::next_permutation(order.begin() + s, order.begin() + t));
  };
  rec(0);
  MultiGraph out;
  out.vertices = n;
  out.edges = best;
  return out;
}

std::vector<MultiGraph> ConnectedMultigraphs(int max_edges, bool loops) {
  std::vector<MultiGraph> out;
  std::set<EdgeList> level_seen;
  std::vector<MultiGraph> level = {MultiGraph{1, {}}};
  for (int e = 1; e <= max_edges; ++e) {
    std::map<std::pair<int, EdgeList>, MultiGraph> next;
    for (const MultiGraph& g : level) {
      auto add = [&](int u, int v, int vertices) {
        MultiGraph h = g;
        h.vertices = vertices;
        h.AddEdge(u, v);
        MultiGraph c = CanonicalGraph(h);
        next.emplace(std::make_pair(c.vertices, c.edges), c);
      };
      for (int u = 0; u < g.vertices; ++u) {
        for (int v = u; v < g.vertices; ++v) {
          if (u == v && !loops) continue;
          add(u, v, g.vertices);
        }
        add(u, g.vertices, g.vertices + 1);
      }
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(g);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<MultiGraph> Multigraphs(int max_edges, bool loops) {
  const auto conn = ConnectedMultigraphs(max_edges, loops);
  std::vector<MultiGraph> out;
  MultiGraph cur;
  // Multisets of connected classes, indices nondecreasing.
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
    if (!cur.edges.empty()) out.push_back(cur);
    for (std::size_t i = from; i < conn.size(); ++i) {
      const MultiGraph& c = conn[i];
      if (c.EdgeCount() > budget) continue;
      MultiGraph saved = cur;
      for (auto [u, v] : c.edges) cur.AddEdge(u + cur.vertices, v + cur.vertices);
      cur.vertices += c.vertices;
      rec(i, budget - c.EdgeCount());
      cur = saved;
    }
  };
  rec(0, max_edges);
  return out;
}

}  // namespace mdepth
