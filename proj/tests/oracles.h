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

#ifndef MDEPTH_TESTS_ORACLES_H_
#define MDEPTH_TESTS_ORACLES_H_

// Test-side reference implementations. They share no code with the library
// beyond the plain data types and are kept deliberately naive.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mdepth/gf_matrix.h"
#include "mdepth/graph.h"
#include "mdepth/rank_table.h"

namespace oracle {

using mdepth::GfMatrix;
using mdepth::Mask;
using mdepth::MultiGraph;
using mdepth::RankTable;

// Rank of the selected columns as log_p of the size of their span.
inline int SpanRank(const GfMatrix& a, Mask cols) {
  const int p = a.p();
  std::set<std::vector<int>> span = {std::vector<int>(a.rows(), 0)};
  for (int j = 0; j < a.cols(); ++j) {
    if (!(cols >> j & 1)) continue;
    std::set<std::vector<int>> next;
    for (const auto& v : span) {
      for (int c = 0; c < p; ++c) {
        std::vector<int> w = v;
        for (int i = 0; i < a.rows(); ++i) w[i] = (w[i] + c * a.At(i, j)) % p;
        next.insert(w);
      }
    }
    span = std::move(next);
  }
  int r = 0;
  for (std::size_t s = 1; s < span.size(); s *= p) ++r;
  return r;
}

inline RankTable MatrixMatroid(const GfMatrix& a) {
  return RankTable::FromFunction(a.cols(), [&](Mask x) { return SpanRank(a, x); });
}

// Graph rank: vertices touched minus components, by union-find.
inline int ForestRank(const MultiGraph& g, Mask edges) {
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  int r = 0;
  for (int e = 0; e < g.EdgeCount(); ++e) {
    if (!(edges >> e & 1)) continue;
    const int a = find(g.edges[e].first), b = find(g.edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

inline RankTable GraphMatroid(const MultiGraph& g) {
  return RankTable::FromFunction(g.EdgeCount(), [&](Mask x) { return ForestRank(g, x); });
}

// Elements sharing a circuit, grouped by repeated merging.
inline std::vector<Mask> ComponentsByCircuits(const RankTable& m) {
  const int n = m.size();
  std::vector<Mask> group(n);
  for (int e = 0; e < n; ++e) group[e] = Mask{1} << e;
  for (Mask c = 1; c <= m.ground() && n > 0; ++c) {
    const int k = std::popcount(c);
    if (m.Rank(c) != k - 1) continue;
    bool minimal = true;
    for (int e = 0; e < n && minimal; ++e) {
      if (c >> e & 1) minimal = m.Rank(c & ~(Mask{1} << e)) == k - 1;
    }
    if (!minimal) continue;
    Mask merged = 0;
    for (int e = 0; e < n; ++e) {
      if (c >> e & 1) merged |= group[e];
    }
    for (int e = 0; e < n; ++e) {
      if (merged >> e & 1) group[e] = merged;
    }
  }
  std::set<Mask> out(group.begin(), group.end());
  return {out.begin(), out.end()};
}

inline RankTable Sub(const RankTable& m, Mask keep, Mask con) {
  std::vector<int> idx;
  for (int e = 0; e < m.size(); ++e) {
    if (keep >> e & 1) idx.push_back(e);
  }
  return RankTable::FromFunction(static_cast<int>(idx.size()), [&](Mask x) {
    Mask y = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (x >> i & 1) y |= Mask{1} << idx[i];
    }
    return m.Rank(y | con) - m.Rank(con);
  });
}

inline RankTable DualOf(const RankTable& m) {
  return RankTable::FromFunction(m.size(), [&](Mask x) {
    return std::popcount(x) + m.Rank(m.ground() & ~x) - m.FullRank();
  });
}

// c-, d- and cd-depth straight from the recursive definition: one element
// has depth 1, disconnected matroids take the maximum over components and
// connected ones pay 1 for a contraction (c) or deletion (d) of an element.
class DepthOracle {
 public:
  int Depth(const RankTable& m, bool contract, bool del) {
    const int n = m.size();
    if (n <= 1) return 1;
    const std::string key = std::string(1, contract ? 'c' : '-') + (del ? 'd' : '-') +
                            std::to_string(n) + ":" +
                            std::string(m.ranks().begin(), m.ranks().end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto comps = ComponentsByCircuits(m);
    int best;
    if (comps.size() > 1) {
      best = 0;
      for (Mask c : comps) best = std::max(best, Depth(Sub(m, c, 0), contract, del));
    } else {
      best = 1 << 20;
      for (int e = 0; e < n; ++e) {
        const Mask rest = m.ground() & ~(Mask{1} << e);
        if (contract) best = std::min(best, 1 + Depth(Sub(m, rest, Mask{1} << e), contract, del));
        if (del) best = std::min(best, 1 + Depth(Sub(m, rest, 0), contract, del));
      }
    }
    return memo_[key] = best;
  }

 private:
  std::map<std::string, int> memo_;
};

// Graph tree-depth: max over components, else 1 + min over removed vertex.
inline int GraphTreeDepth(int nv, const std::vector<std::pair<int, int>>& edges, Mask alive) {
  if (alive == 0) return 0;
  std::vector<Mask> adj(nv, 0);
  for (auto [u, v] : edges) {
    if (u != v) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
  }
  Mask seen = alive & (~alive + 1), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  if (seen != alive) {
    return std::max(GraphTreeDepth(nv, edges, seen), GraphTreeDepth(nv, edges, alive & ~seen));
  }
  int best = 1 << 20;
  for (Mask a = alive; a; a &= a - 1) {
    best = std::min(best, 1 + GraphTreeDepth(nv, edges, alive & ~(a & (~a + 1))));
  }
  return best;
}

inline int GraphTreeDepth(const MultiGraph& g) {
  // Isolated vertices count, as in the usual definition.
  return GraphTreeDepth(g.vertices, g.edges, (Mask{1} << g.vertices) - 1);
}

// Single-element extensions of m counted directly from the family of all
// matroids on one more element.
inline int CountExtensions(const RankTable& m, const std::vector<RankTable>& bigger) {
  int count = 0;
  for (const RankTable& t : bigger) {
    if (Sub(t, m.ground(), 0) == m) ++count;
  }
  return count;
}

// Seeded generator of random matrices over GF(p).
class MatrixGen {
 public:
  explicit MatrixGen(std::uint64_t seed) : rng_(seed) {}
  GfMatrix Next(int p, int max_rows, int max_cols) {
    const int r = 1 + static_cast<int>(rng_() % max_rows);
    const int c = 1 + static_cast<int>(rng_() % max_cols);
    GfMatrix a(p, r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) a.Set(i, j, static_cast<int>(rng_() % p));
    }
    return a;
  }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // MDEPTH_TESTS_ORACLES_H_
