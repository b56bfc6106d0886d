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

#include "mdepth/graph.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace mdepth {

namespace {

int FindRoot(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Biconnected components of the non-loop edges, as edge index classes.
std::vector<std::vector<int>> EdgeBlocks(const MultiGraph& g) {
  const int n = g.vertices;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < g.EdgeCount(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v) continue;
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int via) {
    disc[u] = low[u] = timer++;
    for (const auto& [w, e] : adj[u]) {
      if (e == via) continue;
      if (disc[w] < 0) {
        stack.push_back(e);
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<int> block;
          while (true) {
            const int top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          out.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(e);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return out;
}

// Simple graph on vertex masks.
std::vector<Mask> Adjacency(const MultiGraph& g) {
  std::vector<Mask> adj(g.vertices, 0);
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

std::vector<Mask> InducedComponents(const std::vector<Mask>& adj, Mask s) {
  std::vector<Mask> out;
  Mask rest = s;
  while (rest != 0) {
    Mask comp = Mask{1} << LowestElement(rest);
    Mask frontier = comp;
    while (frontier != 0) {
      const int v = LowestElement(frontier);
      frontier &= frontier - 1;
      const Mask fresh = adj[v] & s & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

// Vertex sets of the blocks of the induced simple graph on `s`; isolated
// vertices form singleton blocks.
std::vector<Mask> InducedVertexBlocks(const std::vector<Mask>& adj, Mask s) {
  MultiGraph h;
  h.vertices = static_cast<int>(adj.size());
  for (int u : Elements(s)) {
    for (int v : Elements(adj[u] & s)) {
      if (u < v) h.AddEdge(u, v);
    }
  }
  std::vector<Mask> out;
  Mask covered = 0;
  for (const auto& block : EdgeBlocks(h)) {
    Mask vs = 0;
    for (int e : block) {
      vs |= Mask{1} << h.edges[e].first;
      vs |= Mask{1} << h.edges[e].second;
    }
    covered |= vs;
    out.push_back(vs);
  }
  for (int v : Elements(s & ~covered)) out.push_back(Mask{1} << v);
  return out;
}

std::vector<std::pair<int, int>> GraphKey(const MultiGraph& g) {
  std::vector<std::pair<int, int>> key;
  for (const auto& [u, v] : g.edges) key.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

void ValidateGraph(const MultiGraph& g) {
  if (g.vertices < 0) throw InputError("graph: negative vertex count");
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
      throw InputError("graph: edge endpoint out of range");
    }
  }
}

RankTable CycleMatroid(const MultiGraph& g) {
  ValidateGraph(g);
  const int m = g.EdgeCount();
  CheckCap(m <= kMaxGround, "cycle_matroid edge count");
  return RankTable::FromFunction(m, [&](Mask x) {
    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    int rank = 0;
    for (int e : Elements(x)) {
      const int a = FindRoot(parent, g.edges[e].first);
      const int b = FindRoot(parent, g.edges[e].second);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    return rank;
  });
}

int TreeDepth(const MultiGraph& g, const Caps& caps) {
  ValidateGraph(g);
  CheckCap(g.vertices <= caps.graph_td_v && g.vertices <= kMaxGround,
           "tree_depth vertex count");
  const auto adj = Adjacency(g);
  std::vector<std::int8_t> memo(std::size_t{1} << g.vertices, -1);
  std::function<int(Mask)> td = [&](Mask s) -> int {
    if (s == 0) return 0;
    if (memo[s] >= 0) return memo[s];
    int value;
    const auto comps = InducedComponents(adj, s);
    if (comps.size() > 1) {
      value = 0;
      for (Mask c : comps) value = std::max(value, td(c));
    } else if (Popcount(s) == 1) {
      value = 1;
    } else {
      value = 1 << 20;
      for (int v : Elements(s)) value = std::min(value, 1 + td(s & ~(Mask{1} << v)));
    }
    memo[s] = static_cast<std::int8_t>(value);
    return value;
  };
  return td(FullMask(g.vertices));
}

int TwoTreeDepth(const MultiGraph& g, const Caps& caps) {
  ValidateGraph(g);
  CheckCap(g.vertices <= caps.graph_td_v && g.vertices <= kMaxGround,
           "two_tree_depth vertex count");
  const auto adj = Adjacency(g);
  std::vector<std::int8_t> memo(std::size_t{1} << g.vertices, -1);
  std::function<int(Mask)> td2 = [&](Mask s) -> int {
    if (s == 0) return 0;
    if (Popcount(s) == 1) return 1;
    if (memo[s] >= 0) return memo[s];
    int value;
    const auto blocks = InducedVertexBlocks(adj, s);
    if (blocks.size() > 1) {
      value = 0;
      for (Mask b : blocks) value = std::max(value, td2(b));
    } else {
      value = 1 << 20;
      for (int v : Elements(s)) {
        value = std::min(value, 1 + td2(s & ~(Mask{1} << v)));
      }
    }
    memo[s] = static_cast<std::int8_t>(value);
    return value;
  };
  return td2(FullMask(g.vertices));
}

std::vector<std::vector<int>> Blocks(const MultiGraph& g) {
  ValidateGraph(g);
  auto out = EdgeBlocks(g);
  for (int e = 0; e < g.EdgeCount(); ++e) {
    if (g.edges[e].first == g.edges[e].second) out.push_back({e});
  }
  for (auto& b : out) std::sort(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

MultiGraph DropIsolatedVertices(const MultiGraph& g) {
  std::vector<int> label(g.vertices, -1);
  MultiGraph out;
  for (const auto& [u, v] : g.edges) {
    for (int w : {u, v}) {
      if (label[w] < 0) label[w] = out.vertices++;
    }
    out.AddEdge(label[u], label[v]);
  }
  return out;
}

MultiGraph ContractEdge(const MultiGraph& g, int e) {
  const auto [a, b] = g.edges.at(e);
  MultiGraph out;
  if (a == b) return DeleteEdge(g, e);
  // Merge b into a, then close the gap left by b.
  auto relabel = [&](int w) {
    if (w == b) w = a;
    return w > b ? w - 1 : w;
  };
  out.vertices = g.vertices - 1;
  for (int i = 0; i < g.EdgeCount(); ++i) {
    if (i == e) continue;
    out.AddEdge(relabel(g.edges[i].first), relabel(g.edges[i].second));
  }
  return out;
}

MultiGraph DeleteEdge(const MultiGraph& g, int e) {
  MultiGraph out;
  out.vertices = g.vertices;
  for (int i = 0; i < g.EdgeCount(); ++i) {
    if (i != e) out.edges.push_back(g.edges[i]);
  }
  return out;
}

MultiGraph EdgeSubgraph(const MultiGraph& g, const std::vector<int>& edges) {
  MultiGraph out;
  out.vertices = g.vertices;
  for (int e : edges) out.edges.push_back(g.edges.at(e));
  return DropIsolatedVertices(out);
}

std::vector<MultiGraph> GraphicDepthSolver::Moves(const MultiGraph& g) {
  std::vector<MultiGraph> out;
  // Identify two distinct vertices (add an edge between them, contract it).
  for (int u = 0; u < g.vertices; ++u) {
    for (int v = u + 1; v < g.vertices; ++v) {
      MultiGraph h = g;
      h.AddEdge(u, v);
      out.push_back(DropIsolatedVertices(ContractEdge(h, h.EdgeCount() - 1)));
    }
  }
  // Split a vertex into two (coextend by an edge, delete it).
  for (int v = 0; v < g.vertices; ++v) {
    std::vector<std::pair<int, int>> ends;  // (edge, endpoint slot)
    for (int e = 0; e < g.EdgeCount(); ++e) {
      if (g.edges[e].first == v) ends.emplace_back(e, 0);
      if (g.edges[e].second == v) ends.emplace_back(e, 1);
    }
    const int d = static_cast<int>(ends.size());
    CheckCap(d <= caps_.vertex_degree, "graphic_csdsd vertex degree");
    if (d < 2) continue;
    for (Mask side = 1; side < (Mask{1} << (d - 1)); ++side) {
      MultiGraph h = g;
      const int w = h.vertices++;
      for (int i = 0; i < d - 1; ++i) {
        if (!Contains(side, i)) continue;
        const auto [e, slot] = ends[i + 1];
        if (slot == 0) {
          h.edges[e].first = w;
        } else {
          h.edges[e].second = w;
        }
      }
      out.push_back(DropIsolatedVertices(h));
    }
  }
  return out;
}

bool GraphicDepthSolver::AtMost(const MultiGraph& g, int k) {
  if (k <= 0) return false;
  if (g.EdgeCount() <= 1) return true;
  const auto key = GraphKey(g);
  {
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (it->second.proven_true <= k) return true;
      if (it->second.proven_false >= k) return false;
    }
  }
  bool result;
  const auto blocks = Blocks(g);
  if (blocks.size() > 1) {
    result = true;
    for (const auto& b : blocks) {
      if (!AtMost(EdgeSubgraph(g, b), k)) {
        result = false;
        break;
      }
    }
  } else {
    result = false;
    if (k >= 2) {
      for (const MultiGraph& h : Moves(g)) {
        if (AtMost(h, k - 1)) {
          result = true;
          break;
        }
      }
    }
  }
  Bounds& b = memo_[key];
  if (result) {
    b.proven_true = std::min(b.proven_true, k);
  } else {
    b.proven_false = std::max(b.proven_false, k);
  }
  return result;
}

int GraphicDepthSolver::Depth(const MultiGraph& g) {
  ValidateGraph(g);
  CheckCap(g.EdgeCount() <= caps_.graphic_csdsd_e, "graphic_csdsd edge count");
  const MultiGraph h = DropIsolatedVertices(g);
  for (int k = 1;; ++k) {
    if (AtMost(h, k)) return k;
  }
}

int GraphicCsdsd(const MultiGraph& g, const Caps& caps) {
  GraphicDepthSolver solver(caps);
  return solver.Depth(g);
}

MultiGraph CycleGraph(int n) { return FatCycle(n, 1); }

MultiGraph FatCycle(int i, int j) {
  if (i < 1 || j < 1) throw InputError("fat cycle needs i, j >= 1");
  MultiGraph g;
  g.vertices = i;
  for (int k = 0; k < i; ++k) {
    for (int c = 0; c < j; ++c) g.AddEdge(k, (k + 1) % i);
  }
  return g;
}

MultiGraph FatCycleWithSimpleEdge(int i, int j) {
  if (i < 1 || j < 1) throw InputError("D family needs i, j >= 1");
  MultiGraph g;
  g.vertices = i + 1;
  for (int k = 0; k < i; ++k) {
    for (int c = 0; c < j; ++c) g.AddEdge(k, k + 1);
  }
  g.AddEdge(i, 0);
  return g;
}

MultiGraph CompleteBipartite(int a, int b) {
  if (a < 0 || b < 0) throw InputError("complete bipartite needs a, b >= 0");
  MultiGraph g;
  g.vertices = a + b;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.AddEdge(u, a + v);
  }
  return g;
}

MultiGraph CompleteGraph(int n) {
  MultiGraph g;
  g.vertices = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

MultiGraph TreePlusTwoUniversal(const MultiGraph& tree) {
  ValidateGraph(tree);
  MultiGraph g = tree;
  const int x = g.vertices;
  const int y = g.vertices + 1;
  g.vertices += 2;
  for (int v = 0; v < tree.vertices; ++v) g.AddEdge(v, x);
  for (int v = 0; v < tree.vertices; ++v) g.AddEdge(v, y);
  g.AddEdge(x, y);
  return g;
}

MultiGraph PrimalGraph(const GfMatrix& a) {
  MultiGraph g;
  g.vertices = a.cols();
  for (int u = 0; u < a.cols(); ++u) {
    for (int v = u + 1; v < a.cols(); ++v) {
      for (int i = 0; i < a.rows(); ++i) {
        if (a.At(i, u) != 0 && a.At(i, v) != 0) {
          g.AddEdge(u, v);
          break;
        }
      }
    }
  }
  return g;
}

MultiGraph DualGraph(const GfMatrix& a) {
  MultiGraph g;
  g.vertices = a.rows();
  for (int u = 0; u < a.rows(); ++u) {
    for (int v = u + 1; v < a.rows(); ++v) {
      for (int j = 0; j < a.cols(); ++j) {
        if (a.At(u, j) != 0 && a.At(v, j) != 0) {
          g.AddEdge(u, v);
          break;
        }
      }
    }
  }
  return g;
}

MultiGraph IncidenceGraph(const GfMatrix& a) {
  MultiGraph g;
  g.vertices = a.rows() + a.cols();
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a.At(i, j) != 0) g.AddEdge(i, a.rows() + j);
    }
  }
  return g;
}

MultiGraph ParseGraphText(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  int v = -1;
  int e = -1;
  if (!(in >> word >> v >> e) || word != "graph" || v < 0 || e < 0) {
    throw InputError("graph text: expected header 'graph V E'");
  }
  MultiGraph g;
  g.vertices = v;
  for (int i = 0; i < e; ++i) {
    int a = 0;
    int b = 0;
    if (!(in >> a >> b)) throw InputError("graph text: missing edge line");
    if (a < 1 || b < 1 || a > v || b > v) {
      throw InputError("graph text: endpoint out of range");
    }
    g.AddEdge(a - 1, b - 1);
  }
  std::string extra;
  if (in >> extra) throw InputError("graph text: trailing data");
  return g;
}

std::string FormatGraphText(const MultiGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertices << ' ' << g.EdgeCount() << '\n';
  for (const auto& [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace mdepth
