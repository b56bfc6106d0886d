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

#include "mdepth/theorems.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "mdepth/closure.h"
#include "mdepth/decomposition.h"
#include "mdepth/extensions.h"
#include "mdepth/families.h"
#include "mdepth/graph.h"
#include "mdepth/matrix_depth.h"

namespace mdepth {

std::string CheckStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped-cap";
  }
  return "?";
}

namespace {

using M = Measure;

struct Outcome {
  CheckStatus status = CheckStatus::kPass;
  Json details = Json::object();
};

struct Job {
  std::string instance;
  Json serialized;
  std::function<Outcome()> run;
};

struct Context {
  const Caps& caps;
  DepthSolver& solver;
  MatrixDepthSolver& matrix_solver;
  std::uint64_t seed;
};

// Collects violated claims; any violation fails the instance.
class Verdict {
 public:
  void Expect(bool ok, const std::string& claim, Json values = Json::object()) {
    if (ok) return;
    failed_ = true;
    Json v;
    v["claim"] = claim;
    v["values"] = std::move(values);
    out_.details["violations"].push_back(std::move(v));
  }
  void Note(const std::string& key, Json value) { out_.details[key] = std::move(value); }
  Outcome Done() {
    out_.status = failed_ ? CheckStatus::kFail : CheckStatus::kPass;
    return std::move(out_);
  }

 private:
  bool failed_ = false;
  Outcome out_;
};

int Log2Ceil(std::int64_t x) {
  int k = 0;
  while ((std::int64_t{1} << k) < x) ++k;
  return k;
}

// u(u+1)/2 for u = 2^k, saturated.
std::int64_t CircuitBoundFromDepth(int k) {
  if (k >= 30) return std::int64_t{1} << 60;
  const std::int64_t u = std::int64_t{1} << k;
  return u * (u + 1) / 2;
}

std::vector<Job> ForMatroids(int min_n, int max_n,
                             const std::function<Outcome(const RankTable&)>& fn) {
  std::vector<Job> jobs;
  for (int n = min_n; n <= max_n; ++n) {
    const auto& all = AllMatroids(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const RankTable* m = &all[i];
      jobs.push_back({"matroid n=" + std::to_string(n) + " #" + std::to_string(i),
                      MatroidToJson(*m), [m, fn] { return fn(*m); }});
    }
  }
  return jobs;
}

std::vector<Job> ForMatrices(int p, int rows, int cols,
                             const std::function<Outcome(const GfMatrix&)>& fn) {
  std::vector<Job> jobs;
  auto all = std::make_shared<std::vector<GfMatrix>>(AllMatrices(p, rows, cols));
  for (std::size_t i = 0; i < all->size(); ++i) {
    const GfMatrix& a = (*all)[i];
    jobs.push_back({"matrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " #" + std::to_string(i),
                    MatrixToJson(a), [all, i, fn] { return fn((*all)[i]); }});
  }
  return jobs;
}

std::vector<Job> ForGraphs(const std::vector<MultiGraph>& graphs, const std::string& tag,
                           const std::function<Outcome(const MultiGraph&)>& fn) {
  std::vector<Job> jobs;
  auto all = std::make_shared<std::vector<MultiGraph>>(graphs);
  for (std::size_t i = 0; i < all->size(); ++i) {
    jobs.push_back({tag + " #" + std::to_string(i), GraphToJson((*all)[i]),
                    [all, i, fn] { return fn((*all)[i]); }});
  }
  return jobs;
}

Job Single(const std::string& name, Json serialized, std::function<Outcome()> fn) {
  return {name, std::move(serialized), std::move(fn)};
}

// ----- small graph helpers ---------------------------------------------

std::vector<std::uint32_t> SimpleAdjacency(const MultiGraph& g) {
  std::vector<std::uint32_t> adj(g.vertices, 0);
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

bool ConnectedOn(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  if (alive == 0) return true;
  std::uint32_t seen = alive & (~alive + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

// Vertices with at least one non-loop edge or any edge at all count; the
// graph is first stripped of isolated vertices.
bool IsKConnected(const MultiGraph& raw, int k) {
  const MultiGraph g = DropIsolatedVertices(raw);
  const int nv = g.vertices;
  if (nv < k + 1) return false;
  const auto adj = SimpleAdjacency(g);
  const std::uint32_t all = (1u << nv) - 1;
  for (std::uint32_t cut = 0; cut <= all; ++cut) {
    if (std::popcount(cut) >= k) continue;
    if (!ConnectedOn(adj, all & ~cut)) return false;
  }
  return true;
}

int LongestPathVertices(const MultiGraph& g) {
  const auto adj = SimpleAdjacency(g);
  int best = g.vertices > 0 ? 1 : 0;
  std::function<void(int, std::uint32_t, int)> dfs = [&](int v, std::uint32_t used, int len) {
    best = std::max(best, len);
    for (std::uint32_t nb = adj[v] & ~used; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      dfs(w, used | (1u << w), len + 1);
    }
  };
  for (int v = 0; v < g.vertices; ++v) dfs(v, 1u << v, 1);
  return best;
}

int LongestCycle(const MultiGraph& g) {
  const auto adj = SimpleAdjacency(g);
  int best = 0;
  std::function<void(int, int, std::uint32_t, int)> dfs = [&](int start, int v,
                                                             std::uint32_t used, int len) {
    if (len >= 3 && (adj[v] >> start & 1)) best = std::max(best, len);
    for (std::uint32_t nb = adj[v] & ~used; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      if (w > start) dfs(start, w, used | (1u << w), len + 1);
    }
  };
  for (int s = 0; s < g.vertices; ++s) dfs(s, s, 1u << s, 1);
  return best;
}

// ----- literal recursions ----------------------------------------------

class GdSolver {
 public:
  int Depth(const RankTable& m) {
    const int n = m.size();
    if (n <= 1) return 1;
    const std::string key = m.Fingerprint();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = 1 << 20;
    for (int e = 0; e < n; ++e) best = std::min(best, 1 + Depth(Delete(m, Mask{1} << e)));
    const Mask full = m.ground();
    for (Mask a = 1; a < full; ++a) {
      if (!(a & 1u)) continue;  // each bipartition once
      const Mask b = full & ~a;
      const int v = Lambda(m, a) + std::max(Depth(ContractRestrict(m, a, b)),
                                            Depth(ContractRestrict(m, b, a)));
      best = std::min(best, v);
    }
    return memo_[key] = best;
  }

 private:
  std::unordered_map<std::string, int> memo_;
};

// All families of pairwise disjoint nonempty subsets, via restricted
// growth labels (0 = unused).
void ForEachDisjointFamily(int n, const std::function<void(const std::vector<Mask>&)>& visit) {
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used == 0) return;
      std::vector<Mask> parts(used, 0);
      for (int e = 0; e < n; ++e) {
        if (label[e] > 0) parts[label[e] - 1] |= Mask{1} << e;
      }
      visit(parts);
      return;
    }
    for (int l = 0; l <= used + 1; ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l));
    }
  };
  rec(0, 0);
}

bool InClosure(const RankTable& m, int e, Mask s) {
  return m.Rank(s | (Mask{1} << e)) == m.Rank(s);
}

bool Hypothesis(const RankTable& m) {
  return !(OnlyLoopsAndColoops(m) && m.FullRank() > 0);
}

Json Vals(std::initializer_list<std::pair<const char*, int>> list) {
  Json j = Json::object();
  for (const auto& [k, v] : list) j[k] = v;
  return j;
}

std::vector<std::pair<std::string, RankTable>> ClosureFixtures() {
  std::vector<std::pair<std::string, RankTable>> out;
  auto add = [&](const std::string& name, const Json& params) {
    out.emplace_back(name + params.dump(), Named(name, params));
  };
  add("uniform", {{"k", 1}, {"n", 2}});
  add("uniform", {{"k", 2}, {"n", 4}});
  add("uniform", {{"k", 3}, {"n", 6}});
  add("free", {{"n", 3}});
  add("loops", {{"n", 2}});
  for (int n = 3; n <= 6; ++n) add("cycle", {{"n", n}});
  add("fat_cycle", {{"i", 3}, {"j", 2}});
  add("complete", {{"n", 4}});
  add("fano", Json::object());
  return out;
}

// ----- the checks ------------------------------------------------------

using Builder = std::function<std::vector<Job>(Context&)>;

struct Entry {
  CheckInfo info;
  Builder build;
};

std::vector<Job> RankAxioms(Context& ctx) {
  const Caps& caps = ctx.caps;
  auto jobs = ForMatroids(0, static_cast<int>(caps.family_n), [&caps](const RankTable& m) {
    Verdict v;
    auto check = [&](const RankTable& t, const std::string& what) {
      if (auto err = ValidateRankAxioms(t)) v.Expect(false, what, Json(*err));
    };
    check(m, "matroid");
    check(Dual(m), "dual");
    for (int e = 0; e < m.size(); ++e) {
      check(Delete(m, Mask{1} << e), "deletion of " + std::to_string(e));
      check(Contract(m, Mask{1} << e), "contraction of " + std::to_string(e));
    }
    if (m.size() + 1 <= caps.cuts_n) {
      for (const auto& cut : EnumerateModularCuts(m, caps)) {
        const RankTable ext = Extend(m, ExtensionSpec::ByCut(cut.members)).Materialize();
        check(ext, "extension");
        v.Expect(Delete(ext, Mask{1} << m.size()) == m, "extension minus new element");
      }
    }
    return v.Done();
  });
  auto more = ForMatrices(2, static_cast<int>(caps.matrix_m), static_cast<int>(caps.matrix_n),
                          [](const GfMatrix& a) {
                            Verdict v;
                            if (auto err = ValidateRankAxioms(VectorMatroid(a))) {
                              v.Expect(false, "vector matroid", Json(*err));
                            }
                            return v.Done();
                          });
  jobs.insert(jobs.end(), more.begin(), more.end());
  return jobs;
}

std::vector<Job> OracleEquivalence(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.brute_n)),
                     [&s, &caps](const RankTable& m) {
                       Verdict v;
                       for (Measure mu : AllMeasures()) {
                         const DepthResult r = s.Depth(m, mu);
                         const int brute = s.BruteValue(m, mu);
                         const int replay = ReplayWitness(m, mu, r.witness, caps);
                         v.Expect(r.value == brute && replay == r.value,
                                  MeasureName(mu) + " exact = brute = replay",
                                  Vals({{"exact", r.value}, {"brute", brute}, {"replay", replay}}));
                       }
                       return v.Done();
                     });
}

std::vector<Job> Duality(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  const int max_n = static_cast<int>(std::min<std::int64_t>(caps.family_n + 1, 6));
  return ForMatroids(0, max_n, [&s, &caps](const RankTable& m) {
    Verdict v;
    const RankTable d = Dual(m);
    const std::pair<M, M> pairs[] = {{M::kC, M::kD},           {M::kCStar, M::kDStar},
                                     {M::kCStarD, M::kCDStar}, {M::kCD, M::kCD},
                                     {M::kCStarDStar, M::kCStarDStar}};
    for (auto [a, b] : pairs) {
      const int x = s.Value(m, a);
      const int y = s.Value(d, b);
      v.Expect(x == y, MeasureName(a) + "(M) = " + MeasureName(b) + "(M*)",
               Vals({{"M", x}, {"dual", y}}));
    }
    if (m.size() <= caps.bd_n && m.size() <= caps.family_n) {
      const int x = BranchDepth(m, caps).value;
      const int y = BranchDepth(d, caps).value;
      v.Expect(x == y, "bd(M) = bd(M*)", Vals({{"M", x}, {"dual", y}}));
    }
    return v.Done();
  });
}

std::vector<Job> CircuitBounds(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(0, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    for (const BoundCheck& b : CircumferenceBoundsCheck(s, m)) {
      v.Expect(b.pass, b.name, Json(b.detail));
    }
    return v.Done();
  });
}

std::vector<Job> XdCircuits(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(0, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    const int cd = s.Value(m, M::kC), csd = s.Value(m, M::kCStar);
    const int dd = s.Value(m, M::kD), dsd = s.Value(m, M::kDStar);
    v.Expect(csd <= cd && cd <= CircuitBoundFromDepth(csd),
             "csd <= cd <= f(csd), f(k) = 2^k(2^k+1)/2", Vals({{"cd", cd}, {"csd", csd}}));
    v.Expect(dsd <= dd && dd <= CircuitBoundFromDepth(dsd),
             "dsd <= dd <= f(dsd), f(k) = 2^k(2^k+1)/2", Vals({{"dd", dd}, {"dsd", dsd}}));
    return v.Done();
  });
}

std::vector<Job> Chain(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(0, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    for (const BoundCheck& b : ChainCheck(s, m)) v.Expect(b.pass, b.name, Json(b.detail));
    return v.Done();
  });
}

std::vector<Job> HasseValid(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(ctx.caps.family_n), [&s, &caps](const RankTable& m) {
    Verdict v;
    std::map<M, int> d;
    for (Measure mu : AllMeasures()) d[mu] = s.Value(m, mu);
    auto le = [&](M a, M b) {
      v.Expect(d[a] <= d[b], MeasureName(a) + " <= " + MeasureName(b),
               Vals({{"lhs", d[a]}, {"rhs", d[b]}}));
    };
    le(M::kCD, M::kC);
    le(M::kCD, M::kD);
    le(M::kCStarD, M::kCD);
    le(M::kCDStar, M::kCD);
    le(M::kCStarDStar, M::kCStarD);
    le(M::kCStarDStar, M::kCDStar);
    le(M::kCStar, M::kC);
    le(M::kDStar, M::kD);
    v.Expect(d[M::kC] <= CircuitBoundFromDepth(d[M::kCStar]), "cd <= f(csd)");
    v.Expect(d[M::kD] <= CircuitBoundFromDepth(d[M::kDStar]), "dd <= f(dsd)");
    if (m.size() <= caps.bd_n) {
      const int bd = BranchDepth(m, caps).value;
      const int c = d[M::kCStarDStar];
      v.Expect(bd <= c && c <= 2 * bd * bd + 1, "bd <= csdsd <= 2bd^2+1",
               Vals({{"bd", bd}, {"csdsd", c}}));
    }
    if (m.size() <= caps.mtd_n) {
      const int t = MatroidTreeDepth(m, caps).value;
      const int c = d[M::kCStar];
      v.Expect(t <= c && c <= t * t + 1, "mtd <= csd <= mtd^2+1",
               Vals({{"mtd", t}, {"csd", c}}));
    }
    return v.Done();
  });
}

// Fat cycle witnesses: N_i = M(C_{2^i,i}) and M(D_{2^i,i}).
std::vector<Job> FatWitnessJobs(Context& ctx, bool with_minor) {
  DepthSolver& s = ctx.solver;
  std::vector<Job> jobs;
  for (int i = 1; i <= 2; ++i) {
    const int len = 1 << i;
    Json params = {{"i", len}, {"j", i}};
    jobs.push_back(Single("fat cycle " + params.dump(), params, [&s, i, len, with_minor] {
      Verdict v;
      const RankTable n = CycleMatroid(FatCycle(len, i));
      const int csdd = s.Value(n, M::kCStarD), cdsd = s.Value(n, M::kCDStar);
      const int dual_csdd = s.Value(Dual(n), M::kCStarD);
      const int dual_cdsd = s.Value(Dual(n), M::kCDStar);
      v.Expect(csdd >= i && cdsd <= 3, "csdd(N_i) >= i and cdsd(N_i) <= 3",
               Vals({{"csdd", csdd}, {"cdsd", cdsd}}));
      v.Expect(dual_cdsd >= i && dual_csdd <= 3, "dually cdsd(N_i*) >= i and csdd(N_i*) <= 3",
               Vals({{"cdsd", dual_cdsd}, {"csdd", dual_csdd}}));
      if (with_minor) {
        const RankTable big = CycleMatroid(FatCycleWithSimpleEdge(len, i));
        const int cdd_big = s.Value(big, M::kCD), csdd_big = s.Value(big, M::kCStarD);
        const int cdd_n = s.Value(n, M::kCD);
        v.Expect(csdd_big <= cdd_big && cdd_big <= 3, "csdd(M_i) <= cdd(M_i) <= 3",
                 Vals({{"csdd", csdd_big}, {"cdd", cdd_big}}));
        v.Expect(cdd_n >= csdd && csdd >= i, "cdd(N_i) >= csdd(N_i) >= i",
                 Vals({{"cdd", cdd_n}, {"csdd", csdd}}));
        const int cdsd_big_dual = s.Value(Dual(big), M::kCDStar);
        v.Expect(cdsd_big_dual <= 3 && dual_cdsd >= i, "cdsd(M_i*) <= 3 and cdsd(N_i*) >= i",
                 Vals({{"cdsd_M", cdsd_big_dual}, {"cdsd_N", dual_cdsd}}));
      }
      v.Note("values", Vals({{"csdd", csdd}, {"cdsd", cdsd}}));
      return v.Done();
    }));
  }
  return jobs;
}

std::vector<Job> CycleWitnessJobs(Context& ctx) {
  DepthSolver& s = ctx.solver;
  std::vector<Job> jobs;
  for (int i = 1; i <= 3; ++i) {
    Json params = {{"n", 1 << i}};
    jobs.push_back(Single("cycle " + params.dump(), params, [&s, i] {
      Verdict v;
      const RankTable c = CycleMatroid(CycleGraph(1 << i));
      const int cd = s.Value(c, M::kC), dd = s.Value(c, M::kD);
      v.Expect(cd >= i && dd <= 2, "cd(M(C_{2^i})) >= i and dd <= 2",
               Vals({{"cd", cd}, {"dd", dd}}));
      const int cd_dual = s.Value(Dual(c), M::kC), dd_dual = s.Value(Dual(c), M::kD);
      v.Expect(dd_dual >= i && cd_dual <= 2, "dually dd(M*) >= i and cd(M*) <= 2",
               Vals({{"cd", cd_dual}, {"dd", dd_dual}}));
      return v.Done();
    }));
  }
  return jobs;
}

std::vector<Job> Incomparable(Context& ctx) {
  auto jobs = CycleWitnessJobs(ctx);
  auto more = FatWitnessJobs(ctx, false);
  jobs.insert(jobs.end(), more.begin(), more.end());
  return jobs;
}

std::vector<Job> StrictArrows(Context& ctx) {
  // Strictness of cdd -> cd, cdd -> dd and the starred arrows reduces to
  // the two incomparable pairs; the witnesses are the same families.
  auto jobs = Incomparable(ctx);
  DepthSolver& s = ctx.solver;
  for (int i = 1; i <= 3; ++i) {
    Json params = {{"n", 1 << i}};
    jobs.push_back(Single("cycle cdd vs cd " + params.dump(), params, [&s, i] {
      Verdict v;
      const RankTable c = CycleMatroid(CycleGraph(1 << i));
      const int cdd = s.Value(c, M::kCD), cd = s.Value(c, M::kC);
      v.Expect(cdd <= 2 && cd >= i, "cdd stays <= 2 while cd >= i",
               Vals({{"cdd", cdd}, {"cd", cd}}));
      return v.Done();
    }));
  }
  return jobs;
}

std::vector<Job> FatCycleCheck(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  std::vector<Job> jobs;
  for (int i = 2; i <= 5; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i * j + 1 > caps.depth_cstar_n) continue;
      Json params = {{"i", i}, {"j", j}};
      jobs.push_back(Single("destroy " + params.dump(), params, [&s, &caps, i, j] {
        Verdict v;
        const RankTable c = CycleMatroid(FatCycle(i, j));
        const RankTable d = CycleMatroid(FatCycleWithSimpleEdge(i, j));
        CheckCap(c.size() <= caps.depth_cstar_n && d.size() <= caps.depth_cd_n,
                 "fat cycle size");
        const int cdd = s.Value(d, M::kCD), cdsd = s.Value(c, M::kCDStar);
        v.Expect(cdd <= 3, "cdd(M(D_{i,j})) <= 3", Vals({{"cdd", cdd}}));
        v.Expect(cdsd <= 3, "cdsd(M(C_{i,j})) <= 3", Vals({{"cdsd", cdsd}}));
        return v.Done();
      }));
    }
  }
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1 << i; j * i <= caps.depth_cstar_n; ++j) {
      Json params = {{"j", j}, {"i", i}};
      jobs.push_back(Single("fat lower " + params.dump(), params, [&s, i, j] {
        Verdict v;
        const int csdd = s.Value(CycleMatroid(FatCycle(j, i)), M::kCStarD);
        v.Expect(csdd >= i, "csdd(M(C_{j,i})) >= i for j >= 2^i", Vals({{"csdd", csdd}}));
        return v.Done();
      }));
    }
  }
  return jobs;
}

std::vector<Job> CsddRestrictionMonotone(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(0, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    const int c = s.Value(m, M::kCStarD);
    for (Mask d = 1; d <= m.ground() && m.size() > 0; ++d) {
      const int x = s.Value(Delete(m, d), M::kCStarD);
      v.Expect(x <= c, "csdd(M \\ D) <= csdd(M)", Vals({{"D", static_cast<int>(d)}, {"minor", x}, {"M", c}}));
    }
    return v.Done();
  });
}

std::vector<Job> MinorMonotone(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(1, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    for (Measure mu : {M::kCStar, M::kDStar, M::kCStarDStar}) {
      const int base = s.Value(m, mu);
      for (int e = 0; e < m.size(); ++e) {
        const int del = s.Value(Delete(m, Mask{1} << e), mu);
        const int con = s.Value(Contract(m, Mask{1} << e), mu);
        v.Expect(del <= base && con <= base, MeasureName(mu) + " of a single-element minor",
                 Vals({{"elem", e}, {"M", base}, {"delete", del}, {"contract", con}}));
      }
    }
    return v.Done();
  });
}

std::vector<Job> NonMinor(Context& ctx) {
  DepthSolver& s = ctx.solver;
  auto jobs = ForMatroids(1, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    const int cd = s.Value(m, M::kC), dd = s.Value(m, M::kD);
    for (int e = 0; e < m.size(); ++e) {
      for (const RankTable& n : {Delete(m, Mask{1} << e), Contract(m, Mask{1} << e)}) {
        const int a = s.Value(n, M::kC), b = s.Value(n, M::kD);
        v.Expect(a <= CircuitBoundFromDepth(cd) && b <= CircuitBoundFromDepth(dd),
                 "cd(N) <= f(cd(M)) and dd(N) <= f(dd(M))",
                 Vals({{"cd_M", cd}, {"cd_N", a}, {"dd_M", dd}, {"dd_N", b}}));
      }
    }
    return v.Done();
  });
  auto more = FatWitnessJobs(ctx, true);
  jobs.insert(jobs.end(), more.begin(), more.end());
  return jobs;
}

std::vector<Job> BdSandwich(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.bd_n)),
                     [&s, &caps](const RankTable& m) {
                       Verdict v;
                       const auto bd = BranchDepth(m, caps);
                       const int c = s.Value(m, M::kCStarDStar);
                       v.Expect(bd.value <= c && c <= 2 * bd.value * bd.value + 1,
                                "bd <= csdsd <= 2bd^2+1", Vals({{"bd", bd.value}, {"csdsd", c}}));
                       if (bd.tree) {
                         v.Expect(VerifyBranchDepth(m, *bd.tree, bd.value, bd.value),
                                  "emitted decomposition verifies");
                       }
                       return v.Done();
                     });
}

std::vector<Job> MtdSandwich(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.mtd_n)),
                     [&s, &caps](const RankTable& m) {
                       Verdict v;
                       const auto t = MatroidTreeDepth(m, caps);
                       const int c = s.Value(m, M::kCStar);
                       v.Expect(t.value <= c && c <= t.value * t.value + 1,
                                "mtd <= csd <= mtd^2+1", Vals({{"mtd", t.value}, {"csd", c}}));
                       const int w = TdWidth(m, t.decomposition);
                       const int r = Radius(t.decomposition.parent);
                       v.Expect(w <= t.value && r <= t.value, "emitted decomposition verifies",
                                Vals({{"width", w}, {"radius", r}}));
                       return v.Done();
                     });
}

std::vector<Job> MtdLeq(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(0, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    const int c = s.Value(m, M::kCStar);
    const TreeDecomp d = CsdToTreeDecomp(m, s);
    const int w = TdWidth(m, d);
    const int r = Radius(d.parent);
    const int rmax = (m.size() >= 2 && IsConnected(m)) ? c - 1 : c;
    v.Expect(w <= c && r <= rmax, "width <= csd and radius <= csd (csd-1 if connected)",
             Vals({{"width", w}, {"radius", r}, {"csd", c}}));
    return v.Done();
  });
}

std::vector<Job> MtdGeq(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.mtd_n)),
                     [&s, &caps](const RankTable& m) {
                       Verdict v;
                       const int c = s.Value(m, M::kCStar);
                       const auto t = MatroidTreeDepth(m, caps);
                       for (const TreeDecomp& d : {t.decomposition, CsdToTreeDecomp(m, s)}) {
                         const int w = TdWidth(m, d);
                         const int r = Radius(d.parent);
                         v.Expect(c <= w * r + 1, "csd <= t*d+1",
                                  Vals({{"t", w}, {"d", r}, {"csd", c}}));
                         // A radius-zero tree only gives rank + 1, so the
                         // induction yields t*(d+1)+1.
                         v.Note("holds_with_t_times_d_plus_one", c <= w * (r + 1) + 1);
                       }
                       return v.Done();
                     });
}

std::vector<Job> OmegaIneq(Context& ctx) {
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.cuts_n - 1)),
                     [&caps](const RankTable& m) {
                       Verdict v;
                       const int n = m.size();
                       const Mask full = m.ground();
                       std::vector<std::vector<Mask>> families;
                       ForEachDisjointFamily(n, [&](const std::vector<Mask>& f) { families.push_back(f); });
                       for (const auto& cut : EnumerateModularCuts(m, caps)) {
                         const RankTable plus = Extend(m, ExtensionSpec::ByCut(cut.members)).Materialize();
                         const RankTable mp = Contract(plus, Mask{1} << n);
                         if (mp == m) continue;
                         for (const auto& parts : families) {
                           const int a = Omega(m, parts), b = Omega(mp, parts);
                           bool all_rest = true, some_in = false;
                           for (Mask x : parts) {
                             all_rest = all_rest && InClosure(plus, n, full & ~x);
                             some_in = some_in || InClosure(plus, n, x);
                           }
                           Json vals = {{"omega_M", a}, {"omega_Mprime", b}, {"parts", parts}, {"cut", cut.members}};
                           v.Expect(a <= b + 1, "omega_M <= omega_M' + 1", vals);
                           if (all_rest) v.Expect(a == b + 1, "e in every cl(E - X_i) gives equality", vals);
                           if (some_in) v.Expect(a >= b, "e in some cl(X_i) gives omega_M >= omega_M'", vals);
                         }
                       }
                       return v.Done();
                     });
}

std::vector<Job> MatrixEq(Context& ctx, bool starred_deletion) {
  DepthSolver& s = ctx.solver;
  MatrixDepthSolver& ms = ctx.matrix_solver;
  const Measure a = starred_deletion ? M::kCStarD : M::kCStar;
  const Measure b = starred_deletion ? M::kCDStar : M::kDStar;
  auto fn = [&s, &ms, a, b](const GfMatrix& x) {
    Verdict v;
    const RankTable m = VectorMatroid(x);
    for (Measure mu : {a, b}) {
      const int mat = ms.Value(x, mu), abs = s.Value(m, mu);
      v.Expect(mat == abs, MeasureName(mu) + " matrix = matroid",
               Vals({{"matrix", mat}, {"matroid", abs}}));
    }
    return v.Done();
  };
  auto jobs = ForMatrices(2, static_cast<int>(ctx.caps.matrix_m),
                          static_cast<int>(ctx.caps.matrix_eq_n), fn);
  // Same matroid over different fields.
  const std::vector<std::pair<std::string, GfMatrix>> reps = {
      {"U12 gf2", GfMatrix::FromRows(2, {{1, 1}})},
      {"U12 gf3", GfMatrix::FromRows(3, {{1, 2}})},
      {"U23 gf2", GfMatrix::FromRows(2, {{1, 0, 1}, {0, 1, 1}})},
      {"U23 gf3", GfMatrix::FromRows(3, {{1, 0, 1}, {0, 1, 2}})},
      {"U24 gf3", GfMatrix::FromRows(3, {{1, 0, 1, 1}, {0, 1, 1, 2}})},
      {"U24 gf5", GfMatrix::FromRows(5, {{1, 0, 1, 1}, {0, 1, 2, 3}})},
  };
  for (const auto& [name, x] : reps) {
    jobs.push_back(Single("representation " + name, MatrixToJson(x), [fn, x = x] { return fn(x); }));
  }
  return jobs;
}

std::vector<Job> GutsLower(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(2, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    const int c = s.Value(m, M::kCStar);
    const Mask full = m.ground();
    bool found = false;
    for (Mask a = 1; a < full && !found; ++a) {
      const Mask b = full & ~a;
      const int x = std::max(s.Value(ContractRestrict(m, a, b), M::kCStar),
                             s.Value(ContractRestrict(m, b, a), M::kCStar));
      found = x <= c - Lambda(m, a);
    }
    v.Expect(found, "some bipartition has max csd(M/A), csd(M/B) <= csd(M) - lambda(A)");
    return v.Done();
  });
}

std::vector<Job> GutsLowerDeletion(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(2, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    const int n = m.size();
    const int c = s.Value(m, M::kCStarD);
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    bool literal = false, restricted = false;
    for (int code = 0; code < total; ++code) {
      Mask a = 0, b = 0, d = 0;
      for (int i = 0, x = code; i < n; ++i, x /= 3) (x % 3 == 0 ? a : x % 3 == 1 ? b : d) |= Mask{1} << i;
      if (!a || !b) continue;
      const int x = std::max(s.Value(ContractRestrict(m, a, b), M::kCStarD),
                             s.Value(ContractRestrict(m, b, a), M::kCStarD));
      const int del = Popcount(d);
      literal = literal || x <= c - Lambda(m, a) - del;
      restricted = restricted ||
                   x <= c - Lambda(Restrict(m, a | b), Compress(a, a | b)) - del;
    }
    v.Expect(literal, "some (A,B,D) has max csdd(M\\D/A), csdd(M\\D/B) <= csdd(M) - lambda_M(A) - |D|");
    v.Note("holds_with_lambda_of_M_minus_D", restricted);
    return v.Done();
  });
}

std::vector<Job> StartingSeq(Context& ctx) {
  const Caps& caps = ctx.caps;
  return ForMatroids(2, static_cast<int>(std::min<std::int64_t>(caps.family_csdsd_n, 4)),
                     [&caps](const RankTable& m) {
    Verdict v;
    if (!IsConnected(m)) return v.Done();
    std::unordered_map<std::string, std::vector<RankTable>> memo;
    auto trans = [&](const RankTable& t) -> const std::vector<RankTable>& {
      auto [it, fresh] = memo.try_emplace(t.Fingerprint());
      if (fresh) {
        for (auto& x : CstarTransformations(t, caps)) it->second.push_back(std::move(x.result));
      }
      return it->second;
    };
    const Mask full = m.ground();
    auto check_end = [&](const RankTable& last, int len) {
      if (IsConnected(last)) return;
      for (Mask c = 1; c < full; ++c) {
        const int lam = Lambda(m, c);
        if (lam == 0 || Lambda(last, c) != 0) continue;
        const int budget = len - lam;
        const RankTable start = Contract(m, c);
        const RankTable goal = Contract(last, c);
        bool ok = budget >= 0 && start == goal;
        if (!ok && budget >= 1) {
          for (const RankTable& t : trans(start)) ok = ok || t == goal;
        }
        v.Expect(ok, "M/C reaches M_l/C in at most l - lambda(C) steps",
                 Vals({{"C", static_cast<int>(c)}, {"l", len}, {"lambda", lam}}));
      }
    };
    for (const RankTable& m1 : trans(m)) {
      check_end(m1, 1);
      for (const RankTable& m2 : trans(m1)) check_end(m2, 2);
    }
    return v.Done();
  });
}

std::vector<Job> GdEq(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(1, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    const int gd = GdDepth(m), c = s.Value(m, M::kCStarD);
    v.Expect(gd == c, "gd-depth = csdd", Vals({{"gd", gd}, {"csdd", c}}));
    return v.Done();
  });
}

std::vector<Job> ExtcdToCsd(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(1, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    const int csd = s.Value(m, M::kCStar), cd = s.Value(m, M::kC);
    v.Expect(csd <= cd, "csd(M') <= cd(M')");
    for (int e = 0; e < m.size(); ++e) {
      for (const RankTable& n : {Delete(m, Mask{1} << e), Contract(m, Mask{1} << e)}) {
        const int x = s.Value(n, M::kCStar);
        v.Expect(x <= csd, "csd(minor) <= csd(M')", Vals({{"minor", x}, {"M", csd}}));
      }
    }
    return v.Done();
  });
}

std::vector<Job> ContractionStar(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.cstar_decomp_n)),
                     [&s, &caps](const RankTable& m) {
                       Verdict v;
                       const auto r = CstarDecompMinHeight(m, caps);
                       const int c = s.Value(m, M::kCStar);
                       const bool special = !Hypothesis(m);
                       v.Expect(special ? (r.value == 1 && c == 1) : r.value == c - 1,
                                "k = csd - 1, or k = csd = 1 for loops and coloops of positive rank",
                                Vals({{"k", r.value}, {"csd", c}}));
                       v.Expect(VerifyCstarDecomp(m, r.decomposition), "emitted decomposition verifies");
                       return v.Done();
                     });
}

std::vector<Job> CsdToCstarDecomp(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(0, static_cast<int>(ctx.caps.family_n), [&s](const RankTable& m) {
    Verdict v;
    if (!Hypothesis(m)) return v.Done();
    const CStarDecomp d = BuildCstarDecomp(m, s);
    const int h = CstarDecompDepth(d), c = s.Value(m, M::kCStar);
    v.Expect(VerifyCstarDecomp(m, d) && h <= c - 1, "built decomposition valid with k <= csd - 1",
             Vals({{"k", h}, {"csd", c}}));
    return v.Done();
  });
}

std::vector<Job> CstarDecompToCsd(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.cstar_decomp_n)),
                     [&s, &caps](const RankTable& m) {
                       Verdict v;
                       const int k = CstarDecompMinHeight(m, caps).value, c = s.Value(m, M::kCStar);
                       v.Expect(c <= k + 1, "csd <= k + 1", Vals({{"k", k}, {"csd", c}}));
                       return v.Done();
                     });
}

Outcome ClosureOutcome(const RankTable& m, DepthSolver& s, const Caps& caps) {
  Verdict v;
  const ClosureWitness w = RestrictionClosureWitness(m, s);
  const int c = s.Value(m, M::kCStar);
  const int ell = s.Value(w.extended, M::kC);
  v.Expect(Restrict(w.extended, m.ground()) == m, "M is a restriction of M'");
  v.Expect(ApplyTrace(m, w.trace) == w.extended, "trace replays to M'");
  v.Expect(ell == c, "cd(M') = csd(M)", Vals({{"cd_Mprime", ell}, {"csd", c}}));
  if (m.size() + 1 <= caps.cuts_n) {
    for (const auto& cut : EnumerateModularCuts(m, caps)) {
      const RankTable ext = Extend(m, ExtensionSpec::ByCut(cut.members)).Materialize();
      const int x = s.Value(ext, M::kC);
      v.Expect(c <= x, "csd(M) <= cd of any extension", Vals({{"cd", x}, {"csd", c}}));
    }
  }
  v.Note("added", w.extended.size() - m.size());
  return v.Done();
}

std::vector<Job> ClosureCstar(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  // One size beyond the family, as for duality.
  const auto max_n = std::min({caps.family_n + 1, caps.closure_n, std::int64_t{6}});
  auto jobs = ForMatroids(0, static_cast<int>(max_n),
                          [&s, &caps](const RankTable& m) { return ClosureOutcome(m, s, caps); });
  for (auto& [name, m] : ClosureFixtures()) {
    jobs.push_back(Single("fixture " + name, MatroidToJson(m),
                          [&s, &caps, m = m] { return ClosureOutcome(m, s, caps); }));
  }
  return jobs;
}

std::vector<Job> ClosureDstar(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.closure_n)),
                     [&s](const RankTable& m) {
                       Verdict v;
                       const ClosureWitness w = ContractionClosureWitness(m, s);
                       const Mask extra = w.extended.ground() & ~m.ground();
                       v.Expect(Contract(w.extended, extra) == m, "M = M'/X");
                       const int ell = s.Value(w.extended, M::kD), d = s.Value(m, M::kDStar);
                       v.Expect(ell == d, "dd(M') = dsd(M)", Vals({{"dd_Mprime", ell}, {"dsd", d}}));
                       return v.Done();
                     });
}

std::vector<Job> ClosureContrstar(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatroids(0, static_cast<int>(std::min(caps.family_n, caps.cstar_decomp_n)),
                     [&s, &caps](const RankTable& m) {
                       Verdict v;
                       const int k = CstarDecompMinHeight(m, caps).value;
                       const int ell = s.Value(RestrictionClosureWitness(m, s).extended, M::kC);
                       const bool special = !Hypothesis(m);
                       v.Expect(special ? (k == 1 && ell == 1) : k == ell - 1,
                                "k = l - 1, or k = l = 1 for loops and coloops of positive rank",
                                Vals({{"k", k}, {"l", ell}}));
                       return v.Done();
                     });
}

Outcome CommuteOne(const RankTable& m1, Mask y, Mask a, const Caps& caps) {
  Verdict v;
  const Mask rest = m1.ground() & ~y;
  const RankTable m2 = ContractRestrict(m1, y, rest);
  const Mask ca = Compress(a, rest);
  const Mask cb = m2.ground() & ~ca;
  if (!IsConnectedBispan(m2, ca, cb)) return v.Done();
  const RankTable m2p = Extend(m2, ExtensionSpec::RelativelyFree(ca, cb)).Materialize();
  const RankTable m1p = Extend(m1, ExtensionSpec::RelativelyFree(a | y, rest & ~a)).Materialize();
  // Contract Y in M1'; the new element stays last.
  const RankTable lifted = ContractRestrict(m1p, y, m1p.ground() & ~y);
  v.Expect(lifted == m2p, "M1'/Y = M2'",
           Vals({{"Y", static_cast<int>(y)}, {"A", static_cast<int>(a)}}));
  (void)caps;
  return v.Done();
}

std::vector<Job> RfCommuteContraction(Context& ctx) {
  const Caps& caps = ctx.caps;
  auto body = [&caps](const RankTable& m) {
    Verdict v;
    const Mask full = m.ground();
    for (Mask y = 0; y <= full; ++y) {
      const Mask rest = full & ~y;
      for (Mask a = rest; a; a = (a - 1) & rest) {
        if (a == rest) continue;
        Outcome o = CommuteOne(m, y, a, caps);
        if (o.status == CheckStatus::kFail) return o;
      }
      if (y == full) break;
    }
    return v.Done();
  };
  auto jobs = ForMatroids(2, static_cast<int>(std::min<std::int64_t>(caps.family_n, 4)), body);
  // Seeded sample of larger instances.
  if (caps.family_n >= 5) {
    std::mt19937_64 rng(ctx.seed);
    const auto& pool = AllMatroids(static_cast<int>(std::min<std::int64_t>(caps.family_n, 6)));
    for (int t = 0; t < 64; ++t) {
      const RankTable* m = &pool[rng() % pool.size()];
      const Mask full = m->ground();
      const Mask y = static_cast<Mask>(rng()) & full;
      const Mask rest = full & ~y;
      const Mask a = static_cast<Mask>(rng()) & rest;
      if (a == 0 || a == rest) continue;
      Json ser = MatroidToJson(*m);
      ser["Y"] = y;
      ser["A"] = a;
      jobs.push_back(Single("sample " + std::to_string(t), ser,
                            [m, y, a, &caps] { return CommuteOne(*m, y, a, caps); }));
    }
  }
  return jobs;
}

std::vector<Job> RfExtension(Context& ctx) {
  return ForMatroids(1, static_cast<int>(ctx.caps.family_n), [](const RankTable& m) {
    Verdict v;
    const int n = m.size();
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      Mask x = 0, y = 0;
      for (int i = 0, c = code; i < n; ++i, c /= 3) {
        if (c % 3 == 1) x |= Mask{1} << i;
        if (c % 3 == 2) y |= Mask{1} << i;
      }
      if (!IsConnectedBispan(m, x, y)) continue;
      const RankTable ext = Extend(m, ExtensionSpec::RelativelyFree(x, y)).Materialize();
      Json vals = {{"X", x}, {"Y", y}};
      v.Expect(!ValidateRankAxioms(ext), "extension is a matroid", vals);
      v.Expect(Delete(ext, Mask{1} << n) == m, "extension minus e is M", vals);
      v.Expect(!IsLoop(ext, n), "e is not a loop", vals);
      v.Expect(InClosure(ext, n, x) && InClosure(ext, n, y), "e in cl(X) and cl(Y)", vals);
    }
    return v.Done();
  });
}

std::vector<Job> MinTd(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForMatrices(2, static_cast<int>(caps.matrix_m), static_cast<int>(caps.matrix_n),
                     [&s, &caps](const GfMatrix& a) {
                       Verdict v;
                       const MatrixDepthReport r = TdStarFormula(a, s);
                       const TdTriple e = TdStarEnumerated(a, caps);
                       v.Expect(e.primal == r.formula.primal, "td*_P = dd",
                                Vals({{"enumerated", e.primal}, {"formula", r.formula.primal}}));
                       v.Expect(e.dual == r.formula.dual,
                                "td*_D = csd - 1, or csd for loops and coloops of positive rank",
                                Vals({{"enumerated", e.dual}, {"formula", r.formula.dual},
                                      {"zero_rank", r.zero_rank}}));
                       v.Expect(e.incidence == r.formula.incidence, "td*_I = csdd + 1",
                                Vals({{"enumerated", e.incidence}, {"formula", r.formula.incidence},
                                      {"rank_base", r.incidence_rank_base}}));
                       v.Note("incidence_matches_rank_base", e.incidence == r.incidence_rank_base);
                       return v.Done();
                     });
}

std::vector<MultiGraph> GraphFamily(const Caps& caps) {
  return Multigraphs(static_cast<int>(caps.graph_edges), true);
}

std::vector<Job> CyclesTreedepth(Context& ctx) {
  const Caps& caps = ctx.caps;
  return ForGraphs(GraphFamily(caps), "graph", [&caps](const MultiGraph& g) {
    Verdict v;
    if (g.vertices == 0) return v.Done();
    const int td = TreeDepth(g, caps);
    const int path = LongestPathVertices(g);
    v.Expect(Log2Ceil(path) <= td && td <= path, "ceil(log2 l) <= td <= l, l = longest path",
             Vals({{"td", td}, {"l", path}}));
    if (IsKConnected(g, 2)) {
      const int c = LongestCycle(g);
      v.Expect(1 + Log2Ceil(c) <= td && td <= 1 + (c - 2) * (c - 2),
               "2-connected: 1 + ceil(log2 l) <= td <= 1 + (l-2)^2, l = longest cycle",
               Vals({{"td", td}, {"l", c}}));
    }
    return v.Done();
  });
}

std::vector<Job> TdCd(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForGraphs(GraphFamily(caps), "graph", [&s, &caps](const MultiGraph& g) {
    Verdict v;
    if (g.EdgeCount() == 0) return v.Done();
    const int td = TreeDepth(g, caps);
    const int cd = s.Value(CycleMatroid(g), M::kC);
    v.Expect(cd <= CircuitBoundFromDepth(td), "cd(M(G)) <= f(td(G))", Vals({{"cd", cd}, {"td", td}}));
    if (IsKConnected(g, 2)) {
      const std::int64_t u = std::int64_t{1} << std::min(cd, 30);
      v.Expect(td <= 1 + (u - 2) * (u - 2), "2-connected: td(G) <= g(cd(M(G)))",
               Vals({{"cd", cd}, {"td", td}}));
    }
    return v.Done();
  });
}

std::vector<Job> K3n(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  std::vector<Job> jobs;
  for (int n = 1; n <= 4; ++n) {
    Json params = {{"n", n}};
    jobs.push_back(Single("K3n " + params.dump(), params, [&s, &caps, n] {
      Verdict v;
      const MultiGraph g = CompleteBipartite(3, n);
      const int td = TreeDepth(g, caps), dd = s.Value(CycleMatroid(g), M::kD);
      v.Expect(td <= 4 && (n < 3 || td == 4), "td(K_{3,n}) <= 4, = 4 for n >= 3", Vals({{"td", td}}));
      v.Expect(dd >= n, "dd(M(K_{3,n})) >= n", Vals({{"dd", dd}}));
      return v.Done();
    }));
  }
  return jobs;
}

std::vector<Job> Td2Cdd(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForGraphs(GraphFamily(caps), "graph", [&s, &caps](const MultiGraph& g) {
    Verdict v;
    if (g.vertices == 0) return v.Done();
    const int t2 = TwoTreeDepth(g, caps), cdd = s.Value(CycleMatroid(g), M::kCD);
    v.Expect(t2 <= 2 * cdd, "td2(G) <= 2 cdd(M(G))", Vals({{"td2", t2}, {"cdd", cdd}}));
    return v.Done();
  });
}

std::vector<Job> Td2Graphic(Context& ctx) {
  const Caps& caps = ctx.caps;
  return ForGraphs(GraphFamily(caps), "graph", [&caps](const MultiGraph& g) {
    Verdict v;
    if (g.vertices == 0) return v.Done();
    const int t2 = TwoTreeDepth(g, caps), c = GraphicCsdsd(g, caps);
    v.Expect(t2 <= 2 * c, "td2(G) <= 2 csdsd(G)", Vals({{"td2", t2}, {"csdsd_graph", c}}));
    return v.Done();
  });
}

std::vector<Job> Td2Family(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  std::vector<Job> jobs;
  for (int star = 0; star <= 1; ++star) {
    for (int t = 2; t <= 5; ++t) {
      MultiGraph tree;
      tree.vertices = t;
      for (int i = 1; i < t; ++i) tree.AddEdge(star ? 0 : i - 1, i);
      const MultiGraph g = TreePlusTwoUniversal(tree);
      jobs.push_back(Single(std::string(star ? "star" : "path") + " " + std::to_string(t),
                            GraphToJson(g), [&s, &caps, g] {
                              Verdict v;
                              const int t2 = TwoTreeDepth(g, caps);
                              v.Expect(t2 == 4, "td2 = 4", Vals({{"td2", t2}}));
                              v.Expect(IsKConnected(g, 3), "3-connected");
                              v.Note("td", TreeDepth(g, caps));
                              if (g.EdgeCount() <= caps.depth_csdsd_n) {
                                v.Note("csdsd", s.Value(CycleMatroid(g), M::kCStarDStar));
                              }
                              return v.Done();
                            }));
    }
  }
  return jobs;
}

std::vector<Job> GraphicSandwich(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  return ForGraphs(GraphFamily(caps), "graph", [&s, &caps](const MultiGraph& g) {
    Verdict v;
    const RankTable m = CycleMatroid(g);
    const int a = s.Value(m, M::kCStarDStar), b = GraphicCsdsd(g, caps), c = s.Value(m, M::kCD);
    v.Expect(a <= b && b <= c, "csdsd(M(G)) <= csdsd(G) <= cdd(M(G))",
             Vals({{"matroid", a}, {"graph", b}, {"cdd", c}}));
    return v.Done();
  });
}

std::vector<Job> Graph3Conn(Context& ctx) {
  DepthSolver& s = ctx.solver;
  const Caps& caps = ctx.caps;
  std::vector<MultiGraph> graphs;
  for (const MultiGraph& g : GraphFamily(caps)) {
    if (IsKConnected(g, 3)) graphs.push_back(g);
  }
  return ForGraphs(graphs, "3-connected graph", [&s](const MultiGraph& g) {
    Verdict v;
    const RankTable m = CycleMatroid(g);
    const int a = s.Value(m, M::kCStarDStar), b = s.Value(m, M::kC);
    v.Expect(a <= b, "csdsd(M(G)) <= cd(M(G))", Vals({{"csdsd", a}, {"cd", b}}));
    return v.Done();
  });
}

std::vector<Job> BlocksComponents(Context& ctx) {
  return ForGraphs(GraphFamily(ctx.caps), "graph", [](const MultiGraph& g) {
    Verdict v;
    std::vector<Mask> blocks;
    for (const auto& b : Blocks(g)) {
      Mask x = 0;
      for (int e : b) x |= Mask{1} << e;
      blocks.push_back(x);
    }
    auto comps = g.EdgeCount() > 0 ? Components(CycleMatroid(g)) : std::vector<Mask>{};
    std::sort(blocks.begin(), blocks.end());
    std::sort(comps.begin(), comps.end());
    v.Expect(blocks == comps, "blocks of G = components of M(G)");
    return v.Done();
  });
}

std::vector<Job> ExploreCsdsdJobs(Context& ctx) {
  DepthSolver& s = ctx.solver;
  MatrixDepthSolver& ms = ctx.matrix_solver;
  return ForMatrices(2, 2, static_cast<int>(std::min<std::int64_t>(ctx.caps.family_csdsd_n, 4)),
                     [&s, &ms](const GfMatrix& a) {
                       Outcome o;
                       const int x = ms.Value(a, M::kCStarDStar);
                       const int y = s.Value(VectorMatroid(a), M::kCStarDStar);
                       o.details = Vals({{"matrix", x}, {"matroid", y}});
                       o.details["equal"] = x == y;
                       return o;
                     });
}

std::vector<Job> ExploreCsddClosureJobs(Context& ctx) {
  DepthSolver& s = ctx.solver;
  return ForMatroids(1, static_cast<int>(std::min<std::int64_t>(ctx.caps.family_csdsd_n, 4)),
                     [&s](const RankTable& m) {
                       Outcome o;
                       const int budget = std::min(3, 6 - m.size());
                       const CsddClosureProbe p = ExploreCsddClosure(m, budget, s);
                       o.details = Vals({{"csdd", p.csdd}, {"best_cd", p.best_cd},
                                         {"added", p.added}, {"searched", p.searched}});
                       o.details["equal"] = p.csdd == p.best_cd;
                       o.details["holds"] = p.csdd <= p.best_cd;
                       if (p.csdd > p.best_cd) o.status = CheckStatus::kFail;
                       return o;
                     });
}

const std::vector<Entry>& Entries() {
  static const std::vector<Entry> entries = [] {
    const std::string mats = "all matroids with n <= family_n";
    const std::string graphs = "all multigraphs with <= graph_edges edges";
    std::vector<Entry> e = {
        {{"rank-axioms", "every constructed matroid satisfies the rank axioms",
          mats + " with duals, single minors, extensions; GF(2) matrices"}, RankAxioms},
        {{"oracle-equivalence", "exact depth = literal recursion = replayed witness, all eight measures",
          mats}, OracleEquivalence},
        {{"duality", "cd/dd, csd/dsd, csdd/cdsd are dual pairs; cdd, csdsd, bd are self-dual",
          "all matroids with n <= family_n + 1"}, Duality},
        {{"circuit-bounds", "log2 u <= cd <= u(u+1)/2, log2 u* <= dd <= u*(u*+1)/2, log2 u <= csd <= u^2+1",
          mats}, CircuitBounds},
        {{"xd-circuits", "cd and csd are functionally equivalent, dd and dsd likewise", mats}, XdCircuits},
        {{"chain", "csdsd <= csdd <= cdd, csdsd <= cdsd <= cdd, csd <= cd, dsd <= dd, csdsd <= cdd", mats}, Chain},
        {{"hasse-valid", "every comparison in the hierarchy holds as a concrete inequality", mats}, HasseValid},
        {{"strict-arrows", "the hierarchy arrows are strict: witness families separate them",
          "cycles C_{2^i}, fat cycles C_{2^i,i}"}, StrictArrows},
        {{"incomparable", "cd vs dd and csdd vs cdsd are incomparable: witness families",
          "cycles C_{2^i}, fat cycles C_{2^i,i}"}, Incomparable},
        {{"fat-cycle", "cdd(M(D_{i,j})) <= 3, cdsd(M(C_{i,j})) <= 3, csdd(M(C_{j,i})) >= i for j >= 2^i",
          "fat cycles within caps"}, FatCycleCheck},
        {{"csdd-restriction-monotone", "csdd(M \\ D) <= csdd(M)", mats}, CsddRestrictionMonotone},
        {{"minor-monotone", "csd, dsd and csdsd never grow on minors", mats}, MinorMonotone},
        {{"nonminor", "cd, dd are functionally minor-monotone; cdd, csdd, cdsd are not",
          mats + "; D_{2^i,i} over C_{2^i,i}"}, NonMinor},
        {{"bd-sandwich", "bd <= csdsd <= 2bd^2+1", mats}, BdSandwich},
        {{"mtd-sandwich", "mtd <= csd <= mtd^2+1", mats}, MtdSandwich},
        {{"mtd-leq", "a tree-decomposition of width and radius csd exists (radius csd-1 if connected)",
          mats}, MtdLeq},
        {{"mtd-geq", "a tree-decomposition of width t and radius d gives csd <= t*d+1", mats}, MtdGeq},
        {{"omega-ineq", "omega changes by at most one across a c*-transformation, with the anchored cases",
          mats}, OmegaIneq},
        {{"matrix-eq-csd", "matrix c*-depth and d*-depth equal those of the matroid",
          "GF(2) matrices m <= matrix_m, n <= matrix_eq_n; fixed representations"},
         [](Context& c) { return MatrixEq(c, false); }},
        {{"matrix-eq-csdd", "matrix c*d-depth and cd*-depth equal those of the matroid",
          "GF(2) matrices m <= matrix_m, n <= matrix_eq_n; fixed representations"},
         [](Context& c) { return MatrixEq(c, true); }},
        {{"guts-lower", "some bipartition has max csd(M/A), csd(M/B) <= csd(M) - lambda(A)", mats}, GutsLower},
        {{"guts-lower-deletion",
          "some (A,B,D) has max csdd(M\\D/A), csdd(M\\D/B) <= csdd(M) - lambda_M(A) - |D|", mats},
         GutsLowerDeletion},
        {{"starting-seq", "c*-sequences disconnecting C shorten by lambda(C) after contracting C",
          "connected matroids n <= 4, sequences of length <= 2"}, StartingSeq},
        {{"gd-eq", "gd-depth equals csdd", mats}, GdEq},
        {{"extcd-to-csd", "for a minor M of M', csd(M) <= csd(M') <= cd(M')", mats}, ExtcdToCsd},
        {{"contraction-star", "contraction*-depth is csd-1, or csd = 1 for loops and coloops of positive rank",
          mats}, ContractionStar},
        {{"csd-to-cstar-decomp", "under the hypothesis the builder gives height <= csd-1", mats}, CsdToCstarDecomp},
        {{"cstar-decomp-to-csd", "csd <= contraction*-depth + 1", mats}, CstarDecompToCsd},
        {{"closure-contrstar", "contraction*-depth is l-1 for l the least c-depth over extensions",
          mats}, ClosureContrstar},
        {{"closure-cstar", "some extension M' has cd(M') = csd(M), and none has less",
          "all matroids with n <= family_n + 1; fixtures"}, ClosureCstar},
        {{"closure-dstar", "some coextension M' has dd(M') = dsd(M)", mats}, ClosureDstar},
        {{"rf-commute-contraction", "a relatively free extension of M/Y lifts to one of M", mats + " n <= 4; seeded sample"},
         RfCommuteContraction},
        {{"rf-extension", "a connected bispan admits a relatively free extension with e in both closures",
          mats}, RfExtension},
        {{"min-td", "td*_P = dd, td*_D = csd-1 (csd in the special case), td*_I = csdd+1",
          "GF(2) matrices m <= matrix_m, n <= matrix_n"}, MinTd},
        {{"cycles-treedepth", "tree-depth against longest path and, if 2-connected, longest cycle", graphs},
         CyclesTreedepth},
        {{"td-cd", "cd(M(G)) and td(G) bound each other on 2-connected graphs", graphs}, TdCd},
        {{"k3n", "td(K_{3,n}) <= 4 while dd(M(K_{3,n})) >= n", "n = 1..4"}, K3n},
        {{"td2-cdd", "td2(G) <= 2 cdd(M(G))", graphs}, Td2Cdd},
        {{"td2-graphic", "td2(G) <= 2 csdsd(G) for the graphic c*d*-depth", graphs}, Td2Graphic},
        {{"td2-family", "a tree plus two universal vertices has td2 = 4 and is 3-connected",
          "paths and stars on 2..5 vertices"}, Td2Family},
        {{"graphic-sandwich", "csdsd(M(G)) <= csdsd(G) <= cdd(M(G))", graphs}, GraphicSandwich},
        {{"graph-3conn", "csdsd(M(G)) <= cd(M(G)) on 3-connected graphs", graphs}, Graph3Conn},
        {{"blocks-components", "blocks of G are the components of M(G)", graphs}, BlocksComponents},
        {{"explore-csdsd", "matrix c*d*-depth against matroid c*d*-depth (open question, reported only)",
          "GF(2) matrices m <= 2, n <= 4", true}, ExploreCsdsdJobs},
        {{"explore-csdd-closure",
          "csdd(M) against the best cd-depth over bounded extension chains (open question, reported only)",
          "all matroids n <= 4, up to 3 added elements", true}, ExploreCsddClosureJobs},
    };
    return e;
  }();
  return entries;
}

std::vector<Outcome> RunJobs(const std::vector<Job>& jobs, int threads) {
  std::vector<Outcome> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = jobs[i].run();
      } catch (const CapError& e) {
        out[i].status = CheckStatus::kSkipped;
        out[i].details["cap"] = e.what();
      } catch (const std::exception& e) {
        out[i].status = CheckStatus::kFail;
        out[i].details["error"] = e.what();
      }
    }
  };
  const int n = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

const std::vector<CheckInfo>& CheckRegistry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : Entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool IsCheckId(const std::string& id) {
  for (const CheckInfo& c : CheckRegistry()) {
    if (c.id == id) return true;
  }
  return false;
}

CheckReport RunCheck(const std::string& id, const VerifyOptions& options) {
  const Entry* entry = nullptr;
  for (const Entry& e : Entries()) {
    if (e.info.id == id) entry = &e;
  }
  if (!entry) throw InputError("unknown check id: " + id);
  DepthSolver solver(options.caps);
  MatrixDepthSolver matrix_solver(options.caps);
  Context ctx{options.caps, solver, matrix_solver, options.seed};
  CheckReport r;
  r.check_id = id;
  r.claim = entry->info.claim;
  r.family = entry->info.family;
  std::vector<Job> jobs;
  try {
    jobs = entry->build(ctx);
  } catch (const CapError& e) {
    r.skipped = 1;
    r.failures.push_back({id, "family", CheckStatus::kSkipped, Json(), Json{{"cap", e.what()}}});
    return r;
  }
  const std::vector<Outcome> outcomes = RunJobs(jobs, options.jobs);
  int equal = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CheckResult res{id, jobs[i].instance, outcomes[i].status, jobs[i].serialized,
                    outcomes[i].details};
    switch (res.status) {
      case CheckStatus::kPass:
        ++r.pass_count;
        break;
      case CheckStatus::kFail:
        ++r.fail_count;
        break;
      case CheckStatus::kSkipped:
        ++r.skipped;
        break;
    }
    if (entry->info.explorer) {
      if (res.details.value("equal", false)) ++equal;
      r.records.push_back(res);
    } else if (res.status != CheckStatus::kPass) {
      r.failures.push_back(std::move(res));
    }
  }
  if (entry->info.explorer) {
    r.summary["instances"] = static_cast<int>(jobs.size());
    r.summary["equal"] = equal;
    r.summary["unequal"] = static_cast<int>(jobs.size()) - equal - r.skipped;
  }
  return r;
}

namespace {

Json ResultToJson(const CheckResult& r) {
  Json j;
  j["instance"] = r.instance;
  j["status"] = CheckStatusName(r.status);
  j["serialized"] = r.serialized;
  j["details"] = r.details;
  return j;
}

}  // namespace

Json CheckReportToJson(const CheckReport& r, const Caps& caps) {
  Json j;
  j["check_id"] = r.check_id;
  j["claim"] = r.claim;
  j["family"] = r.family;
  Json c = Json::object();
  for (const auto& [k, v] : caps.Values()) c[k] = v;
  j["caps"] = c;
  j["pass_count"] = r.pass_count;
  j["fail_count"] = r.fail_count;
  j["skipped"] = r.skipped;
  j["failures"] = Json::array();
  for (const auto& f : r.failures) j["failures"].push_back(ResultToJson(f));
  if (!r.records.empty()) {
    j["records"] = Json::array();
    for (const auto& f : r.records) j["records"].push_back(ResultToJson(f));
  }
  if (!r.summary.is_null()) j["summary"] = r.summary;
  return j;
}

Json VerifyReport(const std::vector<std::string>& ids, const VerifyOptions& options,
                  bool* all_pass) {
  std::vector<std::string> list;
  for (const std::string& id : ids) {
    if (id == "all") {
      for (const CheckInfo& c : CheckRegistry()) list.push_back(c.id);
    } else if (!IsCheckId(id)) {
      throw InputError("unknown check id: " + id);
    } else {
      list.push_back(id);
    }
  }
  Json out;
  out["seed"] = options.seed;
  Json c = Json::object();
  for (const auto& [k, v] : options.caps.Values()) c[k] = v;
  out["caps"] = c;
  out["checks"] = Json::array();
  bool ok = true;
  int fails = 0;
  for (const std::string& id : list) {
    const CheckReport r = RunCheck(id, options);
    ok = ok && r.fail_count == 0;
    fails += r.fail_count;
    Json j = CheckReportToJson(r, options.caps);
    j.erase("caps");
    out["checks"].push_back(std::move(j));
  }
  out["fail_count"] = fails;
  out["pass"] = ok;
  if (all_pass) *all_pass = ok;
  return out;
}

std::vector<CsdsdProbe> ExploreOpenCsdsd(int p, int max_rows, int max_cols, const Caps& caps) {
  DepthSolver s(caps);
  MatrixDepthSolver ms(caps);
  std::vector<CsdsdProbe> out;
  for (const GfMatrix& a : AllMatrices(p, max_rows, max_cols)) {
    CsdsdProbe probe{a, ms.Value(a, M::kCStarDStar), s.Value(VectorMatroid(a), M::kCStarDStar),
                     false};
    probe.equal = probe.matrix_value == probe.matroid_value;
    out.push_back(std::move(probe));
  }
  return out;
}

CsddClosureProbe ExploreCsddClosure(const RankTable& m, int budget, DepthSolver& solver) {
  CsddClosureProbe p;
  p.csdd = solver.Value(m, M::kCStarD);
  p.best_cd = solver.Value(m, M::kCD);
  p.searched = 1;
  std::vector<RankTable> level = {m};
  std::set<std::string> seen = {m.Fingerprint()};
  for (int added = 1; added <= budget && p.best_cd > p.csdd; ++added) {
    std::vector<RankTable> next;
    for (const RankTable& t : level) {
      for (const auto& cut : EnumerateModularCuts(t, solver.caps())) {
        RankTable ext = Extend(t, ExtensionSpec::ByCut(cut.members)).Materialize();
        if (!seen.insert(ext.Fingerprint()).second) continue;
        ++p.searched;
        const int v = solver.Value(ext, M::kCD);
        if (v < p.best_cd) {
          p.best_cd = v;
          p.added = added;
        }
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return p;
}

int GdDepth(const RankTable& m) {
  GdSolver g;
  return g.Depth(m);
}

}  // namespace mdepth
