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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mdepth/depth.h"
#include "mdepth/graph.h"
#include "mdepth/theorems.h"

namespace {

using namespace mdepth;
using M = Measure;

struct Outcome {
  bool pass;
  std::string detail;
};

// All listed checks must have instances, no failures and no skips.
Outcome ChecksClean(const std::vector<std::string>& ids) {
  Outcome o{true, ""};
  for (const std::string& id : ids) {
    const CheckReport r = RunCheck(id, {});
    const bool ok = r.pass_count > 0 && r.fail_count == 0 && r.skipped == 0;
    o.pass = o.pass && ok;
    o.detail += id + " " + std::to_string(r.pass_count) + "/" +
                std::to_string(r.pass_count + r.fail_count + r.skipped) + "; ";
  }
  return o;
}

Outcome Numerics() {
  DepthSolver s;
  std::string bad;
  auto expect = [&bad](bool ok, const std::string& what) {
    if (!ok) bad += what + "; ";
  };
  for (int n = 3; n <= 8; ++n) {
    expect(s.Value(CycleMatroid(CycleGraph(n)), M::kD) == 2, "dd(C" + std::to_string(n) + ")");
  }
  for (int i = 1; i <= 3; ++i) {
    expect(s.Value(CycleMatroid(CycleGraph(1 << i)), M::kC) >= i, "cd(C_2^" + std::to_string(i) + ")");
  }
  expect(s.Value(CycleMatroid(FatCycleWithSimpleEdge(4, 2)), M::kCD) <= 3, "cdd(D42)");
  expect(s.Value(CycleMatroid(FatCycle(4, 2)), M::kCDStar) <= 3, "cdsd(C42)");
  expect(s.Value(CycleMatroid(FatCycle(4, 2)), M::kCStarD) >= 2, "csdd(C42)");
  for (int n : {3, 4}) {
    const MultiGraph g = CompleteBipartite(3, n);
    expect(TreeDepth(g) == 4, "td(K3," + std::to_string(n) + ")");
    expect(s.Value(CycleMatroid(g), M::kD) >= n, "dd(K3," + std::to_string(n) + ")");
  }
  const Outcome td2 = ChecksClean({"td2-cdd", "td2-graphic"});
  expect(td2.pass, "td2 checks");
  return {bad.empty(), bad.empty() ? "all values as claimed; " + td2.detail : bad};
}

Outcome MinTd() {
  const CheckReport r = RunCheck("min-td", {});
  int incidence = 0, dual = 0, primal = 0;
  for (const auto& f : r.failures) {
    for (const auto& v : f.details["violations"]) {
      const std::string c = v["claim"];
      if (c.rfind("td*_I", 0) == 0) ++incidence;
      if (c.rfind("td*_D", 0) == 0) ++dual;
      if (c.rfind("td*_P", 0) == 0) ++primal;
    }
  }
  return {r.fail_count == 0 && r.pass_count > 0,
          std::to_string(r.pass_count) + "/" + std::to_string(r.pass_count + r.fail_count) +
              " matrices agree; mismatches: primal " + std::to_string(primal) + ", dual " +
              std::to_string(dual) + ", incidence " + std::to_string(incidence)};
}

Outcome Explorer() {
  const CheckReport r = RunCheck("explore-csdsd", {});
  const int n = r.summary.value("instances", 0);
  return {n == 370 && r.skipped == 0 && static_cast<int>(r.records.size()) == n,
          std::to_string(n) + " matrices, " + std::to_string(r.summary.value("equal", 0)) +
              " equal, " + std::to_string(r.summary.value("unequal", 0)) + " unequal"};
}

Outcome Determinism() {
  VerifyOptions one, three;
  three.jobs = 3;
  const std::string a = Dump(VerifyReport({"all"}, one, nullptr));
  const std::string b = Dump(VerifyReport({"all"}, three, nullptr));
  return {a == b, std::to_string(a.size()) + " bytes, jobs 1 vs 3"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "rank axioms", 120, [] { return ChecksClean({"rank-axioms"}); }},
      {2, "oracle equivalence", 600, [] { return ChecksClean({"oracle-equivalence"}); }},
      {3, "duality", 0, [] { return ChecksClean({"duality"}); }},
      {4, "chain and bounds", 0,
       [] { return ChecksClean({"chain", "hasse-valid", "circuit-bounds", "bd-sandwich", "mtd-sandwich"}); }},
      {5, "numeric claims", 300, Numerics},
      {6, "minimum tree-depth formula", 600, MinTd},
      {7, "representation independence", 0,
       [] { return ChecksClean({"matrix-eq-csd", "matrix-eq-csdd"}); }},
      {8, "closure", 0, [] { return ChecksClean({"closure-cstar", "contraction-star"}); }},
      {9, "open-problem probes", 0, Explorer},
      {10, "determinism", 0, Determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s > c.limit_s) {
      o.pass = false;
      o.detail += " over time limit";
    }
    all = all && o.pass;
    std::printf("criterion %2d %-28s %s  (%.1fs) %s\n", c.id, c.name.c_str(),
                o.pass ? "PASS" : "FAIL", s, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
