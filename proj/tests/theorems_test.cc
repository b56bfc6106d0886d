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

#include <set>

#include "mdepth/families.h"
#include "mdepth/rank_table.h"
#include "mdepth/theorems.h"

namespace mdepth {
namespace {

const std::vector<std::string> kExpectedIds = {
    "rank-axioms", "oracle-equivalence", "duality", "circuit-bounds", "xd-circuits", "chain",
    "hasse-valid", "strict-arrows", "incomparable", "fat-cycle", "csdd-restriction-monotone",
    "minor-monotone", "nonminor", "bd-sandwich", "mtd-sandwich", "mtd-leq", "mtd-geq",
    "omega-ineq", "matrix-eq-csd", "matrix-eq-csdd", "guts-lower", "guts-lower-deletion",
    "starting-seq", "gd-eq", "extcd-to-csd", "contraction-star", "csd-to-cstar-decomp", "cstar-decomp-to-csd",
    "closure-contrstar", "closure-cstar", "closure-dstar", "rf-commute-contraction", "rf-extension",
    "min-td", "cycles-treedepth", "td-cd", "k3n", "td2-cdd", "td2-graphic", "td2-family",
    "graphic-sandwich", "graph-3conn", "blocks-components", "explore-csdsd",
    "explore-csdd-closure"};

// Checks whose literal claim has counterexamples; see the dedicated tests.
const std::set<std::string> kKnownConflicts = {"mtd-geq", "guts-lower-deletion", "min-td",
                                               "cycles-treedepth"};

TEST(Registry, Complete) {
  std::set<std::string> got;
  for (const CheckInfo& c : CheckRegistry()) {
    EXPECT_TRUE(got.insert(c.id).second) << "duplicate " << c.id;
    EXPECT_FALSE(c.claim.empty());
    EXPECT_FALSE(c.family.empty());
  }
  EXPECT_EQ(got, std::set<std::string>(kExpectedIds.begin(), kExpectedIds.end()));
  EXPECT_THROW(RunCheck("no-such-check", {}), InputError);
}

class EveryCheck : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryCheck, PassesOrMatchesKnownConflict) {
  const CheckReport r = RunCheck(GetParam(), {});
  EXPECT_GT(r.pass_count + r.fail_count + r.skipped, 0);
  EXPECT_EQ(r.skipped, 0);
  if (kKnownConflicts.count(GetParam())) {
    EXPECT_GT(r.fail_count, 0);
  } else {
    EXPECT_EQ(r.fail_count, 0) << (r.failures.empty() ? "" : r.failures[0].details.dump());
  }
}

INSTANTIATE_TEST_SUITE_P(All, EveryCheck, ::testing::ValuesIn(kExpectedIds),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s) ch = ch == '-' ? '_' : ch;
                           return s;
                         });

TEST(Conflicts, MtdGeqCounterexampleIsU45) {
  const CheckReport r = RunCheck("mtd-geq", {});
  bool found = false;
  for (const auto& f : r.failures) {
    EXPECT_TRUE(f.details["holds_with_t_times_d_plus_one"].get<bool>());
    found = found || MatroidFromJson(f.serialized) == Uniform(4, 5);
  }
  EXPECT_TRUE(found);
}

TEST(Conflicts, GutsDeletionHoldsWithRestrictedLambda) {
  const CheckReport r = RunCheck("guts-lower-deletion", {});
  EXPECT_EQ(r.fail_count, 4);
  bool u23 = false;
  for (const auto& f : r.failures) {
    EXPECT_TRUE(f.details["holds_with_lambda_of_M_minus_D"].get<bool>());
    u23 = u23 || MatroidFromJson(f.serialized) == Uniform(2, 3);
  }
  EXPECT_TRUE(u23);
}

TEST(Conflicts, MinTdIncidenceMatchesRankBase) {
  const CheckReport r = RunCheck("min-td", {});
  EXPECT_EQ(r.fail_count, 2540);
  for (const auto& f : r.failures) {
    EXPECT_TRUE(f.details["incidence_matches_rank_base"].get<bool>());
    for (const auto& v : f.details["violations"]) {
      EXPECT_NE(v["claim"].get<std::string>(), "td*_P = dd");
    }
  }
}

TEST(Conflicts, CycleBoundFailsOnTriangles) {
  const CheckReport r = RunCheck("cycles-treedepth", {});
  for (const auto& f : r.failures) {
    const auto& v = f.details["violations"];
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0]["values"]["l"].get<int>(), 3);
    EXPECT_EQ(v[0]["values"]["td"].get<int>(), 3);
  }
}

TEST(Report, DeterministicAcrossJobCounts) {
  VerifyOptions one, many;
  many.jobs = 4;
  const std::vector<std::string> ids = {"duality", "rf-commute-contraction", "explore-csdsd", "min-td"};
  bool a = false, b = false;
  EXPECT_EQ(Dump(VerifyReport(ids, one, &a)), Dump(VerifyReport(ids, many, &b)));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a);
}

TEST(Report, SeedChangesSampleOnly) {
  VerifyOptions s1, s2;
  s2.seed = 99;
  const Json a = VerifyReport({"rf-commute-contraction"}, s1, nullptr);
  const Json b = VerifyReport({"rf-commute-contraction"}, s2, nullptr);
  EXPECT_EQ(a["checks"][0]["fail_count"], b["checks"][0]["fail_count"]);
  EXPECT_EQ(Dump(a), Dump(VerifyReport({"rf-commute-contraction"}, s1, nullptr)));
}

TEST(Report, JsonShape) {
  const CheckReport r = RunCheck("k3n", {});
  const Json j = CheckReportToJson(r, Caps{});
  for (const char* key : {"check_id", "claim", "family", "caps", "pass_count", "fail_count",
                          "skipped", "failures"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Report, CapsLowerTheFamily) {
  VerifyOptions o;
  o.caps.Apply("family_n=3");
  EXPECT_LT(RunCheck("duality", o).pass_count, RunCheck("duality", {}).pass_count);
}

TEST(Explorers, RecordEveryInstance) {
  const CheckReport r = RunCheck("explore-csdsd", {});
  EXPECT_EQ(r.records.size(), 370u);
  EXPECT_EQ(r.summary["instances"].get<int>(), 370);
  const auto probes = ExploreOpenCsdsd(2, 2, 2, {});
  EXPECT_FALSE(probes.empty());
}

TEST(CsddClosure, BestNeverBelowCsdd) {
  DepthSolver s;
  for (const RankTable& m : AllMatroids(3)) {
    const CsddClosureProbe p = ExploreCsddClosure(m, 2, s);
    EXPECT_LE(p.csdd, p.best_cd);
    EXPECT_GE(p.searched, 1);
  }
}

TEST(GdDepth, EqualsCsddOnFamily) {
  DepthSolver s;
  for (int n = 1; n <= 5; ++n) {
    for (const RankTable& m : AllMatroids(n)) EXPECT_EQ(GdDepth(m), s.Value(m, Measure::kCStarD));
  }
}

}  // namespace
}  // namespace mdepth
