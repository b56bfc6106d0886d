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
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "mdepth/decomposition.h"
#include "mdepth/io.h"

namespace mdepth {
namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(MDEPTH_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string Temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, DepthTableForFano) {
  const CliRun r = Cli("depth --named fano --format table");
  EXPECT_EQ(r.code, 3);  // one measure is beyond its cap
  EXPECT_NE(r.out.find("CSTAR_D      4"), std::string::npos);
  EXPECT_NE(r.out.find("CSTAR_DSTAR  cap"), std::string::npos);
}

TEST(Cli, SingleElementAllOnes) {
  const CliRun r = Cli("depth --named free --param n=1");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["results"].size(), 8u);
  for (const auto& x : j["results"]) EXPECT_EQ(x["value"].get<int>(), 1);
}

TEST(Cli, GraphInputRoutesThroughCycleMatroid) {
  const std::string path = Temp("c4.txt", "graph 4 4\n1 2\n2 3\n3 4\n4 1\n");
  const CliRun r = Cli("depth --input " + path + " --measure C");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["results"][0]["value"].get<int>(), 4);
}

TEST(Cli, DecomposeEmitsVerifiableFile) {
  const std::string out = ::testing::TempDir() + "c4_cstar.json";
  ASSERT_EQ(Cli("decompose --named cycle --param n=4 --kind cstar --out " + out).code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  const Json j = Json::parse(ss.str());
  EXPECT_EQ(j["value"].get<int>(), j["csd"].get<int>() - 1);
  EXPECT_EQ(Dump(Json::parse(Dump(j))), ss.str());
  EXPECT_EQ(Cli("decompose --named cycle --param n=4 --kind cstar --verify " + out).code, 0);
}

TEST(Cli, BranchDepthOfTinyIsNone) {
  const Json j = Json::parse(Cli("decompose --named free --param n=1 --kind branch-depth").out);
  EXPECT_EQ(j["value"].get<int>(), 0);
  EXPECT_TRUE(j["decomposition"].is_null());
}

TEST(Cli, SparsifyReport) {
  const std::string path = Temp("ones.txt", "gf2 1 2\n1 1\n");
  const CliRun r = Cli("sparsify-td --input " + path);
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["td_star_formula"]["P"].get<int>(), 2);
  EXPECT_EQ(j["td_star_formula"]["D"].get<int>(), 1);
  EXPECT_EQ(j["td_star_formula"]["I"].get<int>(), 3);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(Cli("verify --check fat-cycle").code, 0);
  EXPECT_EQ(Cli("verify --check cycles-treedepth").code, 1);
  EXPECT_EQ(Cli("verify --check no-such-check").code, 2);
}

TEST(Cli, InputAndCapErrors) {
  EXPECT_EQ(Cli("depth --input /nonexistent/file").code, 2);
  EXPECT_EQ(Cli("depth --named fano --caps depth_c_d_n=99").code, 2);
  EXPECT_EQ(Cli("depth --named uniform --param k=2 --param n=5 --measure CSTAR "
                "--caps depth_cstar_n=4").code,
            3);
}

TEST(Cli, CapsFromEnvironment) {
  setenv("MATROID_DEPTH_CAPS", "depth_cstar_n=4", 1);
  const int code = Cli("depth --named uniform --param k=2 --param n=5 --measure CSTAR").code;
  unsetenv("MATROID_DEPTH_CAPS");
  EXPECT_EQ(code, 3);
}

TEST(Cli, GenFixturesRoundTrip) {
  for (const std::string& args : {std::string("fano"), std::string("fat_cycle --param i=6 --param j=5"),
                                  std::string("K3n --param n=4")}) {
    const CliRun r = Cli("gen " + args);
    ASSERT_EQ(r.code, 0) << args;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(Dump(j), r.out);
  }
  const Json fat = Json::parse(Cli("gen fat_cycle --param i=6 --param j=5").out);
  EXPECT_EQ(fat["edges"].size(), 30u);
}

}  // namespace
}  // namespace mdepth
