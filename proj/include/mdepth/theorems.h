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

#ifndef MDEPTH_THEOREMS_H_
#define MDEPTH_THEOREMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mdepth/caps.h"
#include "mdepth/depth.h"
#include "mdepth/gf_matrix.h"
#include "mdepth/io.h"

namespace mdepth {

enum class CheckStatus { kPass, kFail, kSkipped };
std::string CheckStatusName(CheckStatus s);

struct CheckResult {
  std::string check_id;
  std::string instance;  // short descriptor
  CheckStatus status = CheckStatus::kPass;
  Json serialized;       // enough to rebuild the instance
  Json details;
};

struct CheckReport {
  std::string check_id;
  std::string claim;
  std::string family;
  int pass_count = 0;
  int fail_count = 0;
  int skipped = 0;
  std::vector<CheckResult> failures;  // fail and skipped-cap results
  std::vector<CheckResult> records;   // every result, for explorers
  Json summary;
};

struct VerifyOptions {
  Caps caps;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct CheckInfo {
  std::string id;
  std::string claim;
  std::string family;
  bool explorer = false;
};

const std::vector<CheckInfo>& CheckRegistry();
bool IsCheckId(const std::string& id);

// Throws InputError on an unknown id.
CheckReport RunCheck(const std::string& id, const VerifyOptions& options);

Json CheckReportToJson(const CheckReport& r, const Caps& caps);
// Aggregated report over `ids` ("all" expands to the registry). The output
// depends on seed and caps only, never on the job count.
Json VerifyReport(const std::vector<std::string>& ids, const VerifyOptions& options,
                  bool* all_pass);

struct CsdsdProbe {
  GfMatrix matrix;
  int matrix_value = 0;
  int matroid_value = 0;
  bool equal = false;
};
// c*d*-depth of each matrix against that of its matroid, over all matrices
// of the field with up to max_rows rows and max_cols columns.
std::vector<CsdsdProbe> ExploreOpenCsdsd(int p, int max_rows, int max_cols,
                                         const Caps& caps);

struct CsddClosureProbe {
  int csdd = 0;
  int best_cd = 0;         // best cd-depth over extensions found
  int added = 0;           // elements added in that extension
  int searched = 0;        // distinct extensions examined
};
// Bounded search over single-element extension chains of length <= budget.
CsddClosureProbe ExploreCsddClosure(const RankTable& m, int budget, DepthSolver& solver);

// Literal gd-depth recursion, independent of the c*d-depth solver.
int GdDepth(const RankTable& m);

}  // namespace mdepth

#endif  // MDEPTH_THEOREMS_H_
