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

#ifndef MDEPTH_MATRIX_DEPTH_H_
#define MDEPTH_MATRIX_DEPTH_H_

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "mdepth/caps.h"
#include "mdepth/depth.h"
#include "mdepth/gf_matrix.h"
#include "mdepth/io.h"

namespace mdepth {

struct TdTriple {
  int primal = 0;
  int dual = 0;
  int incidence = 0;
  bool operator==(const TdTriple& other) const = default;
};

TdTriple TdVariants(const GfMatrix& a, const Caps& caps = {});

struct MatrixDepthReport {
  TdTriple td;                          // of A itself
  TdTriple formula;                     // from the matroid depths
  std::optional<TdTriple> enumerated;   // minima over row-equivalent forms
  int dd = 0;
  int csd = 0;
  int csdd = 0;
  // c*d-depth + 1 when a single column counts as its rank instead of 1.
  int incidence_rank_base = 0;
  bool loops_coloops_positive_rank = false;
  bool zero_rank = false;
  std::vector<std::string> notes;
};

MatrixDepthReport TdStarFormula(const GfMatrix& a, DepthSolver& solver);
TdTriple TdStarEnumerated(const GfMatrix& a, const Caps& caps = {});
// Formula values, plus enumerated values when the orbit fits the caps.
MatrixDepthReport SparsifyReport(const GfMatrix& a, DepthSolver& solver);
Json MatrixDepthReportToJson(const MatrixDepthReport& r);

// Converts a c*-depth value to the convention where a single column has
// depth equal to its rank.
int RankBaseAdjust(int value, const RankTable& m);

// Field-level depth: moves add-and-contract F-vectors, delete or contract
// columns, or append rows, as the measure allows. Supports CSTAR, DSTAR,
// CSTAR_D, C_DSTAR and CSTAR_DSTAR. Memoized on the row-reduced form.
// With rank_base a single column has depth equal to its rank.
class MatrixDepthSolver {
 public:
  explicit MatrixDepthSolver(Caps caps = {});
  int Value(const GfMatrix& a, Measure mu, bool rank_base = false);

 private:
  struct Bounds {
    int proven_true = 1 << 20;
    int proven_false = 0;
  };
  bool AtMost(const GfMatrix& canon, Measure mu, bool rank_base, int k);

  Caps caps_;
  std::mutex mu_;
  std::unordered_map<std::string, Bounds> memo_;
};

}  // namespace mdepth

#endif  // MDEPTH_MATRIX_DEPTH_H_
