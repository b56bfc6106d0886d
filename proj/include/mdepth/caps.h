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

#ifndef MDEPTH_CAPS_H_
#define MDEPTH_CAPS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mdepth {

// Size and enumeration limits. Defaults equal the hard limits; overrides may
// only lower a value.
struct Caps {
  std::int64_t rank_table_n = 16;
  std::int64_t enum_vectors = std::int64_t{1} << 20;
  std::int64_t gl_forms = 20000000;
  std::int64_t flats_n = 10;
  std::int64_t cuts_n = 6;
  std::int64_t depth_cd_n = 10;
  std::int64_t depth_c_d_n = 12;  // c-depth or d-depth alone
  std::int64_t depth_cstar_n = 9;
  std::int64_t depth_csdsd_n = 6;
  std::int64_t brute_n = 6;
  std::int64_t bw_n = 7;
  std::int64_t bd_n = 6;
  std::int64_t mtd_n = 5;
  std::int64_t cstar_decomp_n = 7;
  std::int64_t closure_n = 7;
  std::int64_t graph_td_v = 15;
  std::int64_t graphic_csdsd_e = 9;
  std::int64_t vertex_degree = 10;
  // Family sizes used by the verification harness.
  std::int64_t family_n = 5;
  std::int64_t family_csdsd_n = 4;
  std::int64_t matrix_m = 3;
  std::int64_t matrix_n = 4;
  std::int64_t matrix_eq_n = 5;  // matrix against matroid depth
  std::int64_t graph_edges = 6;

  // Keys in a fixed order, with pointers to the fields.
  std::vector<std::pair<std::string, std::int64_t*>> Fields();
  std::vector<std::pair<std::string, std::int64_t>> Values() const;

  // Applies "key=value" overrides separated by commas. Throws InputError on
  // unknown keys, malformed values or attempts to raise a value above its
  // hard limit.
  void Apply(const std::string& overrides);
};

}  // namespace mdepth

#endif  // MDEPTH_CAPS_H_
