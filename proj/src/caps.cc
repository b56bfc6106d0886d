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

#include "mdepth/caps.h"

#include <sstream>

#include "mdepth/common.h"

namespace mdepth {

std::vector<std::pair<std::string, std::int64_t*>> Caps::Fields() {
  return {{"rank_table_n", &rank_table_n},
          {"enum_vectors", &enum_vectors},
          {"gl_forms", &gl_forms},
          {"flats_n", &flats_n},
          {"cuts_n", &cuts_n},
          {"depth_cd_n", &depth_cd_n},
          {"depth_c_d_n", &depth_c_d_n},
          {"depth_cstar_n", &depth_cstar_n},
          {"depth_csdsd_n", &depth_csdsd_n},
          {"brute_n", &brute_n},
          {"bw_n", &bw_n},
          {"bd_n", &bd_n},
          {"mtd_n", &mtd_n},
          {"cstar_decomp_n", &cstar_decomp_n},
          {"closure_n", &closure_n},
          {"graph_td_v", &graph_td_v},
          {"graphic_csdsd_e", &graphic_csdsd_e},
          {"vertex_degree", &vertex_degree},
          {"family_n", &family_n},
          {"family_csdsd_n", &family_csdsd_n},
          {"matrix_m", &matrix_m},
          {"matrix_n", &matrix_n},
          {"matrix_eq_n", &matrix_eq_n},
          {"graph_edges", &graph_edges}};
}

std::vector<std::pair<std::string, std::int64_t>> Caps::Values() const {
  Caps copy = *this;
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& [key, ptr] : copy.Fields()) out.emplace_back(key, *ptr);
  return out;
}

void Caps::Apply(const std::string& overrides) {
  const Caps hard;
  Caps hard_copy = hard;
  auto hard_fields = hard_copy.Fields();
  auto fields = Fields();
  std::stringstream in(overrides);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad cap override: " + item);
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::int64_t parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw InputError("bad cap value: " + item);
    }
    bool found = false;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (fields[i].first != key) continue;
      found = true;
      if (parsed < 0 || parsed > *hard_fields[i].second) {
        throw InputError("cap " + key + " may only be lowered (hard limit " +
                         std::to_string(*hard_fields[i].second) + ")");
      }
      *fields[i].second = parsed;
    }
    if (!found) throw InputError("unknown cap: " + key);
  }
}

}  // namespace mdepth
