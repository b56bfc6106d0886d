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

#ifndef MDEPTH_IO_H_
#define MDEPTH_IO_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "mdepth/gf_matrix.h"
#include "mdepth/graph.h"
#include "mdepth/rank_table.h"

namespace mdepth {

using Json = nlohmann::ordered_json;

// Named fixtures: uniform{k,n}, free{n}, loops{n}, fano, cycle{n},
// fat_cycle{i,j}, D{i,j}, K3n{n}, complete{n}.
RankTable Named(const std::string& name, const Json& params);
// Graph-valued fixtures (cycle, fat_cycle, D, K3n, complete,
// tree_plus_two{path}); nullopt for non-graphic names.
std::optional<MultiGraph> NamedGraph(const std::string& name,
                                     const Json& params);
GfMatrix FanoMatrix();

// Any of the four matroid JSON kinds, normalized to a rank table.
RankTable MatroidFromJson(const Json& j);
Json MatroidToJson(const RankTable& m);
Json MatrixToJson(const GfMatrix& a);
Json GraphToJson(const MultiGraph& g);

// Parsed command-line input: a matroid, plus the matrix or graph it came
// from when applicable.
struct LoadedInput {
  RankTable matroid;
  std::optional<GfMatrix> matrix;
  std::optional<MultiGraph> graph;
};

// Accepts matroid JSON, matrix text ("gfP m n") or graph text ("graph V E").
LoadedInput ParseInput(const std::string& text);

// Stable serialization used for every emitted JSON artifact.
std::string Dump(const Json& j);

}  // namespace mdepth

#endif  // MDEPTH_IO_H_
