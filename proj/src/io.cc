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

#include "mdepth/io.h"

#include <cctype>

namespace mdepth {

namespace {

int IntParam(const Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) ||
      !params[key].is_number_integer()) {
    throw InputError(std::string("missing integer parameter '") + key + "'");
  }
  return params[key].get<int>();
}

}  // namespace

GfMatrix FanoMatrix() {
  // Columns are the seven nonzero vectors of GF(2)^3.
  GfMatrix a(2, 3, 7);
  for (int j = 0; j < 7; ++j) {
    for (int i = 0; i < 3; ++i) a.Set(i, j, ((j + 1) >> (2 - i)) & 1);
  }
  return a;
}

std::optional<MultiGraph> NamedGraph(const std::string& name,
                                     const Json& params) {
  if (name == "cycle") return CycleGraph(IntParam(params, "n"));
  if (name == "fat_cycle") {
    return FatCycle(IntParam(params, "i"), IntParam(params, "j"));
  }
  if (name == "D") {
    return FatCycleWithSimpleEdge(IntParam(params, "i"), IntParam(params, "j"));
  }
  if (name == "K3n") return CompleteBipartite(3, IntParam(params, "n"));
  if (name == "complete") return CompleteGraph(IntParam(params, "n"));
  if (name == "tree_plus_two") {
    const int k = IntParam(params, "path");
    if (k < 2) throw InputError("tree_plus_two needs a tree with >= 2 vertices");
    MultiGraph path;
    path.vertices = k;
    for (int v = 0; v + 1 < k; ++v) path.AddEdge(v, v + 1);
    return TreePlusTwoUniversal(path);
  }
  return std::nullopt;
}

RankTable Named(const std::string& name, const Json& params) {
  if (name == "uniform") {
    return Uniform(IntParam(params, "k"), IntParam(params, "n"));
  }
  if (name == "free") return FreeMatroid(IntParam(params, "n"));
  if (name == "loops") return LoopMatroid(IntParam(params, "n"));
  if (name == "fano") return VectorMatroid(FanoMatrix());
  if (auto g = NamedGraph(name, params)) return CycleMatroid(*g);
  throw InputError("unknown fixture name: " + name);
}

RankTable MatroidFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InputError("matroid JSON needs a string 'kind'");
  }
  const std::string kind = j["kind"];
  try {
    if (kind == "ranktable") {
      const int n = j.at("n").get<int>();
      if (n < 0) throw InputError("negative n");
      CheckCap(n <= kMaxGround, "rank table ground set size");
      const auto& arr = j.at("ranks");
      if (!arr.is_array() || arr.size() != (std::size_t{1} << n)) {
        throw InputError("ranks must have 2^n entries");
      }
      std::vector<std::uint8_t> ranks;
      for (const auto& r : arr) {
        const int v = r.get<int>();
        if (v < 0 || v > n) throw InputError("rank value out of range");
        ranks.push_back(static_cast<std::uint8_t>(v));
      }
      RankTable m(n, std::move(ranks));
      if (auto err = ValidateRankAxioms(m)) throw InputError("invalid rank table: " + *err);
      return m;
    }
    if (kind == "linear") {
      const std::string field = j.at("field").get<std::string>();
      if (field.size() < 3 || field.substr(0, 2) != "gf") {
        throw InputError("field must look like gfP");
      }
      const int p = std::stoi(field.substr(2));
      const auto rows = j.at("matrix").get<std::vector<std::vector<int>>>();
      for (const auto& row : rows) {
        for (int x : row) {
          if (x < 0 || x >= p) throw InputError("matrix entry out of range");
        }
      }
      int cols = -1;
      if (j.contains("n")) cols = j["n"].get<int>();
      return VectorMatroid(GfMatrix::FromRows(p, rows, cols));
    }
    if (kind == "graphic") {
      MultiGraph g;
      g.vertices = j.at("vertices").get<int>();
      for (const auto& e : j.at("edges")) {
        g.AddEdge(e.at(0).get<int>(), e.at(1).get<int>());
      }
      return CycleMatroid(g);
    }
    if (kind == "named") {
      return Named(j.at("name").get<std::string>(),
                   j.contains("params") ? j["params"] : Json::object());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("matroid JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("matroid JSON: ") + e.what());
  }
  throw InputError("unknown matroid kind: " + kind);
}

Json MatroidToJson(const RankTable& m) {
  Json j;
  j["kind"] = "ranktable";
  j["n"] = m.size();
  Json ranks = Json::array();
  for (auto r : m.ranks()) ranks.push_back(static_cast<int>(r));
  j["ranks"] = ranks;
  return j;
}

Json MatrixToJson(const GfMatrix& a) {
  Json j;
  j["kind"] = "linear";
  j["field"] = "gf" + std::to_string(a.p());
  j["n"] = a.cols();
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.At(i, c));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

Json GraphToJson(const MultiGraph& g) {
  Json j;
  j["kind"] = "graphic";
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  return j;
}

LoadedInput ParseInput(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw InputError("empty input");
  if (text[i] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("JSON parse error: ") + e.what());
    }
    LoadedInput out{MatroidFromJson(j), std::nullopt, std::nullopt};
    const std::string kind = j.value("kind", "");
    if (kind == "linear") {
      const int p = std::stoi(j["field"].get<std::string>().substr(2));
      int cols = j.contains("n") ? j["n"].get<int>() : -1;
      out.matrix = GfMatrix::FromRows(
          p, j["matrix"].get<std::vector<std::vector<int>>>(), cols);
    } else if (kind == "graphic") {
      MultiGraph g;
      g.vertices = j["vertices"].get<int>();
      for (const auto& e : j["edges"]) g.AddEdge(e[0].get<int>(), e[1].get<int>());
      out.graph = g;
    } else if (kind == "named") {
      out.graph = NamedGraph(j["name"].get<std::string>(),
                             j.contains("params") ? j["params"] : Json::object());
      if (j["name"] == "fano") out.matrix = FanoMatrix();
    }
    return out;
  }
  if (text.compare(i, 2, "gf") == 0) {
    GfMatrix a = ParseMatrixText(text);
    return {VectorMatroid(a), a, std::nullopt};
  }
  if (text.compare(i, 5, "graph") == 0) {
    MultiGraph g = ParseGraphText(text);
    return {CycleMatroid(g), std::nullopt, g};
  }
  throw InputError("unrecognized input format");
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mdepth
