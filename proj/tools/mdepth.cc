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

// Command-line front end: depths, decompositions, matrix reports, the
// verification suite and fixture generation.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mdepth/decomposition.h"
#include "mdepth/graph.h"
#include "mdepth/io.h"
#include "mdepth/matrix_depth.h"
#include "mdepth/theorems.h"

namespace {

using namespace mdepth;

enum ExitCode { kOk = 0, kCheckFailed = 1, kInputError = 2, kCapExceeded = 3 };

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ParseParams(const std::vector<std::string>& items) {
  Json params = Json::object();
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad --param: " + item);
    const std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      const int v = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      params[item.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw InputError("bad --param value: " + item);
    }
  }
  return params;
}

struct Common {
  std::string input;
  std::string named;
  std::vector<std::string> params;
  std::string caps;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  int jobs = 1;

  Caps LoadCaps() const {
    Caps c;
    if (const char* env = std::getenv("MATROID_DEPTH_CAPS")) c.Apply(env);
    c.Apply(caps);
    return c;
  }

  LoadedInput Load() const {
    if (!named.empty()) {
      Json j = {{"kind", "named"}, {"name", named}, {"params", ParseParams(params)}};
      return ParseInput(j.dump());
    }
    if (input.empty()) throw InputError("--input or --named is required");
    return ParseInput(ReadAll(input));
  }

  void Emit(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
  }
};

void AddInputFlags(CLI::App* cmd, Common& c) {
  cmd->add_option("--input", c.input, "matroid JSON, matrix text or graph text ('-' for stdin)");
  cmd->add_option("--named", c.named, "named fixture instead of --input");
  cmd->add_option("--param", c.params, "fixture parameter k=v");
}

void AddOutputFlags(CLI::App* cmd, Common& c) {
  cmd->add_option("--caps", c.caps, "cap overrides k=v,...");
  cmd->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", c.out, "output file");
}

std::string Table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i + 1 < r.size()) {
        os << std::left << std::setw(static_cast<int>(width[i]) + 2) << r[i];
      } else {
        os << r[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

int CmdDepth(const Common& c, const std::vector<std::string>& measure_names) {
  const Caps caps = c.LoadCaps();
  const LoadedInput in = c.Load();
  std::vector<Measure> measures;
  for (const std::string& name : measure_names) {
    if (name == "all") {
      measures = AllMeasures();
      break;
    }
    auto mu = ParseMeasure(name);
    if (!mu) throw InputError("unknown measure: " + name);
    measures.push_back(*mu);
  }
  if (measures.empty()) measures = AllMeasures();
  DepthSolver solver(caps);
  Json out;
  out["matroid"] = MatroidToJson(in.matroid);
  out["results"] = Json::array();
  std::vector<std::vector<std::string>> rows = {{"measure", "value"}};
  bool capped = false;
  for (Measure mu : measures) {
    try {
      const DepthResult r = solver.Depth(in.matroid, mu);
      out["results"].push_back(DepthResultToJson(r, false));
      rows.push_back({MeasureName(mu), std::to_string(r.value)});
    } catch (const CapError& e) {
      // Other measures are still reported.
      capped = true;
      out["results"].push_back(
          {{"measure", MeasureName(mu)}, {"status", "skipped-cap"}, {"cap", e.what()}});
      rows.push_back({MeasureName(mu), "cap"});
    }
  }
  c.Emit(c.format == "table" ? Table(rows) : Dump(out));
  return capped ? kCapExceeded : kOk;
}

int CmdDecompose(const Common& c, const std::string& kind, const std::string& verify_path) {
  const Caps caps = c.LoadCaps();
  const RankTable m = c.Load().matroid;
  Json out;
  out["kind"] = kind;
  bool ok = true;
  if (!verify_path.empty()) {
    const Json j = Json::parse(ReadAll(verify_path));
    const Json& d = j.contains("decomposition") ? j["decomposition"] : j;
    if (kind == "branch-depth") {
      const int k = j.value("value", 0);
      ok = d.is_null() ? m.size() <= 1 : VerifyBranchDepth(m, LeafTreeFromJson(d), k, k);
    } else if (kind == "tree-depth") {
      const TreeDecomp t = TreeDecompFromJson(d);
      const int k = j.value("value", std::max(TdWidth(m, t), Radius(t.parent)));
      ok = TdWidth(m, t) <= k && Radius(t.parent) <= k;
    } else {
      ok = VerifyCstarDecomp(m, CstarDecompFromJson(d));
    }
    out["verified"] = ok;
    c.Emit(Dump(out));
    return ok ? kOk : kCheckFailed;
  }
  if (kind == "branch-depth") {
    const BranchDepthResult r = BranchDepth(m, caps);
    out["value"] = r.value;
    out["decomposition"] = r.tree ? LeafTreeToJson(*r.tree) : Json();
    out["verified"] = r.tree ? VerifyBranchDepth(m, *r.tree, r.value, r.value) : true;
  } else if (kind == "tree-depth") {
    const TreeDepthResult r = MatroidTreeDepth(m, caps);
    out["value"] = r.value;
    out["width"] = TdWidth(m, r.decomposition);
    out["radius"] = Radius(r.decomposition.parent);
    out["decomposition"] = TreeDecompToJson(r.decomposition);
    out["verified"] = out["width"].get<int>() <= r.value && out["radius"].get<int>() <= r.value;
  } else {
    DepthSolver solver(caps);
    const bool special = OnlyLoopsAndColoops(m) && m.FullRank() > 0;
    CStarDecomp d;
    if (special) {
      d = CstarDecompMinHeight(m, caps).decomposition;
    } else {
      d = BuildCstarDecomp(m, solver);
    }
    out["value"] = CstarDecompDepth(d);
    out["csd"] = solver.Value(m, Measure::kCStar);
    out["decomposition"] = CstarDecompToJson(d);
    out["verified"] = VerifyCstarDecomp(m, d);
  }
  ok = out["verified"].get<bool>();
  if (c.format == "table") {
    c.Emit(Table({{"kind", "value", "verified"},
                  {kind, std::to_string(out["value"].get<int>()), ok ? "yes" : "no"}}));
  } else {
    c.Emit(Dump(out));
  }
  return ok ? kOk : kCheckFailed;
}

int CmdSparsify(const Common& c) {
  const Caps caps = c.LoadCaps();
  const LoadedInput in = c.Load();
  if (!in.matrix) throw InputError("sparsify-td needs a matrix input");
  DepthSolver solver(caps);
  const MatrixDepthReport r = SparsifyReport(*in.matrix, solver);
  if (c.format == "table") {
    std::vector<std::vector<std::string>> rows = {{"variant", "td", "formula", "enumerated"}};
    auto row = [&](const char* name, int TdTriple::*field) {
      rows.push_back({name, std::to_string(r.td.*field), std::to_string(r.formula.*field),
                      r.enumerated ? std::to_string((*r.enumerated).*field) : "-"});
    };
    row("primal", &TdTriple::primal);
    row("dual", &TdTriple::dual);
    row("incidence", &TdTriple::incidence);
    std::string text = Table(rows);
    for (const std::string& n : r.notes) text += "note: " + n + "\n";
    c.Emit(text);
  } else {
    c.Emit(Dump(MatrixDepthReportToJson(r)));
  }
  return kOk;
}

int CmdVerify(const Common& c, std::vector<std::string> ids) {
  VerifyOptions options;
  options.caps = c.LoadCaps();
  options.seed = c.seed;
  options.jobs = c.jobs;
  if (ids.empty()) ids = {"all"};
  bool all_pass = false;
  const Json report = VerifyReport(ids, options, &all_pass);
  if (c.format == "table") {
    std::vector<std::vector<std::string>> rows = {{"check", "pass", "fail", "skipped"}};
    for (const Json& r : report["checks"]) {
      rows.push_back({r["check_id"].get<std::string>(), std::to_string(r["pass_count"].get<int>()),
                      std::to_string(r["fail_count"].get<int>()),
                      std::to_string(r["skipped"].get<int>())});
    }
    c.Emit(Table(rows));
  } else {
    c.Emit(Dump(report));
  }
  return all_pass ? kOk : kCheckFailed;
}

int CmdGen(const Common& c, const std::string& name) {
  const Json params = ParseParams(c.params);
  if (name == "fano") {
    c.Emit(Dump(MatrixToJson(FanoMatrix())));
  } else if (auto g = NamedGraph(name, params)) {
    c.Emit(Dump(GraphToJson(*g)));
  } else {
    c.Emit(Dump(MatroidToJson(Named(name, params))));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth parameters of matroids and matrices"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> measures;
  auto* depth = app.add_subcommand("depth", "compute depth measures");
  AddInputFlags(depth, common);
  AddOutputFlags(depth, common);
  depth->add_option("--measure", measures, "measure name or 'all' (repeatable)");

  std::string kind = "branch-depth";
  std::string verify_path;
  auto* decompose = app.add_subcommand("decompose", "build or verify a decomposition");
  AddInputFlags(decompose, common);
  AddOutputFlags(decompose, common);
  decompose->add_option("--kind", kind, "branch-depth, tree-depth or cstar")
      ->check(CLI::IsMember({"branch-depth", "tree-depth", "cstar"}));
  decompose->add_option("--verify", verify_path, "verify this decomposition file instead");

  auto* sparsify = app.add_subcommand("sparsify-td", "tree-depth report for a matrix");
  AddInputFlags(sparsify, common);
  AddOutputFlags(sparsify, common);

  std::vector<std::string> checks;
  auto* verify = app.add_subcommand("verify", "run registered checks");
  AddOutputFlags(verify, common);
  verify->add_option("--check", checks, "check id or 'all' (repeatable)");
  verify->add_option("--seed", common.seed, "seed for sampled families");
  verify->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string gen_name;
  auto* gen = app.add_subcommand("gen", "write a fixture");
  gen->add_option("name", gen_name, "fixture name")->required();
  gen->add_option("--param", common.params, "fixture parameter k=v");
  gen->add_option("--out", common.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*depth) return CmdDepth(common, measures);
    if (*decompose) return CmdDecompose(common, kind, verify_path);
    if (*sparsify) return CmdSparsify(common);
    if (*verify) return CmdVerify(common, checks);
    if (*gen) return CmdGen(common, gen_name);
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
