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

#ifndef MDEPTH_DEPTH_H_
#define MDEPTH_DEPTH_H_

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdepth/caps.h"
#include "mdepth/io.h"
#include "mdepth/rank_table.h"

namespace mdepth {

enum class Measure { kC, kD, kCD, kCStar, kDStar, kCStarD, kCDStar, kCStarDStar };

const std::vector<Measure>& AllMeasures();
std::string MeasureName(Measure m);
std::optional<Measure> ParseMeasure(const std::string& name);
Measure DualMeasure(Measure m);

// One node of a depth certificate. Children refer to re-indexed matroids:
// components are restricted, contracted/deleted elements removed, guts
// children are M/A on E-A and M/(E-A) on A.
struct WitnessStep {
  enum class Kind { kBase, kComponents, kContract, kDelete, kGuts, kCStar, kDStar, kDual };
  Kind kind = Kind::kBase;
  int elem = -1;
  Mask a = 0;
  Mask b = 0;
  int lambda = 0;
  std::vector<Mask> classes;
  std::vector<Mask> cut;  // minimal flats; of M for kCStar, of M* for kDStar
  std::vector<WitnessStep> children;
};

Json WitnessToJson(const WitnessStep& w);
WitnessStep WitnessFromJson(const Json& j);

struct DepthStats {
  std::int64_t nodes = 0;
  std::int64_t cache_hits = 0;
  double wall_ms = 0;
};

struct DepthResult {
  Measure measure;
  int value = 0;
  WitnessStep witness;
  DepthStats stats;
};

Json DepthResultToJson(const DepthResult& r, bool with_timing = true);

// Exact solvers for the eight depth measures with a shared memo keyed on
// (fingerprint, measure). Safe to call from several threads.
class DepthSolver {
 public:
  explicit DepthSolver(Caps caps = {});

  int Value(const RankTable& m, Measure mu);
  DepthResult Depth(const RankTable& m, Measure mu);

  // Literal recursion over single moves and starred transformations.
  int BruteValue(const RankTable& m, Measure mu);

  // Bipartition sides A (containing element 0) attaining the c*-depth of a
  // connected matroid through the guts recursion, in iteration order.
  std::vector<Mask> CstarOptimalBipartitions(const RankTable& m);

  const Caps& caps() const { return caps_; }
  DepthStats stats() const;

 private:
  struct Choice {
    WitnessStep::Kind kind = WitnessStep::Kind::kBase;
    int elem = -1;
    Mask a = 0;
  };
  struct Entry {
    int value = 0;
    Choice choice;
  };
  struct Bounds {
    int proven_true = 1 << 20;
    int proven_false = 0;
  };

  void CheckMeasureCap(const RankTable& m, Measure mu, bool brute) const;
  Entry Solve(const RankTable& m, Measure mu);
  Entry SolveDirect(const RankTable& m, Measure mu);
  Entry SolveCstar(const RankTable& m);
  Entry SolveGd(const RankTable& m);
  WitnessStep BuildWitness(const RankTable& m, Measure mu);

  bool AtMost(const RankTable& m, Measure mu, int k);
  WitnessStep WitnessAtMost(const RankTable& m, Measure mu, int k);
  int BruteSolve(const RankTable& m, Measure mu);

  std::optional<Entry> Lookup(const std::string& key);
  void Store(const std::string& key, const Entry& e);

  Caps caps_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, Entry> exact_;
  std::unordered_map<std::string, Bounds> bounds_;
  std::atomic<std::int64_t> nodes_{0};
  std::atomic<std::int64_t> hits_{0};
};

// Replays a certificate and returns the upper bound it proves. Throws
// InputError when a step is illegal for the measure or inconsistent.
int ReplayWitness(const RankTable& m, Measure mu, const WitnessStep& w,
                  const Caps& caps = {});

struct BoundCheck {
  std::string name;
  bool pass = false;
  bool skipped = false;  // a side exceeded its cap
  std::string detail;
};

// log2 u* <= dd <= u*(u*+1)/2, log2 u <= cd <= u(u+1)/2,
// log2 u <= csd <= u^2+1.
std::vector<BoundCheck> CircumferenceBoundsCheck(DepthSolver& solver,
                                                 const RankTable& m);
// csdsd <= csdd <= cdd, csdsd <= cdsd <= cdd, csd <= cd, dsd <= dd,
// csdsd <= cdd.
std::vector<BoundCheck> ChainCheck(DepthSolver& solver, const RankTable& m);

}  // namespace mdepth

#endif  // MDEPTH_DEPTH_H_
