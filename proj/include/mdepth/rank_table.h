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

#ifndef MDEPTH_RANK_TABLE_H_
#define MDEPTH_RANK_TABLE_H_

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mdepth/common.h"

namespace mdepth {

// A matroid on [n] stored as its rank function over all 2^n subsets.
class RankTable {
 public:
  RankTable() : n_(0), ranks_(1, 0) {}
  RankTable(int n, std::vector<std::uint8_t> ranks);
  static RankTable FromFunction(int n, const std::function<int(Mask)>& rank);

  int size() const { return n_; }
  Mask ground() const { return FullMask(n_); }
  int Rank(Mask x) const { return ranks_[x]; }
  int FullRank() const { return ranks_[ground()]; }
  const std::vector<std::uint8_t>& ranks() const { return ranks_; }

  // n followed by the rank bytes; equal iff equal labeled matroids.
  std::string Fingerprint() const;

  bool operator==(const RankTable& other) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> ranks_;
};

// Returns a description of the first violated axiom, if any.
std::optional<std::string> ValidateRankAxioms(const RankTable& m);

RankTable Dual(const RankTable& m);
// Restriction to `keep`, re-indexed in increasing element order.
RankTable Restrict(const RankTable& m, Mask keep);
RankTable Delete(const RankTable& m, Mask x);
RankTable Contract(const RankTable& m, Mask x);
RankTable Minor(const RankTable& m, Mask del, Mask con);
// Contracts `con`, then restricts to `keep` (disjoint from `con`).
RankTable ContractRestrict(const RankTable& m, Mask con, Mask keep);
RankTable DirectSum(const RankTable& a, const RankTable& b);

int Lambda(const RankTable& m, Mask x);
bool IsLoop(const RankTable& m, int e);
bool IsColoop(const RankTable& m, int e);
bool OnlyLoopsAndColoops(const RankTable& m);

std::vector<Mask> Circuits(const RankTable& m);
int Circumference(const RankTable& m);
int Cocircumference(const RankTable& m);

// Classes ordered by their lowest element. The empty matroid has none.
std::vector<Mask> Components(const RankTable& m);
bool IsConnected(const RankTable& m);

Mask Closure(const RankTable& m, Mask x);
bool IsFlat(const RankTable& m, Mask x);
bool IsModularPair(const RankTable& m, Mask x, Mask y);
bool IsBispan(const RankTable& m, Mask x, Mask y);
bool IsConnectedBispan(const RankTable& m, Mask x, Mask y);

RankTable Uniform(int k, int n);
RankTable FreeMatroid(int n);
RankTable LoopMatroid(int n);

// A lazily evaluated rank function with a memo. Lookups are serialized by a
// mutex; evaluation is deterministic so concurrent fills agree.
class OracleMatroid {
 public:
  OracleMatroid(int n, std::function<int(Mask)> rank,
                std::string provenance = "");
  OracleMatroid(const OracleMatroid& other);

  int size() const { return n_; }
  int Rank(Mask x) const;
  const std::string& provenance() const { return provenance_; }
  RankTable Materialize() const;

 private:
  int n_;
  std::function<int(Mask)> rank_;
  std::string provenance_;
  mutable std::mutex mu_;
  mutable std::vector<std::int8_t> memo_;
};

}  // namespace mdepth

#endif  // MDEPTH_RANK_TABLE_H_
