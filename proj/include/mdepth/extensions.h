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

#ifndef MDEPTH_EXTENSIONS_H_
#define MDEPTH_EXTENSIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "mdepth/caps.h"
#include "mdepth/io.h"
#include "mdepth/rank_table.h"

namespace mdepth {

std::vector<Mask> Flats(const RankTable& m, const Caps& caps = {});

// A modular cut, stored by all of its member flats (sorted).
struct ModularCut {
  std::vector<Mask> members;

  std::vector<Mask> Minimal() const;
  bool operator==(const ModularCut& other) const = default;
};

// Empty when `flats` is a modular cut of `m`; otherwise the reason.
std::optional<std::string> ValidateModularCut(const RankTable& m,
                                              const std::vector<Mask>& flats);
// The up-closure of `minimal` among the flats of `m`.
ModularCut CutFromMinimal(const RankTable& m, const std::vector<Mask>& minimal);

// Every modular cut exactly once, including the empty cut and the cut of
// all flats.
std::vector<ModularCut> EnumerateModularCuts(const RankTable& m,
                                             const Caps& caps = {});

struct ExtensionSpec {
  enum class Kind { kByCut, kFree, kRelativelyFree };
  Kind kind = Kind::kFree;
  std::vector<Mask> cut;  // member flats, for kByCut
  Mask x = 0;
  Mask y = 0;

  static ExtensionSpec ByCut(std::vector<Mask> members);
  static ExtensionSpec Free();
  static ExtensionSpec RelativelyFree(Mask x, Mask y);
};

// Single-element extension; the new element is n (last).
OracleMatroid Extend(const RankTable& m, const ExtensionSpec& spec);
// Dual of extending the dual; the spec is read relative to dual(m).
OracleMatroid Coextend(const RankTable& m, const ExtensionSpec& spec);

struct Transformation {
  RankTable result;
  std::vector<Mask> cut_minimal;  // cut of m (c*) or of dual(m) (d*)
};

// contract(extend(m, cut), new element) for every modular cut, deduplicated
// by rank table in enumeration order.
std::vector<Transformation> CstarTransformations(const RankTable& m,
                                                 const Caps& caps = {});
// dual(c*-transformation of dual(m)), deduplicated.
std::vector<Transformation> DstarTransformations(const RankTable& m,
                                                 const Caps& caps = {});
// Result of the c*-transformation given by one cut of m.
RankTable CstarByCut(const RankTable& m, const std::vector<Mask>& minimal);

struct TraceStep {
  enum class Op { kRfext, kContract };
  Op op;
  Mask x = 0;
  Mask y = 0;
  int elem = -1;
};
Json TraceToJson(const std::vector<TraceStep>& trace);
std::vector<TraceStep> TraceFromJson(const Json& j);

struct GutsResult {
  RankTable result;
  int steps = 0;
  std::vector<TraceStep> trace;
};

// Repeats relatively free extension in (A, E-A) followed by contraction of
// the new element until lambda(A) drops to 0.
GutsResult GutsContract(const RankTable& m, Mask a);

// Direct sum of m/A (living on E-A) and m/(E-A) (living on A), on the
// original labels.
RankTable GutsSplit(const RankTable& m, Mask a);

}  // namespace mdepth

#endif  // MDEPTH_EXTENSIONS_H_
