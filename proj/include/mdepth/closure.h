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

#ifndef MDEPTH_CLOSURE_H_
#define MDEPTH_CLOSURE_H_

#include <vector>

#include "mdepth/depth.h"
#include "mdepth/extensions.h"
#include "mdepth/rank_table.h"

namespace mdepth {

struct ClosureWitness {
  RankTable extended;  // original elements first, added ones after
  std::vector<TraceStep> trace;
};

// A matroid containing m as a restriction whose c-depth equals csd(m),
// built from relatively free extensions along optimal guts bipartitions.
ClosureWitness RestrictionClosureWitness(const RankTable& m, DepthSolver& solver);

// Dual form: a matroid containing m as a contraction whose d-depth equals
// dsd(m). The trace refers to the dual.
ClosureWitness ContractionClosureWitness(const RankTable& m, DepthSolver& solver);

// Re-applies an rfext trace to m.
RankTable ApplyTrace(const RankTable& m, const std::vector<TraceStep>& trace);

}  // namespace mdepth

#endif  // MDEPTH_CLOSURE_H_
