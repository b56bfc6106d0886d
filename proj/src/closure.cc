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

#include "mdepth/closure.h"

namespace mdepth {

namespace {

// Sides X of the successive extensions; step j extends a matroid on
// m.size() + j elements and X is taken in that ground set.
std::vector<Mask> Steps(const RankTable& m, DepthSolver& solver) {
  const int n = m.size();
  std::vector<Mask> out;
  if (n <= 1) return out;
  const auto comps = Components(m);
  if (comps.size() > 1) {
    int size = n;
    for (Mask c : comps) {
      const auto elems = Elements(c);
      const int local_n = static_cast<int>(elems.size());
      const int start = size;  // global index of this component's first extra
      for (Mask x : Steps(Restrict(m, c), solver)) {
        Mask mapped = 0;
        Mask local_all = 0;
        for (int i = 0; i < local_n + (size - start); ++i) {
          const int g = i < local_n ? elems[i] : start + (i - local_n);
          local_all |= Mask{1} << g;
          if (Contains(x, i)) mapped |= Mask{1} << g;
        }
        // The rest of the matroid is a separator; it rides on the X side.
        out.push_back(mapped | (FullMask(size) & ~local_all));
        ++size;
      }
    }
    return out;
  }
  const Mask a = solver.CstarOptimalBipartitions(m).at(0);
  const int lam = Lambda(m, a);
  for (int i = 0; i < lam; ++i) out.push_back(a | (FullMask(n + i) & ~FullMask(n)));
  // Contracting the lam new elements leaves M/A + M/B; extensions of that
  // lift by adding the contracted set to X.
  const Mask z = FullMask(n + lam) & ~FullMask(n);
  for (Mask x : Steps(GutsSplit(m, a), solver)) {
    const Mask low = x & FullMask(n);
    const Mask high = (x & ~FullMask(n)) << lam;
    out.push_back(low | high | z);
  }
  return out;
}

}  // namespace

RankTable ApplyTrace(const RankTable& m, const std::vector<TraceStep>& trace) {
  RankTable cur = m;
  for (const TraceStep& s : trace) {
    if (s.op == TraceStep::Op::kRfext) {
      cur = Extend(cur, ExtensionSpec::RelativelyFree(s.x, s.y)).Materialize();
    } else {
      cur = Contract(cur, Mask{1} << s.elem);
    }
  }
  return cur;
}

ClosureWitness RestrictionClosureWitness(const RankTable& m, DepthSolver& solver) {
  CheckCap(m.size() <= solver.caps().closure_n, "restriction closure ground set size");
  ClosureWitness w{m, {}};
  for (Mask x : Steps(m, solver)) {
    const Mask y = w.extended.ground() & ~x;
    CheckCap(w.extended.size() + 1 <= kMaxGround, "restriction closure extension size");
    w.extended = Extend(w.extended, ExtensionSpec::RelativelyFree(x, y)).Materialize();
    w.trace.push_back({TraceStep::Op::kRfext, x, y, -1});
  }
  return w;
}

ClosureWitness ContractionClosureWitness(const RankTable& m, DepthSolver& solver) {
  ClosureWitness w = RestrictionClosureWitness(Dual(m), solver);
  w.extended = Dual(w.extended);
  return w;
}

}  // namespace mdepth
