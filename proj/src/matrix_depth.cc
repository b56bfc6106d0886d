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

#include "mdepth/matrix_depth.h"

#include <algorithm>

#include "mdepth/graph.h"

namespace mdepth {

TdTriple TdVariants(const GfMatrix& a, const Caps& caps) {
  return {TreeDepth(PrimalGraph(a), caps), TreeDepth(DualGraph(a), caps),
          TreeDepth(IncidenceGraph(a), caps)};
}

int RankBaseAdjust(int value, const RankTable& m) {
  if (OnlyLoopsAndColoops(m) && m.FullRank() > 0) return value;
  return value - 1;
}

MatrixDepthReport TdStarFormula(const GfMatrix& a, DepthSolver& solver) {
  const RankTable m = VectorMatroid(a);
  MatrixDepthReport r;
  r.td = TdVariants(a, solver.caps());
  r.dd = solver.Value(m, Measure::kD);
  r.csd = solver.Value(m, Measure::kCStar);
  r.csdd = solver.Value(m, Measure::kCStarD);
  r.zero_rank = m.FullRank() == 0;
  r.loops_coloops_positive_rank = OnlyLoopsAndColoops(m) && !r.zero_rank;
  r.formula.primal = r.dd;
  r.formula.dual = r.loops_coloops_positive_rank ? r.csd : r.csd - 1;
  r.formula.incidence = r.csdd + 1;
  MatrixDepthSolver ms(solver.caps());
  r.incidence_rank_base = ms.Value(a, Measure::kCStarD, true) + 1;
  if (r.loops_coloops_positive_rank) {
    r.notes.push_back("loops and coloops only, positive rank: dual value is csd");
  }
  if (r.zero_rank) {
    r.notes.push_back("rank 0: dual formula gives csd-1 = 0 but any dual graph has tree-depth >= 1");
  }
  return r;
}

TdTriple TdStarEnumerated(const GfMatrix& a, const Caps& caps) {
  TdTriple best{1 << 20, 1 << 20, 1 << 20};
  ForEachRowEquivalentForm(a, caps.gl_forms, [&](const GfMatrix& form) {
    const TdTriple t = TdVariants(form, caps);
    best.primal = std::min(best.primal, t.primal);
    best.dual = std::min(best.dual, t.dual);
    best.incidence = std::min(best.incidence, t.incidence);
    return true;
  });
  return best;
}

MatrixDepthReport SparsifyReport(const GfMatrix& a, DepthSolver& solver) {
  MatrixDepthReport r = TdStarFormula(a, solver);
  try {
    r.enumerated = TdStarEnumerated(a, solver.caps());
    if (*r.enumerated != r.formula) {
      r.notes.push_back("formula and enumerated minima differ");
    }
  } catch (const CapError& e) {
    r.notes.push_back(std::string("enumeration skipped: ") + e.what());
  }
  return r;
}

namespace {

Json TripleToJson(const TdTriple& t) {
  Json j;
  j["P"] = t.primal;
  j["D"] = t.dual;
  j["I"] = t.incidence;
  return j;
}

}  // namespace

Json MatrixDepthReportToJson(const MatrixDepthReport& r) {
  Json j;
  j["td"] = TripleToJson(r.td);
  j["td_star_formula"] = TripleToJson(r.formula);
  j["td_star_enumerated"] = r.enumerated ? TripleToJson(*r.enumerated) : Json();
  j["dd"] = r.dd;
  j["csd"] = r.csd;
  j["csdd"] = r.csdd;
  j["incidence_rank_base"] = r.incidence_rank_base;
  j["loops_coloops_positive_rank"] = r.loops_coloops_positive_rank;
  j["zero_rank"] = r.zero_rank;
  j["notes"] = r.notes;
  return j;
}

MatrixDepthSolver::MatrixDepthSolver(Caps caps) : caps_(caps) {}

namespace {

std::string Key(const GfMatrix& a, Measure mu, bool rank_base) {
  std::string k;
  k.push_back(static_cast<char>('0' + static_cast<int>(mu)));
  k.push_back(rank_base ? 'r' : 'u');
  k.push_back(static_cast<char>(a.p()));
  k.push_back(static_cast<char>(a.rows()));
  k.push_back(static_cast<char>(a.cols()));
  for (auto x : a.entries()) k.push_back(static_cast<char>(x));
  return k;
}

bool Allows(Measure mu, char move) {
  switch (move) {
    case 'v':  // add a vector and contract it
      return mu == Measure::kCStar || mu == Measure::kCStarD || mu == Measure::kCStarDStar;
    case 'd':  // delete a column
      return mu == Measure::kCStarD;
    case 'c':  // contract a column
      return mu == Measure::kCDStar;
    case 'r':  // append a row
      return mu == Measure::kDStar || mu == Measure::kCDStar || mu == Measure::kCStarDStar;
  }
  return false;
}

// Nonzero vectors with leading nonzero entry 1: A (.) v only depends on v
// up to scaling.
std::vector<Vec> ProjectivePoints(int p, int dim, std::int64_t cap) {
  std::vector<Vec> out;
  ForEachVector(p, dim, cap, [&](const Vec& v) {
    auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
    if (it != v.end() && *it == 1) out.push_back(v);
    return true;
  });
  return out;
}

}  // namespace

int MatrixDepthSolver::Value(const GfMatrix& a, Measure mu, bool rank_base) {
  if (mu == Measure::kC || mu == Measure::kD || mu == Measure::kCD) {
    throw InputError("matrix depth is defined for starred measures only");
  }
  CheckCap(a.cols() <= caps_.depth_csdsd_n || mu != Measure::kCStarDStar,
           "matrix c*d*-depth column count");
  CheckCap(a.cols() <= caps_.depth_cstar_n, "matrix depth column count");
  const GfMatrix canon = CanonicalRowSpace(a);
  for (int k = rank_base ? 0 : 1;; ++k) {
    if (AtMost(canon, mu, rank_base, k)) return k;
  }
}

// Every move strictly lowers the rank (vector or column contraction),
// the column count (deletion) or raises the rank (row outside the row
// space), so the k-bounded search terminates; k bounds the row moves too.
bool MatrixDepthSolver::AtMost(const GfMatrix& a, Measure mu, bool rank_base,
                               int k) {
  const int lowest = rank_base ? 0 : 1;
  if (k < lowest) return false;
  const int n = a.cols();
  if (n == 0) return true;
  if (n == 1) return k >= (rank_base ? a.rows() : 1);  // rows == rank here
  const std::string key = Key(a, mu, rank_base);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (k >= it->second.proven_true) return true;
      if (k <= it->second.proven_false) return false;
    }
  }
  auto record = [&](bool ok) {
    std::lock_guard<std::mutex> lock(mu_);
    Bounds& b = memo_[key];
    if (ok) {
      b.proven_true = std::min(b.proven_true, k);
    } else {
      b.proven_false = std::max(b.proven_false, k);
    }
    return ok;
  };
  const RankTable m = VectorMatroid(a);
  const auto comps = Components(m);
  if (comps.size() > 1) {
    for (Mask c : comps) {
      if (!AtMost(CanonicalRowSpace(SelectColumns(a, c)), mu, rank_base, k)) return record(false);
    }
    return record(true);
  }
  if (k < lowest + 1) return record(false);
  auto try_move = [&](const GfMatrix& next) {
    const GfMatrix canon = CanonicalRowSpace(next);
    return !(canon == a) && AtMost(canon, mu, rank_base, k - 1);
  };
  if (Allows(mu, 'd')) {
    for (int j = 0; j < n; ++j) {
      if (try_move(DeleteColumn(a, j))) return record(true);
    }
  }
  if (Allows(mu, 'c')) {
    for (int j = 0; j < n; ++j) {
      if (try_move(ContractColumn(DeleteColumn(a, j), a.Column(j)))) return record(true);
    }
  }
  if (Allows(mu, 'v')) {
    for (const Vec& v : ProjectivePoints(a.p(), a.rows(), caps_.enum_vectors)) {
      if (try_move(ContractColumn(a, v))) return record(true);
    }
  }
  if (Allows(mu, 'r')) {
    for (const Vec& w : ProjectivePoints(a.p(), n, caps_.enum_vectors)) {
      const GfMatrix next = CoextendRow(a, w);
      if (Rref(next).rank == a.rows()) continue;  // w in the row space
      if (try_move(next)) return record(true);
    }
  }
  return record(false);
}

}  // namespace mdepth
