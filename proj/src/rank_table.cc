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

#include "mdepth/rank_table.h"

#include <algorithm>
#include <numeric>
#include <utility>

namespace mdepth {

RankTable::RankTable(int n, std::vector<std::uint8_t> ranks)
    : n_(n), ranks_(std::move(ranks)) {
  if (n < 0 || n > kMaxGround) {
    throw CapError("cap exceeded: rank table ground set size " +
                   std::to_string(n));
  }
  if (ranks_.size() != (std::size_t{1} << n)) {
    throw InputError("rank table must have 2^n entries");
  }
}

RankTable RankTable::FromFunction(int n, const std::function<int(Mask)>& rank) {
  CheckCap(n >= 0 && n <= kMaxGround, "rank table ground set size");
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  for (Mask x = 0; x <= FullMask(n); ++x) {
    ranks[x] = static_cast<std::uint8_t>(rank(x));
    if (x == FullMask(n)) break;
  }
  return RankTable(n, std::move(ranks));
}

std::string RankTable::Fingerprint() const {
  std::string out;
  out.reserve(ranks_.size() + 1);
  out.push_back(static_cast<char>(n_));
  for (auto r : ranks_) out.push_back(static_cast<char>(r));
  return out;
}

std::optional<std::string> ValidateRankAxioms(const RankTable& m) {
  const int n = m.size();
  if (m.Rank(0) != 0) return "rank of empty set is not 0";
  const Mask full = m.ground();
  for (Mask x = 0; x <= full; ++x) {
    for (int e = 0; e < n; ++e) {
      if (Contains(x, e)) continue;
      const int d = m.Rank(x | (Mask{1} << e)) - m.Rank(x);
      if (d < 0 || d > 1) {
        return "unit increase fails at set " + std::to_string(x) +
               " element " + std::to_string(e);
      }
    }
    if (x == full) break;
  }
  // Local submodularity r(X+a) + r(X+b) >= r(X+a+b) + r(X) is equivalent to
  // full submodularity together with the unit-increase axiom.
  for (Mask x = 0; x <= full; ++x) {
    for (int a = 0; a < n; ++a) {
      if (Contains(x, a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (Contains(x, b)) continue;
        const Mask xa = x | (Mask{1} << a);
        const Mask xb = x | (Mask{1} << b);
        if (m.Rank(xa) + m.Rank(xb) < m.Rank(xa | xb) + m.Rank(x)) {
          return "submodularity fails at set " + std::to_string(x) +
                 " elements " + std::to_string(a) + "," + std::to_string(b);
        }
      }
    }
    if (x == full) break;
  }
  return std::nullopt;
}

RankTable Dual(const RankTable& m) {
  const Mask full = m.ground();
  const int r = m.FullRank();
  return RankTable::FromFunction(m.size(), [&](Mask x) {
    return Popcount(x) + m.Rank(full & ~x) - r;
  });
}

RankTable ContractRestrict(const RankTable& m, Mask con, Mask keep) {
  if (con & keep) throw InputError("contracted and kept sets overlap");
  if ((con | keep) & ~m.ground()) throw InputError("mask outside ground set");
  const int k = Popcount(keep);
  const int base = m.Rank(con);
  std::vector<std::uint8_t> ranks(std::size_t{1} << k);
  // Submasks of `keep` in increasing order have compressed indices 0, 1, ...
  Mask sub = 0;
  std::size_t idx = 0;
  while (true) {
    ranks[idx++] = static_cast<std::uint8_t>(m.Rank(sub | con) - base);
    if (sub == keep) break;
    sub = (sub - keep) & keep;
  }
  return RankTable(k, std::move(ranks));
}

RankTable Restrict(const RankTable& m, Mask keep) {
  return ContractRestrict(m, 0, keep);
}

RankTable Delete(const RankTable& m, Mask x) {
  if (x & ~m.ground()) throw InputError("mask outside ground set");
  return ContractRestrict(m, 0, m.ground() & ~x);
}

RankTable Contract(const RankTable& m, Mask x) {
  if (x & ~m.ground()) throw InputError("mask outside ground set");
  return ContractRestrict(m, x, m.ground() & ~x);
}

RankTable Minor(const RankTable& m, Mask del, Mask con) {
  if (del & con) throw InputError("minor: deleted and contracted sets overlap");
  if ((del | con) & ~m.ground()) throw InputError("mask outside ground set");
  return ContractRestrict(m, con, m.ground() & ~(del | con));
}

RankTable DirectSum(const RankTable& a, const RankTable& b) {
  const int n = a.size() + b.size();
  CheckCap(n <= kMaxGround, "direct_sum ground set size");
  const Mask low = a.ground();
  return RankTable::FromFunction(n, [&](Mask x) {
    return a.Rank(x & low) + b.Rank(x >> a.size());
  });
}

int Lambda(const RankTable& m, Mask x) {
  return m.Rank(x) + m.Rank(m.ground() & ~x) - m.FullRank();
}

bool IsLoop(const RankTable& m, int e) { return m.Rank(Mask{1} << e) == 0; }

bool IsColoop(const RankTable& m, int e) {
  return m.Rank(m.ground() & ~(Mask{1} << e)) == m.FullRank() - 1;
}

bool OnlyLoopsAndColoops(const RankTable& m) {
  for (int e = 0; e < m.size(); ++e) {
    if (!IsLoop(m, e) && !IsColoop(m, e)) return false;
  }
  return true;
}

std::vector<Mask> Circuits(const RankTable& m) {
  std::vector<Mask> out;
  const Mask full = m.ground();
  for (Mask x = 1; x <= full && x != 0; ++x) {
    if (m.Rank(x) != Popcount(x) - 1) continue;
    bool minimal = true;
    for (int e : Elements(x)) {
      const Mask y = x & ~(Mask{1} << e);
      if (m.Rank(y) != Popcount(y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
    if (x == full) break;
  }
  return out;
}

int Circumference(const RankTable& m) {
  int best = 0;
  for (Mask c : Circuits(m)) best = std::max(best, Popcount(c));
  return best == 0 ? 1 : best;
}

int Cocircumference(const RankTable& m) { return Circumference(Dual(m)); }

std::vector<Mask> Components(const RankTable& m) {
  // Two elements share a component iff they are linked through fundamental
  // circuits of any fixed basis.
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Mask basis = 0;
  for (int e = 0; e < n; ++e) {
    if (m.Rank(basis | (Mask{1} << e)) > m.Rank(basis)) basis |= Mask{1} << e;
  }
  const int r = m.FullRank();
  for (int e = 0; e < n; ++e) {
    if (Contains(basis, e)) continue;
    for (int b : Elements(basis)) {
      const Mask swapped = (basis & ~(Mask{1} << b)) | (Mask{1} << e);
      if (m.Rank(swapped) == r) parent[find(e)] = find(b);
    }
  }
  std::vector<Mask> classes;
  std::vector<int> slot(n, -1);
  for (int e = 0; e < n; ++e) {
    const int root = find(e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(classes.size());
      classes.push_back(0);
    }
    classes[slot[root]] |= Mask{1} << e;
  }
  return classes;
}

bool IsConnected(const RankTable& m) {
  return m.size() >= 1 && Components(m).size() == 1;
}

Mask Closure(const RankTable& m, Mask x) {
  const int r = m.Rank(x);
  Mask out = x;
  for (int e = 0; e < m.size(); ++e) {
    if (m.Rank(x | (Mask{1} << e)) == r) out |= Mask{1} << e;
  }
  return out;
}

bool IsFlat(const RankTable& m, Mask x) { return Closure(m, x) == x; }

bool IsModularPair(const RankTable& m, Mask x, Mask y) {
  return m.Rank(x) + m.Rank(y) == m.Rank(x | y) + m.Rank(x & y);
}

bool IsBispan(const RankTable& m, Mask x, Mask y) {
  return (Closure(m, x) | Closure(m, y)) == m.ground();
}

bool IsConnectedBispan(const RankTable& m, Mask x, Mask y) {
  return IsBispan(m, x, y) && m.Rank(x) + m.Rank(y) > m.FullRank();
}

RankTable Uniform(int k, int n) {
  if (k < 0 || k > n) throw InputError("uniform matroid needs 0 <= k <= n");
  return RankTable::FromFunction(n, [k](Mask x) {
    return std::min(Popcount(x), k);
  });
}

RankTable FreeMatroid(int n) { return Uniform(n, n); }

RankTable LoopMatroid(int n) { return Uniform(0, n); }

OracleMatroid::OracleMatroid(int n, std::function<int(Mask)> rank,
                             std::string provenance)
    : n_(n),
      rank_(std::move(rank)),
      provenance_(std::move(provenance)),
      memo_(std::size_t{1} << n, -1) {
  CheckCap(n >= 0 && n <= kMaxGround, "oracle matroid ground set size");
}

OracleMatroid::OracleMatroid(const OracleMatroid& other)
    : n_(other.n_), rank_(other.rank_), provenance_(other.provenance_) {
  std::lock_guard<std::mutex> lock(other.mu_);
  memo_ = other.memo_;
}

int OracleMatroid::Rank(Mask x) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (memo_[x] >= 0) return memo_[x];
  }
  const int r = rank_(x);
  std::lock_guard<std::mutex> lock(mu_);
  memo_[x] = static_cast<std::int8_t>(r);
  return r;
}

RankTable OracleMatroid::Materialize() const {
  return RankTable::FromFunction(n_, [this](Mask x) { return Rank(x); });
}

}  // namespace mdepth
