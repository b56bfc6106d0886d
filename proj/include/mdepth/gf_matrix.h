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

#ifndef MDEPTH_GF_MATRIX_H_
#define MDEPTH_GF_MATRIX_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mdepth/common.h"
#include "mdepth/rank_table.h"

namespace mdepth {

using Vec = std::vector<std::uint8_t>;

// Arithmetic in GF(p) for a prime p <= 13.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int Add(int a, int b) const { return (a + b) % p_; }
  int Sub(int a, int b) const { return (a - b + p_) % p_; }
  int Mul(int a, int b) const { return (a * b) % p_; }
  int Inv(int a) const { return inv_[a]; }

 private:
  int p_;
  std::vector<int> inv_;
};

bool IsSupportedPrime(int p);

// Dense m x n matrix over GF(p), row-major.
class GfMatrix {
 public:
  GfMatrix(int p, int rows, int cols);
  GfMatrix(int p, int rows, int cols, Vec entries);
  static GfMatrix FromRows(int p, const std::vector<std::vector<int>>& rows,
                           int cols = -1);
  static GfMatrix Identity(int p, int k);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int At(int i, int j) const { return entries_[i * cols_ + j]; }
  void Set(int i, int j, int value);
  const Vec& entries() const { return entries_; }
  Vec Row(int i) const;
  Vec Column(int j) const;

  bool operator==(const GfMatrix& other) const = default;

 private:
  int p_;
  int rows_;
  int cols_;
  Vec entries_;
};

struct RrefResult {
  GfMatrix matrix;
  int rank;
  std::vector<int> pivots;
};

RrefResult Rref(const GfMatrix& a);
int SubsetRank(const GfMatrix& a, Mask cols);

// A (.) v: appends v as a column and contracts it. v = 0 returns A.
GfMatrix ContractColumn(const GfMatrix& a, const Vec& v);
// A (+) w: appends w as a last row.
GfMatrix CoextendRow(const GfMatrix& a, const Vec& w);
// Removes column j (0-based).
GfMatrix DeleteColumn(const GfMatrix& a, int j);
// Keeps the columns in `cols`, in increasing order.
GfMatrix SelectColumns(const GfMatrix& a, Mask cols);
// Row-reduced form with zero rows removed.
GfMatrix CanonicalRowSpace(const GfMatrix& a);

// Visits all p^dim vectors, zero first, in lexicographic order with the last
// coordinate varying fastest. Stops early when `visit` returns false.
void ForEachVector(int p, int dim, std::int64_t cap,
                   const std::function<bool(const Vec&)>& visit);
std::vector<Vec> EnumerateVectors(int p, int dim,
                                  std::int64_t cap = std::int64_t{1} << 20);

// Visits U*A for every invertible m x m matrix U over GF(p).
void ForEachRowEquivalentForm(const GfMatrix& a, std::int64_t cap,
                              const std::function<bool(const GfMatrix&)>& visit);
std::int64_t GeneralLinearGroupOrder(int p, int m);

RankTable VectorMatroid(const GfMatrix& a);

// Text format: "gfP m n" then m lines of n space-separated digits.
GfMatrix ParseMatrixText(const std::string& text);
std::string FormatMatrixText(const GfMatrix& a);

}  // namespace mdepth

#endif  // MDEPTH_GF_MATRIX_H_
