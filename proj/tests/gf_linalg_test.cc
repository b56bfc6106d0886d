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

#include <gtest/gtest.h>

#include <set>

#include "mdepth/common.h"
#include "mdepth/gf_matrix.h"
#include "mdepth/rank_table.h"
#include "oracles.h"

namespace mdepth {
namespace {

TEST(PrimeField, InversesMultiplyToOne) {
  for (int p : {2, 3, 5, 7}) {
    PrimeField f(p);
    for (int a = 1; a < p; ++a) EXPECT_EQ(f.Mul(a, f.Inv(a)), 1) << "p=" << p << " a=" << a;
  }
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_FALSE(IsSupportedPrime(4));
  EXPECT_THROW(GfMatrix(4, 1, 1), InputError);
}

TEST(Rref, RankMatchesSpanOracle) {
  oracle::MatrixGen gen(7);
  for (int t = 0; t < 300; ++t) {
    const int p = std::vector<int>{2, 3, 5}[t % 3];
    const GfMatrix a = gen.Next(p, 3, 5);
    EXPECT_EQ(Rref(a).rank, oracle::SpanRank(a, FullMask(a.cols())));
    const Mask cols = static_cast<Mask>(gen.rng()()) & FullMask(a.cols());
    EXPECT_EQ(SubsetRank(a, cols), oracle::SpanRank(a, cols));
  }
}

TEST(Rref, IsIdempotentAndReduced) {
  oracle::MatrixGen gen(11);
  for (int t = 0; t < 200; ++t) {
    const GfMatrix a = gen.Next(t % 2 ? 3 : 2, 4, 5);
    const RrefResult r = Rref(a);
    EXPECT_EQ(Rref(r.matrix).matrix, r.matrix);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      for (int k = 0; k < r.matrix.rows(); ++k) {
        EXPECT_EQ(r.matrix.At(k, r.pivots[i]), k == static_cast<int>(i) ? 1 : 0);
      }
    }
  }
}

TEST(VectorMatroid, MatchesSpanOracle) {
  oracle::MatrixGen gen(3);
  for (int t = 0; t < 100; ++t) {
    const GfMatrix a = gen.Next(t % 2 ? 2 : 3, 3, 5);
    EXPECT_EQ(VectorMatroid(a), oracle::MatrixMatroid(a));
  }
}

TEST(ContractColumn, RealizesContractionOfAppendedVector) {
  oracle::MatrixGen gen(5);
  for (int t = 0; t < 150; ++t) {
    const GfMatrix a = gen.Next(2 + (t % 2), 3, 4);
    Vec v(a.rows());
    for (auto& x : v) x = static_cast<std::uint8_t>(gen.rng()() % a.p());
    GfMatrix wide(a.p(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) wide.Set(i, j, a.At(i, j));
      wide.Set(i, a.cols(), v[i]);
    }
    const RankTable expect =
        oracle::Sub(oracle::MatrixMatroid(wide), FullMask(a.cols()), Mask{1} << a.cols());
    EXPECT_EQ(VectorMatroid(ContractColumn(a, v)), expect);
  }
}

TEST(CoextendRow, AddsOneRow) {
  const GfMatrix a = GfMatrix::FromRows(2, {{1, 0, 1}});
  const GfMatrix b = CoextendRow(a, Vec{0, 1, 1});
  EXPECT_EQ(b.rows(), 2);
  EXPECT_EQ(Rref(b).rank, 2);
}

TEST(DeleteColumn, IsZeroBased) {
  const GfMatrix a = GfMatrix::FromRows(3, {{1, 2, 0}});
  EXPECT_EQ(DeleteColumn(a, 0), GfMatrix::FromRows(3, {{2, 0}}));
}

TEST(GeneralLinearGroup, Orders) {
  EXPECT_EQ(GeneralLinearGroupOrder(2, 3), 168);
  EXPECT_EQ(GeneralLinearGroupOrder(3, 2), 48);
  EXPECT_EQ(GeneralLinearGroupOrder(2, 1), 1);
}

TEST(RowEquivalentForms, FullRankOrbitHasGroupSize) {
  const GfMatrix a = GfMatrix::Identity(2, 3);
  std::set<Vec> seen;
  ForEachRowEquivalentForm(a, 1 << 20, [&](const GfMatrix& b) {
    EXPECT_EQ(CanonicalRowSpace(b), CanonicalRowSpace(a));
    seen.insert(b.entries());
    return true;
  });
  EXPECT_EQ(seen.size(), 168u);
}

TEST(EnumerateVectors, CountAndCap) {
  EXPECT_EQ(EnumerateVectors(3, 3).size(), 27u);
  EXPECT_THROW(EnumerateVectors(2, 10, 100), CapError);
}

TEST(MatrixText, RoundTrips) {
  oracle::MatrixGen gen(13);
  for (int t = 0; t < 50; ++t) {
    const GfMatrix a = gen.Next(5, 3, 4);
    EXPECT_EQ(ParseMatrixText(FormatMatrixText(a)), a);
  }
  EXPECT_THROW(ParseMatrixText("gf2 1 2\n1"), InputError);
  EXPECT_THROW(ParseMatrixText("gf2 1 1\n2"), InputError);
}

}  // namespace
}  // namespace mdepth
