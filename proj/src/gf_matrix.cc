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

#include "mdepth/gf_matrix.h"

#include <sstream>
#include <utility>

namespace mdepth {

namespace {

// Echelon basis of a subspace of GF(p)^dim, reduced on insertion.
class SpanBuilder {
 public:
  SpanBuilder(const PrimeField& f, int dim) : f_(f), dim_(dim) {}

  // Returns true when v was independent of the current basis.
  bool Insert(Vec v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const int c = v[pivot_[b]];
      if (c == 0) continue;
      for (int i = 0; i < dim_; ++i) {
        v[i] = f_.Sub(v[i], f_.Mul(c, basis_[b][i]));
      }
    }
    int pivot = -1;
    for (int i = 0; i < dim_; ++i) {
      if (v[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    const int inv = f_.Inv(v[pivot]);
    for (int i = 0; i < dim_; ++i) v[i] = f_.Mul(v[i], inv);
    basis_.push_back(std::move(v));
    pivot_.push_back(pivot);
    return true;
  }

  int size() const { return static_cast<int>(basis_.size()); }

 private:
  const PrimeField& f_;
  int dim_;
  std::vector<Vec> basis_;
  std::vector<int> pivot_;
};

bool IsZero(const Vec& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

bool IsSupportedPrime(int p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

PrimeField::PrimeField(int p) : p_(p), inv_(p, 0) {
  if (!IsSupportedPrime(p)) {
    throw InputError("unsupported field size " + std::to_string(p));
  }
  for (int a = 1; a < p; ++a) {
    for (int b = 1; b < p; ++b) {
      if ((a * b) % p == 1) inv_[a] = b;
    }
  }
}

GfMatrix::GfMatrix(int p, int rows, int cols)
    : GfMatrix(p, rows, cols, Vec(static_cast<std::size_t>(rows) * cols, 0)) {}

GfMatrix::GfMatrix(int p, int rows, int cols, Vec entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (!IsSupportedPrime(p)) {
    throw InputError("unsupported field size " + std::to_string(p));
  }
  if (rows < 0 || cols < 0 ||
      entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw InputError("matrix shape mismatch");
  }
  for (auto& x : entries_) {
    if (x >= p) throw InputError("matrix entry not reduced modulo p");
  }
}

GfMatrix GfMatrix::FromRows(int p, const std::vector<std::vector<int>>& rows,
                            int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Vec entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) {
      throw InputError("ragged matrix rows");
    }
    for (int x : row) {
      entries.push_back(static_cast<std::uint8_t>(((x % p) + p) % p));
    }
  }
  return GfMatrix(p, static_cast<int>(rows.size()), cols, std::move(entries));
}

GfMatrix GfMatrix::Identity(int p, int k) {
  GfMatrix out(p, k, k);
  for (int i = 0; i < k; ++i) out.Set(i, i, 1);
  return out;
}

void GfMatrix::Set(int i, int j, int value) {
  entries_[i * cols_ + j] = static_cast<std::uint8_t>(((value % p_) + p_) % p_);
}

Vec GfMatrix::Row(int i) const {
  return Vec(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

Vec GfMatrix::Column(int j) const {
  Vec out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = At(i, j);
  return out;
}

RrefResult Rref(const GfMatrix& a) {
  const PrimeField f(a.p());
  GfMatrix m = a;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m.At(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int j = 0; j < m.cols(); ++j) {
        const int t = m.At(row, j);
        m.Set(row, j, m.At(sel, j));
        m.Set(sel, j, t);
      }
    }
    const int inv = f.Inv(m.At(row, col));
    for (int j = 0; j < m.cols(); ++j) m.Set(row, j, f.Mul(m.At(row, j), inv));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const int c = m.At(i, col);
      if (c == 0) continue;
      for (int j = 0; j < m.cols(); ++j) {
        m.Set(i, j, f.Sub(m.At(i, j), f.Mul(c, m.At(row, j))));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {m, row, pivots};
}

int SubsetRank(const GfMatrix& a, Mask cols) {
  if (cols & ~FullMask(a.cols())) throw InputError("column mask out of range");
  const PrimeField f(a.p());
  SpanBuilder span(f, a.rows());
  for (int j : Elements(cols)) span.Insert(a.Column(j));
  return span.size();
}

GfMatrix ContractColumn(const GfMatrix& a, const Vec& v) {
  if (static_cast<int>(v.size()) != a.rows()) {
    throw InputError("contract_column: vector length differs from row count");
  }
  if (IsZero(v)) return a;
  const PrimeField f(a.p());
  int pivot = 0;
  while (v[pivot] == 0) ++pivot;
  const int inv = f.Inv(v[pivot]);
  GfMatrix out(a.p(), a.rows() - 1, a.cols());
  int r = 0;
  for (int i = 0; i < a.rows(); ++i) {
    if (i == pivot) continue;
    const int c = f.Mul(v[i], inv);
    for (int j = 0; j < a.cols(); ++j) {
      out.Set(r, j, f.Sub(a.At(i, j), f.Mul(c, a.At(pivot, j))));
    }
    ++r;
  }
  return out;
}

GfMatrix CoextendRow(const GfMatrix& a, const Vec& w) {
  if (static_cast<int>(w.size()) != a.cols()) {
    throw InputError("coextend_row: vector length differs from column count");
  }
  Vec entries = a.entries();
  entries.insert(entries.end(), w.begin(), w.end());
  return GfMatrix(a.p(), a.rows() + 1, a.cols(), std::move(entries));
}

GfMatrix DeleteColumn(const GfMatrix& a, int j) {
  if (j < 0 || j >= a.cols()) throw std::out_of_range("delete_column index");
  return SelectColumns(a, FullMask(a.cols()) & ~(Mask{1} << j));
}

GfMatrix SelectColumns(const GfMatrix& a, Mask cols) {
  const auto keep = Elements(cols & FullMask(a.cols()));
  GfMatrix out(a.p(), a.rows(), static_cast<int>(keep.size()));
  for (int i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < keep.size(); ++k) {
      out.Set(i, static_cast<int>(k), a.At(i, keep[k]));
    }
  }
  return out;
}

GfMatrix CanonicalRowSpace(const GfMatrix& a) {
  const RrefResult r = Rref(a);
  Vec entries(r.matrix.entries().begin(),
              r.matrix.entries().begin() + r.rank * a.cols());
  return GfMatrix(a.p(), r.rank, a.cols(), std::move(entries));
}

void ForEachVector(int p, int dim, std::int64_t cap,
                   const std::function<bool(const Vec&)>& visit) {
  std::int64_t count = 1;
  for (int i = 0; i < dim; ++i) {
    count *= p;
    CheckCap(count <= cap, "enumerate_vectors p^dim");
  }
  Vec v(dim, 0);
  while (true) {
    if (!visit(v)) return;
    int i = dim - 1;
    while (i >= 0 && v[i] == p - 1) {
      v[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++v[i];
  }
}

std::vector<Vec> EnumerateVectors(int p, int dim, std::int64_t cap) {
  std::vector<Vec> out;
  ForEachVector(p, dim, cap, [&](const Vec& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::int64_t GeneralLinearGroupOrder(int p, int m) {
  std::int64_t pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  std::int64_t order = 1;
  std::int64_t pi = 1;
  for (int i = 0; i < m; ++i) {
    order *= pm - pi;
    pi *= p;
  }
  return order;
}

void ForEachRowEquivalentForm(
    const GfMatrix& a, std::int64_t cap,
    const std::function<bool(const GfMatrix&)>& visit) {
  const int m = a.rows();
  CheckCap(GeneralLinearGroupOrder(a.p(), m) <= cap, "row_equivalent_forms");
  const PrimeField f(a.p());
  const std::vector<Vec> vectors = EnumerateVectors(a.p(), m, cap);
  std::vector<Vec> chosen;
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == m) {
      GfMatrix form(a.p(), m, a.cols());
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < a.cols(); ++j) {
          int s = 0;
          for (int k = 0; k < m; ++k) s = f.Add(s, f.Mul(chosen[i][k], a.At(k, j)));
          form.Set(i, j, s);
        }
      }
      if (!visit(form)) stop = true;
      return;
    }
    for (const Vec& u : vectors) {
      SpanBuilder span(f, m);
      for (const Vec& c : chosen) span.Insert(c);
      if (!span.Insert(u)) continue;
      chosen.push_back(u);
      rec();
      chosen.pop_back();
      if (stop) return;
    }
  };
  rec();
}

RankTable VectorMatroid(const GfMatrix& a) {
  const int n = a.cols();
  CheckCap(n <= kMaxGround, "vector_matroid n");
  const PrimeField f(a.p());
  std::vector<Vec> columns;
  for (int j = 0; j < n; ++j) columns.push_back(a.Column(j));
  std::vector<std::uint8_t> ranks(std::size_t{1} << n, 0);
  for (Mask x = 1; x <= FullMask(n); ++x) {
    SpanBuilder span(f, a.rows());
    for (int j : Elements(x)) span.Insert(columns[j]);
    ranks[x] = static_cast<std::uint8_t>(span.size());
  }
  return RankTable(n, std::move(ranks));
}

GfMatrix ParseMatrixText(const std::string& text) {
  std::istringstream in(text);
  std::string field;
  int m = -1;
  int n = -1;
  if (!(in >> field >> m >> n) || field.size() < 3 || field.substr(0, 2) != "gf" ||
      m < 0 || n < 0) {
    throw InputError("matrix text: expected header 'gfP m n'");
  }
  int p = 0;
  try {
    p = std::stoi(field.substr(2));
  } catch (const std::exception&) {
    throw InputError("matrix text: bad field " + field);
  }
  if (!IsSupportedPrime(p)) throw InputError("matrix text: unsupported field");
  Vec entries;
  for (int i = 0; i < m * n; ++i) {
    int x = -1;
    if (!(in >> x) || x < 0 || x >= p) {
      throw InputError("matrix text: bad or missing entry");
    }
    entries.push_back(static_cast<std::uint8_t>(x));
  }
  std::string extra;
  if (in >> extra) throw InputError("matrix text: trailing data");
  return GfMatrix(p, m, n, std::move(entries));
}

std::string FormatMatrixText(const GfMatrix& a) {
  std::ostringstream out;
  out << "gf" << a.p() << ' ' << a.rows() << ' ' << a.cols() << '\n';
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ' ';
      out << a.At(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mdepth
