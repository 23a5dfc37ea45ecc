// Copyright 2026 The Authors.
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

#include "arimat/intmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace arimat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("ragged matrix initializer");
    for (int v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::columns(Subset s) const {
  IntMatrix out(rows_, set_size(s));
  int k = 0;
  for (int e : elements_of(s)) {
    if (e > cols_) throw std::invalid_argument("column subset exceeds matrix width");
    for (int i = 0; i < rows_; ++i) out(i, k) = (*this)(i, e - 1);
    ++k;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

Int bareiss_determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n && swap_row < 0; ++i)
        if (m(i, k) != 0) swap_row = i;
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;  // exact by the Bareiss identity
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

namespace {

struct Pivot {
  int row = -1;
  int col = -1;
};

Pivot find_pivot(const IntMatrix& m, int from) {
  Pivot best;
  Int best_abs = 0;
  for (int i = from; i < m.rows(); ++i)
    for (int j = from; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Int a = abs_int(m(i, j));
      if (best.row < 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  SmithDecomposition out;
  IntMatrix m = input;
  int rows = m.rows(), cols = m.cols();
  out.u = IntMatrix::identity(rows);
  out.v = IntMatrix::identity(cols);

  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
    for (int j = 0; j < rows; ++j) std::swap(out.u(a, j), out.u(b, j));
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
    for (int i = 0; i < cols; ++i) std::swap(out.v(i, a), out.v(i, b));
  };
  auto add_row = [&](int dst, int src, const Int& c) {  // row dst += c * row src
    for (int j = 0; j < cols; ++j) m(dst, j) += c * m(src, j);
    for (int j = 0; j < rows; ++j) out.u(dst, j) += c * out.u(src, j);
  };
  auto add_col = [&](int dst, int src, const Int& c) {
    for (int i = 0; i < rows; ++i) m(i, dst) += c * m(i, src);
    for (int i = 0; i < cols; ++i) out.v(i, dst) += c * out.v(i, src);
  };
  auto negate_row = [&](int a) {
    for (int j = 0; j < cols; ++j) m(a, j) = -m(a, j);
    for (int j = 0; j < rows; ++j) out.u(a, j) = -out.u(a, j);
  };

  int t = 0;
  int limit = std::min(rows, cols);
  while (t < limit) {
    Pivot p = find_pivot(m, t);
    if (p.row < 0) break;
    swap_rows(t, p.row);
    swap_cols(t, p.col);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Int q = m(i, t) / m(t, t);
        add_row(i, t, -q);
        if (m(i, t) != 0) {  // remainder became the smaller pivot candidate
          swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Int q = m(t, j) / m(t, t);
        add_col(j, t, -q);
        if (m(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
    }
    // Force the divisibility chain: fold any non-divisible entry into the
    // working block and redo this step.
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i)
      for (int j = t + 1; j < cols && !redo; ++j)
        if (m(i, j) % m(t, t) != 0) {
          add_row(t, i, Int(1));
          redo = true;
        }
    if (redo) continue;
    if (m(t, t) < 0) negate_row(t);
    ++t;
  }
  out.divisors.assign(static_cast<std::size_t>(limit), Int(0));
  for (int i = 0; i < t; ++i) out.divisors[static_cast<std::size_t>(i)] = m(i, i);
  return out;
}

Int torsion_order(const IntMatrix& m) {
  Int g = 1;
  for (const Int& d : smith_normal_form(m).divisors)
    if (d != 0) g *= d;
  return g;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  Int det = bareiss_determinant(m);
  if (det != 1 && det != -1)
    throw std::invalid_argument("matrix is not unimodular");
  IntMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int a = 0, ai = 0; a < n; ++a) {
        if (a == i) continue;
        for (int b = 0, bj = 0; b < n; ++b) {
          if (b == j) continue;
          minor(ai, bj) = m(a, b);
          ++bj;
        }
        ++ai;
      }
      Int c = bareiss_determinant(std::move(minor));
      adj(j, i) = ((i + j) & 1) ? Int(-c) : c;
    }
  if (det == -1)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) adj(i, j) = -adj(i, j);
  return adj;
}

}  // namespace arimat
