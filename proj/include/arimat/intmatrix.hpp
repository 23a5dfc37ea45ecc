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

#pragma once

#include <initializer_list>
#include <vector>

#include "arimat/subset.hpp"
#include "arimat/types.hpp"

namespace arimat {

/// Dense row-major matrix of arbitrary-precision integers.  Column e of an
/// input matrix corresponds to ground-set element e.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0));
  }
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return data_[index(i, j)]; }
  const Int& operator()(int i, int j) const { return data_[index(i, j)]; }

  /// Columns selected by a subset bitmask (element e <-> column e-1),
  /// in increasing column order.
  IntMatrix columns(Subset s) const;

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by fraction-free Bareiss elimination.
Int bareiss_determinant(IntMatrix m);

struct SmithDecomposition {
  std::vector<Int> divisors;  // d1 | d2 | ..., nonnegative, zeros trailing
  IntMatrix u;                // unimodular, rows x rows
  IntMatrix v;                // unimodular, cols x cols; u * m * v = diag(divisors)
};

/// Smith normal form with transforms.  Pivoting picks the smallest nonzero
/// absolute value (ties: lowest row, then column) so transforms reproduce.
SmithDecomposition smith_normal_form(const IntMatrix& m);

inline int matrix_rank(const IntMatrix& m) {
  int r = 0;
  for (const Int& d : smith_normal_form(m).divisors)
    if (d != 0) ++r;
  return r;
}

/// Product of the nonzero elementary divisors: the order of the torsion
/// subgroup of Z^rows / (column lattice).
Int torsion_order(const IntMatrix& m);

/// Exact inverse of a matrix with determinant +-1 (adjugate over Z).
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace arimat
