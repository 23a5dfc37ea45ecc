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

#include <optional>

#include "arimat/intmatrix.hpp"
#include "arimat/oam.hpp"

namespace arimat {

/// Arithmetic matroid of an integer matrix: rank and bases from column
/// subsets, m(A) = order of the torsion subgroup of Z^rows / <columns A>
/// (the product of the nonzero elementary divisors).
ArithmeticMatroid matrix_to_arithmetic(const IntMatrix& m);

/// Full bundle including the sign-of-minors chirotope; requires full row
/// rank (pass a row-reduced matrix otherwise).
OrientedArithmeticMatroid matrix_to_oam(const IntMatrix& m);

/// Vectors v_e = (chi*m(b_1,...,e,...,b_r))_i over the anchor basis
/// B0 = lex-least basis.  Construction asserts the determinant identity
///   det N[A] = chi*m(B0)^(r-1) * chi*m(A)
/// on every r-subset A and throws if it fails (the input was not a valid
/// oriented arithmetic matroid).
struct RationalRealization {
  IntMatrix vectors;  // r x n, integer entries (rational realization scaled into Z)
  Subset anchor = 0;
};
RationalRealization rational_realization(const OrientedArithmeticMatroid& oam);

/// Integer representation inside Lambda x G where Lambda = <v_e> and G is a
/// cyclic group of order m(empty) = m(E); exists under the strong GCD
/// property.  The index [Z^r : Lambda] = m(B0)^(r-1) m(E) is asserted.
struct IntegerRepresentation {
  IntMatrix lattice_basis;  // r x r, columns generate Lambda in Z^r
  IntMatrix coords;         // r x n, coordinates of each v_e in that basis
  Int torsion_order = 1;    // |G|
  Subset anchor = 0;
  Int lattice_index = 1;    // [Z^r : Lambda]
};

/// Throws std::domain_error when the strong GCD property fails (the
/// proposition's precondition), std::runtime_error if a construction
/// invariant breaks.
IntegerRepresentation integer_representation(const OrientedArithmeticMatroid& oam);

struct VerificationResult {
  bool ok = true;
  Subset first_mismatch = 0;

  explicit operator bool() const { return ok; }
};

/// Recomputes the arithmetic matroid of the represented vectors inside
/// Lambda x G (m'(A) = |G| * torsion of Lambda/<v_a : a in A>) and compares
/// rank and multiplicity with `am` on every subset.
VerificationResult verify_representation(const IntegerRepresentation& rep,
                                         const ArithmeticMatroid& am);

}  // namespace arimat
