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

#include "arimat/multiplicity.hpp"

#include <stdexcept>

namespace arimat {

Multiplicity::Multiplicity(GroundSet ground, std::vector<Int> table)
    : ground_(ground), table_(std::move(table)) {
  if (ground_.n < 1 || ground_.n > kMaxElements)
    throw std::invalid_argument("multiplicity universe out of range");
  if (table_.size() != (std::size_t{1} << ground_.n))
    throw std::invalid_argument("multiplicity table must have 2^n entries");
  bool bad = false;
  for_each_subset_of(ground_.carrier, [&](Subset s) {
    if (table_[s] < 1) bad = true;
  });
  if (bad) throw std::invalid_argument("multiplicity values must be positive");
}

Multiplicity Multiplicity::ones(GroundSet ground) {
  return Multiplicity(ground, std::vector<Int>(std::size_t{1} << ground.n, Int(1)));
}

bool Multiplicity::operator==(const Multiplicity& o) const {
  if (ground_ != o.ground_) return false;
  bool eq = true;
  for_each_subset_of(ground_.carrier, [&](Subset s) {
    if (table_[s] != o.table_[s]) eq = false;
  });
  return eq;
}

std::vector<DivisibilityViolation> check_divisibility(const Matroid& m,
                                                      const Multiplicity& mult) {
  std::vector<DivisibilityViolation> out;
  for_each_subset_of(m.carrier(), [&](Subset a) {
    int rank_a = m.rank_of(a);
    for (Subset t = m.carrier() & ~a; t; t &= t - 1) {
      Subset e = t & (0u - t);
      int x = lowest_element(e);
      if (m.rank_of(a | e) == rank_a) {
        if (mult.of(a) % mult.of(a | e) != 0) out.push_back({a, x, 1});
      } else {
        if (mult.of(a | e) % mult.of(a) != 0) out.push_back({a, x, 2});
      }
    }
  });
  return out;
}

Int rho(const ArithmeticMatroid& am, Subset a, Subset b, RhoConvention convention) {
  if (!is_molecule(am.matroid, a, b))
    throw std::invalid_argument("rho requires a molecule (A, B)");
  int pivot;  // parity reference: exponent is (pivot - |S|) mod 2
  if (convention == RhoConvention::verbatim) {
    pivot = set_size(am.matroid.closure_of(a) & b);
  } else {
    pivot = set_size(a) + molecule_split(am.matroid, a, b).free_size;
  }
  Int sum = 0;
  Subset middle = b & ~a;
  for_each_subset_of(middle, [&](Subset s) {
    Subset full = a | s;
    if (((pivot + set_size(full)) & 1) == 0)
      sum += am.m.of(full);
    else
      sum -= am.m.of(full);
  });
  return sum;
}

std::vector<MoleculeViolation> check_molecule_axioms(const Matroid& m,
                                                     const Multiplicity& mult,
                                                     RhoConvention convention) {
  std::vector<MoleculeViolation> out;
  ArithmeticMatroid am{m, mult};
  for_each_subset_of(m.carrier(), [&](Subset b) {
    for_each_subset_of(b, [&](Subset a) {
      if (!is_molecule(m, a, b)) return;
      Subset cl = m.closure_of(a);
      Int lhs = mult.of(a) * mult.of(b);
      Int rhs = mult.of(b & cl) * mult.of((b & ~cl) | a);
      if (lhs != rhs) out.push_back({a, b, 3});
      if (rho(am, a, b, convention) < 0) out.push_back({a, b, 4});
    });
  });
  return out;
}

std::optional<Subset> gcd_property_witness(const ArithmeticMatroid& am) {
  const Matroid& m = am.matroid;
  std::optional<Subset> witness;
  for_each_subset_of(m.carrier(), [&](Subset a) {
    if (witness) return;
    int r = m.rank_of(a);
    Int g = 0;
    for_each_k_subset_of(a, r, [&](Subset s) {
      if (m.is_independent(s)) g = gcd(g, am.m.of(s));
    });
    if (g != am.m.of(a)) witness = a;
  });
  return witness;
}

std::optional<Subset> strong_gcd_witness(const ArithmeticMatroid& am) {
  const Matroid& m = am.matroid;
  std::optional<Subset> witness;
  for_each_subset_of(m.carrier(), [&](Subset a) {
    if (witness) return;
    int r = m.rank_of(a);
    Int g = 0;
    for (Subset b : m.bases())
      if (set_size(b & a) == r) g = gcd(g, am.m.of(b));
    if (g != am.m.of(a)) witness = a;
  });
  return witness;
}

Multiplicity m_deletion(const Multiplicity& m, Subset a) {
  GroundSet g{m.ground().n, m.carrier() & ~a};
  std::vector<Int> table(std::size_t{1} << g.n, Int(1));
  for_each_subset_of(g.carrier, [&](Subset s) { table[s] = m.of(s); });
  return Multiplicity(g, std::move(table));
}

Multiplicity m_contraction(const Multiplicity& m, Subset a) {
  a &= m.carrier();
  GroundSet g{m.ground().n, m.carrier() & ~a};
  std::vector<Int> table(std::size_t{1} << g.n, Int(1));
  for_each_subset_of(g.carrier, [&](Subset s) { table[s] = m.of(a | s); });
  return Multiplicity(g, std::move(table));
}

Multiplicity m_dual(const Multiplicity& m) {
  GroundSet g = m.ground();
  std::vector<Int> table(std::size_t{1} << g.n, Int(1));
  for_each_subset_of(g.carrier, [&](Subset s) { table[s] = m.of(g.carrier & ~s); });
  return Multiplicity(g, std::move(table));
}

}  // namespace arimat
