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

#include <cstdint>
#include <span>
#include <vector>

#include "arimat/matroid.hpp"
#include "arimat/subset.hpp"

namespace arimat {

/// Alternating sign function on r-tuples, stored on sorted r-subsets.
/// Alternation is structural: evaluation on an arbitrary tuple sorts it and
/// multiplies by the permutation sign (tuples with repeats evaluate to 0).
class Chirotope {
 public:
  Chirotope(GroundSet ground, int r);

  const GroundSet& ground() const { return ground_; }
  Subset carrier() const { return ground_.carrier; }
  int universe() const { return ground_.n; }
  int rank() const { return r_; }

  int sign_of_set(Subset a) const { return signs_[a & full_mask(ground_.n)]; }
  void set_sign(Subset a, int sign);

  /// Alternating evaluation on an arbitrary r-tuple of elements.
  int eval(std::span<const int> tuple) const;

  /// Sorted r-subsets with nonzero sign, ascending mask order.
  std::vector<Subset> support() const;

  bool operator==(const Chirotope& o) const {
    return ground_ == o.ground_ && r_ == o.r_ && signs_ == o.signs_;
  }

 private:
  GroundSet ground_;
  int r_ = 0;
  std::vector<std::int8_t> signs_;
};

/// Sign picked up when inserting element e into the sorted set `sorted`
/// as the front entry of the tuple: (-1)^(number of elements below e).
inline int insertion_sign(Subset sorted, int e) {
  return (std::popcount(sorted & (element_bit(e) - 1)) & 1) ? -1 : 1;
}

/// Sign of the permutation that merges two disjoint sorted tuples (a, b)
/// into one sorted tuple: parity of the number of pairs x in a, y in b
/// with x > y.
int shuffle_sign(Subset a, Subset b);

/// B0 (not identically zero) and the Grassmann-Pluecker exchange condition:
/// for every x in E^(r-1) and y in E^(r+1), the signed products
/// (-1)^i chi(x_i) chi(y^i) are either all zero or include both signs.
/// Enumeration over strictly increasing tuples suffices by alternation.
bool check_chirotope(const Chirotope& chi);

struct B2Violation {
  Subset x = 0;  // (r-1)-subset
  Subset y = 0;  // (r+1)-subset
};
std::vector<B2Violation> chirotope_violations(const Chirotope& chi, std::size_t limit = 0);

/// chi'(X) = (-1)^(|A n X|) chi(X).
Chirotope reorient(const Chirotope& chi, Subset a);
Chirotope negate(const Chirotope& chi);

/// Matroid whose bases are the support; throws if the support violates the
/// basis-exchange axiom (which would indicate an invalid chirotope).
Matroid chirotope_matroid(const Chirotope& chi);

// Minor operations.  The completing independent list f is the deterministic
// lexicographically-least choice; its entries are appended after the argument
// tuple, so signs are reproducible.
Chirotope chi_deletion(const Chirotope& chi, Subset a);
Chirotope chi_contraction(const Chirotope& chi, Subset a);
Chirotope chi_dual(const Chirotope& chi);

}  // namespace arimat
