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

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "arimat/chirotope.hpp"
#include "arimat/multiplicity.hpp"
#include "arimat/types.hpp"

namespace arimat {

/// Alternating V-valued function on r-tuples, stored on sorted r-subsets.
/// V is an exact scalar (Int for chi*m data, Rat for propagated values).
template <class V>
class AlternatingMap {
 public:
  AlternatingMap(GroundSet ground, int r)
      : ground_(ground), r_(r), values_(std::size_t{1} << ground.n, V(0)) {
    if (r_ < 0 || r_ > set_size(ground_.carrier))
      throw std::invalid_argument("alternating map rank out of range");
  }

  const GroundSet& ground() const { return ground_; }
  Subset carrier() const { return ground_.carrier; }
  int rank() const { return r_; }

  const V& of_set(Subset a) const { return values_[a]; }
  void set(Subset a, V v) {
    if (set_size(a) != r_ || (a & ~ground_.carrier) != 0)
      throw std::invalid_argument("values live on r-subsets of the ground set");
    values_[a] = std::move(v);
  }

  V eval(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != r_)
      throw std::invalid_argument("tuple length must equal the rank");
    Subset s = 0;
    int sign = 1;
    for (int e : tuple) {
      Subset b = element_bit(e);
      if (s & b) return V(0);
      int above = std::popcount(s) - std::popcount(s & (b - 1));
      if (above & 1) sign = -sign;
      s |= b;
    }
    return sign > 0 ? values_[s] : V(-values_[s]);
  }

  bool operator==(const AlternatingMap&) const = default;

 private:
  GroundSet ground_;
  int r_;
  std::vector<V> values_;
};

using GPFunction = AlternatingMap<Rat>;

/// Pointwise product chi * m on r-subsets; the motivating GP-function.
AlternatingMap<Int> chi_m(const Chirotope& chi, const Multiplicity& m);

struct GpViolation {
  Subset x = 0;  // (r-1)-subset
  Subset y = 0;  // (r+1)-subset
  Int sum = 0;
};

/// Grassmann-Pluecker compatibility between chi and m:
///   sum_i (-1)^i chi*m(y_i, x) chi*m(y \ y_i) = 0
/// for all x in E^(r-1), y in E^(r+1).  Strictly increasing tuples suffice by
/// alternation (cross-checked against full enumeration in the tests).
std::vector<GpViolation> check_gp(const Chirotope& chi, const Multiplicity& m,
                                  std::size_t limit = 0);

/// Generalized Leibniz sum
///   sum_{sigma in S_r} sgn(sigma) prod_i f(a_1,...,b_sigma(i),...,a_r)
/// which equals f(a)^(r-1) f(b) for every GP-function f.
template <class V>
V leibniz_rhs(const AlternatingMap<V>& f, std::span<const int> a, std::span<const int> b);

/// Checks the GP identity for f over all sorted (x, y) tuple pairs.
template <class V>
bool is_gp_function(const AlternatingMap<V>& f);

struct Propagation {
  std::optional<GPFunction> f;     // populated on success
  std::optional<Subset> failed_at; // first inconsistent r-subset otherwise
};

/// Extends signs given on B0 and all bases adjacent to B0 to a full
/// GP-function via f(B0)^(r-1) f(X) = leibniz_rhs(f, B0, X): every factor on
/// the right is at distance <= 1 from B0.  Fails at the first r-subset whose
/// propagated value has |f(X)| != m(X) (X a basis) or f(X) != 0 (X not).
Propagation propagate_from_bg1(const Matroid& matroid, const Multiplicity& m,
                               const std::map<Subset, int>& signs_on_bg_le1, Subset b0);

// --- template definitions -------------------------------------------------

template <class V>
V leibniz_rhs(const AlternatingMap<V>& f, std::span<const int> a, std::span<const int> b) {
  int r = f.rank();
  if (static_cast<int>(a.size()) != r || static_cast<int>(b.size()) != r)
    throw std::invalid_argument("leibniz_rhs needs two r-tuples");
  if (r == 0) return V(1);
  std::vector<int> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<int> tuple(a.begin(), a.end());
  V total(0);
  int sign = 1;
  // Heap's algorithm: successive permutations differ by one transposition.
  std::vector<int> c(perm.size(), 0);
  auto add_term = [&]() {
    V prod(1);
    for (int i = 0; i < r && prod != 0; ++i) {
      tuple.assign(a.begin(), a.end());
      tuple[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      prod *= f.eval(tuple);
    }
    total += sign > 0 ? prod : V(-prod);
  };
  add_term();
  std::size_t i = 0;
  while (i < perm.size()) {
    if (c[i] < static_cast<int>(i)) {
      std::swap(perm[(i % 2 == 0) ? 0 : static_cast<std::size_t>(c[i])], perm[i]);
      sign = -sign;
      add_term();
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return total;
}

template <class V>
bool is_gp_function(const AlternatingMap<V>& f) {
  int r = f.rank();
  if (r == 0) return true;
  bool ok = true;
  for_each_k_subset_of(f.carrier(), r - 1, [&](Subset x) {
    if (!ok) return;
    for_each_k_subset_of(f.carrier(), r + 1, [&](Subset y) {
      if (!ok) return;
      V sum(0);
      int i = 0;
      for (Subset t = y; t; t &= t - 1, ++i) {
        Subset e = t & (0u - t);
        if (x & e) continue;
        int elem = lowest_element(e);
        V term = f.of_set(x | e) * f.of_set(y & ~e);
        int s = ((i & 1) ? -1 : 1) * insertion_sign(x, elem);
        sum += s > 0 ? term : V(-term);
      }
      if (sum != 0) ok = false;
    });
  });
  return ok;
}

}  // namespace arimat
