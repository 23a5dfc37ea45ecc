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

#include "arimat/chirotope.hpp"

#include <algorithm>
#include <stdexcept>

namespace arimat {

Chirotope::Chirotope(GroundSet ground, int r) : ground_(ground), r_(r) {
  if (ground_.n < 1 || ground_.n > kMaxElements)
    throw std::invalid_argument("chirotope universe out of range");
  if (r_ < 0 || r_ > set_size(ground_.carrier))
    throw std::invalid_argument("chirotope rank out of range");
  signs_.assign(std::size_t{1} << ground_.n, 0);
}

void Chirotope::set_sign(Subset a, int sign) {
  if (set_size(a) != r_ || (a & ~ground_.carrier) != 0)
    throw std::invalid_argument("chirotope signs live on r-subsets of the ground set");
  if (sign < -1 || sign > 1) throw std::invalid_argument("sign must be -1, 0 or 1");
  signs_[a] = static_cast<std::int8_t>(sign);
}

int Chirotope::eval(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != r_)
    throw std::invalid_argument("tuple length must equal the rank");
  Subset s = 0;
  int sign = 1;
  for (int e : tuple) {
    Subset b = element_bit(e);
    if (s & b) return 0;
    // Appending e after the prefix adds one inversion per prior element above it.
    int above = std::popcount(s) - std::popcount(s & (b - 1));
    if (above & 1) sign = -sign;
    s |= b;
  }
  return sign * signs_[s];
}

std::vector<Subset> Chirotope::support() const {
  std::vector<Subset> out;
  for (Subset a = 0; a < signs_.size(); ++a)
    if (signs_[a] != 0) out.push_back(a);
  return out;
}

int shuffle_sign(Subset a, Subset b) {
  int inversions = 0;
  for (int x : elements_of(a)) inversions += std::popcount(b & (element_bit(x) - 1));
  return (inversions & 1) ? -1 : 1;
}

namespace {

// Signed products q_i = (-1)^i chi(y_i, x) chi(y \ y_i) for one (x, y) pair.
// Returns {has_positive, has_negative}.
std::pair<bool, bool> gp_sign_pattern(const Chirotope& chi, Subset x, Subset y) {
  bool pos = false, neg = false;
  int i = 0;
  for (Subset t = y; t; t &= t - 1, ++i) {
    Subset e = t & (0u - t);
    int elem = lowest_element(e);
    if (x & e) continue;  // repeated entry, term vanishes
    int left = insertion_sign(x, elem) * chi.sign_of_set(x | e);
    int right = chi.sign_of_set(y & ~e);
    int q = ((i & 1) ? -1 : 1) * left * right;
    if (q > 0) pos = true;
    if (q < 0) neg = true;
  }
  return {pos, neg};
}

}  // namespace

std::vector<B2Violation> chirotope_violations(const Chirotope& chi, std::size_t limit) {
  std::vector<B2Violation> out;
  int r = chi.rank();
  if (r == 0) return out;
  for_each_k_subset_of(chi.carrier(), r - 1, [&](Subset x) {
    if (limit && out.size() >= limit) return;
    for_each_k_subset_of(chi.carrier(), r + 1, [&](Subset y) {
      if (limit && out.size() >= limit) return;
      auto [pos, neg] = gp_sign_pattern(chi, x, y);
      if (pos != neg) out.push_back({x, y});
    });
  });
  return out;
}

bool check_chirotope(const Chirotope& chi) {
  bool nonzero = false;
  for_each_k_subset_of(chi.carrier(), chi.rank(), [&](Subset a) {
    if (chi.sign_of_set(a) != 0) nonzero = true;
  });
  if (!nonzero) return false;
  return chirotope_violations(chi, 1).empty();
}

Chirotope reorient(const Chirotope& chi, Subset a) {
  Chirotope out(chi.ground(), chi.rank());
  for_each_k_subset_of(chi.carrier(), chi.rank(), [&](Subset s) {
    int sign = chi.sign_of_set(s);
    if (sign != 0) out.set_sign(s, (set_size(s & a) & 1) ? -sign : sign);
  });
  return out;
}

Chirotope negate(const Chirotope& chi) {
  Chirotope out(chi.ground(), chi.rank());
  for_each_k_subset_of(chi.carrier(), chi.rank(), [&](Subset s) {
    int sign = chi.sign_of_set(s);
    if (sign != 0) out.set_sign(s, -sign);
  });
  return out;
}

Matroid chirotope_matroid(const Chirotope& chi) {
  std::vector<Subset> bases = chi.support();
  if (bases.empty()) throw std::invalid_argument("chirotope is identically zero");
  if (!check_basis_exchange(bases, chi.ground()))
    throw std::invalid_argument("chirotope support violates the basis-exchange axiom");
  return Matroid(chi.ground(), std::move(bases));
}

Chirotope chi_deletion(const Chirotope& chi, Subset a) {
  Matroid m = chirotope_matroid(chi);
  a &= m.carrier();
  Subset rest = m.carrier() & ~a;
  int s = m.rank_of(rest);
  // Lexicographically least f <= A completing the deleted ground set to full rank.
  Subset f = 0;
  int reach = s;
  for (Subset t = a; t && reach < m.rank(); t &= t - 1) {
    Subset e = t & (0u - t);
    if (m.rank_of(rest | f | e) > reach) {
      f |= e;
      ++reach;
    }
  }
  Chirotope out({m.universe(), rest}, s);
  for_each_k_subset_of(rest, s, [&](Subset z) {
    int sign = chi.sign_of_set(z | f);
    if (sign != 0) out.set_sign(z, shuffle_sign(z, f) * sign);
  });
  return out;
}

Chirotope chi_contraction(const Chirotope& chi, Subset a) {
  Matroid m = chirotope_matroid(chi);
  a &= m.carrier();
  Subset rest = m.carrier() & ~a;
  Subset f = m.lex_least_max_independent(a);
  int s = m.rank() - m.rank_of(a);
  Chirotope out({m.universe(), rest}, s);
  for_each_k_subset_of(rest, s, [&](Subset z) {
    int sign = chi.sign_of_set(z | f);
    if (sign != 0) out.set_sign(z, shuffle_sign(z, f) * sign);
  });
  return out;
}

Chirotope chi_dual(const Chirotope& chi) {
  GroundSet g = chi.ground();
  int r_star = set_size(g.carrier) - chi.rank();
  Chirotope out(g, r_star);
  for_each_k_subset_of(g.carrier, r_star, [&](Subset z) {
    Subset zc = g.carrier & ~z;
    int sign = chi.sign_of_set(zc);
    if (sign != 0) out.set_sign(z, shuffle_sign(z, zc) * sign);
  });
  return out;
}

}  // namespace arimat
