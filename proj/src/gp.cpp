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

#include "arimat/gp.hpp"

namespace arimat {

AlternatingMap<Int> chi_m(const Chirotope& chi, const Multiplicity& m) {
  AlternatingMap<Int> f(chi.ground(), chi.rank());
  for_each_k_subset_of(chi.carrier(), chi.rank(), [&](Subset s) {
    int sign = chi.sign_of_set(s);
    if (sign != 0) f.set(s, sign > 0 ? m.of(s) : Int(-m.of(s)));
  });
  return f;
}

std::vector<GpViolation> check_gp(const Chirotope& chi, const Multiplicity& m,
                                  std::size_t limit) {
  std::vector<GpViolation> out;
  int r = chi.rank();
  if (r == 0) return out;
  for_each_k_subset_of(chi.carrier(), r - 1, [&](Subset x) {
    if (limit && out.size() >= limit) return;
    for_each_k_subset_of(chi.carrier(), r + 1, [&](Subset y) {
      if (limit && out.size() >= limit) return;
      Int sum = 0;
      int i = 0;
      for (Subset t = y; t; t &= t - 1, ++i) {
        Subset e = t & (0u - t);
        if (x & e) continue;
        int elem = lowest_element(e);
        int left = insertion_sign(x, elem) * chi.sign_of_set(x | e);
        if (left == 0) continue;
        int right = chi.sign_of_set(y & ~e);
        if (right == 0) continue;
        Int term = m.of(x | e) * m.of(y & ~e);
        int s = ((i & 1) ? -1 : 1) * left * right;
        sum += s > 0 ? term : Int(-term);
      }
      if (sum != 0) out.push_back({x, y, sum});
    });
  });
  return out;
}

Propagation propagate_from_bg1(const Matroid& matroid, const Multiplicity& m,
                               const std::map<Subset, int>& signs_on_bg_le1, Subset b0) {
  if (!matroid.is_basis(b0))
    throw std::invalid_argument("propagation anchor must be a basis");
  auto b0_it = signs_on_bg_le1.find(b0);
  if (b0_it == signs_on_bg_le1.end() || b0_it->second == 0)
    throw std::invalid_argument("propagation needs a nonzero sign at the anchor");
  int r = matroid.rank();

  // Seed values: the anchor, its basis-graph neighbors, and known zeros on
  // every other subset at distance <= 1 (non-bases have chi = 0).
  AlternatingMap<Int> seed(matroid.ground(), r);
  Int anchor = b0_it->second > 0 ? m.of(b0) : Int(-m.of(b0));
  seed.set(b0, anchor);
  for (Subset b : matroid.bases()) {
    if (b == b0 || set_size(b ^ b0) != 2) continue;
    auto it = signs_on_bg_le1.find(b);
    if (it == signs_on_bg_le1.end())
      throw std::invalid_argument("propagation needs signs on every neighbor of the anchor");
    if (it->second != 0) seed.set(b, it->second > 0 ? m.of(b) : Int(-m.of(b)));
  }

  Int scale = 1;  // f(B0)^(r-1)
  for (int i = 1; i < r; ++i) scale *= anchor;

  GPFunction f(matroid.ground(), r);
  std::vector<int> a = elements_of(b0);
  Propagation result;
  bool done = false;
  for_each_k_subset_of(matroid.carrier(), r, [&](Subset x) {
    if (done) return;
    std::vector<int> b = elements_of(x);
    Rat value(leibniz_rhs(seed, a, b), scale);
    if (matroid.is_basis(x)) {
      if (denominator(value) != 1 || abs_int(numerator(value)) != m.of(x)) {
        result.failed_at = x;
        done = true;
        return;
      }
    } else if (value != 0) {
      result.failed_at = x;
      done = true;
      return;
    }
    f.set(x, value);
  });
  if (!done) result.f = std::move(f);
  return result;
}

}  // namespace arimat
