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

#include <bit>
#include <cstdint>
#include <vector>

namespace arimat {

// Subsets of a ground set {1,...,n} as bitmasks: element i <-> bit (i-1).
// n is capped at 20 because multiplicity tables are dense (2^n entries).
using Subset = std::uint32_t;

inline constexpr int kMaxElements = 20;

constexpr Subset full_mask(int n) { return n <= 0 ? 0u : (Subset{1} << n) - 1u; }
constexpr Subset element_bit(int e) { return Subset{1} << (e - 1); }
constexpr bool contains(Subset s, int e) { return (s >> (e - 1)) & 1u; }
constexpr int set_size(Subset s) { return std::popcount(s); }
constexpr int lowest_element(Subset s) { return std::countr_zero(s) + 1; }

/// Elements of `s` in increasing order, 1-based.
inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s) {
    out.push_back(lowest_element(s));
    s &= s - 1;
  }
  return out;
}

inline Subset subset_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= element_bit(e);
  return s;
}

/// Lexicographic order on the increasing element tuples of two equal-size
/// subsets; e.g. {1,4} precedes {2,3}.  The smaller set owns the lowest
/// element on which the two differ.
inline bool lex_less(Subset a, Subset b) {
  Subset d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (0u - d))) != 0;
}

/// Visits every subset of `mask` (including 0 and mask itself).
template <class F>
void for_each_subset_of(Subset mask, F&& f) {
  Subset s = mask;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

/// Visits every size-k subset of `mask`, lexicographic on increasing tuples.
template <class F>
void for_each_k_subset_of(Subset mask, int k, F&& f) {
  std::vector<int> elems = elements_of(mask);
  int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Subset s = 0;
    for (int i : idx) s |= element_bit(elems[static_cast<std::size_t>(i)]);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace arimat
