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

#include "arimat/matroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arimat {

namespace {

void validate_ground(const GroundSet& g) {
  if (g.n < 1 || g.n > kMaxElements)
    throw std::invalid_argument("ground set size must be in [1, " +
                                std::to_string(kMaxElements) + "]");
  if ((g.carrier & ~full_mask(g.n)) != 0)
    throw std::invalid_argument("carrier exceeds the universe");
}

void validate_bases(const std::vector<Subset>& bases, const GroundSet& g) {
  validate_ground(g);
  if (bases.empty()) throw std::invalid_argument("a matroid needs at least one basis");
  int r = set_size(bases.front());
  for (Subset b : bases) {
    if (set_size(b) != r)
      throw std::invalid_argument("bases must all have the same cardinality");
    if ((b & ~g.carrier) != 0)
      throw std::invalid_argument("basis contains elements outside the ground set");
  }
}

}  // namespace

Matroid::Matroid(GroundSet ground, std::vector<Subset> bases)
    : ground_(ground), bases_(std::move(bases)) {
  validate_bases(bases_, ground_);
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_ = set_size(bases_.front());

  std::size_t table_size = std::size_t{1} << ground_.n;
  independent_.assign(table_size, false);
  for (Subset b : bases_)
    for_each_subset_of(b, [&](Subset s) { independent_[s] = true; });
  rank_table_.assign(table_size, 0);
  for (Subset a = 1; a < table_size; ++a) {
    if (independent_[a]) {
      rank_table_[a] = static_cast<std::uint8_t>(set_size(a));
    } else {
      std::uint8_t best = 0;
      for (Subset t = a; t; t &= t - 1)
        best = std::max(best, rank_table_[a & ~(t & (0u - t))]);
      rank_table_[a] = best;
    }
  }
}

bool Matroid::is_independent(Subset a) const { return independent_[a & ground_.carrier]; }

int Matroid::rank_of(Subset a) const { return rank_table_[a & ground_.carrier]; }

Subset Matroid::closure_of(Subset a) const {
  a &= ground_.carrier;
  int r = rank_of(a);
  Subset cl = a;
  for (Subset t = ground_.carrier & ~a; t; t &= t - 1) {
    Subset e = t & (0u - t);
    if (rank_of(a | e) == r) cl |= e;
  }
  return cl;
}

Subset Matroid::lex_least_basis() const {
  Subset best = bases_.front();
  for (Subset b : bases_)
    if (lex_less(b, best)) best = b;
  return best;
}

Subset Matroid::lex_least_max_independent(Subset a) const {
  a &= ground_.carrier;
  Subset f = 0;
  int r = 0;
  for (Subset t = a; t; t &= t - 1) {
    Subset e = t & (0u - t);
    if (rank_of(f | e) > r) {
      f |= e;
      ++r;
    }
  }
  return f;
}

bool check_basis_exchange(const std::vector<Subset>& bases, const GroundSet& ground) {
  validate_bases(bases, ground);
  std::vector<Subset> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  auto is_basis = [&](Subset s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };
  for (Subset b1 : sorted) {
    for (Subset b2 : sorted) {
      for (Subset t = b1 & ~b2; t; t &= t - 1) {
        Subset x = t & (0u - t);
        bool found = false;
        for (Subset u = b2 & ~b1; u && !found; u &= u - 1) {
          Subset y = u & (0u - u);
          found = is_basis((b1 & ~x) | y);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool check_basis_exchange(const Matroid& m) {
  return check_basis_exchange(m.bases(), m.ground());
}

bool is_molecule(const Matroid& m, Subset a, Subset b) {
  if ((a & ~b) != 0 || (b & ~m.carrier()) != 0)
    throw std::invalid_argument("is_molecule requires A <= B <= ground set");
  // (M/A)|B has a unique basis iff every element of B\A is a loop or a coloop
  // of the minor.
  int rank_a = m.rank_of(a);
  int rank_b = m.rank_of(b);
  for (Subset t = b & ~a; t; t &= t - 1) {
    Subset e = t & (0u - t);
    bool loop = m.rank_of(a | e) == rank_a;
    bool coloop = m.rank_of(b & ~e) == rank_b - 1;
    if (!loop && !coloop) return false;
  }
  return true;
}

MoleculeSplit molecule_split(const Matroid& m, Subset a, Subset b) {
  MoleculeSplit s;
  s.free_size = m.rank_of(b) - m.rank_of(a);
  s.torsion_size = set_size(b & ~a) - s.free_size;
  return s;
}

Matroid deletion(const Matroid& m, Subset a) {
  a &= m.carrier();
  Subset rest = m.carrier() & ~a;
  int s = m.rank_of(rest);
  std::vector<Subset> bases;
  for_each_k_subset_of(rest, s, [&](Subset cand) {
    if (m.rank_of(cand) == s) bases.push_back(cand);
  });
  return Matroid({m.universe(), rest}, std::move(bases));
}

Matroid contraction(const Matroid& m, Subset a) {
  a &= m.carrier();
  Subset rest = m.carrier() & ~a;
  Subset f = m.lex_least_max_independent(a);
  int s = m.rank() - m.rank_of(a);
  std::vector<Subset> bases;
  for_each_k_subset_of(rest, s, [&](Subset cand) {
    if (m.is_basis(cand | f)) bases.push_back(cand);
  });
  return Matroid({m.universe(), rest}, std::move(bases));
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(m.carrier() & ~b);
  return Matroid(m.ground(), std::move(bases));
}

BasisGraphView basis_graph(const Matroid& m, std::optional<Subset> b0) {
  BasisGraphView view;
  view.vertices = m.bases();
  int k = static_cast<int>(view.vertices.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (set_size(view.vertices[static_cast<std::size_t>(i)] ^
                   view.vertices[static_cast<std::size_t>(j)]) == 2)
        view.edges.emplace_back(i, j);
  if (b0) {
    if (!m.is_basis(*b0)) throw std::invalid_argument("anchor is not a basis");
    view.anchor = *b0;
    for (Subset b : view.vertices)
      if (set_size(b ^ *b0) == 2) view.bg1.push_back(b);
    view.bg_le1 = view.bg1;
    view.bg_le1.push_back(*b0);
    std::sort(view.bg_le1.begin(), view.bg_le1.end());
  }
  return view;
}

FundamentalCircuitGraph fundamental_circuit_graph(const Matroid& m, Subset b0) {
  if (!m.is_basis(b0)) throw std::invalid_argument("anchor is not a basis");
  FundamentalCircuitGraph g;
  g.b0 = b0;
  g.left = b0;
  g.right = m.carrier() & ~b0;
  for (int i : elements_of(g.left))
    for (int j : elements_of(g.right))
      if (m.is_basis((b0 & ~element_bit(i)) | element_bit(j))) g.edges.emplace_back(i, j);
  return g;
}

std::vector<std::pair<int, int>> coordinatizing_forest(const FundamentalCircuitGraph& g) {
  // Union-find over element labels; edges come pre-sorted lexicographically.
  std::vector<int> parent(kMaxElements + 1);
  for (int i = 0; i <= kMaxElements; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  std::vector<std::pair<int, int>> forest;
  for (auto [i, j] : g.edges) {
    int ri = find(i), rj = find(j);
    if (ri != rj) {
      parent[static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
      forest.emplace_back(i, j);
    }
  }
  return forest;
}

}  // namespace arimat
