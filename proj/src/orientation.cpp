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

#include "arimat/orientation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arimat {

namespace {

// GF(2) rows over n+1 variables: bits 0..n-1 are element flips, bit n is the
// global-negation indicator.  Minimizing the packed value therefore prefers
// no negation, then the smallest flip mask.
struct Gf2System {
  int width = 0;                 // number of variable bits (n + 1)
  std::vector<std::uint32_t> rows;
  std::vector<int> rhs;

  void add(std::uint32_t coeffs, int b) {
    rows.push_back(coeffs);
    rhs.push_back(b);
  }
};

struct Gf2Solution {
  bool solvable = false;
  std::uint32_t particular = 0;
  std::vector<std::uint32_t> nullspace;  // reduced, distinct leading bits
};

int highest_bit(std::uint32_t v) { return 31 - std::countl_zero(v); }

Gf2Solution solve(const Gf2System& sys, std::uint32_t variable_mask) {
  Gf2Solution sol;
  std::vector<std::uint32_t> pivot_row(32, 0);
  std::vector<int> pivot_rhs(32, 0);
  std::vector<bool> has_pivot(32, false);
  for (std::size_t k = 0; k < sys.rows.size(); ++k) {
    std::uint32_t row = sys.rows[k];
    int b = sys.rhs[k];
    while (row) {
      int h = highest_bit(row);
      if (!has_pivot[static_cast<std::size_t>(h)]) break;
      row ^= pivot_row[static_cast<std::size_t>(h)];
      b ^= pivot_rhs[static_cast<std::size_t>(h)];
    }
    if (row == 0) {
      if (b) return sol;  // inconsistent
      continue;
    }
    int h = highest_bit(row);
    has_pivot[static_cast<std::size_t>(h)] = true;
    pivot_row[static_cast<std::size_t>(h)] = row;
    pivot_rhs[static_cast<std::size_t>(h)] = b;
  }
  // Back-substitute into reduced echelon form.
  for (int h = 0; h < 32; ++h) {
    if (!has_pivot[static_cast<std::size_t>(h)]) continue;
    for (int g = h + 1; g < 32; ++g) {
      if (!has_pivot[static_cast<std::size_t>(g)]) continue;
      if (pivot_row[static_cast<std::size_t>(g)] & (std::uint32_t{1} << h)) {
        pivot_row[static_cast<std::size_t>(g)] ^= pivot_row[static_cast<std::size_t>(h)];
        pivot_rhs[static_cast<std::size_t>(g)] ^= pivot_rhs[static_cast<std::size_t>(h)];
      }
    }
  }
  sol.solvable = true;
  for (int h = 0; h < 32; ++h)
    if (has_pivot[static_cast<std::size_t>(h)] && pivot_rhs[static_cast<std::size_t>(h)])
      sol.particular |= std::uint32_t{1} << h;
  // Nullspace vectors: one per free variable bit.
  for (int fbit = 0; fbit < sys.width; ++fbit) {
    std::uint32_t fb = std::uint32_t{1} << fbit;
    if (!(variable_mask & fb) || has_pivot[static_cast<std::size_t>(fbit)]) continue;
    std::uint32_t v = fb;
    for (int h = 0; h < 32; ++h)
      if (has_pivot[static_cast<std::size_t>(h)] && (pivot_row[static_cast<std::size_t>(h)] & fb))
        v |= std::uint32_t{1} << h;
    sol.nullspace.push_back(v);
  }
  // Reduce the nullspace basis to distinct leading bits, high to low.
  std::vector<std::uint32_t> reduced;
  std::vector<std::uint32_t> basis(32, 0);
  for (std::uint32_t v : sol.nullspace) {
    while (v) {
      std::uint32_t& slot = basis[static_cast<std::size_t>(highest_bit(v))];
      if (!slot) {
        slot = v;
        break;
      }
      v ^= slot;
    }
  }
  for (int h = 31; h >= 0; --h)
    if (basis[static_cast<std::size_t>(h)]) reduced.push_back(basis[static_cast<std::size_t>(h)]);
  sol.nullspace = std::move(reduced);
  return sol;
}

std::uint32_t minimize_over(std::uint32_t value, const std::vector<std::uint32_t>& nullspace) {
  for (std::uint32_t v : nullspace)
    if (value & (std::uint32_t{1} << highest_bit(v))) value ^= v;
  return value;
}

// Homogeneous stabilizer system of a support: a witness (A, neg) fixes chi
// iff sum_{v in B} x_v + neg = 0 for every basis B.
Gf2Solution support_stabilizer(const std::vector<Subset>& support, const GroundSet& g) {
  Gf2System sys;
  sys.width = g.n + 1;
  std::uint32_t neg_bit = std::uint32_t{1} << g.n;
  for (Subset b : support) sys.add(b | neg_bit, 0);
  return solve(sys, g.carrier | neg_bit);
}

std::uint32_t pack(const Reorientation& w, int n) {
  return w.flips | (w.negate ? (std::uint32_t{1} << n) : 0u);
}

Reorientation unpack(std::uint32_t v, int n) {
  return Reorientation{v & full_mask(n), ((v >> n) & 1u) != 0};
}

}  // namespace

Chirotope apply(const Reorientation& w, const Chirotope& chi) {
  Chirotope out = reorient(chi, w.flips);
  return w.negate ? negate(out) : out;
}

Canonicalization canonicalize(const Chirotope& chi, const Multiplicity& /*m*/) {
  std::vector<Subset> support = chi.support();
  if (support.empty()) throw std::invalid_argument("cannot canonicalize the zero map");
  GroundSet g = chi.ground();

  if (chi.rank() == 0) {
    Reorientation w{0, chi.sign_of_set(0) < 0};
    return {apply(w, chi), w};
  }

  Subset b0 = support.front();
  for (Subset b : support)
    if (lex_less(b, b0)) b0 = b;

  // Edges of the fundamental circuit graph of the support, in lex order.
  std::vector<std::pair<int, int>> edges;
  auto in_support = [&](Subset s) {
    return std::binary_search(support.begin(), support.end(), s);
  };
  for (int i : elements_of(b0))
    for (int j : elements_of(g.carrier & ~b0))
      if (in_support((b0 & ~element_bit(i)) | element_bit(j))) edges.emplace_back(i, j);

  // Potentials x on the elements with x_i + x_j = t_(i,j) along a spanning
  // forest, solved by traversal; roots are the smallest element of each
  // forest component.
  FundamentalCircuitGraph fcg;
  fcg.b0 = b0;
  fcg.left = b0;
  fcg.right = g.carrier & ~b0;
  fcg.edges = edges;
  std::vector<std::pair<int, int>> forest = coordinatizing_forest(fcg);

  int sign_b0 = chi.sign_of_set(b0);
  std::vector<int> x(kMaxElements + 1, -1);  // -1: unassigned
  std::vector<std::vector<std::pair<int, int>>> adj(kMaxElements + 1);  // (other, t)
  for (auto [i, j] : forest) {
    Subset b = (b0 & ~element_bit(i)) | element_bit(j);
    int t = chi.sign_of_set(b) == sign_b0 ? 0 : 1;
    adj[static_cast<std::size_t>(i)].push_back({j, t});
    adj[static_cast<std::size_t>(j)].push_back({i, t});
  }
  for (int root : elements_of(g.carrier)) {
    if (x[static_cast<std::size_t>(root)] != -1) continue;
    x[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, t] : adj[static_cast<std::size_t>(v)]) {
        if (x[static_cast<std::size_t>(u)] != -1) continue;
        x[static_cast<std::size_t>(u)] = x[static_cast<std::size_t>(v)] ^ t;
        stack.push_back(u);
      }
    }
  }
  Subset flips = 0;
  for (int e : elements_of(g.carrier))
    if (x[static_cast<std::size_t>(e)] == 1) flips |= element_bit(e);
  bool neg = ((set_size(flips & b0) & 1) ? -sign_b0 : sign_b0) < 0;

  Gf2Solution stab = support_stabilizer(support, g);
  Reorientation w = unpack(minimize_over(pack({flips, neg}, g.n), stab.nullspace), g.n);
  return {apply(w, chi), w};
}

std::optional<Reorientation> equivalent_orientations(const Chirotope& chi1,
                                                     const Chirotope& chi2,
                                                     const Multiplicity& m) {
  if (chi1.ground() != chi2.ground() || chi1.rank() != chi2.rank()) return std::nullopt;
  if (chi1.support() != chi2.support()) return std::nullopt;
  Canonicalization c1 = canonicalize(chi1, m);
  Canonicalization c2 = canonicalize(chi2, m);
  if (!(c1.canonical == c2.canonical)) return std::nullopt;
  Reorientation composed{c1.witness.flips ^ c2.witness.flips,
                         c1.witness.negate != c2.witness.negate};
  Gf2Solution stab = support_stabilizer(chi1.support(), chi1.ground());
  Reorientation w =
      unpack(minimize_over(pack(composed, chi1.ground().n), stab.nullspace), chi1.ground().n);
  if (!(apply(w, chi1) == chi2)) return std::nullopt;
  return w;
}

std::optional<Chirotope> find_orientation(const ArithmeticMatroid& am,
                                          std::size_t candidate_cap) {
  const Matroid& matroid = am.matroid;
  if (matroid.rank() == 0) {
    Chirotope chi(matroid.ground(), 0);
    chi.set_sign(0, 1);
    return chi;
  }
  Subset b0 = matroid.lex_least_basis();
  FundamentalCircuitGraph g = fundamental_circuit_graph(matroid, b0);
  std::vector<std::pair<int, int>> forest = coordinatizing_forest(g);
  std::vector<std::pair<int, int>> free_edges;
  for (auto e : g.edges)
    if (std::find(forest.begin(), forest.end(), e) == forest.end()) free_edges.push_back(e);

  if (free_edges.size() >= 63 || (std::size_t{1} << free_edges.size()) > candidate_cap)
    throw std::runtime_error("orientation search exceeds the candidate cap");

  auto basis_of_edge = [&](std::pair<int, int> e) {
    return (b0 & ~element_bit(e.first)) | element_bit(e.second);
  };
  std::size_t total = std::size_t{1} << free_edges.size();
  for (std::size_t pattern = 0; pattern < total; ++pattern) {
    std::map<Subset, int> signs;
    signs[b0] = 1;
    for (auto e : forest) signs[basis_of_edge(e)] = 1;
    for (std::size_t k = 0; k < free_edges.size(); ++k)
      signs[basis_of_edge(free_edges[k])] = ((pattern >> k) & 1u) ? -1 : 1;

    Propagation prop = propagate_from_bg1(matroid, am.m, signs, b0);
    if (!prop.f) continue;
    Chirotope chi(matroid.ground(), matroid.rank());
    bool bad = false;
    for_each_k_subset_of(matroid.carrier(), matroid.rank(), [&](Subset s) {
      const Rat& v = prop.f->of_set(s);
      if (v > 0)
        chi.set_sign(s, 1);
      else if (v < 0)
        chi.set_sign(s, -1);
      else if (matroid.is_basis(s))
        bad = true;
    });
    if (bad) continue;
    if (!check_gp(chi, am.m, 1).empty()) continue;
    if (!check_chirotope(chi)) continue;
    return chi;
  }
  return std::nullopt;
}

std::vector<Chirotope> exhaustive_orientations(const ArithmeticMatroid& am, int max_bases) {
  const Matroid& matroid = am.matroid;
  const std::vector<Subset>& bases = matroid.bases();
  if (matroid.rank() == 0) {
    Chirotope chi(matroid.ground(), 0);
    chi.set_sign(0, 1);
    std::vector<Chirotope> both{chi, negate(chi)};
    return both;
  }
  if (static_cast<int>(bases.size()) > max_bases)
    throw std::runtime_error("too many bases for exhaustive orientation enumeration");
  std::vector<Chirotope> found;
  std::size_t total = std::size_t{1} << bases.size();
  for (std::size_t pattern = 0; pattern < total; ++pattern) {
    Chirotope chi(matroid.ground(), matroid.rank());
    for (std::size_t k = 0; k < bases.size(); ++k)
      chi.set_sign(bases[k], ((pattern >> k) & 1u) ? -1 : 1);
    if (!check_gp(chi, am.m, 1).empty()) continue;
    if (!check_chirotope(chi)) continue;
    found.push_back(std::move(chi));
  }
  return found;
}

}  // namespace arimat
