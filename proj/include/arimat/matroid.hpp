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
#include <utility>
#include <vector>

#include "arimat/subset.hpp"

namespace arimat {

// A ground set lives inside a fixed universe {1,...,n}; minors shrink the
// carrier but keep the original element labels, so identities such as
// dual(delete(M,A)) == contract(dual(M),A) hold literally on bitmasks.
struct GroundSet {
  int n = 1;             // universe size, 1 <= n <= kMaxElements
  Subset carrier = 1;    // elements actually present

  bool operator==(const GroundSet&) const = default;
};

/// Matroid given by its set of bases on a ground set.  Construction validates
/// only structure (nonempty, equal cardinality, inside the carrier); the
/// basis-exchange axiom is a separate check so that "not a matroid" stays
/// distinguishable from "malformed input".
class Matroid {
 public:
  Matroid(GroundSet ground, std::vector<Subset> bases);

  const GroundSet& ground() const { return ground_; }
  int universe() const { return ground_.n; }
  Subset carrier() const { return ground_.carrier; }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }  // ascending mask order

  bool is_basis(Subset a) const { return set_size(a) == rank_ && is_independent(a); }
  bool is_independent(Subset a) const;
  int rank_of(Subset a) const;
  Subset closure_of(Subset a) const;

  /// Lexicographically least basis (on increasing element tuples).
  Subset lex_least_basis() const;

  /// Greedy lexicographically-least maximal independent subset of `a`.
  Subset lex_least_max_independent(Subset a) const;

  bool operator==(const Matroid& o) const {
    return ground_ == o.ground_ && bases_ == o.bases_;
  }

 private:
  GroundSet ground_;
  int rank_ = 0;
  std::vector<Subset> bases_;
  std::vector<std::uint8_t> rank_table_;   // indexed by mask over the universe
  std::vector<bool> independent_;
};

/// Basis-exchange axiom: for all B1, B2 and x in B1\B2 there is y in B2\B1
/// with B1\{x} u {y} again a basis.  Throws std::invalid_argument on
/// structurally invalid input (empty set of bases, mixed cardinalities,
/// elements outside the ground set).
bool check_basis_exchange(const std::vector<Subset>& bases, const GroundSet& ground);
bool check_basis_exchange(const Matroid& m);

/// True iff the minor (M/A) restricted to B has exactly one basis.
/// Requires A <= B <= carrier.
bool is_molecule(const Matroid& m, Subset a, Subset b);

/// For a molecule (A,B), B\A splits into the part F independent over A and
/// the part T dependent on A; only the sizes matter downstream.
struct MoleculeSplit {
  int free_size = 0;       // |F| = rk(B) - rk(A)
  int torsion_size = 0;    // |T|
};
MoleculeSplit molecule_split(const Matroid& m, Subset a, Subset b);

Matroid deletion(const Matroid& m, Subset a);
Matroid contraction(const Matroid& m, Subset a);
Matroid dual(const Matroid& m);

struct BasisGraphView {
  std::vector<Subset> vertices;               // bases, ascending mask order
  std::vector<std::pair<int, int>> edges;     // index pairs (i < j) into vertices
  std::optional<Subset> anchor;               // B0, when given
  std::vector<Subset> bg1;                    // bases adjacent to B0
  std::vector<Subset> bg_le1;                 // bg1 plus B0
};
BasisGraphView basis_graph(const Matroid& m, std::optional<Subset> b0 = std::nullopt);

/// Bipartite graph on the elements: i in B0 is joined to j outside B0 iff
/// B0 \ {i} u {j} is a basis.  Its line graph is BG1.
struct FundamentalCircuitGraph {
  Subset b0 = 0;
  Subset left = 0;                            // = B0
  Subset right = 0;                           // = carrier \ B0
  std::vector<std::pair<int, int>> edges;     // (i, j), lexicographic order
};
FundamentalCircuitGraph fundamental_circuit_graph(const Matroid& m, Subset b0);

/// Spanning forest of the fundamental circuit graph, grown by scanning edges
/// in lexicographic order on (i, j) so canonical forms are reproducible.
std::vector<std::pair<int, int>> coordinatizing_forest(const FundamentalCircuitGraph& g);

}  // namespace arimat
