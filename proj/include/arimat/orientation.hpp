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
#include <vector>

#include "arimat/gp.hpp"

namespace arimat {

/// Sign change of a chirotope: flip the elements of `flips` and optionally
/// the global sign.  chi and -chi describe the same oriented matroid, and a
/// global flip is not always expressible as an element re-orientation (the
/// parity system |A n B| odd for all bases B can be inconsistent), so the
/// witness carries both parts.  Applying a witness twice is the identity.
struct Reorientation {
  Subset flips = 0;
  bool negate = false;

  bool operator==(const Reorientation&) const = default;
};

Chirotope apply(const Reorientation& w, const Chirotope& chi);

struct Canonicalization {
  Chirotope canonical;
  Reorientation witness;  // canonical == apply(witness, input)
};

/// Deterministic representative of the re-orientation class of chi:
/// +1 on the lexicographically least basis B0 of the support and on every
/// basis coming from an edge of the coordinatizing forest.  The witness is
/// the minimal one (global sign preferred positive, then smallest flip mask).
/// Unique on valid orientations; the multiplicity argument documents that
/// precondition but the transform itself only reads the support.
Canonicalization canonicalize(const Chirotope& chi, const Multiplicity& m);

/// Witness with chi2 == apply(witness, chi1), or nullopt when the canonical
/// forms differ -- which for valid orientations of one arithmetic matroid
/// cannot happen, so nullopt signals a precondition violation.
std::optional<Reorientation> equivalent_orientations(const Chirotope& chi1,
                                                     const Chirotope& chi2,
                                                     const Multiplicity& m);

/// Searches for a chirotope making (E, rk, m, chi) an oriented arithmetic
/// matroid: anchor B0 = lex-least basis gets +1, the coordinatizing-forest
/// bases get +1, remaining neighbor signs are enumerated, candidates are
/// completed by propagation and verified in full.  Returns the canonical
/// orientation, or nullopt when the arithmetic matroid is not orientable.
std::optional<Chirotope> find_orientation(const ArithmeticMatroid& am,
                                          std::size_t candidate_cap = std::size_t{1} << 20);

/// All sign patterns on the bases that pass the GP condition and the
/// chirotope axioms.  Exponential in the number of bases; guarded.
std::vector<Chirotope> exhaustive_orientations(const ArithmeticMatroid& am,
                                               int max_bases = 22);

}  // namespace arimat
