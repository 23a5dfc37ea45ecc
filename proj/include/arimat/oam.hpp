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

#include "arimat/gp.hpp"
#include "arimat/multiplicity.hpp"

namespace arimat {

struct OrientedArithmeticMatroid {
  Matroid matroid;
  Multiplicity m;
  Chirotope chi;
};

struct OamCheckReport {
  bool support_matches = false;           // support(chi) == bases
  std::vector<Subset> support_mismatch;   // symmetric difference, ascending
  bool chirotope_ok = false;              // B0 and the exchange condition
  std::vector<B2Violation> b2;
  std::vector<DivisibilityViolation> divisibility;
  std::vector<MoleculeViolation> molecules;
  std::vector<GpViolation> gp;

  bool ok() const {
    return support_matches && chirotope_ok && divisibility.empty() &&
           molecules.empty() && gp.empty();
  }
};

/// Runs every axiom of the definition: support = bases, chirotope axioms,
/// arithmetic axioms of (matroid, m), and the GP compatibility.
OamCheckReport check_oam(const OrientedArithmeticMatroid& oam);

OrientedArithmeticMatroid oam_deletion(const OrientedArithmeticMatroid& oam, Subset a);
OrientedArithmeticMatroid oam_contraction(const OrientedArithmeticMatroid& oam, Subset a);
OrientedArithmeticMatroid oam_dual(const OrientedArithmeticMatroid& oam);

}  // namespace arimat
