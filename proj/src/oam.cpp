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

#include "arimat/oam.hpp"

#include <algorithm>

namespace arimat {

OamCheckReport check_oam(const OrientedArithmeticMatroid& oam) {
  OamCheckReport report;
  std::vector<Subset> support = oam.chi.support();
  std::set_symmetric_difference(support.begin(), support.end(), oam.matroid.bases().begin(),
                                oam.matroid.bases().end(),
                                std::back_inserter(report.support_mismatch));
  report.support_matches =
      report.support_mismatch.empty() && oam.chi.rank() == oam.matroid.rank();
  report.b2 = chirotope_violations(oam.chi);
  report.chirotope_ok = report.b2.empty() && !support.empty();
  report.divisibility = check_divisibility(oam.matroid, oam.m);
  report.molecules = check_molecule_axioms(oam.matroid, oam.m);
  report.gp = check_gp(oam.chi, oam.m);
  return report;
}

OrientedArithmeticMatroid oam_deletion(const OrientedArithmeticMatroid& oam, Subset a) {
  return {deletion(oam.matroid, a), m_deletion(oam.m, a), chi_deletion(oam.chi, a)};
}

OrientedArithmeticMatroid oam_contraction(const OrientedArithmeticMatroid& oam, Subset a) {
  return {contraction(oam.matroid, a), m_contraction(oam.m, a), chi_contraction(oam.chi, a)};
}

OrientedArithmeticMatroid oam_dual(const OrientedArithmeticMatroid& oam) {
  return {dual(oam.matroid), m_dual(oam.m), chi_dual(oam.chi)};
}

}  // namespace arimat
