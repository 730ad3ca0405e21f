/*
   Copyright 2026 The frobsplit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FROBSPLIT_SPLITTING_HPP
#define FROBSPLIT_SPLITTING_HPP

#include <span>
#include <string>
#include <vector>

#include "frobsplit/groebner.hpp"
#include "frobsplit/slgroup.hpp"

namespace frobsplit {

/// A (stable) Frobenius splitting on the hypersurface chart V(chart),
/// presented ambiently: the map it induces on the chart is
///   h  ->  cartier(element * h, degree)   (mod chart),
/// and the defining contract is that the canonical section maps to 1:
///   cartier(element * section, degree) = 1  (mod chart).
/// A plain splitting is the case section = 1. The divisor the splitting is
/// "along" is cut on the chart by `section`.
struct SplittingElement {
  Poly element;
  unsigned degree;
  Poly chart;
  Poly section;
  /// Constant absorbed by verify_splitting's rescaling.
  Fp normalization;
  bool verified;
};

/// Validated constructor; normalization starts at 1 and verified at false.
SplittingElement make_element(Poly element, unsigned degree, Poly chart,
                              Poly section);

/// The fiber splitting element for the point a:
///   prod_i (chi_i - a_i)^(p-1) * prod_i m_i^(p-1) * (det - 1)^(p-1),
/// degree 1, plain section. The (det-1)^(p-1) factor is the hypersurface
/// trivialization of the dual canonical twist, so the whole verification
/// happens in the ambient polynomial ring.
SplittingElement splitting_for_fiber(const SlnRing& R, std::span<const Fp> a);

/// The headline check: cartier(element * section, degree) reduced against
/// (chart) must be a nonzero constant c; the element is rescaled by c^-1
/// (Cartier is F_p-linear, so one rescale lands the identity exactly) and
/// re-checked. Throws NotASplittingError with the offending normal form on
/// zero or non-constant evaluations.
SplittingElement verify_splitting(const SplittingElement& s,
                                  const GroebnerBudget& budget = {});

/// Descent of the ambient map to the chart: membership of the element in
/// the colon ideal (chart^[p^e] : chart).
bool verify_wellposed(const SplittingElement& s,
                      const GroebnerBudget& budget = {});

struct GeneratorCheck {
  std::string generator;
  bool in_bracket;
  std::string residue;
};

struct CompatibilityReport {
  bool pass = false;
  /// Section avoids the radical of the target (divisor support misses the
  /// subscheme); trivially true for plain splittings.
  bool support_ok = true;
  std::vector<GeneratorCheck> generators;

  std::string failing_summary() const;
};

/// Ambient compatibility test of s against a closed subscheme ideal J
/// containing the chart relation: every generator h of J must satisfy
/// element * h in J^[p^e]; plus the support condition on the section.
CompatibilityReport verify_compatible(const SplittingElement& s, Ideal& target,
                                      const GroebnerBudget& budget = {});

/// Reinterpret a splitting whose element factors as element = q * sigma as
/// a stable splitting along div(sigma): the element loses the factor and
/// the section gains it. The contract product is unchanged.
SplittingElement stable_along(const SplittingElement& s, const Poly& sigma);

/// Restriction to a subdivisor: sigma_sub must divide the section exactly;
/// the cofactor moves into the element. The result is re-verified.
SplittingElement derive_along_subdivisor(const SplittingElement& s,
                                         const Poly& sigma_sub,
                                         const GroebnerBudget& budget = {});

/// Composition of stable splittings along D1 and D2 into one along D1 + D2
/// of degree e1 + e2: element g2^(p^e1) * g1 * sigma2^(p^e1 - 1), section
/// sigma1 * sigma2. The contract of the result is re-verified, never
/// assumed.
SplittingElement compose_stable(const SplittingElement& s1,
                                const SplittingElement& s2,
                                const GroebnerBudget& budget = {});

/// From a degree-1 stable splitting along (p-1) D + D', with
/// section = divisor_section^(p-1) * sigma', derive the degree-1 stable
/// splitting along D' that compatibly splits V(divisor_section): the
/// element absorbs divisor_section^(p-1). Post-checks: the contract, the
/// compatibility with (divisor_section, chart), and direct containment
/// probes s'(divisor_section * u) in (divisor_section, chart).
SplittingElement compatibly_split_divisor(const SplittingElement& s,
                                          const Poly& divisor_section,
                                          const GroebnerBudget& budget = {});

} // namespace frobsplit

#endif
