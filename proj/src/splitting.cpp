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

#include "frobsplit/splitting.hpp"

#include <limits>

namespace frobsplit {

SplittingElement make_element(Poly element, unsigned degree, Poly chart,
                              Poly section) {
  if (degree == 0) throw UsageError("SplittingElement: degree must be >= 1");
  if (chart.is_zero()) throw UsageError("SplittingElement: zero chart");
  if (!element.ring()->compatible(*chart.ring()) ||
      !element.ring()->compatible(*section.ring())) {
    throw UsageError("SplittingElement: parts from incompatible rings");
  }
  Fp one = Fp::one(element.ring()->prime());
  return SplittingElement{std::move(element), degree, std::move(chart),
                          std::move(section), one, false};
}

SplittingElement splitting_for_fiber(const SlnRing& R,
                                     std::span<const Fp> a) {
  if (a.size() != R.n() - 1) {
    throw UsageError("splitting_for_fiber: expected n-1 fiber coordinates");
  }
  const std::uint64_t e = R.prime().value() - 1;
  Poly g = R.ring()->one();
  for (unsigned i = 1; i < R.n(); ++i) {
    g *= (R.character(i) - R.ring()->constant(a[i - 1])).pow(e);
  }
  for (unsigned i = 1; i < R.n(); ++i) {
    g *= R.corner_minor(i).pow(e);
  }
  g *= R.chart_relation().pow(e);
  return make_element(std::move(g), 1, R.chart_relation(), R.ring()->one());
}

namespace {

Poly contract_normal_form(const SplittingElement& s,
                          const GroebnerBudget& budget) {
  Ideal chart_ideal(s.chart.ring(), {s.chart});
  return normal_form((s.element * s.section).cartier(s.degree), chart_ideal,
                     budget);
}

} // namespace

SplittingElement verify_splitting(const SplittingElement& s,
                                  const GroebnerBudget& budget) {
  if (s.element.is_zero()) {
    throw UsageError("verify_splitting: zero element");
  }
  Poly nf = contract_normal_form(s, budget);
  if (nf.is_zero()) {
    throw NotASplittingError(
        "splitting identity failed: evaluation is 0 on the chart", nf.str());
  }
  if (!nf.is_constant()) {
    throw NotASplittingError(
        "splitting identity failed: evaluation is not constant", nf.str());
  }
  const Fp c = nf.constant_value();
  SplittingElement out = s;
  out.element = s.element.scaled(c.inv());
  out.normalization = c;
  out.verified = true;
  // Cartier is F_p-linear, so a single rescale by c^-1 must land exactly 1.
  Poly check = contract_normal_form(out, budget);
  if (!check.is_constant() || !check.constant_value().is_one()) {
    throw NotASplittingError("verify_splitting: rescaling did not normalize",
                             check.str());
  }
  return out;
}

bool verify_wellposed(const SplittingElement& s,
                      const GroebnerBudget& budget) {
  Ideal principal(s.chart.ring(), {s.chart});
  Ideal bracket = bracket_power(principal, s.degree);
  Ideal quotient = colon(bracket, s.chart, budget);
  return member(s.element, quotient, budget);
}

std::string CompatibilityReport::failing_summary() const {
  std::string out;
  if (!support_ok) out += "[support] section vanishes on the subscheme; ";
  for (const auto& g : generators) {
    if (!g.in_bracket) {
      out += g.generator + " -> " + g.residue + "; ";
    }
  }
  return out;
}

CompatibilityReport verify_compatible(const SplittingElement& s, Ideal& target,
                                      const GroebnerBudget& budget) {
  if (!s.verified) {
    throw UsageError("verify_compatible: verify_splitting must pass first");
  }
  if (!member(s.chart, target, budget)) {
    throw UsageError(
        "verify_compatible: target ideal does not contain the chart relation");
  }
  CompatibilityReport report;
  Ideal bracket = bracket_power(target, s.degree);
  bracket.basis(budget);
  bool all_in = true;
  for (const Poly& h : target.generators()) {
    Poly r = normal_form(s.element * h, bracket);
    const bool ok = r.is_zero();
    all_in = all_in && ok;
    report.generators.push_back(GeneratorCheck{h.str(), ok, r.str()});
  }
  if (!(s.section.is_constant() && s.section.constant_value().is_one())) {
    report.support_ok = !radical_member(s.section, target, budget);
  }
  report.pass = all_in && report.support_ok;
  return report;
}

SplittingElement stable_along(const SplittingElement& s, const Poly& sigma) {
  auto q = divide_exact(s.element, sigma);
  if (!q) {
    throw UsageError("stable_along: section does not divide the element");
  }
  SplittingElement out = s;
  out.element = std::move(*q);
  out.section = s.section * sigma;
  return out;
}

SplittingElement derive_along_subdivisor(const SplittingElement& s,
                                         const Poly& sigma_sub,
                                         const GroebnerBudget& budget) {
  if (!s.verified) {
    throw UsageError("derive_along_subdivisor: input not verified");
  }
  auto cofactor = divide_exact(s.section, sigma_sub);
  if (!cofactor) {
    throw UsageError(
        "derive_along_subdivisor: candidate does not divide the section");
  }
  SplittingElement out = s;
  out.element = s.element * *cofactor;
  out.section = sigma_sub;
  SplittingElement checked = verify_splitting(out, budget);
  if (!checked.normalization.is_one()) {
    throw NotASplittingError(
        "derive_along_subdivisor: contract drifted by a constant",
        checked.normalization.is_zero() ? "0" : "const");
  }
  return checked;
}

SplittingElement compose_stable(const SplittingElement& s1,
                                const SplittingElement& s2,
                                const GroebnerBudget& budget) {
  if (!s1.verified || !s2.verified) {
    throw UsageError("compose_stable: both inputs must be verified");
  }
  if (!(s1.chart == s2.chart)) {
    throw UsageError("compose_stable: different charts");
  }
  const std::uint32_t p = s1.element.ring()->prime().value();
  std::uint64_t q1 = 1;
  for (unsigned i = 0; i < s1.degree; ++i) {
    if (q1 > std::numeric_limits<std::uint64_t>::max() / p) {
      throw UsageError("compose_stable: degree tower overflow");
    }
    q1 *= p;
  }

  SplittingElement out = make_element(
      s2.element.frobenius_power(s1.degree) * s1.element *
          s2.section.pow(q1 - 1),
      s1.degree + s2.degree, s1.chart, s1.section * s2.section);

  SplittingElement checked = verify_splitting(out, budget);
  if (!checked.normalization.is_one()) {
    throw NotASplittingError("compose_stable: contract drifted by a constant",
                             "const");
  }
  return checked;
}

SplittingElement compatibly_split_divisor(const SplittingElement& s,
                                          const Poly& divisor_section,
                                          const GroebnerBudget& budget) {
  if (!s.verified) {
    throw UsageError("compatibly_split_divisor: input not verified");
  }
  if (s.degree != 1) {
    throw UsageError("compatibly_split_divisor: degree must be 1");
  }
  if (divisor_section.is_constant()) {
    // Zero divisor: nothing to peel off.
    return s;
  }
  const std::uint64_t e = s.element.ring()->prime().value() - 1;
  const Poly peeled = divisor_section.pow(e);
  auto cofactor = divide_exact(s.section, peeled);
  if (!cofactor) {
    throw UsageError(
        "compatibly_split_divisor: section does not factor through the "
        "divisor");
  }
  SplittingElement out = s;
  out.element = s.element * peeled;
  out.section = std::move(*cofactor);
  SplittingElement checked = verify_splitting(out, budget);
  if (!checked.normalization.is_one()) {
    throw NotASplittingError(
        "compatibly_split_divisor: contract drifted by a constant", "const");
  }

  Ideal divisor_ideal(s.chart.ring(), {divisor_section, s.chart});
  CompatibilityReport rep = verify_compatible(checked, divisor_ideal, budget);
  if (!rep.pass) {
    throw NotASplittingError(
        "compatibly_split_divisor: derived splitting does not compatibly "
        "split the divisor",
        rep.failing_summary());
  }

  // The mechanism behind the derivation, asserted directly: multiples of
  // the divisor section stay inside (divisor_section, chart) under the
  // derived map.
  const RingPtr& ring = s.chart.ring();
  std::vector<Poly> probes{ring->one()};
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    probes.push_back(ring->variable(i));
  }
  for (const Poly& u : probes) {
    Poly image = (checked.element * divisor_section * u).cartier(1);
    if (!normal_form(image, divisor_ideal, budget).is_zero()) {
      throw NotASplittingError(
          "compatibly_split_divisor: containment probe escaped the divisor "
          "ideal",
          image.str());
    }
  }
  return checked;
}

} // namespace frobsplit
