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

#include <doctest.h>

#include "frobsplit/splitting.hpp"
#include "frobsplit/steinberg.hpp"
#include "testutil.hpp"

using namespace frobsplit;
using testutil::fp;

namespace {

std::vector<Fp> coords(std::initializer_list<std::int64_t> vals,
                       std::uint32_t p) {
  std::vector<Fp> out;
  for (auto v : vals) out.push_back(fp(v, p));
  return out;
}

Poly char_product(const SlnRing& R, std::span<const Fp> a) {
  Poly acc = R.ring()->one();
  for (unsigned i = 1; i < R.n(); ++i) {
    acc *= R.character(i) - R.ring()->constant(a[i - 1]);
  }
  return acc;
}

Poly minor_powers(const SlnRing& R) {
  const std::uint64_t e = R.prime().value() - 1;
  Poly acc = R.ring()->one();
  for (unsigned i = 1; i < R.n(); ++i) acc *= R.corner_minor(i).pow(e);
  return acc;
}

} // namespace

TEST_CASE("fiber splitting elements have the advertised shape") {
  SlnRing R(2, Prime(2));
  SplittingElement s = splitting_for_fiber(R, coords({0}, 2));
  CHECK(s.element ==
        R.character(1) * R.corner_minor(1) * R.chart_relation());
  CHECK(s.degree == 1);
  CHECK(s.section == R.ring()->one());
  CHECK_FALSE(s.verified);

  // Degree bookkeeping: every factor is raised to p-1.
  SlnRing R3(2, Prime(3));
  SplittingElement s3 = splitting_for_fiber(R3, coords({1}, 3));
  CHECK(s3.element.total_degree() == (1 + 1 + 2) * (3 - 1));

  SlnRing S(3, Prime(2));
  SplittingElement t = splitting_for_fiber(S, coords({0, 0}, 2));
  CHECK(t.element == S.character(1) * S.character(2) * S.corner_minor(1) *
                         S.corner_minor(2) * S.chart_relation());
}

TEST_CASE("splitting identity holds across the small sweep") {
  for (auto pv : {2u, 3u, 5u}) {
    SlnRing R(2, Prime(pv));
    for (std::uint32_t av = 0; av < pv; ++av) {
      SplittingElement s =
          verify_splitting(splitting_for_fiber(R, coords({av}, pv)));
      CHECK(s.verified);
      CHECK_FALSE(s.normalization.is_zero());
      // The recorded constant is reported, not pinned; the normalized
      // element must evaluate to exactly 1.
      Ideal chart(R.ring(), {R.chart_relation()});
      CHECK(normal_form((s.element * s.section).cartier(1), chart) ==
            R.ring()->one());
    }
  }
}

TEST_CASE("degenerate elements are rejected") {
  SlnRing R(2, Prime(2));
  SplittingElement bad = make_element(R.ring()->parse("x11"), 1,
                                      R.chart_relation(), R.ring()->one());
  CHECK_THROWS_AS(verify_splitting(bad), NotASplittingError);
  try {
    verify_splitting(bad);
  } catch (const NotASplittingError& e) {
    CHECK(e.normal_form == "0");
  }

  SplittingElement zero = make_element(R.ring()->one(), 1,
                                       R.chart_relation(), R.ring()->one());
  zero.element = R.ring()->zero();
  CHECK_THROWS_AS(verify_splitting(zero), UsageError);
  CHECK_THROWS_AS(make_element(R.ring()->one(), 0, R.chart_relation(),
                               R.ring()->one()),
                  UsageError);
}

TEST_CASE("well-posedness via the colon ideal") {
  SlnRing R(2, Prime(2));
  SplittingElement tau =
      verify_splitting(splitting_for_fiber(R, coords({0}, 2)));
  CHECK(verify_wellposed(tau));

  SplittingElement one = make_element(R.ring()->one(), 1, R.chart_relation(),
                                      R.ring()->one());
  CHECK_FALSE(verify_wellposed(one));

  SplittingElement multiple = make_element(
      R.chart_relation() * R.ring()->parse("x12 + x21^2"), 1,
      R.chart_relation(), R.ring()->one());
  CHECK(verify_wellposed(multiple));

  SlnRing R5(2, Prime(5));
  SplittingElement tau5 =
      verify_splitting(splitting_for_fiber(R5, coords({3}, 5)));
  CHECK(verify_wellposed(tau5));
}

TEST_CASE("compatibility with the fiber and the chart") {
  for (auto pv : {2u, 3u}) {
    SlnRing R(2, Prime(pv));
    for (std::uint32_t av = 0; av < pv; ++av) {
      SplittingElement tau =
          verify_splitting(splitting_for_fiber(R, coords({av}, pv)));
      FiberSpec F = fiber_ideal(R, coords({av}, pv));
      CompatibilityReport rep = verify_compatible(tau, F.ideal);
      CHECK(rep.pass);
      CHECK(rep.support_ok);

      Ideal chart_only(R.ring(), {R.chart_relation()});
      CHECK(verify_compatible(tau, chart_only).pass);
    }
  }
}

TEST_CASE("compatibility fails against a different fiber") {
  for (auto pv : {2u, 3u, 5u}) {
    SlnRing R(2, Prime(pv));
    SplittingElement tau =
        verify_splitting(splitting_for_fiber(R, coords({0}, pv)));
    FiberSpec other = fiber_ideal(R, coords({1}, pv));
    CompatibilityReport rep = verify_compatible(tau, other.ideal);
    CHECK_FALSE(rep.pass);
    bool some_generator_failed = false;
    for (const auto& g : rep.generators) {
      if (!g.in_bracket) some_generator_failed = true;
    }
    CHECK(some_generator_failed);
  }
}

TEST_CASE("compatibility requires a verified element and the chart") {
  SlnRing R(2, Prime(2));
  SplittingElement raw = splitting_for_fiber(R, coords({0}, 2));
  FiberSpec F = fiber_ideal(R, coords({0}, 2));
  CHECK_THROWS_AS(verify_compatible(raw, F.ideal), UsageError);

  SplittingElement tau = verify_splitting(raw);
  Ideal no_chart(R.ring(), {R.character(1)});
  CHECK_THROWS_AS(verify_compatible(tau, no_chart), UsageError);
}

TEST_CASE("minor-divisor ideals are compatibly split") {
  for (auto [n, pv] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    SlnRing R(n, Prime(pv));
    std::vector<Fp> a(n - 1, Fp::zero(Prime(pv)));
    SplittingElement tau = verify_splitting(splitting_for_fiber(R, a));
    for (unsigned i = 1; i < n; ++i) {
      Ideal minor_ideal(R.ring(), {R.corner_minor(i), R.chart_relation()});
      CompatibilityReport rep = verify_compatible(tau, minor_ideal);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("stable reinterpretation and subdivisor restriction") {
  SlnRing R(2, Prime(3));
  auto a = coords({1}, 3);
  SplittingElement tau = verify_splitting(splitting_for_fiber(R, a));

  // Along the full zero divisor of the element: section m_1^(p-1), here
  // m_1^2 = x11^2.
  SplittingElement s = stable_along(tau, R.corner_minor(1).pow(2));
  CHECK(s.section == R.ring()->parse("x11^2"));
  CHECK(s.element * s.section == tau.element);

  // sigma' = sigma is the identity on elements.
  SplittingElement same = derive_along_subdivisor(s, s.section);
  CHECK(same.element == s.element * R.ring()->one());
  CHECK(same.section == s.section);

  // Exact-division bookkeeping one step down: sigma' = m_1^(p-2).
  SplittingElement down = derive_along_subdivisor(s, R.corner_minor(1));
  CHECK(down.section == R.ring()->parse("x11"));
  CHECK(down.element == s.element * R.ring()->parse("x11"));

  // sigma' = 1 recovers a plain splitting.
  SplittingElement plain = derive_along_subdivisor(s, R.ring()->one());
  CHECK(plain.section == R.ring()->one());
  CHECK(plain.element == tau.element);
  CHECK(plain.verified);

  // Non-divisors are usage errors.
  CHECK_THROWS_AS(derive_along_subdivisor(s, R.ring()->parse("x12")),
                  UsageError);
  CHECK_THROWS_AS(stable_along(tau, R.ring()->parse("x21")), UsageError);
}

TEST_CASE("composition adds degrees and re-verifies its contract") {
  SlnRing R(2, Prime(2));
  SplittingElement tau =
      verify_splitting(splitting_for_fiber(R, coords({0}, 2)));

  SplittingElement twice = compose_stable(tau, tau);
  CHECK(twice.degree == 2);
  CHECK(twice.verified);
  CHECK(twice.section == R.ring()->one());

  SplittingElement thrice = compose_stable(twice, tau);
  CHECK(thrice.degree == 3);

  // Stable factors with disjoint sections compose to the product section.
  SplittingElement s_chi =
      stable_along(tau, R.character(1));
  SplittingElement s_m = stable_along(tau, R.corner_minor(1));
  SplittingElement both = compose_stable(s_chi, s_m);
  CHECK(both.degree == 2);
  CHECK(both.section == R.character(1) * R.corner_minor(1));

  SlnRing R5(2, Prime(5));
  SplittingElement tau5 =
      verify_splitting(splitting_for_fiber(R5, coords({2}, 5)));
  SplittingElement five2 = compose_stable(tau5, tau5);
  CHECK(five2.degree == 2);

  CHECK_THROWS_AS(compose_stable(splitting_for_fiber(R, coords({0}, 2)), tau),
                  UsageError);
}

TEST_CASE("composition across n = 3 minor divisors") {
  SlnRing R(3, Prime(2));
  std::vector<Fp> a(2, Fp::zero(Prime(2)));
  SplittingElement tau = verify_splitting(splitting_for_fiber(R, a));
  SplittingElement s1 = stable_along(tau, R.corner_minor(1));
  SplittingElement s2 = stable_along(tau, R.corner_minor(2));
  SplittingElement both = compose_stable(s1, s2);
  CHECK(both.degree == 2);
  CHECK(both.section == R.corner_minor(1) * R.corner_minor(2));
  CHECK(both.verified);
}

TEST_CASE("divisor splitting derivation reproduces the fiber splitting") {
  for (auto pv : {2u, 3u}) {
    SlnRing R(2, Prime(pv));
    const std::uint64_t e = pv - 1;
    for (std::uint32_t av = 0; av < pv; ++av) {
      auto a = coords({av}, pv);
      SplittingElement tau = verify_splitting(splitting_for_fiber(R, a));
      Poly chars = char_product(R, a);
      SplittingElement stable =
          stable_along(tau, chars.pow(e) * minor_powers(R));
      SplittingElement derived = compatibly_split_divisor(stable, chars);
      CHECK(derived.degree == 1);
      CHECK(derived.section == minor_powers(R));

      FiberSpec F = fiber_ideal(R, a);
      CompatibilityReport rep = verify_compatible(derived, F.ideal);
      CHECK(rep.pass);
      CHECK(rep.support_ok);
    }
  }
}

TEST_CASE("divisor splitting degenerate and failure modes") {
  SlnRing R(2, Prime(3));
  auto a = coords({0}, 3);
  SplittingElement tau = verify_splitting(splitting_for_fiber(R, a));

  // D = 0: nothing to peel.
  SplittingElement unchanged = compatibly_split_divisor(tau, R.ring()->one());
  CHECK(unchanged.element == tau.element);

  // Section that does not factor.
  CHECK_THROWS_AS(compatibly_split_divisor(tau, R.ring()->parse("x12")),
                  UsageError);

  // Degree must be 1.
  SplittingElement twice = compose_stable(tau, tau);
  CHECK_THROWS_AS(compatibly_split_divisor(twice, R.character(1)),
                  UsageError);
}

TEST_CASE("dropping a minor factor breaks compatibility with its divisor") {
  for (auto pv : {2u, 3u}) {
    SlnRing R(2, Prime(pv));
    const std::uint64_t e = pv - 1;
    auto a = coords({0}, pv);
    SplittingElement tau = verify_splitting(splitting_for_fiber(R, a));
    Poly chars = char_product(R, a);
    SplittingElement stable =
        stable_along(tau, chars.pow(e) * minor_powers(R));
    // The derived element has no m_1 factor left.
    SplittingElement derived = compatibly_split_divisor(stable, chars);
    Ideal minor_ideal(R.ring(), {R.corner_minor(1), R.chart_relation()});
    CompatibilityReport rep = verify_compatible(derived, minor_ideal);
    CHECK_FALSE(rep.pass);
    bool minor_failed = false;
    for (const auto& g : rep.generators) {
      if (g.generator == R.corner_minor(1).str() && !g.in_bracket) {
        minor_failed = true;
      }
    }
    CHECK(minor_failed);
  }
}

TEST_CASE("normalization absorbs the constant exactly once") {
  SlnRing R(2, Prime(5));
  auto a = coords({1}, 5);
  SplittingElement plain = verify_splitting(splitting_for_fiber(R, a));

  SplittingElement scaled = splitting_for_fiber(R, a);
  scaled.element = scaled.element.scaled(fp(3, 5));
  SplittingElement v = verify_splitting(scaled);
  CHECK(v.normalization == fp(3, 5) * plain.normalization);
  CHECK(v.element == plain.element);
}

TEST_CASE("non-constant evaluations are rejected") {
  SlnRing R(2, Prime(2));
  // cartier of x11^3*x12*x21*x22 is x11, which stays x11 modulo the chart.
  SplittingElement bad = make_element(R.ring()->parse("x11^3*x12*x21*x22"),
                                      1, R.chart_relation(), R.ring()->one());
  CHECK_THROWS_AS(verify_splitting(bad), NotASplittingError);
  try {
    verify_splitting(bad);
  } catch (const NotASplittingError& e) {
    CHECK(e.normal_form == "x11");
  }
}

TEST_CASE("frobenius linearity of the normalization constant") {
  // Scaling the element by lambda^(p^e) scales the evaluation by lambda;
  // this is the identity that justifies the c^-1 rescale.
  SlnRing R(2, Prime(5));
  SplittingElement tau =
      verify_splitting(splitting_for_fiber(R, coords({1}, 5)));
  Ideal chart(R.ring(), {R.chart_relation()});
  for (std::int64_t lv = 1; lv < 5; ++lv) {
    Fp lambda = fp(lv, 5);
    Poly scaled_eval =
        normal_form((tau.element.scaled(lambda.pow(5)) * tau.section)
                        .cartier(1),
                    chart);
    CHECK(scaled_eval == R.ring()->one().scaled(lambda));
  }
}
