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

#include "frobsplit/poly.hpp"
#include "testutil.hpp"

using namespace frobsplit;

namespace {

// Independent term-by-term oracle: expand, keep the terms whose exponents
// are all congruent to p^e - 1 modulo p^e, and shift them down.
Poly cartier_oracle(const Poly& f, unsigned e) {
  const std::uint64_t p = f.ring()->prime().value();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  Poly acc = f.ring()->zero();
  for (const Term& t : f.terms()) {
    bool keep = true;
    Monomial m(t.mono.size());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] % q != q - 1) {
        keep = false;
        break;
      }
      m[i] = static_cast<std::uint32_t>((t.mono[i] - (q - 1)) / q);
    }
    if (keep) acc += f.ring()->term(t.coeff, m);
  }
  return acc;
}

} // namespace

TEST_CASE("cartier on single monomials") {
  auto R3 = PolyRing::create(Prime(3), {"x", "y"});
  CHECK(R3->parse("x^2*y^2").cartier(1) == R3->one());
  CHECK(R3->parse("x^5*y^2").cartier(1) == R3->parse("x"));

  auto R2 = PolyRing::create(Prime(2), {"x"});
  CHECK(R2->parse("x^3").cartier(2) == R2->one());
  CHECK(R2->parse("x^2").cartier(2).is_zero());

  CHECK(R3->one().cartier(1).is_zero());
  CHECK(R2->one().cartier(1).is_zero());
  CHECK_THROWS_AS(R2->one().cartier(0), UsageError);
}

TEST_CASE("cartier sends the top dual monomial to 1") {
  for (auto pv : {2u, 3u, 5u}) {
    auto R = PolyRing::create(Prime(pv), {"x", "y", "z"});
    for (unsigned e = 1; e <= 2; ++e) {
      std::uint32_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= pv;
      Monomial top(3);
      for (std::size_t i = 0; i < 3; ++i) top[i] = q - 1;
      CHECK(R->term(Fp::one(Prime(pv)), top).cartier(e) == R->one());
    }
  }
}

TEST_CASE("cartier against the expansion-and-filter oracle") {
  auto R = PolyRing::create(Prime(5), {"x"});
  Poly f = (R->parse("x + 1")).pow(4) * R->parse("x^4");
  CHECK(f.cartier(1) == cartier_oracle(f, 1));
  // Spot value: terms x^k with k = 4 mod 5 inside (x+1)^4 * x^4 are k = 4
  // (coefficient 1); so the root is the constant 1.
  CHECK(f.cartier(1) == R->one());

  Rng rng(67);
  for (auto pv : {2u, 3u, 5u}) {
    auto S = PolyRing::create(Prime(pv), {"x", "y"});
    for (int i = 0; i < 100; ++i) {
      Poly g = testutil::random_poly(S, rng, 6, 5);
      for (unsigned e = 1; e <= 2; ++e) {
        CHECK(g.cartier(e) == cartier_oracle(g, e));
      }
    }
  }
}

TEST_CASE("p^-e linearity over the subring of p^e powers") {
  Rng rng(71);
  for (auto pv : {2u, 3u, 5u}) {
    auto R = PolyRing::create(Prime(pv), {"x", "y"});
    for (unsigned e = 1; e <= 2; ++e) {
      for (int i = 0; i < 120; ++i) {
        Poly f = testutil::random_poly(R, rng, 4, 4);
        Poly g = testutil::random_poly(R, rng, 2, 3);
        CHECK((g.frobenius_power(e) * f).cartier(e) == g * f.cartier(e));
      }
    }
  }
}

TEST_CASE("cartier is additive and F_p-linear") {
  Rng rng(73);
  auto R = PolyRing::create(Prime(5), {"x", "y"});
  for (int i = 0; i < 200; ++i) {
    Poly f = testutil::random_poly(R, rng, 5, 4);
    Poly g = testutil::random_poly(R, rng, 5, 4);
    CHECK((f + g).cartier(1) == f.cartier(1) + g.cartier(1));
    Fp lambda = testutil::random_fp(Prime(5), rng);
    // lambda^(p^e) = lambda, so scaling commutes with the root.
    CHECK(f.scaled(lambda.pow(5)).cartier(1) == f.cartier(1).scaled(lambda));
  }
}

TEST_CASE("frobenius power") {
  auto R2 = PolyRing::create(Prime(2), {"x", "y"});
  CHECK(R2->parse("x + y").frobenius_power(1) == R2->parse("x^2 + y^2"));
  auto R3 = PolyRing::create(Prime(3), {"x"});
  CHECK(R3->parse("2*x").frobenius_power(1) == R3->parse("2*x^3"));

  Rng rng(79);
  for (auto pv : {2u, 3u, 5u}) {
    auto R = PolyRing::create(Prime(pv), {"x", "y", "z"});
    for (int i = 0; i < 80; ++i) {
      Poly f = testutil::random_poly(R, rng, 3, 4);
      CHECK(f.frobenius_power(1) == f.pow(pv));
      CHECK(f.frobenius_power(2) == f.pow(pv).pow(pv));
      CHECK(f.frobenius_power(0) == f);
    }
  }
}

TEST_CASE("cartier inverts frobenius twists of the top monomial") {
  // cartier(g^(p^e) * top, e) = g for the dual basis monomial `top`.
  auto R = PolyRing::create(Prime(3), {"x", "y"});
  Rng rng(83);
  Monomial top(2);
  top[0] = top[1] = 2;
  Poly top_poly = R->term(Fp::one(Prime(3)), top);
  for (int i = 0; i < 100; ++i) {
    Poly g = testutil::random_poly(R, rng, 3, 3);
    CHECK((g.frobenius_power(1) * top_poly).cartier(1) == g);
  }
}
