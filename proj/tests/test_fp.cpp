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

#include "frobsplit/fp.hpp"
#include "frobsplit/rng.hpp"
#include "testutil.hpp"

using namespace frobsplit;
using testutil::fp;

TEST_CASE("prime certification") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(65521).value() == 65521);
  CHECK(Prime(2147483647).value() == 2147483647);
  CHECK_THROWS_AS(Prime(1), UsageError);
  CHECK_THROWS_AS(Prime(0), UsageError);
  CHECK_THROWS_AS(Prime(4), UsageError);
  CHECK_THROWS_AS(Prime(65535), UsageError);
}

TEST_CASE("field arithmetic basics") {
  CHECK(fp(3, 5) + fp(4, 5) == fp(2, 5));
  CHECK(fp(1, 2) + fp(1, 2) == fp(0, 2));
  CHECK(fp(3, 7) * fp(5, 7) == fp(1, 7));
  CHECK(-fp(0, 5) == fp(0, 5));
  CHECK(-fp(2, 5) == fp(3, 5));
  CHECK(fp(-1, 5) == fp(4, 5));
  CHECK(fp(12, 5) == fp(2, 5));
}

TEST_CASE("inverses") {
  CHECK(fp(2, 5).inv() == fp(3, 5));
  CHECK(fp(2, 3).inv() == fp(2, 3));
  CHECK_THROWS_AS(fp(0, 5).inv(), UsageError);

  // Brute-force scan oracle for p = 13.
  Fp target = fp(5, 13);
  Fp found = fp(0, 13);
  for (std::int64_t x = 1; x < 13; ++x) {
    if (target * fp(x, 13) == fp(1, 13)) found = fp(x, 13);
  }
  CHECK(found == fp(8, 13));
  CHECK(target.inv() == found);
}

TEST_CASE("mixed moduli are rejected") {
  CHECK_THROWS_AS(fp(1, 5) + fp(1, 7), UsageError);
  CHECK_THROWS_AS(fp(1, 5) * fp(1, 7), UsageError);
  CHECK_THROWS_AS((void)(fp(1, 5) == fp(1, 7)), UsageError);
}

TEST_CASE("ring axioms over random triples") {
  Rng rng(20260810);
  const std::uint32_t primes[] = {2, 3, 5, 7, 13, 65521};
  for (std::uint32_t pv : primes) {
    Prime p(pv);
    for (int i = 0; i < 250; ++i) {
      Fp a = testutil::random_fp(p, rng);
      Fp b = testutil::random_fp(p, rng);
      Fp c = testutil::random_fp(p, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Fp::zero(p));
      if (!a.is_zero()) CHECK(a * a.inv() == Fp::one(p));
    }
  }
}

TEST_CASE("frobenius fixes the prime field") {
  Rng rng(7);
  const std::uint32_t primes[] = {2, 3, 5, 7, 13};
  for (std::uint32_t pv : primes) {
    Prime p(pv);
    for (std::int64_t v = 0; v < pv; ++v) {
      CHECK(Fp(v, p).pow(pv) == Fp(v, p));
    }
  }
  Prime big(2147483647);
  for (int i = 0; i < 10; ++i) {
    Fp a = testutil::random_fp(big, rng);
    CHECK(a.pow(big.value()) == a);
  }
}

TEST_CASE("pow conventions") {
  CHECK(fp(0, 5).pow(0) == fp(1, 5));
  CHECK(fp(3, 5).pow(0) == fp(1, 5));
  CHECK(fp(2, 5).pow(4) == fp(1, 5));
  CHECK(fp(2, 5).pow(3) == fp(3, 5));
}
