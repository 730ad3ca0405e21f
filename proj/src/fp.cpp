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

#include "frobsplit/fp.hpp"

#include <ostream>

namespace frobsplit {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

} // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
  if (!is_prime_u32(p)) {
    throw UsageError("Prime: " + std::to_string(p) + " is not prime");
  }
}

Fp::Fp(std::int64_t value, Prime p) : p_(p.value()) {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  v_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same(Fp o) const {
  if (p_ != o.p_) {
    throw UsageError("Fp: mixed moduli " + std::to_string(p_) + " and " +
                     std::to_string(o.p_));
  }
}

Fp Fp::operator+(Fp o) const {
  check_same(o);
  std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
  if (s >= p_) s -= p_;
  return Fp(static_cast<std::int64_t>(s), Prime(p_));
}

Fp Fp::operator-(Fp o) const {
  check_same(o);
  std::uint64_t s = static_cast<std::uint64_t>(v_) + p_ - o.v_;
  if (s >= p_) s -= p_;
  return Fp(static_cast<std::int64_t>(s), Prime(p_));
}

Fp Fp::operator*(Fp o) const {
  check_same(o);
  std::uint64_t s = static_cast<std::uint64_t>(v_) * o.v_ % p_;
  return Fp(static_cast<std::int64_t>(s), Prime(p_));
}

Fp Fp::operator-() const {
  return Fp(v_ == 0 ? 0 : static_cast<std::int64_t>(p_ - v_), Prime(p_));
}

Fp Fp::inv() const {
  if (v_ == 0) throw UsageError("Fp: division by zero");
  // Extended Euclid on (v, p); p prime so gcd is 1.
  std::int64_t a = v_, m = p_;
  std::int64_t x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, Prime(p_));
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp acc = Fp::one(Prime(p_));
  while (e != 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool operator==(Fp a, Fp b) {
  a.check_same(b);
  return a.v_ == b.v_;
}

std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.value(); }

} // namespace frobsplit
