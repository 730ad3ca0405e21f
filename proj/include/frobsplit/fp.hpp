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

#ifndef FROBSPLIT_FP_HPP
#define FROBSPLIT_FP_HPP

#include <cstdint>
#include <iosfwd>

#include "frobsplit/errors.hpp"

namespace frobsplit {

/// A certified prime modulus. Primality is checked at construction by trial
/// division, which is plenty for word-sized moduli.
class Prime {
public:
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(Prime a, Prime b) noexcept { return a.p_ != b.p_; }

private:
  std::uint32_t p_;
};

/// Element of the prime field F_p, stored as the canonical residue in [0, p).
/// Values are immutable; every operation checks that both operands share the
/// same modulus.
class Fp {
public:
  Fp(std::int64_t value, Prime p);

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }
  Prime prime() const noexcept { return Prime(p_); }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  static Fp zero(Prime p) { return Fp(0, p); }
  static Fp one(Prime p) { return Fp(1, p); }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator-() const;
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  /// Multiplicative inverse; division by zero is a usage error.
  Fp inv() const;
  Fp operator/(Fp o) const { return *this * o.inv(); }

  /// Exponentiation by repeated squaring; e = 0 gives 1 (also for 0^0).
  Fp pow(std::uint64_t e) const;

  friend bool operator==(Fp a, Fp b);
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, Fp a);

private:
  std::uint32_t v_;
  std::uint32_t p_;

  void check_same(Fp o) const;
};

} // namespace frobsplit

#endif
