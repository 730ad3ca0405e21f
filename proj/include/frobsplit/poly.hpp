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

#ifndef FROBSPLIT_POLY_HPP
#define FROBSPLIT_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobsplit/fp.hpp"
#include "frobsplit/monomial.hpp"

namespace frobsplit {

class Poly;
class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// One nonzero term of a sparse polynomial.
struct Term {
  Monomial mono;
  Fp coeff;
};

/// Coefficient prime, variable registry and default monomial order, bundled
/// as a shared immutable context. Two rings are compatible when they agree
/// on the prime and the registry names; polynomials only combine across
/// compatible rings.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
  static RingPtr create(Prime p, std::vector<std::string> names,
                        MonomialOrder order = MonomialOrder::grevlex());
  static RingPtr create(Prime p, std::shared_ptr<const VarRegistry> vars,
                        MonomialOrder order = MonomialOrder::grevlex());

  Prime prime() const noexcept { return p_; }
  const VarRegistry& vars() const noexcept { return *vars_; }
  const std::shared_ptr<const VarRegistry>& vars_ptr() const noexcept {
    return vars_;
  }
  MonomialOrder order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return vars_->size(); }

  bool compatible(const PolyRing& other) const;

  /// Same prime, registry extended by `extra`, order as given (an
  /// elimination block over the appended variables, typically).
  RingPtr extended(const std::vector<std::string>& extra,
                   MonomialOrder order) const;

  Poly zero() const;
  Poly one() const;
  Poly constant(Fp c) const;
  Poly constant(std::int64_t c) const;
  Poly variable(std::size_t i) const;
  Poly term(Fp c, Monomial m) const;

  /// Parse the text grammar: terms joined by +/-, coefficient-first, '*'
  /// for products, '^' for powers, variable tokens from the registry.
  Poly parse(std::string_view text) const;

private:
  PolyRing(Prime p, std::shared_ptr<const VarRegistry> vars,
           MonomialOrder order)
      : p_(p), vars_(std::move(vars)), order_(order) {}

  Prime p_;
  std::shared_ptr<const VarRegistry> vars_;
  MonomialOrder order_;
};

/// Sparse multivariate polynomial over F_p. Terms are kept sorted strictly
/// descending under the polynomial's monomial order with no zero
/// coefficients, so the representation is canonical per (registry, order).
/// Polynomials are immutable values; all operations are pure.
class Poly {
public:
  static Poly from_terms(RingPtr ring, std::vector<Term> terms,
                         MonomialOrder order);

  const RingPtr& ring() const noexcept { return ring_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Fp constant_value() const;
  /// Total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const noexcept;
  const Term& leading_term() const;

  Poly with_order(MonomialOrder order) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(Fp c) const;
  Poly monic() const;
  /// Power by repeated squaring; k = 0 gives 1.
  Poly pow(std::uint64_t k) const;

  /// this - c * x^m * g, computed by a sorted merge. Workhorse of division.
  Poly minus_term_times(const Monomial& m, Fp c, const Poly& g) const;

  /// Ring homomorphism sending variable i to images.at(i). Every variable
  /// occurring in this polynomial must have an image; images must live in a
  /// common ring over the same prime.
  Poly substitute(const std::map<std::size_t, Poly>& images) const;

  /// Exact evaluation at a point (one coordinate per registry variable).
  Fp evaluate(std::span<const Fp> point) const;

  /// Degree-e Cartier operator (p^e-th root): a term c*x^a survives iff
  /// every exponent is congruent to p^e - 1 mod p^e and maps to
  /// c * x^((a - (p^e-1)*1)/p^e); other terms die. Coefficients pass
  /// through unchanged since c^(1/p^e) = c in F_p.
  Poly cartier(unsigned e) const;

  /// f^(p^e), computed by scaling every exponent by p^e; coefficients are
  /// fixed by Frobenius on F_p.
  Poly frobenius_power(unsigned e) const;

  /// Reinterpret in a target ring containing all of this ring's variables
  /// (matched by name).
  Poly lifted(const RingPtr& target) const;
  /// Inverse of lifted: move to a smaller ring; dropped variables must not
  /// occur.
  Poly restricted(const RingPtr& target) const;

  bool occurs(std::size_t var) const;

  /// Canonical text form: terms descending under the polynomial's order,
  /// balanced coefficient representatives, variables in registry order.
  /// parse(str()) reproduces the polynomial exactly.
  std::string str() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Poly& f);

private:
  Poly(RingPtr ring, MonomialOrder order, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), order_(order),
        terms_(std::move(sorted_terms)) {}

  static void check_rings(const Poly& a, const Poly& b);

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Quotient f/g when g divides f exactly, std::nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

} // namespace frobsplit

#endif
