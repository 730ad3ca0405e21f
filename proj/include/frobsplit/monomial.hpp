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

#ifndef FROBSPLIT_MONOMIAL_HPP
#define FROBSPLIT_MONOMIAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobsplit/errors.hpp"

namespace frobsplit {

/// Ordered list of variable identifiers. The index order is the tie-break
/// order everywhere (printing, lex comparisons, pair selection). Registries
/// are immutable and shared; extending one yields a fresh registry.
class VarRegistry {
public:
  static std::shared_ptr<const VarRegistry>
  create(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index(const std::string& name) const;

  /// New registry with extra variables appended after the existing ones.
  std::shared_ptr<const VarRegistry>
  extended(const std::vector<std::string>& extra) const;

  bool same_names(const VarRegistry& other) const {
    return names_ == other.names_;
  }

private:
  explicit VarRegistry(std::vector<std::string> names);
  std::vector<std::string> names_;
};

/// Exponent vector, one entry per registered variable. Exponents are
/// machine integers; operations that could overflow check and throw.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Componentwise quotient; requires divides(o) in the other direction,
  /// i.e. o | this.
  Monomial operator/(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

private:
  std::vector<std::uint32_t> exps_;
};

/// Total, multiplicative, well-founded order on monomials of one registry.
/// Three kinds: lex, grevlex, and a block elimination order whose trailing
/// `tail` variables dominate (compared by grevlex among themselves), so that
/// a Groebner basis element with a tail-free leading term is tail-free
/// entirely.
class MonomialOrder {
public:
  enum class Kind : std::uint8_t { lex, grevlex, elim_block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder elimination_block(std::size_t tail) {
    return MonomialOrder(Kind::elim_block, tail);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t tail() const noexcept { return tail_; }

  /// Positive if a > b, negative if a < b, zero if equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  std::string name() const;

  friend bool operator==(MonomialOrder a, MonomialOrder b) {
    return a.kind_ == b.kind_ && a.tail_ == b.tail_;
  }
  friend bool operator!=(MonomialOrder a, MonomialOrder b) {
    return !(a == b);
  }

private:
  MonomialOrder(Kind k, std::size_t tail) : kind_(k), tail_(tail) {}
  Kind kind_;
  std::size_t tail_;
};

} // namespace frobsplit

#endif
