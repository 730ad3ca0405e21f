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

#ifndef FROBSPLIT_GROEBNER_HPP
#define FROBSPLIT_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobsplit/poly.hpp"

namespace frobsplit {

/// Caps on Buchberger's working set and on division work. Exceeding a cap
/// raises BudgetError with the partial counts; there is no silent
/// truncation.
struct GroebnerBudget {
  std::uint64_t max_pairs = 500000;
  std::size_t max_basis = 5000;
  /// Total reducer terms consumed across one normal-form computation.
  /// Sized with a few-hundredfold margin over the heaviest feasible SL_3
  /// configuration, so infeasible ones fail loudly within a minute.
  std::uint64_t max_reduction_work = 500'000'000;
};

/// Generator list plus a cached reduced Groebner basis under a fixed
/// monomial order. The basis is computed on demand; once computed the ideal
/// is safe to share read-only across threads.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Poly> gens);
  Ideal(RingPtr ring, std::vector<Poly> gens, MonomialOrder order);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  MonomialOrder order() const noexcept { return order_; }

  bool has_basis() const noexcept { return basis_.has_value(); }

  /// Reduced Groebner basis, computed and cached on first call. Elements
  /// are monic with pairwise indivisible leading terms, fully autoreduced,
  /// sorted by ascending leading monomial.
  const std::vector<Poly>& basis(const GroebnerBudget& budget = {});
  /// Cached basis only; throws UsageError when none has been computed.
  const std::vector<Poly>& basis() const;

private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  MonomialOrder order_;
  std::optional<std::vector<Poly>> basis_;
};

/// Reduced Groebner basis of the given generators. Deterministic for a
/// fixed generator sequence: degree-graded pair queue with lcm and index
/// tie-breaks, product and chain pair-elimination criteria.
std::vector<Poly> buchberger(const RingPtr& ring, std::vector<Poly> gens,
                             MonomialOrder order,
                             const GroebnerBudget& budget = {});

/// Full normal form of f against a list of monic polynomials sharing one
/// order: no term of the result is divisible by any leading term.
Poly reduce_full(const Poly& f, std::span<const Poly> basis,
                 MonomialOrder order, const GroebnerBudget& budget = {});

Poly normal_form(const Poly& f, Ideal& I, const GroebnerBudget& budget = {});
Poly normal_form(const Poly& f, const Ideal& I);

bool member(const Poly& f, Ideal& I, const GroebnerBudget& budget = {});

/// Frobenius bracket power I^[p^e]: the ideal generated by g^(p^e) over
/// the generators g of I. Independent of the generating set.
Ideal bracket_power(const Ideal& I, unsigned e);

/// Colon ideal (I : f) = { h : h*f in I }, via intersection with the
/// principal ideal (f) by block-order elimination, then exact division.
Ideal colon(const Ideal& I, const Poly& f,
            const GroebnerBudget& budget = {});

/// Rabinowitsch test: f lies in the radical of I iff 1 lies in
/// I + (1 - y*f) for a fresh variable y.
bool radical_member(const Poly& f, const Ideal& I,
                    const GroebnerBudget& budget = {});

/// Krull dimension of V(I): the largest cardinality of a set S of
/// variables such that no leading monomial of the reduced basis is
/// supported inside S. The unit ideal (empty scheme) is a usage error.
std::size_t krull_dimension(Ideal& I, const GroebnerBudget& budget = {});

/// Equality test via cross-reduction of both generator lists.
bool ideal_equal(Ideal& a, Ideal& b, const GroebnerBudget& budget = {});

/// Buchberger criterion check: every S-polynomial of the list reduces to
/// zero. Used by tests as the post-computation certificate.
bool is_groebner_basis(std::span<const Poly> basis, MonomialOrder order);

} // namespace frobsplit

#endif
