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

#ifndef FROBSPLIT_TESTS_TESTUTIL_HPP
#define FROBSPLIT_TESTS_TESTUTIL_HPP

#include <algorithm>
#include <vector>

#include "frobsplit/groebner.hpp"
#include "frobsplit/rng.hpp"
#include "frobsplit/slgroup.hpp"

namespace testutil {

using namespace frobsplit;

inline Fp fp(std::int64_t v, std::uint32_t p) { return Fp(v, Prime(p)); }

inline Poly random_poly(const RingPtr& ring, Rng& rng, unsigned max_degree,
                        unsigned max_terms) {
  Poly acc = ring->zero();
  const unsigned terms = 1 + static_cast<unsigned>(rng.below(max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(ring->nvars());
    const unsigned deg = static_cast<unsigned>(rng.below(max_degree + 1));
    for (unsigned d = 0; d < deg; ++d) {
      m[static_cast<std::size_t>(rng.below(ring->nvars()))] += 1;
    }
    Fp c(static_cast<std::int64_t>(rng.below(ring->prime().value())),
         ring->prime());
    acc += ring->term(c, std::move(m));
  }
  return acc;
}

inline Fp random_fp(Prime p, Rng& rng) {
  return Fp(static_cast<std::int64_t>(rng.below(p.value())), p);
}

/// Random point of SL_n: random entries, retried until invertible, with one
/// row rescaled to land determinant 1.
inline MatrixPoint random_sl_point(unsigned n, Prime p, Rng& rng) {
  for (;;) {
    std::vector<Fp> e;
    for (unsigned i = 0; i < n * n; ++i) e.push_back(random_fp(p, rng));
    // Determinant by building the full exterior power would be circular
    // here; a try/catch against the validating constructor keeps the
    // helper independent.
    Fp det = Fp::zero(p);
    {
      // Leibniz over permutations; n <= 3 in the tests.
      std::vector<unsigned> perm(n);
      for (unsigned i = 0; i < n; ++i) perm[i] = i;
      do {
        unsigned inversions = 0;
        for (unsigned i = 0; i < n; ++i) {
          for (unsigned j = i + 1; j < n; ++j) {
            if (perm[i] > perm[j]) ++inversions;
          }
        }
        Fp prod = Fp::one(p);
        for (unsigned i = 0; i < n; ++i) prod *= e[i * n + perm[i]];
        det = inversions % 2 == 0 ? det + prod : det - prod;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (det.is_zero()) continue;
    Fp fix = det.inv();
    for (unsigned j = 0; j < n; ++j) e[0 * n + j] *= fix;
    return MatrixPoint(n, std::move(e));
  }
}

/// Hand-rolled S-pair oracle, independent of the pair bookkeeping inside
/// the basis computation: every S-polynomial of the list must reduce to
/// zero by plain division.
inline bool spair_zero_reduction(const std::vector<Poly>& basis,
                                 MonomialOrder order) {
  std::vector<Poly> monic;
  for (const Poly& g : basis) {
    if (!g.is_zero()) monic.push_back(g.with_order(order).monic());
  }
  for (std::size_t j = 1; j < monic.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& mi = monic[i].leading_term().mono;
      const Monomial& mj = monic[j].leading_term().mono;
      Monomial lcm = Monomial::lcm(mi, mj);
      const RingPtr& ring = monic[i].ring();
      Fp one = Fp::one(ring->prime());
      Poly s = ring->term(one, lcm / mi).with_order(order) * monic[i] -
               ring->term(one, lcm / mj).with_order(order) * monic[j];
      if (!reduce_full(s, monic, order).is_zero()) return false;
    }
  }
  return true;
}

} // namespace testutil

#endif
