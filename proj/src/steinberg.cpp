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

#include "frobsplit/steinberg.hpp"

namespace frobsplit {

FiberSpec fiber_ideal(const SlnRing& R, std::vector<Fp> a) {
  if (a.size() != R.n() - 1) {
    throw UsageError("fiber_ideal: expected n-1 fiber coordinates");
  }
  std::vector<Poly> gens;
  gens.push_back(R.chart_relation());
  for (unsigned i = 1; i < R.n(); ++i) {
    gens.push_back(R.character(i) - R.ring()->constant(a[i - 1]));
  }
  return FiberSpec{std::move(a), Ideal(R.ring(), std::move(gens))};
}

std::vector<Fp> unipotent_fiber_coordinates(const SlnRing& R) {
  const Prime p = R.prime();
  std::vector<Fp> a;
  for (unsigned i = 1; i < R.n(); ++i) {
    // Integer binomial first (n is tiny), reduced mod p afterwards.
    std::uint64_t b = 1;
    for (unsigned k = 1; k <= i; ++k) {
      b = b * (R.n() - k + 1) / k;
    }
    a.emplace_back(static_cast<std::int64_t>(b), p);
  }
  return a;
}

std::size_t fiber_dimension(FiberSpec& F, const GroebnerBudget& budget) {
  return krull_dimension(F.ideal, budget);
}

std::size_t ambient_codimension(FiberSpec& F, const GroebnerBudget& budget) {
  return F.ideal.ring()->nvars() - fiber_dimension(F, budget);
}

namespace {

Poly random_poly(const RingPtr& ring, Rng& rng, unsigned max_degree,
                 unsigned max_terms) {
  const Prime p = ring->prime();
  Poly acc = ring->zero();
  const unsigned terms = 1 + static_cast<unsigned>(rng.below(max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(ring->nvars());
    const unsigned deg = static_cast<unsigned>(rng.below(max_degree + 1));
    for (unsigned d = 0; d < deg; ++d) {
      m[static_cast<std::size_t>(rng.below(ring->nvars()))] += 1;
    }
    Fp c(static_cast<std::int64_t>(rng.below(p.value())), p);
    acc += ring->term(c, std::move(m));
  }
  return acc;
}

} // namespace

ReducednessReport reducedness_sample(FiberSpec& F, unsigned trials,
                                     std::uint64_t seed,
                                     const GroebnerBudget& budget) {
  ReducednessReport report;
  report.trials = trials;
  report.seed = seed;

  Ideal& J = F.ideal;
  const RingPtr& ring = J.ring();
  J.basis(budget);
  Rng rng(seed);

  for (unsigned t = 0; t < trials; ++t) {
    Poly h = ring->zero();
    if (rng.coin()) {
      // A guaranteed ideal member: random low-degree combination of the
      // generators. Exercises the nontrivial branch of the check.
      for (const Poly& g : J.generators()) {
        if (rng.coin()) h += random_poly(ring, rng, 1, 2) * g;
      }
    } else {
      h = random_poly(ring, rng, 2, 3);
    }
    if (member(h.frobenius_power(1), J, budget)) {
      ++report.frobenius_members;
      if (!member(h, J, budget)) ++report.violations;
    } else {
      ++report.vacuous;
    }
  }

  const auto& gens = J.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      ++report.radical_probes;
      if (!radical_member(gens[i] * gens[j], J, budget)) {
        ++report.radical_failures;
        ++report.violations;
      }
    }
  }
  return report;
}

} // namespace frobsplit
