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

#ifndef FROBSPLIT_STEINBERG_HPP
#define FROBSPLIT_STEINBERG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "frobsplit/groebner.hpp"
#include "frobsplit/slgroup.hpp"

namespace frobsplit {

/// A fiber of the product-of-characters map, presented ambiently: the ideal
/// (det - 1, chi_1 - a_1, ..., chi_{n-1} - a_{n-1}) in the n^2-variable
/// ring, so exactly n generators including the chart relation.
struct FiberSpec {
  std::vector<Fp> point;
  Ideal ideal;
};

FiberSpec fiber_ideal(const SlnRing& R, std::vector<Fp> a);

/// Coordinates of the fiber through the identity, the unipotent locus:
/// a_i = binom(n, i) mod p.
std::vector<Fp> unipotent_fiber_coordinates(const SlnRing& R);

/// Krull dimension of the fiber; expected n^2 - n for every a.
std::size_t fiber_dimension(FiberSpec& F, const GroebnerBudget& budget = {});

/// n^2 minus the fiber dimension. Equality with the generator count n is
/// the complete-intersection certificate.
std::size_t ambient_codimension(FiberSpec& F,
                                const GroebnerBudget& budget = {});

struct ReducednessReport {
  unsigned trials = 0;
  std::uint64_t seed = 0;
  unsigned violations = 0;
  /// Sampled h whose p-th power landed in the ideal (each must itself lie
  /// in the ideal, or it counts as a violation).
  unsigned frobenius_members = 0;
  /// Sampled h whose p-th power stayed outside; vacuously fine.
  unsigned vacuous = 0;
  unsigned radical_probes = 0;
  unsigned radical_failures = 0;
};

/// Sampling defence for reducedness: pseudorandom h of bounded degree with
/// h^p in the ideal must lie in the ideal; plus targeted radical-membership
/// probes on products of generator pairs. Failures are counted, never
/// thrown.
ReducednessReport reducedness_sample(FiberSpec& F, unsigned trials,
                                     std::uint64_t seed,
                                     const GroebnerBudget& budget = {});

} // namespace frobsplit

#endif
