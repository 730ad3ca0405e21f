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

#ifndef FROBSPLIT_RNG_HPP
#define FROBSPLIT_RNG_HPP

#include <cstdint>
#include <random>

namespace frobsplit {

/// Deterministic RNG for sampling-based checks. Bounded draws go through an
/// explicit modulo instead of std::uniform_int_distribution so that a fixed
/// seed produces the same stream on every platform; reports record the seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform-ish value in [0, bound); bound must be positive. The modulo
  /// bias is irrelevant at the tiny bounds used here.
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

  bool coin() { return (gen_() & 1) != 0; }

private:
  std::mt19937_64 gen_;
};

} // namespace frobsplit

#endif
