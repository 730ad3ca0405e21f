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

#ifndef FROBSPLIT_REPORT_HPP
#define FROBSPLIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobsplit/groebner.hpp"

namespace frobsplit {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes of the verification harness.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitConfig = 64;
inline constexpr int kExitParse = 65;

struct SuiteConfig {
  unsigned n = 2;
  std::uint32_t p = 3;

  enum class FiberSelect { all, unipotent, list };
  FiberSelect select = FiberSelect::all;
  /// Residue vectors, used when select == list.
  std::vector<std::vector<std::uint32_t>> fibers;

  std::uint64_t seed = 42;
  unsigned trials = 200;
  GroebnerBudget budget;
  unsigned jobs = 1;
  /// Wall-clock timings are the one nondeterministic field; off by default
  /// so that reports are byte-stable for a fixed (config, seed, version).
  bool include_timings = false;
};

struct SuiteResult {
  nlohmann::ordered_json report;
  int exit_code = kExitPass;
};

/// Runs the whole verification pipeline per fiber (splitting identity,
/// well-posedness, compatibilities with the fiber and the minor divisors, a
/// negative control against a different fiber, the derived divisor
/// splitting, dimension/codimension, reducedness sampling) and assembles
/// the JSON report. Fibers run concurrently up to config.jobs; the report
/// is ordered by fiber coordinates. Throws UsageError on bad configs.
SuiteResult run_suite(const SuiteConfig& config);

/// Human-readable rendering of a suite report.
std::string render_text(const nlohmann::ordered_json& report);

} // namespace frobsplit

#endif
