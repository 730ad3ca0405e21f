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

#include "frobsplit/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <optional>
#include <sstream>

#include "frobsplit/splitting.hpp"
#include "frobsplit/steinberg.hpp"

namespace frobsplit {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct FiberOutcome {
  std::vector<std::uint32_t> a;
  ordered_json record;
  bool pass = false;
  bool budget = false;
};

ordered_json to_json(const std::vector<std::uint32_t>& a) {
  ordered_json arr = ordered_json::array();
  for (auto v : a) arr.push_back(v);
  return arr;
}

FiberOutcome run_fiber(const SlnRing& R,
                       const std::vector<std::uint32_t>& a_raw,
                       const std::vector<std::uint32_t>& a_neg_raw,
                       const SuiteConfig& cfg) {
  FiberOutcome out;
  out.a = a_raw;
  ordered_json& rec = out.record;
  rec["n"] = R.n();
  rec["p"] = R.prime().value();
  rec["a"] = to_json(a_raw);

  const Prime p = R.prime();
  std::vector<Fp> a, a_neg;
  for (auto v : a_raw) a.emplace_back(static_cast<std::int64_t>(v), p);
  for (auto v : a_neg_raw) a_neg.emplace_back(static_cast<std::int64_t>(v), p);

  bool all_positive = true;
  bool negatives_ok = true;
  ordered_json timings;
  const auto t_fiber = Clock::now();

  try {
    // Splitting identity and normalization.
    auto t0 = Clock::now();
    std::optional<SplittingElement> tau;
    ordered_json split;
    try {
      tau = verify_splitting(splitting_for_fiber(R, a), cfg.budget);
      split["status"] = "pass";
      split["normalization_c"] = tau->normalization.value();
    } catch (const NotASplittingError& e) {
      all_positive = false;
      split["status"] = "fail";
      split["error"] = e.what();
      split["normal_form"] = e.normal_form;
    }
    if (tau) {
      const bool wellposed = verify_wellposed(*tau, cfg.budget);
      split["wellposed"] = wellposed;
      if (!wellposed) all_positive = false;
    }
    timings["splitting"] = ms_since(t0);
    rec["splitting"] = split;

    FiberSpec fiber = fiber_ideal(R, a);

    if (tau) {
      // Compatibility with the fiber and with each minor divisor.
      t0 = Clock::now();
      ordered_json compat;
      CompatibilityReport fiber_rep =
          verify_compatible(*tau, fiber.ideal, cfg.budget);
      compat["fiber"] = fiber_rep.pass ? "pass" : "fail";
      compat["support_ok"] = fiber_rep.support_ok;
      if (!fiber_rep.pass) {
        all_positive = false;
        compat["fiber_detail"] = fiber_rep.failing_summary();
      }
      ordered_json minors = ordered_json::array();
      for (unsigned i = 1; i < R.n(); ++i) {
        Ideal minor_ideal(R.ring(),
                          {R.corner_minor(i), R.chart_relation()});
        CompatibilityReport rep =
            verify_compatible(*tau, minor_ideal, cfg.budget);
        minors.push_back(rep.pass ? "pass" : "fail");
        if (!rep.pass) all_positive = false;
      }
      compat["minors"] = minors;
      timings["compatibility"] = ms_since(t0);
      rec["compatibility"] = compat;

      // Negative control: the same element must fail against a different
      // fiber; a checker that never fails verifies nothing.
      t0 = Clock::now();
      FiberSpec other = fiber_ideal(R, a_neg);
      CompatibilityReport neg =
          verify_compatible(*tau, other.ideal, cfg.budget);
      negatives_ok = !neg.pass;
      ordered_json negative;
      negative["a"] = to_json(a_neg_raw);
      negative["failed_as_expected"] = !neg.pass;
      timings["negative_control"] = ms_since(t0);
      rec["negative_control"] = negative;

      // Derived degree-1 stable splitting along the minor divisors,
      // compatible with the fiber.
      t0 = Clock::now();
      ordered_json divisor;
      try {
        const std::uint64_t e = p.value() - 1;
        Poly char_product = R.ring()->one();
        for (unsigned i = 1; i < R.n(); ++i) {
          char_product *= R.character(i) - R.ring()->constant(a[i - 1]);
        }
        Poly minor_powers = R.ring()->one();
        for (unsigned i = 1; i < R.n(); ++i) {
          minor_powers *= R.corner_minor(i).pow(e);
        }
        SplittingElement stable =
            stable_along(*tau, char_product.pow(e) * minor_powers);
        SplittingElement derived =
            compatibly_split_divisor(stable, char_product, cfg.budget);
        divisor["status"] = "pass";
        CompatibilityReport rep =
            verify_compatible(derived, fiber.ideal, cfg.budget);
        divisor["compatible_fiber"] = rep.pass ? "pass" : "fail";
        divisor["support_ok"] = rep.support_ok;
        if (!rep.pass) all_positive = false;
      } catch (const NotASplittingError& e) {
        all_positive = false;
        divisor["status"] = "fail";
        divisor["error"] = e.what();
      }
      timings["divisor_splitting"] = ms_since(t0);
      rec["divisor_splitting"] = divisor;
    }

    // Fiber geometry: dimension, codimension, complete-intersection
    // certificate.
    t0 = Clock::now();
    ordered_json geometry;
    const std::size_t dim = fiber_dimension(fiber, cfg.budget);
    const std::size_t codim = R.ring()->nvars() - dim;
    geometry["dim"] = dim;
    geometry["ambient_codim"] = codim;
    ordered_json gens = ordered_json::array();
    for (const Poly& g : fiber.ideal.generators()) gens.push_back(g.str());
    geometry["generators"] = gens;
    const bool ci =
        codim == fiber.ideal.generators().size() && codim == R.n();
    geometry["complete_intersection"] = ci;
    if (!ci || dim != static_cast<std::size_t>(R.n()) * R.n() - R.n()) {
      all_positive = false;
    }
    timings["geometry"] = ms_since(t0);
    rec["fiber_geometry"] = geometry;

    // Reducedness sampling.
    t0 = Clock::now();
    ReducednessReport red =
        reducedness_sample(fiber, cfg.trials, cfg.seed, cfg.budget);
    ordered_json reducedness;
    reducedness["trials"] = red.trials;
    reducedness["seed"] = red.seed;
    reducedness["violations"] = red.violations;
    reducedness["frobenius_members"] = red.frobenius_members;
    reducedness["vacuous"] = red.vacuous;
    reducedness["radical_probes"] = red.radical_probes;
    reducedness["radical_failures"] = red.radical_failures;
    if (red.violations != 0) all_positive = false;
    timings["reducedness"] = ms_since(t0);
    rec["reducedness"] = reducedness;
  } catch (const BudgetError& e) {
    out.budget = true;
    rec["error"] = std::string("budget: ") + e.what();
    rec["budget"] = {{"pairs_done", e.pairs_done},
                     {"basis_size", e.basis_size}};
  } catch (const std::exception& e) {
    all_positive = false;
    rec["error"] = e.what();
  }

  timings["total"] = ms_since(t_fiber);
  if (cfg.include_timings) rec["timings_ms"] = timings;

  out.pass = all_positive && negatives_ok && !out.budget;
  rec["status"] = out.budget ? "budget" : (out.pass ? "pass" : "fail");
  return out;
}

std::vector<std::vector<std::uint32_t>> fiber_list(const SuiteConfig& cfg,
                                                   const SlnRing& R) {
  const unsigned l = cfg.n - 1;
  std::vector<std::vector<std::uint32_t>> fibers;
  switch (cfg.select) {
  case SuiteConfig::FiberSelect::all: {
    double size = 1;
    for (unsigned i = 0; i < l; ++i) size *= cfg.p;
    if (size > 25) {
      throw UsageError("full sweep too large: p^(n-1) must be at most 25");
    }
    std::vector<std::uint32_t> cur(l, 0);
    for (;;) {
      fibers.push_back(cur);
      unsigned i = l;
      while (i > 0) {
        --i;
        if (++cur[i] < cfg.p) break;
        cur[i] = 0;
        if (i == 0) return fibers;
      }
      if (l == 0) break;
    }
    break;
  }
  case SuiteConfig::FiberSelect::unipotent: {
    std::vector<std::uint32_t> a;
    for (Fp v : unipotent_fiber_coordinates(R)) a.push_back(v.value());
    fibers.push_back(std::move(a));
    break;
  }
  case SuiteConfig::FiberSelect::list: {
    if (cfg.fibers.empty()) {
      throw UsageError("fiber list is empty");
    }
    for (const auto& a : cfg.fibers) {
      if (a.size() != l) {
        throw UsageError("fiber vector must have n-1 coordinates");
      }
      for (auto v : a) {
        if (v >= cfg.p) throw UsageError("fiber coordinate out of range");
      }
      fibers.push_back(a);
    }
    break;
  }
  }
  std::sort(fibers.begin(), fibers.end());
  fibers.erase(std::unique(fibers.begin(), fibers.end()), fibers.end());
  return fibers;
}

} // namespace

SuiteResult run_suite(const SuiteConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 3) {
    throw UsageError("n must be 2 or 3");
  }
  if (cfg.p != 2 && cfg.p != 3 && cfg.p != 5 && cfg.p != 7) {
    throw UsageError("p must be one of 2, 3, 5, 7");
  }
  if (cfg.jobs == 0) throw UsageError("jobs must be at least 1");

  const SlnRing R(cfg.n, Prime(cfg.p));
  const auto fibers = fiber_list(cfg, R);

  auto negative_for = [&](std::size_t i) {
    if (fibers.size() > 1) return fibers[(i + 1) % fibers.size()];
    auto other = fibers[i];
    other[0] = (other[0] + 1) % cfg.p;
    return other;
  };

  std::vector<FiberOutcome> outcomes(fibers.size(),
                                     FiberOutcome{{}, {}, false, false});
  for (std::size_t start = 0; start < fibers.size(); start += cfg.jobs) {
    const std::size_t stop = std::min(fibers.size(), start + cfg.jobs);
    std::vector<std::future<FiberOutcome>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] {
        return run_fiber(R, fibers[i], negative_for(i), cfg);
      }));
    }
    for (std::size_t i = start; i < stop; ++i) {
      outcomes[i] = batch[i - start].get();
    }
  }

  ordered_json report;
  report["schema_version"] = kSchemaVersion;
  report["tool"] = {{"name", "frobsplit"}, {"version", kToolVersion}};
  ordered_json config;
  config["n"] = cfg.n;
  config["p"] = cfg.p;
  switch (cfg.select) {
  case SuiteConfig::FiberSelect::all:
    config["fibers"] = "all";
    break;
  case SuiteConfig::FiberSelect::unipotent:
    config["fibers"] = "unipotent";
    break;
  case SuiteConfig::FiberSelect::list:
    config["fibers"] = "list";
    break;
  }
  config["seed"] = cfg.seed;
  config["trials"] = cfg.trials;
  config["jobs"] = cfg.jobs;
  config["budget"] = {{"max_pairs", cfg.budget.max_pairs},
                      {"max_basis", cfg.budget.max_basis}};
  report["config"] = config;

  ordered_json arr = ordered_json::array();
  unsigned passed = 0, failed = 0, budget_errors = 0;
  for (const auto& o : outcomes) {
    arr.push_back(o.record);
    if (o.budget) {
      ++budget_errors;
    } else if (o.pass) {
      ++passed;
    } else {
      ++failed;
    }
  }
  report["fibers"] = arr;
  report["summary"] = {{"fibers", outcomes.size()},
                       {"passed", passed},
                       {"failed", failed},
                       {"budget_errors", budget_errors},
                       {"all_pass", failed == 0 && budget_errors == 0}};

  SuiteResult result;
  result.report = std::move(report);
  if (budget_errors > 0) {
    result.exit_code = kExitBudget;
  } else if (failed > 0) {
    result.exit_code = kExitVerificationFailure;
  } else {
    result.exit_code = kExitPass;
  }
  return result;
}

std::string render_text(const nlohmann::ordered_json& report) {
  std::ostringstream os;
  const auto& cfg = report.at("config");
  os << "frobsplit suite  n=" << cfg.at("n") << " p=" << cfg.at("p")
     << " fibers=" << cfg.at("fibers").get<std::string>()
     << " seed=" << cfg.at("seed") << "\n";
  for (const auto& f : report.at("fibers")) {
    os << "  a=" << f.at("a").dump() << "  "
       << f.at("status").get<std::string>();
    if (f.contains("splitting") && f.at("splitting").contains("normalization_c")) {
      os << "  c=" << f.at("splitting").at("normalization_c");
    }
    if (f.contains("fiber_geometry")) {
      os << "  dim=" << f.at("fiber_geometry").at("dim")
         << " codim=" << f.at("fiber_geometry").at("ambient_codim");
    }
    if (f.contains("reducedness")) {
      os << "  reducedness=" << f.at("reducedness").at("violations")
         << "/" << f.at("reducedness").at("trials") << " violations";
    }
    if (f.contains("error")) {
      os << "  error: " << f.at("error").get<std::string>();
    }
    os << "\n";
  }
  const auto& s = report.at("summary");
  os << "summary: " << s.at("passed") << "/" << s.at("fibers")
     << " fibers pass";
  if (s.at("budget_errors").get<unsigned>() != 0) {
    os << ", " << s.at("budget_errors") << " budget errors";
  }
  os << "\n";
  return os.str();
}

} // namespace frobsplit
