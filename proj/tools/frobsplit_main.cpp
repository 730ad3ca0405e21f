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

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobsplit/report.hpp"
#include "frobsplit/splitting.hpp"
#include "frobsplit/steinberg.hpp"

namespace {

using namespace frobsplit;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::uint32_t parse_u32(const std::string& s) {
  if (s.empty()) throw UsageError("expected a number, got an empty field");
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("expected a number, got '" + s + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 0xffffffffull) throw UsageError("number too large: " + s);
  }
  return static_cast<std::uint32_t>(v);
}

struct VerifyOptions {
  unsigned n = 2;
  std::uint32_t p = 3;
  std::string fibers = "all";
  std::uint64_t seed = 42;
  unsigned trials = 200;
  std::uint64_t budget_pairs = GroebnerBudget{}.max_pairs;
  std::size_t budget_basis = GroebnerBudget{}.max_basis;
  unsigned jobs = 1;
  std::string output = "text";
  std::string out_path;
  bool timings = false;
};

int cmd_verify(const VerifyOptions& opt) {
  SuiteConfig cfg;
  cfg.n = opt.n;
  cfg.p = opt.p;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.budget.max_pairs = opt.budget_pairs;
  cfg.budget.max_basis = opt.budget_basis;
  cfg.jobs = opt.jobs;
  cfg.include_timings = opt.timings;

  if (opt.fibers == "all") {
    cfg.select = SuiteConfig::FiberSelect::all;
  } else if (opt.fibers == "unipotent") {
    cfg.select = SuiteConfig::FiberSelect::unipotent;
  } else {
    cfg.select = SuiteConfig::FiberSelect::list;
    for (const std::string& vec : split(opt.fibers, ';')) {
      std::vector<std::uint32_t> a;
      for (const std::string& entry : split(vec, ',')) {
        a.push_back(parse_u32(entry));
      }
      cfg.fibers.push_back(std::move(a));
    }
  }
  if (opt.output != "text" && opt.output != "json") {
    throw UsageError("--output must be text or json");
  }

  SuiteResult result = run_suite(cfg);
  std::string body = opt.output == "json" ? result.report.dump(2) + "\n"
                                          : render_text(result.report);
  if (opt.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw UsageError("cannot open output path " + opt.out_path);
    out << body;
  }
  return result.exit_code;
}

int cmd_eval(std::uint32_t p_value, const std::string& expr,
             const std::string& point) {
  const Prime p(p_value);
  std::vector<std::vector<Fp>> rows;
  for (const std::string& row : split(point, ';')) {
    std::vector<Fp> r;
    for (const std::string& entry : split(row, ',')) {
      r.emplace_back(static_cast<std::int64_t>(parse_u32(entry)), p);
    }
    rows.push_back(std::move(r));
  }
  const std::size_t n = rows.size();
  std::vector<Fp> flat;
  for (const auto& r : rows) {
    if (r.size() != n) throw UsageError("--point must be a square matrix");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      names.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  }
  RingPtr ring = PolyRing::create(p, std::move(names));
  Poly f = ring->parse(expr);
  std::cout << f.evaluate(flat).value() << "\n";
  return kExitPass;
}

int cmd_groebner(std::uint32_t p_value, const std::string& order_name,
                 const std::string& vars, const std::string& path,
                 std::uint64_t budget_pairs, std::size_t budget_basis) {
  const Prime p(p_value);
  MonomialOrder order = MonomialOrder::grevlex();
  if (order_name == "lex") {
    order = MonomialOrder::lex();
  } else if (order_name != "grevlex") {
    throw UsageError("--order must be grevlex or lex");
  }

  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open " + path);
    in = &file;
  }
  std::vector<std::string> sources;
  std::string line;
  while (std::getline(*in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) sources.push_back(line);
  }
  if (sources.empty()) {
    throw UsageError("no generators: input is empty");
  }

  std::vector<std::string> names;
  if (!vars.empty()) {
    names = split(vars, ',');
  } else {
    // Variables in order of first appearance across the input.
    for (const std::string& src : sources) {
      std::size_t i = 0;
      while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isalpha(c) || c == '_') {
          std::size_t start = i;
          while (i < src.size()) {
            c = static_cast<unsigned char>(src[i]);
            if (!std::isalnum(c) && c != '_') break;
            ++i;
          }
          std::string name = src.substr(start, i - start);
          bool known = false;
          for (const auto& k : names) known = known || k == name;
          if (!known) names.push_back(name);
        } else {
          ++i;
        }
      }
    }
  }
  if (names.empty()) throw UsageError("no variables found");

  RingPtr ring = PolyRing::create(p, names, order);
  std::vector<Poly> gens;
  for (const std::string& src : sources) gens.push_back(ring->parse(src));

  GroebnerBudget budget{budget_pairs, budget_basis};
  for (const Poly& g : buchberger(ring, gens, order, budget)) {
    std::cout << g.str() << "\n";
  }
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius-splitting checks for SL_n over F_p"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  VerifyOptions vopt;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the verification suite over fibers");
  verify->add_option("--n", vopt.n, "Matrix size n (2 or 3)");
  verify->add_option("--p", vopt.p, "Field characteristic (2, 3, 5 or 7)");
  verify->add_option(
      "--fibers", vopt.fibers,
      "'all', 'unipotent', or semicolon-separated a-vectors like '0;1,2'");
  verify->add_option("--seed", vopt.seed, "Sampling seed");
  verify->add_option("--trials", vopt.trials, "Reducedness sampling trials");
  verify->add_option("--budget-pairs", vopt.budget_pairs,
                     "Groebner S-pair budget");
  verify->add_option("--budget-basis", vopt.budget_basis,
                     "Groebner basis-size budget");
  verify->add_option("--jobs", vopt.jobs, "Concurrent fibers");
  verify->add_option("--output", vopt.output, "Report format: text or json");
  verify->add_option("--out", vopt.out_path, "Write the report to a file");
  verify->add_flag("--timings", vopt.timings,
                   "Include wall-clock timings (breaks byte-stability)");

  std::uint32_t eval_p = 5;
  std::string eval_expr, eval_point;
  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate a polynomial in x11..xnn at a matrix");
  eval->add_option("--p", eval_p, "Field characteristic")->required();
  eval->add_option("--expr", eval_expr, "Polynomial text")->required();
  eval->add_option("--point", eval_point,
                   "Matrix entries, rows ';'-separated, e.g. '1,0;0,1'")
      ->required();

  std::uint32_t gb_p = 7;
  std::string gb_order = "grevlex", gb_vars, gb_file;
  std::uint64_t gb_pairs = GroebnerBudget{}.max_pairs;
  std::size_t gb_basis = GroebnerBudget{}.max_basis;
  CLI::App* gb = app.add_subcommand(
      "groebner", "Reduced Groebner basis of generators from a file");
  gb->add_option("--p", gb_p, "Field characteristic")->required();
  gb->add_option("--order", gb_order, "Monomial order: grevlex or lex");
  gb->add_option("--vars", gb_vars,
                 "Comma-separated variables (default: first appearance)");
  gb->add_option("--budget-pairs", gb_pairs, "Groebner S-pair budget");
  gb->add_option("--budget-basis", gb_basis, "Groebner basis-size budget");
  gb->add_option("file", gb_file, "Generator file, one per line, '-' for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (verify->parsed()) return cmd_verify(vopt);
    if (eval->parsed()) return cmd_eval(eval_p, eval_expr, eval_point);
    if (gb->parsed()) {
      return cmd_groebner(gb_p, gb_order, gb_vars, gb_file, gb_pairs,
                          gb_basis);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << " (pairs="
              << e.pairs_done << ", basis=" << e.basis_size << ")\n";
    return kExitBudget;
  } catch (const NotASplittingError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const UsageError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitConfig;
}
