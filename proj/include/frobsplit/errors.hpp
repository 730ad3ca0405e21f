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

#ifndef FROBSPLIT_ERRORS_HPP
#define FROBSPLIT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobsplit {

/// Caller broke a documented precondition (mismatched moduli, foreign
/// registry, index out of range, ...).
class UsageError : public std::invalid_argument {
public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed polynomial text or input file.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A Groebner computation outgrew its configured caps. Always loud, never a
/// silently wrong answer.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, std::uint64_t pairs_done,
              std::size_t basis_size)
      : std::runtime_error(what), pairs_done(pairs_done),
        basis_size(basis_size) {}

  std::uint64_t pairs_done;
  std::size_t basis_size;
};

/// A claimed splitting element failed its defining identity. Carries the
/// offending normal form so reports can show what the evaluation produced.
class NotASplittingError : public std::runtime_error {
public:
  NotASplittingError(const std::string& what, std::string normal_form)
      : std::runtime_error(what), normal_form(std::move(normal_form)) {}

  std::string normal_form;
};

} // namespace frobsplit

#endif
