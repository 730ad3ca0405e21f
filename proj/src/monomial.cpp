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

#include "frobsplit/monomial.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace frobsplit {

VarRegistry::VarRegistry(std::vector<std::string> names)
    : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw UsageError("VarRegistry: empty variable name");
    if (!seen.insert(n).second) {
      throw UsageError("VarRegistry: duplicate variable name " + n);
    }
  }
}

std::shared_ptr<const VarRegistry>
VarRegistry::create(std::vector<std::string> names) {
  return std::shared_ptr<const VarRegistry>(
      new VarRegistry(std::move(names)));
}

std::optional<std::size_t> VarRegistry::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::shared_ptr<const VarRegistry>
VarRegistry::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  names.insert(names.end(), extra.begin(), extra.end());
  return create(std::move(names));
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (size() != o.size()) throw UsageError("Monomial: size mismatch");
  std::vector<std::uint32_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(exps_[i]) + o.exps_[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw UsageError("Monomial: exponent overflow");
    }
    r[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  if (size() != o.size()) throw UsageError("Monomial: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw UsageError("Monomial: inexact division");
  std::vector<std::uint32_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = exps_[i] - o.exps_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw UsageError("Monomial: size mismatch");
  std::vector<std::uint32_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw UsageError("Monomial: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

namespace {

// grevlex on the index window [lo, hi): higher total degree wins; on ties
// the last differing exponent decides, smaller one winning.
int grevlex_window(const Monomial& a, const Monomial& b, std::size_t lo,
                   std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw UsageError("MonomialOrder: size mismatch");
  const std::size_t n = a.size();
  switch (kind_) {
  case Kind::lex:
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  case Kind::grevlex:
    return grevlex_window(a, b, 0, n);
  case Kind::elim_block: {
    if (tail_ > n) throw UsageError("MonomialOrder: block larger than registry");
    const std::size_t split = n - tail_;
    if (int c = grevlex_window(a, b, split, n); c != 0) return c;
    return grevlex_window(a, b, 0, split);
  }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
  case Kind::lex:
    return "lex";
  case Kind::grevlex:
    return "grevlex";
  case Kind::elim_block:
    return "elim(" + std::to_string(tail_) + ")";
  }
  return "?";
}

} // namespace frobsplit
