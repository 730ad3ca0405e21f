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

#include "frobsplit/poly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace frobsplit {

RingPtr PolyRing::create(Prime p, std::vector<std::string> names,
                         MonomialOrder order) {
  return create(p, VarRegistry::create(std::move(names)), order);
}

RingPtr PolyRing::create(Prime p, std::shared_ptr<const VarRegistry> vars,
                         MonomialOrder order) {
  return RingPtr(new PolyRing(p, std::move(vars), order));
}

bool PolyRing::compatible(const PolyRing& other) const {
  if (this == &other) return true;
  return p_ == other.p_ && vars_->same_names(*other.vars_);
}

RingPtr PolyRing::extended(const std::vector<std::string>& extra,
                           MonomialOrder order) const {
  return create(p_, vars_->extended(extra), order);
}

Poly PolyRing::zero() const {
  return Poly::from_terms(shared_from_this(), {}, order_);
}

Poly PolyRing::one() const { return constant(1); }

Poly PolyRing::constant(Fp c) const {
  if (c.modulus() != p_.value()) throw UsageError("PolyRing: foreign modulus");
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back(Term{Monomial(nvars()), c});
  return Poly::from_terms(shared_from_this(), std::move(t), order_);
}

Poly PolyRing::constant(std::int64_t c) const { return constant(Fp(c, p_)); }

Poly PolyRing::variable(std::size_t i) const {
  if (i >= nvars()) throw UsageError("PolyRing: variable index out of range");
  Monomial m(nvars());
  m[i] = 1;
  return term(Fp::one(p_), std::move(m));
}

Poly PolyRing::term(Fp c, Monomial m) const {
  if (m.size() != nvars()) throw UsageError("PolyRing: monomial size mismatch");
  if (c.modulus() != p_.value()) throw UsageError("PolyRing: foreign modulus");
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back(Term{std::move(m), c});
  return Poly::from_terms(shared_from_this(), std::move(t), order_);
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms,
                      MonomialOrder order) {
  for (const auto& t : terms) {
    if (t.mono.size() != ring->nvars()) {
      throw UsageError("Poly: monomial size mismatch");
    }
    if (t.coeff.modulus() != ring->prime().value()) {
      throw UsageError("Poly: foreign modulus");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff.is_zero()) merged.pop_back();
    } else if (!t.coeff.is_zero()) {
      merged.push_back(std::move(t));
    }
  }
  return Poly(std::move(ring), order, std::move(merged));
}

void Poly::check_rings(const Poly& a, const Poly& b) {
  if (!a.ring_->compatible(*b.ring_)) {
    throw UsageError("Poly: operands from incompatible rings");
  }
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Fp Poly::constant_value() const {
  if (!is_constant()) throw UsageError("Poly: not a constant");
  if (terms_.empty()) return Fp::zero(ring_->prime());
  return terms_[0].coeff;
}

std::int64_t Poly::total_degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& t : terms_) {
    d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.mono.degree()));
  }
  return d;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw UsageError("Poly: zero polynomial has no terms");
  return terms_.front();
}

Poly Poly::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(ring_, terms_, order);
}

Poly Poly::operator+(const Poly& o) const {
  check_rings(*this, o);
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(ring_, std::move(all), order_);
}

Poly Poly::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coeff = -term.coeff;
  return Poly(ring_, order_, std::move(t));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

namespace {

// Hard cap on the live term count of a product. Degrees stay tiny at desk
// scale; configurations that outgrow this must fail loudly, not thrash.
constexpr std::size_t kTermBudget = 4'000'000;

} // namespace

Poly Poly::operator*(const Poly& o) const {
  check_rings(*this, o);
  if (terms_.size() * o.terms_.size() <= 4096) {
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Fp c = a.coeff * b.coeff;
        if (!c.is_zero()) acc.push_back(Term{a.mono * b.mono, c});
      }
    }
    return from_terms(ring_, std::move(acc), order_);
  }
  // Large products accumulate in place so memory tracks the distinct
  // monomials, not the full cross product.
  auto cmp = [this](const Monomial& a, const Monomial& b) {
    return order_.greater(a, b);
  };
  std::map<Monomial, Fp, decltype(cmp)> acc(cmp);
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Fp c = a.coeff * b.coeff;
      if (c.is_zero()) continue;
      Monomial m = a.mono * b.mono;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
      if (acc.size() > kTermBudget) {
        throw BudgetError("polynomial product outgrew the term budget", 0,
                          acc.size());
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back(Term{m, c});
  return Poly(ring_, order_, std::move(out));
}

Poly Poly::scaled(Fp c) const {
  if (c.modulus() != ring_->prime().value()) {
    throw UsageError("Poly: foreign modulus");
  }
  if (c.is_zero()) return ring_->zero().with_order(order_);
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coeff *= c;
  return Poly(ring_, order_, std::move(t));
}

Poly Poly::monic() const { return scaled(leading_term().coeff.inv()); }

Poly Poly::pow(std::uint64_t k) const {
  Poly acc = ring_->one().with_order(order_);
  Poly base = *this;
  while (k != 0) {
    if (k & 1) acc *= base;
    if ((k >>= 1) != 0) base *= base;
  }
  return acc;
}

Poly Poly::minus_term_times(const Monomial& m, Fp c, const Poly& g) const {
  check_rings(*this, g);
  const Poly& rhs = g.order() == order_ ? g : g.with_order(order_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    Monomial shifted = rhs.terms_[j].mono * m;
    Fp sub = -(rhs.terms_[j].coeff * c);
    if (i == terms_.size()) {
      if (!sub.is_zero()) out.push_back(Term{std::move(shifted), sub});
      ++j;
      continue;
    }
    int cmp = order_.compare(terms_[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      if (!sub.is_zero()) out.push_back(Term{std::move(shifted), sub});
      ++j;
    } else {
      Fp merged = terms_[i].coeff + sub;
      if (!merged.is_zero()) out.push_back(Term{terms_[i].mono, merged});
      ++i;
      ++j;
    }
  }
  return Poly(ring_, order_, std::move(out));
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& images) const {
  const RingPtr* target = nullptr;
  for (const auto& [idx, img] : images) {
    if (idx >= ring_->nvars()) {
      throw UsageError("substitute: image for unknown variable");
    }
    if (img.ring()->prime() != ring_->prime()) {
      throw UsageError("substitute: image over a different prime");
    }
    if (target != nullptr && !(*target)->compatible(*img.ring())) {
      throw UsageError("substitute: images from incompatible rings");
    }
    if (target == nullptr) target = &img.ring();
  }
  const RingPtr& out_ring = target != nullptr ? *target : ring_;
  Poly acc = out_ring->zero();
  for (const auto& t : terms_) {
    Poly factor = out_ring->constant(t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      auto it = images.find(i);
      if (it == images.end()) {
        throw UsageError("substitute: no image for variable " +
                         ring_->vars().name(i));
      }
      factor *= it->second.pow(t.mono[i]);
    }
    acc += factor;
  }
  return acc;
}

Fp Poly::evaluate(std::span<const Fp> point) const {
  if (point.size() != ring_->nvars()) {
    throw UsageError("evaluate: wrong number of coordinates");
  }
  Fp acc = Fp::zero(ring_->prime());
  for (const auto& t : terms_) {
    Fp v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i] != 0) v *= point[i].pow(t.mono[i]);
    }
    acc += v;
  }
  return acc;
}

namespace {

std::uint64_t pow_u64_checked(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / b) {
      throw UsageError("exponent tower overflow");
    }
    r *= b;
  }
  return r;
}

} // namespace

Poly Poly::cartier(unsigned e) const {
  if (e == 0) throw UsageError("cartier: degree must be at least 1");
  const std::uint64_t q = pow_u64_checked(ring_->prime().value(), e);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    bool alive = true;
    std::vector<std::uint32_t> root(t.mono.size());
    for (std::size_t i = 0; i < t.mono.size() && alive; ++i) {
      const std::uint64_t a = t.mono[i];
      if (a % q != q - 1) {
        alive = false;
      } else {
        root[i] = static_cast<std::uint32_t>(a / q);
      }
    }
    if (alive) out.push_back(Term{Monomial(std::move(root)), t.coeff});
  }
  return from_terms(ring_, std::move(out), order_);
}

Poly Poly::frobenius_power(unsigned e) const {
  const std::uint64_t q = pow_u64_checked(ring_->prime().value(), e);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> exps(t.mono.size());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      std::uint64_t a = t.mono[i] * q;
      if (a > std::numeric_limits<std::uint32_t>::max()) {
        throw UsageError("frobenius_power: exponent overflow");
      }
      exps[i] = static_cast<std::uint32_t>(a);
    }
    // Distinct monomials stay distinct under x -> x^q, and coefficients are
    // Frobenius-fixed, so this really is f^(p^e).
    out.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return from_terms(ring_, std::move(out), order_);
}

Poly Poly::lifted(const RingPtr& target) const {
  if (target->prime() != ring_->prime()) {
    throw UsageError("lifted: different prime");
  }
  std::vector<std::size_t> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    auto idx = target->vars().index(ring_->vars().name(i));
    if (!idx) throw UsageError("lifted: target lacks variable " +
                               ring_->vars().name(i));
    map[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) m[map[i]] = t.mono[i];
    out.push_back(Term{std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out), target->order());
}

Poly Poly::restricted(const RingPtr& target) const {
  if (target->prime() != ring_->prime()) {
    throw UsageError("restricted: different prime");
  }
  std::vector<std::optional<std::size_t>> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    map[i] = target->vars().index(ring_->vars().name(i));
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) {
        throw UsageError("restricted: dropped variable " +
                         ring_->vars().name(i) + " occurs");
      }
      m[*map[i]] = t.mono[i];
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out), target->order());
}

bool Poly::occurs(std::size_t var) const {
  for (const auto& t : terms_) {
    if (t.mono[var] != 0) return true;
  }
  return false;
}

bool operator==(const Poly& a, const Poly& b) {
  Poly::check_rings(a, b);
  const Poly& rhs = b.order() == a.order() ? b : b.with_order(a.order());
  if (a.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != rhs.terms_[i].mono ||
        a.terms_[i].coeff != rhs.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) {
  return os << f.str();
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw UsageError("divide_exact: division by zero");
  Poly r = f;
  Poly q = f.ring()->zero().with_order(f.order());
  const Poly gg = g.with_order(f.order());
  const Term& lg = gg.leading_term();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lr.mono / lg.mono;
    Fp c = lr.coeff / lg.coeff;
    q += f.ring()->term(c, m).with_order(f.order());
    r = r.minus_term_times(m, c, gg);
  }
  return q;
}

} // namespace frobsplit
