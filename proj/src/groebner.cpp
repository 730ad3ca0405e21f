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

#include "frobsplit/groebner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

namespace frobsplit {

namespace {

struct PairKey {
  std::uint64_t degree;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (int c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

Poly shifted(const Poly& f, const Monomial& m) {
  return f.ring()->term(Fp::one(f.ring()->prime()), m).with_order(f.order()) *
         f;
}

// Leading terms are monic throughout the working basis.
Poly spoly(const Poly& f, const Poly& g, const Monomial& lcm) {
  return shifted(f, lcm / f.leading_term().mono) -
         shifted(g, lcm / g.leading_term().mono);
}

} // namespace

namespace {

// Geobucket accumulator for division chains: terms live in size-capped
// sorted buckets so that subtracting a reducer costs the reducer's size
// (amortized) instead of the whole intermediate polynomial.
class Geobucket {
public:
  explicit Geobucket(MonomialOrder order) : order_(order) {}

  // ts must be sorted descending with distinct monomials.
  void add(std::vector<Term> ts) {
    if (ts.empty()) return;
    std::reverse(ts.begin(), ts.end()); // ascending, pop_back = leading
    std::size_t k = 0;
    std::size_t cap = kBase;
    while (cap < ts.size()) {
      cap *= kFactor;
      ++k;
    }
    for (;;) {
      if (k >= buckets_.size()) buckets_.resize(k + 1);
      if (buckets_[k].empty()) {
        buckets_[k] = std::move(ts);
        return;
      }
      ts = merge_ascending(buckets_[k], ts);
      buckets_[k].clear();
      if (ts.size() <= cap) {
        if (!ts.empty()) buckets_[k] = std::move(ts);
        return;
      }
      cap *= kFactor;
      ++k;
    }
  }

  // Largest surviving term across buckets; coefficients of equal monomials
  // are combined and zero sums skipped.
  std::optional<Term> pop() {
    for (;;) {
      std::size_t best = buckets_.size();
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (buckets_[k].empty()) continue;
        if (best == buckets_.size() ||
            order_.greater(buckets_[k].back().mono,
                           buckets_[best].back().mono)) {
          best = k;
        }
      }
      if (best == buckets_.size()) return std::nullopt;
      Term t = buckets_[best].back();
      buckets_[best].pop_back();
      for (auto& bucket : buckets_) {
        while (!bucket.empty() && bucket.back().mono == t.mono) {
          t.coeff += bucket.back().coeff;
          bucket.pop_back();
        }
      }
      if (!t.coeff.is_zero()) return t;
    }
  }

private:
  static constexpr std::size_t kBase = 16;
  static constexpr std::size_t kFactor = 4;

  std::vector<Term> merge_ascending(const std::vector<Term>& a,
                                    const std::vector<Term>& b) const {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (i == a.size()) {
        out.push_back(b[j++]);
      } else if (j == b.size()) {
        out.push_back(a[i++]);
      } else {
        int cmp = order_.compare(a[i].mono, b[j].mono);
        if (cmp < 0) {
          out.push_back(a[i++]);
        } else if (cmp > 0) {
          out.push_back(b[j++]);
        } else {
          Fp merged = a[i].coeff + b[j].coeff;
          if (!merged.is_zero()) out.push_back(Term{a[i].mono, merged});
          ++i;
          ++j;
        }
      }
    }
    return out;
  }

  std::vector<std::vector<Term>> buckets_;
  MonomialOrder order_;
};

} // namespace

Poly reduce_full(const Poly& f, std::span<const Poly> basis,
                 MonomialOrder order, const GroebnerBudget& budget) {
  const RingPtr& ring = f.ring();
  Geobucket bucket(order);
  bucket.add(f.with_order(order).terms());
  std::uint64_t work_done = 0;
  std::vector<Term> remainder;
  while (auto lt = bucket.pop()) {
    const Poly* reducer = nullptr;
    for (const Poly& g : basis) {
      if (!g.is_zero() && g.leading_term().mono.divides(lt->mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      // Everything still in the bucket is strictly smaller, so the popped
      // term is final; remainders come out already sorted descending.
      remainder.push_back(std::move(*lt));
      continue;
    }
    const Poly rg = reducer->order() == order ? *reducer
                                              : reducer->with_order(order);
    const std::vector<Term>& gt = rg.terms();
    work_done += gt.size();
    if (work_done > budget.max_reduction_work) {
      throw BudgetError("normal form: reduction work budget exhausted",
                        work_done, remainder.size());
    }
    const Monomial shift = lt->mono / gt.front().mono;
    const Fp c = lt->coeff / gt.front().coeff;
    // The reducer's leading term cancels the popped term exactly; push the
    // negated shifted tail back into the bucket.
    std::vector<Term> tail;
    tail.reserve(gt.size() - 1);
    for (std::size_t j = 1; j < gt.size(); ++j) {
      tail.push_back(Term{gt[j].mono * shift, -(gt[j].coeff * c)});
    }
    bucket.add(std::move(tail));
  }
  return Poly::from_terms(ring, std::move(remainder), order);
}

std::vector<Poly> buchberger(const RingPtr& ring, std::vector<Poly> gens,
                             MonomialOrder order,
                             const GroebnerBudget& budget) {
  std::vector<Poly> basis;
  for (const Poly& g : gens) {
    if (!ring->compatible(*g.ring())) {
      throw UsageError("buchberger: generator from a foreign ring");
    }
    if (!g.is_zero()) basis.push_back(g.with_order(order).monic());
  }

  std::set<PairKey, PairLess> queue{PairLess{order}};
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial lcm =
        Monomial::lcm(basis[i].leading_term().mono, basis[j].leading_term().mono);
    queue.insert(PairKey{lcm.degree(), std::move(lcm), i, j});
    pending.emplace(i, j);
  };
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
  }

  std::uint64_t pairs_done = 0;
  while (!queue.empty()) {
    if (++pairs_done > budget.max_pairs) {
      throw BudgetError("buchberger: pair budget exhausted", pairs_done,
                        basis.size());
    }
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({key.i, key.j});

    const Monomial& lt_i = basis[key.i].leading_term().mono;
    const Monomial& lt_j = basis[key.j].leading_term().mono;
    if (Monomial::coprime(lt_i, lt_j)) continue;

    // Chain criterion: some other element divides the lcm and both of its
    // pairs with i and j are already settled.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == key.i || k == key.j) continue;
      if (!basis[k].leading_term().mono.divides(key.lcm)) continue;
      auto settled = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending.find({a, b}) == pending.end();
      };
      if (settled(key.i, k) && settled(key.j, k)) skip = true;
    }
    if (skip) continue;

    Poly r = reduce_full(spoly(basis[key.i], basis[key.j], key.lcm), basis,
                         order, budget);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    if (basis.size() > budget.max_basis) {
      throw BudgetError("buchberger: basis budget exhausted", pairs_done,
                        basis.size());
    }
    const std::size_t t = basis.size() - 1;
    for (std::size_t i = 0; i < t; ++i) push_pair(i, t);
  }

  // Minimalize: keep only elements whose leading term no kept element
  // divides; ascending leading terms make one sweep enough.
  std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
    return order.less(a.leading_term().mono, b.leading_term().mono);
  });
  std::vector<Poly> minimal;
  for (const Poly& g : basis) {
    bool redundant = false;
    for (const Poly& h : minimal) {
      if (h.leading_term().mono.divides(g.leading_term().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }

  // Autoreduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Poly r = reduce_full(minimal[i], others, order, budget);
      if (r != minimal[i]) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          minimal[i] = r.monic();
        }
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return order.less(a.leading_term().mono, b.leading_term().mono);
  });
  return minimal;
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : Ideal(ring, std::move(gens), ring->order()) {}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens, MonomialOrder order)
    : ring_(std::move(ring)), gens_(std::move(gens)), order_(order) {
  for (const Poly& g : gens_) {
    if (!ring_->compatible(*g.ring())) {
      throw UsageError("Ideal: generator from a foreign ring");
    }
  }
}

const std::vector<Poly>& Ideal::basis(const GroebnerBudget& budget) {
  if (!basis_) basis_ = buchberger(ring_, gens_, order_, budget);
  return *basis_;
}

const std::vector<Poly>& Ideal::basis() const {
  if (!basis_) throw UsageError("Ideal: basis not computed yet");
  return *basis_;
}

Poly normal_form(const Poly& f, Ideal& I, const GroebnerBudget& budget) {
  return reduce_full(f, I.basis(budget), I.order(), budget);
}

Poly normal_form(const Poly& f, const Ideal& I) {
  return reduce_full(f, I.basis(), I.order());
}

bool member(const Poly& f, Ideal& I, const GroebnerBudget& budget) {
  return normal_form(f, I, budget).is_zero();
}

Ideal bracket_power(const Ideal& I, unsigned e) {
  std::vector<Poly> gens;
  gens.reserve(I.generators().size());
  for (const Poly& g : I.generators()) gens.push_back(g.frobenius_power(e));
  return Ideal(I.ring(), std::move(gens), I.order());
}

namespace {

std::string fresh_name(const VarRegistry& vars, const std::string& stem) {
  if (!vars.index(stem)) return stem;
  for (unsigned k = 0;; ++k) {
    std::string name = stem + std::to_string(k);
    if (!vars.index(name)) return name;
  }
}

} // namespace

Ideal colon(const Ideal& I, const Poly& f, const GroebnerBudget& budget) {
  if (f.is_zero()) throw UsageError("colon: divisor is zero");
  const RingPtr& base = I.ring();
  const std::string aux = fresh_name(base->vars(), "_t");
  RingPtr ext = base->extended({aux}, MonomialOrder::elimination_block(1));
  const std::size_t t_idx = ext->nvars() - 1;
  const Poly t = ext->variable(t_idx);

  // I cap (f) = elimination of t from t*I + (1-t)*(f).
  std::vector<Poly> gens;
  for (const Poly& g : I.generators()) gens.push_back(t * g.lifted(ext));
  gens.push_back((ext->one() - t) * f.lifted(ext));
  std::vector<Poly> gb =
      buchberger(ext, std::move(gens), MonomialOrder::elimination_block(1),
                 budget);

  std::vector<Poly> quotients;
  for (const Poly& g : gb) {
    if (g.occurs(t_idx)) continue;
    Poly member_of_intersection = g.restricted(base);
    auto q = divide_exact(member_of_intersection, f);
    if (!q) {
      throw std::logic_error("colon: intersection element not divisible");
    }
    quotients.push_back(std::move(*q));
  }
  return Ideal(base, std::move(quotients), I.order());
}

bool radical_member(const Poly& f, const Ideal& I,
                    const GroebnerBudget& budget) {
  const RingPtr& base = I.ring();
  const std::string aux = fresh_name(base->vars(), "_y");
  // Membership of 1 is order-independent; grevlex is the fast choice.
  RingPtr ext = base->extended({aux}, MonomialOrder::grevlex());
  const Poly y = ext->variable(ext->nvars() - 1);

  std::vector<Poly> gens;
  for (const Poly& g : I.generators()) gens.push_back(g.lifted(ext));
  gens.push_back(ext->one() - y * f.lifted(ext));
  std::vector<Poly> gb =
      buchberger(ext, std::move(gens), ext->order(), budget);
  for (const Poly& g : gb) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  return false;
}

std::size_t krull_dimension(Ideal& I, const GroebnerBudget& budget) {
  const std::vector<Poly>& gb = I.basis(budget);
  const std::size_t n = I.ring()->nvars();
  if (n > 24) {
    throw UsageError("krull_dimension: too many variables to enumerate");
  }
  std::vector<std::uint32_t> supports;
  for (const Poly& g : gb) {
    if (g.is_constant()) {
      throw UsageError("krull_dimension: unit ideal defines the empty scheme");
    }
    std::uint32_t mask = 0;
    const Monomial& m = g.leading_term().mono;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) mask |= 1u << i;
    }
    supports.push_back(mask);
  }

  // A variable set S is independent iff no leading monomial is supported
  // entirely inside S; the dimension is the largest |S|.
  std::size_t best = 0;
  const std::uint32_t limit = static_cast<std::uint32_t>(1u << n);
  for (std::uint32_t s = 0; s < limit; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t sup : supports) {
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool ideal_equal(Ideal& a, Ideal& b, const GroebnerBudget& budget) {
  if (!a.ring()->compatible(*b.ring())) {
    throw UsageError("ideal_equal: incompatible rings");
  }
  for (const Poly& g : a.generators()) {
    if (!member(g, b, budget)) return false;
  }
  for (const Poly& g : b.generators()) {
    if (!member(g, a, budget)) return false;
  }
  return true;
}

bool is_groebner_basis(std::span<const Poly> basis, MonomialOrder order) {
  std::vector<Poly> monic;
  for (const Poly& g : basis) {
    if (!g.is_zero()) monic.push_back(g.with_order(order).monic());
  }
  for (std::size_t j = 1; j < monic.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial lcm = Monomial::lcm(monic[i].leading_term().mono,
                                   monic[j].leading_term().mono);
      Poly s = spoly(monic[i], monic[j], lcm);
      if (!reduce_full(s, monic, order).is_zero()) return false;
    }
  }
  return true;
}

} // namespace frobsplit
