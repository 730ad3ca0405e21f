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

#include "frobsplit/slgroup.hpp"

#include <string>

namespace frobsplit {

namespace {

// Laplace expansion along the first row; the matrices here are at most
// n x n for n <= 4, so no cleverness is warranted.
Poly det_poly(const std::vector<std::vector<Poly>>& m, const RingPtr& ring) {
  const std::size_t k = m.size();
  if (k == 0) return ring->one();
  if (k == 1) return m[0][0];
  Poly acc = ring->zero();
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<Poly>> sub;
    sub.reserve(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Poly> row;
      row.reserve(k - 1);
      for (std::size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      sub.push_back(std::move(row));
    }
    Poly cofactor = m[0][j] * det_poly(sub, ring);
    acc = (j % 2 == 0) ? acc + cofactor : acc - cofactor;
  }
  return acc;
}

RingPtr make_sl_ring(unsigned n, Prime p) {
  if (n < 2) throw UsageError("SlnRing: n must be at least 2");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) * n);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      names.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  }
  return PolyRing::create(p, std::move(names));
}

// Minor of the generic matrix on the given 0-based row/column subsets.
Poly minor_poly(const RingPtr& ring, unsigned n,
                const std::vector<unsigned>& rows,
                const std::vector<unsigned>& cols) {
  std::vector<std::vector<Poly>> m;
  m.reserve(rows.size());
  for (unsigned r : rows) {
    std::vector<Poly> row;
    row.reserve(cols.size());
    for (unsigned c : cols) {
      row.push_back(ring->variable(static_cast<std::size_t>(r) * n + c));
    }
    m.push_back(std::move(row));
  }
  return det_poly(m, ring);
}

Poly make_det(const RingPtr& ring, unsigned n) {
  std::vector<unsigned> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i;
  return minor_poly(ring, n, all, all);
}

std::vector<Poly> make_characters(const RingPtr& ring, unsigned n) {
  std::vector<Poly> chars;
  for (unsigned i = 1; i < n; ++i) {
    Poly chi = ring->zero();
    for (const auto& subset : index_subsets(n, i)) {
      chi += minor_poly(ring, n, subset, subset);
    }
    chars.push_back(std::move(chi));
  }
  return chars;
}

std::vector<Poly> make_corner_minors(const RingPtr& ring, unsigned n) {
  std::vector<Poly> minors;
  for (unsigned i = 1; i < n; ++i) {
    std::vector<unsigned> corner(i);
    for (unsigned k = 0; k < i; ++k) corner[k] = k;
    minors.push_back(minor_poly(ring, n, corner, corner));
  }
  return minors;
}

Fp det_gauss(std::vector<Fp> m, unsigned k, Prime p) {
  Fp det = Fp::one(p);
  for (unsigned col = 0; col < k; ++col) {
    unsigned pivot = col;
    while (pivot < k && m[pivot * k + col].is_zero()) ++pivot;
    if (pivot == k) return Fp::zero(p);
    if (pivot != col) {
      for (unsigned j = 0; j < k; ++j) {
        std::swap(m[pivot * k + j], m[col * k + j]);
      }
      det = -det;
    }
    det *= m[col * k + col];
    Fp inv = m[col * k + col].inv();
    for (unsigned r = col + 1; r < k; ++r) {
      if (m[r * k + col].is_zero()) continue;
      Fp factor = m[r * k + col] * inv;
      for (unsigned j = col; j < k; ++j) {
        m[r * k + j] -= factor * m[col * k + j];
      }
    }
  }
  return det;
}

unsigned rank_gauss(std::vector<Fp> m, unsigned rows, unsigned cols) {
  unsigned rank = 0;
  for (unsigned col = 0; col < cols && rank < rows; ++col) {
    unsigned pivot = rank;
    while (pivot < rows && m[pivot * cols + col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (unsigned j = 0; j < cols; ++j) {
        std::swap(m[pivot * cols + j], m[rank * cols + j]);
      }
    }
    Fp inv = m[rank * cols + col].inv();
    for (unsigned r = 0; r < rows; ++r) {
      if (r == rank || m[r * cols + col].is_zero()) continue;
      Fp factor = m[r * cols + col] * inv;
      for (unsigned j = col; j < cols; ++j) {
        m[r * cols + j] -= factor * m[rank * cols + j];
      }
    }
    ++rank;
  }
  return rank;
}

} // namespace

SlnRing::SlnRing(unsigned n, Prime p)
    : n_(n), p_(p), ring_(make_sl_ring(n, p)), det_(make_det(ring_, n)),
      chart_(det_ - ring_->one()), chars_(make_characters(ring_, n)),
      minors_(make_corner_minors(ring_, n)) {}

const Poly& SlnRing::character(unsigned i) const {
  if (i < 1 || i >= n_) throw UsageError("character: index out of range");
  return chars_[i - 1];
}

const Poly& SlnRing::corner_minor(unsigned i) const {
  if (i < 1 || i >= n_) throw UsageError("corner_minor: index out of range");
  return minors_[i - 1];
}

std::size_t SlnRing::var_index(unsigned row, unsigned col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw UsageError("var_index: entry out of range");
  }
  return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
}

Poly SlnRing::variable_at(unsigned row, unsigned col) const {
  return ring_->variable(var_index(row, col));
}

FpMatrix::FpMatrix(unsigned rows, unsigned cols, Fp fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, fill) {}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw UsageError("FpMatrix: shape mismatch");
  Prime p = data_.front().prime();
  FpMatrix out(rows_, o.cols_, Fp::zero(p));
  for (unsigned i = 0; i < rows_; ++i) {
    for (unsigned k = 0; k < cols_; ++k) {
      Fp a = at(i, k);
      if (a.is_zero()) continue;
      for (unsigned j = 0; j < o.cols_; ++j) {
        out.set(i, j, out.at(i, j) + a * o.at(k, j));
      }
    }
  }
  return out;
}

Fp FpMatrix::trace() const {
  if (rows_ != cols_) throw UsageError("FpMatrix: trace of non-square");
  Fp t = Fp::zero(data_.front().prime());
  for (unsigned i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool operator==(const FpMatrix& a, const FpMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

MatrixPoint::MatrixPoint(unsigned n, std::vector<Fp> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1 || entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw UsageError("MatrixPoint: wrong entry count");
  }
  Prime p = entries_.front().prime();
  if (!det_gauss(entries_, n_, p).is_one()) {
    throw UsageError("MatrixPoint: determinant is not 1");
  }
}

MatrixPoint MatrixPoint::identity(unsigned n, Prime p) {
  std::vector<Fp> e(static_cast<std::size_t>(n) * n, Fp::zero(p));
  for (unsigned i = 0; i < n; ++i) e[i * n + i] = Fp::one(p);
  return MatrixPoint(n, std::move(e));
}

MatrixPoint MatrixPoint::operator*(const MatrixPoint& o) const {
  if (n_ != o.n_) throw UsageError("MatrixPoint: size mismatch");
  Prime p = prime();
  std::vector<Fp> out(static_cast<std::size_t>(n_) * n_, Fp::zero(p));
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned k = 0; k < n_; ++k) {
      Fp a = at(i, k);
      if (a.is_zero()) continue;
      for (unsigned j = 0; j < n_; ++j) {
        out[i * n_ + j] += a * o.at(k, j);
      }
    }
  }
  return MatrixPoint(n_, std::move(out));
}

MatrixPoint MatrixPoint::inverse() const {
  Prime p = prime();
  const unsigned n = n_;
  // Gauss-Jordan on [A | I].
  std::vector<Fp> aug(static_cast<std::size_t>(n) * 2 * n, Fp::zero(p));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) aug[i * 2 * n + j] = at(i, j);
    aug[i * 2 * n + n + i] = Fp::one(p);
  }
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && aug[pivot * 2 * n + col].is_zero()) ++pivot;
    if (pivot == n) throw std::logic_error("MatrixPoint: singular");
    if (pivot != col) {
      for (unsigned j = 0; j < 2 * n; ++j) {
        std::swap(aug[pivot * 2 * n + j], aug[col * 2 * n + j]);
      }
    }
    Fp inv = aug[col * 2 * n + col].inv();
    for (unsigned j = 0; j < 2 * n; ++j) aug[col * 2 * n + j] *= inv;
    for (unsigned r = 0; r < n; ++r) {
      if (r == col || aug[r * 2 * n + col].is_zero()) continue;
      Fp factor = aug[r * 2 * n + col];
      for (unsigned j = 0; j < 2 * n; ++j) {
        aug[r * 2 * n + j] -= factor * aug[col * 2 * n + j];
      }
    }
  }
  std::vector<Fp> out(static_cast<std::size_t>(n) * n, Fp::zero(p));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) out[i * n + j] = aug[i * 2 * n + n + j];
  }
  return MatrixPoint(n, std::move(out));
}

std::vector<std::vector<unsigned>> index_subsets(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k > n) return out;
  std::vector<unsigned> cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    // Advance to the next k-subset in lexicographic order.
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[static_cast<unsigned>(i)] ==
                         n - k + static_cast<unsigned>(i)) {
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) {
      cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

FpMatrix exterior_power(const MatrixPoint& g, unsigned k) {
  if (k < 1 || k > g.n()) throw UsageError("exterior_power: bad degree");
  Prime p = g.prime();
  const auto subsets = index_subsets(g.n(), k);
  FpMatrix out(static_cast<unsigned>(subsets.size()),
               static_cast<unsigned>(subsets.size()), Fp::zero(p));
  for (unsigned si = 0; si < subsets.size(); ++si) {
    for (unsigned ti = 0; ti < subsets.size(); ++ti) {
      std::vector<Fp> sub;
      sub.reserve(static_cast<std::size_t>(k) * k);
      for (unsigned r : subsets[si]) {
        for (unsigned c : subsets[ti]) sub.push_back(g.at(r, c));
      }
      out.set(si, ti, det_gauss(std::move(sub), k, p));
    }
  }
  return out;
}

MatrixPoint companion_point(const SlnRing& R, std::span<const Fp> a) {
  const unsigned n = R.n();
  if (a.size() != n - 1) {
    throw UsageError("companion_point: expected n-1 fiber coordinates");
  }
  Prime p = R.prime();
  std::vector<Fp> e(static_cast<std::size_t>(n) * n, Fp::zero(p));
  for (unsigned i = 0; i + 1 < n; ++i) e[(i + 1) * n + i] = Fp::one(p);
  // Characteristic polynomial t^n - a_1 t^(n-1) + ... + (-1)^n has t^k
  // coefficient c_k with c_{n-j} = (-1)^j a_j and c_0 = (-1)^n; the last
  // column holds -c_i.
  auto sign = [&](unsigned j) {
    return j % 2 == 0 ? Fp::one(p) : -Fp::one(p);
  };
  e[0 * n + (n - 1)] = -sign(n);
  for (unsigned i = 1; i < n; ++i) {
    const unsigned j = n - i;
    e[i * n + (n - 1)] = -(sign(j) * a[j - 1]);
  }
  return MatrixPoint(n, std::move(e));
}

unsigned centralizer_dimension(const MatrixPoint& g) {
  const unsigned n = g.n();
  const unsigned nn = n * n;
  Prime p = g.prime();
  // Rows index the matrix entry (k,l) of Xg - gX, columns the basis
  // element E_{ij} of gl_n.
  std::vector<Fp> m(static_cast<std::size_t>(nn) * nn, Fp::zero(p));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      const unsigned col = i * n + j;
      for (unsigned k = 0; k < n; ++k) {
        for (unsigned l = 0; l < n; ++l) {
          Fp v = Fp::zero(p);
          if (k == i) v += g.at(j, l);
          if (l == j) v -= g.at(k, i);
          if (!v.is_zero()) {
            m[(k * n + l) * static_cast<std::size_t>(nn) + col] = v;
          }
        }
      }
    }
  }
  return nn - rank_gauss(std::move(m), nn, nn);
}

Fp evaluate_at(const SlnRing& R, const Poly& f, const MatrixPoint& g) {
  if (g.n() != R.n() || g.prime() != R.prime()) {
    throw UsageError("evaluate_at: point does not match the ring");
  }
  if (!f.ring()->compatible(*R.ring())) {
    throw UsageError("evaluate_at: polynomial from a foreign ring");
  }
  return f.evaluate(g.entries());
}

MatrixPoint random_upper_triangular(unsigned n, Prime p, Rng& rng) {
  std::vector<Fp> e(static_cast<std::size_t>(n) * n, Fp::zero(p));
  Fp prod = Fp::one(p);
  for (unsigned i = 0; i + 1 < n; ++i) {
    Fp d(1 + static_cast<std::int64_t>(rng.below(p.value() - 1)), p);
    e[i * n + i] = d;
    prod *= d;
  }
  e[(n - 1) * n + (n - 1)] = prod.inv();
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      e[i * n + j] = Fp(static_cast<std::int64_t>(rng.below(p.value())), p);
    }
  }
  return MatrixPoint(n, std::move(e));
}

std::optional<MatrixPoint> conjugation_witness(const SlnRing& R,
                                               const Poly& fn,
                                               const MatrixPoint& g,
                                               unsigned samples, Rng& rng) {
  for (unsigned s = 0; s < samples; ++s) {
    MatrixPoint b = random_upper_triangular(R.n(), R.prime(), rng);
    MatrixPoint conj = b * g * b.inverse();
    if (!evaluate_at(R, fn, conj).is_zero()) return b;
  }
  return std::nullopt;
}

} // namespace frobsplit
