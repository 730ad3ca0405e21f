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

#ifndef FROBSPLIT_SLGROUP_HPP
#define FROBSPLIT_SLGROUP_HPP

#include <optional>
#include <span>
#include <vector>

#include "frobsplit/poly.hpp"
#include "frobsplit/rng.hpp"

namespace frobsplit {

/// Coordinate ring of SL_n over F_p on the open chart: variables x11..xnn
/// in row-major order, the determinant relation, the fundamental characters
/// chi_1..chi_{n-1} (sums of principal minors, equivalently traces of
/// exterior powers), and the corner minors m_1..m_{n-1}.
///
/// Convention: m_i is the leading principal i x i minor, i.e. the matrix
/// coefficient pairing the extreme weight covector of the i-th exterior
/// power with its translated extreme weight vector under the chosen Borel
/// pair. Its zero set is the chart trace of an opposite-cell divisor, and
/// the end-to-end splitting identity certifies the choice; the transposed
/// and flipped variants give the same verification outcomes.
class SlnRing {
public:
  SlnRing(unsigned n, Prime p);

  unsigned n() const noexcept { return n_; }
  Prime prime() const noexcept { return p_; }
  const RingPtr& ring() const noexcept { return ring_; }

  const Poly& determinant() const noexcept { return det_; }
  /// det - 1, the hypersurface relation of the chart.
  const Poly& chart_relation() const noexcept { return chart_; }

  /// chi_i for 1 <= i <= n-1; degree i; chi_i(identity) = binom(n, i).
  const Poly& character(unsigned i) const;
  /// m_i for 1 <= i <= n-1; degree i; m_i(identity) = 1.
  const Poly& corner_minor(unsigned i) const;

  /// Registry index of x_{row,col} (1-based row and column).
  std::size_t var_index(unsigned row, unsigned col) const;
  Poly variable_at(unsigned row, unsigned col) const;

private:
  unsigned n_;
  Prime p_;
  RingPtr ring_;
  Poly det_;
  Poly chart_;
  std::vector<Poly> chars_;
  std::vector<Poly> minors_;
};

/// Dense matrix over F_p with no shape constraints; oracle plumbing for
/// exterior powers and rank computations.
class FpMatrix {
public:
  FpMatrix(unsigned rows, unsigned cols, Fp fill);

  unsigned rows() const noexcept { return rows_; }
  unsigned cols() const noexcept { return cols_; }
  Fp at(unsigned i, unsigned j) const { return data_.at(i * cols_ + j); }
  void set(unsigned i, unsigned j, Fp v) { data_.at(i * cols_ + j) = v; }

  FpMatrix operator*(const FpMatrix& o) const;
  Fp trace() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b);

private:
  unsigned rows_, cols_;
  std::vector<Fp> data_;
};

/// A point of SL_n: an n x n matrix over F_p whose determinant is exactly 1
/// (checked at construction).
class MatrixPoint {
public:
  MatrixPoint(unsigned n, std::vector<Fp> entries);
  static MatrixPoint identity(unsigned n, Prime p);

  unsigned n() const noexcept { return n_; }
  Prime prime() const noexcept { return entries_.front().prime(); }
  Fp at(unsigned i, unsigned j) const { return entries_.at(i * n_ + j); }
  const std::vector<Fp>& entries() const noexcept { return entries_; }

  MatrixPoint operator*(const MatrixPoint& o) const;
  MatrixPoint inverse() const;

private:
  unsigned n_;
  std::vector<Fp> entries_;
};

/// k-subsets of {0,..,n-1} in lexicographic order; the index scheme of
/// exterior_power.
std::vector<std::vector<unsigned>> index_subsets(unsigned n, unsigned k);

/// Matrix of the k-th exterior power of g, indexed by k-subsets: entry
/// (S, T) is the minor of g on rows S and columns T. Multiplicative in g;
/// its trace evaluates the k-th fundamental character.
FpMatrix exterior_power(const MatrixPoint& g, unsigned k);

/// The companion matrix of t^n - a_1 t^(n-1) + a_2 t^(n-2) - ... + (-1)^n,
/// a point of the Steinberg fiber over a with chi_i(point) = a_i.
MatrixPoint companion_point(const SlnRing& R, std::span<const Fp> a);

/// Dimension of the gl_n-centralizer of g: n^2 minus the rank of
/// X -> Xg - gX. Regular points of SL_n are exactly those with value n.
unsigned centralizer_dimension(const MatrixPoint& g);

Fp evaluate_at(const SlnRing& R, const Poly& f, const MatrixPoint& g);

/// Random upper-triangular element of SL_n (unit diagonal product).
MatrixPoint random_upper_triangular(unsigned n, Prime p, Rng& rng);

/// Searches for an upper-triangular b with fn(b g b^-1) != 0; a witness
/// that the conjugacy class of g escapes the hypersurface V(fn).
std::optional<MatrixPoint> conjugation_witness(const SlnRing& R,
                                               const Poly& fn,
                                               const MatrixPoint& g,
                                               unsigned samples, Rng& rng);

} // namespace frobsplit

#endif
