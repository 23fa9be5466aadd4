// Copyright 2026 The superzeno authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <vector>

#include "superzeno/hamiltonian.hpp"
#include "superzeno/sequences.hpp"
#include "superzeno/subspace.hpp"

namespace superzeno {

inline constexpr int kMaxSeriesOrder = 12;

/// Matrix-valued polynomial in t, truncated at a fixed order. Products are
/// truncated convolutions; coefficients all share one dimension.
class MatrixPolynomial {
 public:
  MatrixPolynomial(int max_order, int dim)
      : coeffs_(static_cast<std::size_t>(max_order) + 1, CMatrix::Zero(dim, dim)) {
    if (max_order < 0 || dim < 1) {
      throw std::invalid_argument("invalid-parameter: MatrixPolynomial needs max_order >= 0, dim >= 1");
    }
  }

  static MatrixPolynomial constant(const CMatrix &c, int max_order) {
    MatrixPolynomial p(max_order, static_cast<int>(c.rows()));
    p.coeffs_[0] = c;
    return p;
  }

  int max_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int dim() const { return static_cast<int>(coeffs_[0].rows()); }

  const CMatrix &coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  CMatrix &coefficient(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// Horner evaluation at a concrete t.
  CMatrix evaluate(double t) const {
    CMatrix acc = coeffs_.back();
    for (int k = max_order() - 1; k >= 0; --k) {
      acc = coeffs_[static_cast<std::size_t>(k)] + t * acc;
    }
    return acc;
  }

  /// this(t) * rhs(t), truncated at min of the two orders. The left factor
  /// acts after the right one, matching operator composition.
  MatrixPolynomial operator*(const MatrixPolynomial &rhs) const {
    if (dim() != rhs.dim()) {
      throw std::invalid_argument("shape-error: polynomial dimensions differ");
    }
    const int m = std::min(max_order(), rhs.max_order());
    MatrixPolynomial out(m, dim());
    for (int a = 0; a <= m; ++a) {
      for (int b = 0; a + b <= m; ++b) {
        out.coeffs_[static_cast<std::size_t>(a + b)] += coeffs_[static_cast<std::size_t>(a)] * rhs.coeffs_[static_cast<std::size_t>(b)];
      }
    }
    return out;
  }

 private:
  std::vector<CMatrix> coeffs_;
};

/// Exact truncated Taylor series of the pulsed evolution: every free
/// interval contributes sum_k (-i x_j H)^k t^k / k!, every pulse a constant
/// J factor, multiplied right to left. The order-0 coefficient is J^N.
inline MatrixPolynomial series_of_sequence(const PulseSequence &seq, const Hamiltonian &h,
                                           const SubspaceSplit &split, int max_order) {
  if (max_order < 0 || max_order > kMaxSeriesOrder) {
    throw std::invalid_argument("unsupported-order: max_order must be in 0..12");
  }
  if (split.dim() != h.dim()) {
    throw std::invalid_argument("shape-error: split dim does not match Hamiltonian dim");
  }
  const int d = h.dim();
  std::vector<CMatrix> h_pow(static_cast<std::size_t>(max_order) + 1);
  h_pow[0] = CMatrix::Identity(d, d);
  for (int k = 1; k <= max_order; ++k) h_pow[static_cast<std::size_t>(k)] = h_pow[static_cast<std::size_t>(k - 1)] * h.matrix();

  auto exp_poly = [&](double x) {
    MatrixPolynomial p(max_order, d);
    complexd c(1.0, 0.0);
    for (int k = 0; k <= max_order; ++k) {
      p.coefficient(k) = c * h_pow[static_cast<std::size_t>(k)];
      c *= complexd(0.0, -x) / static_cast<double>(k + 1);
    }
    return p;
  };

  MatrixPolynomial acc = exp_poly(seq.intervals.at(0));
  for (std::size_t j = 1; j < seq.intervals.size(); ++j) {
    for (int k = 0; k <= max_order; ++k) {
      acc.coefficient(k) = split.J() * acc.coefficient(k);
    }
    acc = exp_poly(seq.intervals[j]) * acc;
  }
  return acc;
}

}  // namespace superzeno
