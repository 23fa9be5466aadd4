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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "superzeno/matrix.hpp"

namespace superzeno {

/// Hermitian generator with a cached eigendecomposition.
///
/// The cached system serves two roles: exp(-iHt) is assembled exactly from
/// the eigenphases (no series truncation), and the operator norm E is the
/// largest |eigenvalue|.
class Hamiltonian {
 public:
  explicit Hamiltonian(CMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
      throw std::invalid_argument("invalid-dimension: Hamiltonian must be a nonempty square matrix");
    }
    if (!all_finite(matrix_)) {
      throw std::invalid_argument("invalid-entries: Hamiltonian has non-finite entries");
    }
    if (!is_hermitian(matrix_, 1e-12)) {
      throw std::invalid_argument("invalid-entries: Hamiltonian is not Hermitian to 1e-12");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (matrix_ + matrix_.adjoint()));
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("eigendecomposition failed");
    }
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
    norm_e_ = 0.0;
    for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
      norm_e_ = std::max(norm_e_, std::abs(eigenvalues_(k)));
    }
  }

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix &matrix() const { return matrix_; }
  /// Operator norm E (largest |eigenvalue|).
  double norm_E() const { return norm_e_; }
  const Eigen::VectorXd &eigenvalues() const { return eigenvalues_; }
  const CMatrix &eigenvectors() const { return eigenvectors_; }

 private:
  CMatrix matrix_;
  Eigen::VectorXd eigenvalues_;
  CMatrix eigenvectors_;
  double norm_e_ = 0.0;
};

/// GUE-style random Hermitian matrix (G + G^dagger)/2, rescaled so the
/// operator norm equals target_norm. Same seed, same matrix, bit for bit.
inline Hamiltonian random_hamiltonian(int dim, std::uint64_t seed, double target_norm) {
  if (dim < 2) {
    throw std::invalid_argument("invalid-dimension: random_hamiltonian needs dim >= 2, got " + std::to_string(dim));
  }
  if (!(target_norm > 0.0)) {
    throw std::invalid_argument("invalid-norm: target_norm must be > 0");
  }
  Prng rng(seed);
  CMatrix g = random_gaussian_matrix(dim, dim, rng);
  CMatrix h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const double norm = std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(dim - 1)));
  if (norm < 1e-300) {
    throw std::runtime_error("degenerate draw: zero matrix");
  }
  h *= target_norm / norm;
  return Hamiltonian(std::move(h));
}

/// exp(-i H duration), assembled from the cached eigensystem.
inline CMatrix evolve_free(const Hamiltonian &h, double duration) {
  if (!std::isfinite(duration)) {
    throw std::invalid_argument("invalid-duration: duration must be finite");
  }
  const Eigen::VectorXd &w = h.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases(k) = std::exp(complexd(0.0, -w(k) * duration));
  }
  return h.eigenvectors() * phases.asDiagonal() * h.eigenvectors().adjoint();
}

}  // namespace superzeno
