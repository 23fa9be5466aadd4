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
#include <string>

#include "superzeno/matrix.hpp"

namespace superzeno {

/// Orthogonal split of C^dim into a protected subspace (the first dim_p
/// standard basis vectors) and its complement. J = Q - P is the inverting
/// pulse: it flips the sign of protected amplitudes and leaves the rest.
class SubspaceSplit {
 public:
  SubspaceSplit(int dim, int dim_p) : dim_(dim), dim_p_(dim_p) {
    if (dim < 2 || dim_p < 1 || dim_p >= dim) {
      throw std::invalid_argument("invalid-dimension: need 1 <= dim_p < dim and dim >= 2, got dim=" +
                                  std::to_string(dim) + " dim_p=" + std::to_string(dim_p));
    }
    p_ = CMatrix::Zero(dim, dim);
    for (int k = 0; k < dim_p; ++k) p_(k, k) = 1.0;
    q_ = CMatrix::Identity(dim, dim) - p_;
    j_ = q_ - p_;
  }

  int dim() const { return dim_; }
  int dim_p() const { return dim_p_; }
  int dim_q() const { return dim_ - dim_p_; }
  const CMatrix &P() const { return p_; }
  const CMatrix &Q() const { return q_; }
  const CMatrix &J() const { return j_; }

 private:
  int dim_;
  int dim_p_;
  CMatrix p_;
  CMatrix q_;
  CMatrix j_;
};

/// The Q-rows/P-columns sub-block of w. Its largest singular value is the
/// worst-case transition amplitude out of the protected subspace.
inline CMatrix transition_block(const CMatrix &w, const SubspaceSplit &split) {
  if (w.rows() != split.dim() || w.cols() != split.dim()) {
    throw std::invalid_argument("shape-error: operator is " + std::to_string(w.rows()) + "x" +
                                std::to_string(w.cols()) + ", split expects dim " + std::to_string(split.dim()));
  }
  return w.block(split.dim_p(), 0, split.dim_q(), split.dim_p());
}

/// Random normalized state supported on the protected subspace.
inline CVector random_p_state(const SubspaceSplit &split, Prng &rng) {
  CVector v = CVector::Zero(split.dim());
  for (int k = 0; k < split.dim_p(); ++k) v(k) = rng.cgaussian();
  const double n = v.norm();
  if (n < 1e-300) {
    v(0) = 1.0;
    return v;
  }
  return v / n;
}

}  // namespace superzeno
