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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superzeno/analysis.hpp"
#include "superzeno/parallel.hpp"

namespace superzeno {

inline constexpr double kSearchSuccessResidual = 1e-16;
inline constexpr double kSearchSuspectResidual = 1e-10;
inline constexpr double kSearchDedupeTol = 1e-6;

struct SearchSolution {
  std::vector<double> intervals;  // canonicalized: lexicographically <= its reversal
  double residual = 0.0;
  bool success = false;  // residual <= 1e-16
  bool suspect = false;  // residual in (1e-16, 1e-10]: near-miss, reported rather than dropped
};

struct SearchResult {
  int n_pulses = 0;
  int target_order = 0;
  int restarts = 0;
  int success_count = 0;
  std::vector<SearchSolution> solutions;  // sorted by (residual, intervals), deduplicated
};

/// Keep the lexicographically smaller of x and its reversal. Reflection is
/// the one symmetry of the order conditions, so mirrored runs collapse to
/// one representative.
inline std::vector<double> canonicalize_by_reflection(std::vector<double> x) {
  std::vector<double> rev(x.rbegin(), x.rend());
  if (std::lexicographical_compare(rev.begin(), rev.end(), x.begin(), x.end())) return rev;
  return x;
}

namespace detail {

// Candidates are parametrized as x_i = y_i^2 / |y|^2: non-negative and
// unit-sum by construction, smooth everywhere, so the stacked
// order-condition residuals can be driven to zero with plain
// Levenberg-Marquardt and a finite-difference Jacobian.
inline std::vector<double> simplex_from_square(const Eigen::VectorXd &y) {
  std::vector<double> x(static_cast<std::size_t>(y.size()));
  double s = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) s += y(i) * y(i);
  for (Eigen::Index i = 0; i < y.size(); ++i) x[static_cast<std::size_t>(i)] = y(i) * y(i) / s;
  return x;
}

inline Eigen::VectorXd order_residual_vector(const std::vector<double> &x, int target_order,
                                             const OrderEnsemble &ensemble) {
  std::vector<double> entries;
  PulseSequence seq;
  seq.intervals = x;
  seq.label = "candidate";
  for (const auto &[h, split] : ensemble) {
    const MatrixPolynomial series = series_of_sequence(seq, h, split, target_order);
    for (int k = 1; k <= target_order; ++k) {
      const CMatrix block = transition_block(series.coefficient(k), split);
      for (Eigen::Index j = 0; j < block.cols(); ++j) {
        for (Eigen::Index i = 0; i < block.rows(); ++i) {
          entries.push_back(block(i, j).real());
          entries.push_back(block(i, j).imag());
        }
      }
    }
  }
  return Eigen::Map<Eigen::VectorXd>(entries.data(), static_cast<Eigen::Index>(entries.size()));
}

struct LmOutcome {
  std::vector<double> x;
  double residual = 0.0;
};

inline LmOutcome levenberg_marquardt_run(int n_intervals, int target_order, const OrderEnsemble &ensemble,
                                         Prng &rng) {
  Eigen::VectorXd y(n_intervals);
  for (int i = 0; i < n_intervals; ++i) {
    // Dirichlet(1) start mapped back through the square parametrization.
    y(i) = std::sqrt(-std::log1p(-rng.uniform()));
  }
  y.normalize();

  auto eval = [&](const Eigen::VectorXd &yy) {
    return order_residual_vector(simplex_from_square(yy), target_order, ensemble);
  };

  Eigen::VectorXd r = eval(y);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  const int p = n_intervals;
  const double fd_step = 1e-6;

  for (int iter = 0; iter < 400 && cost > 1e-28; ++iter) {
    Eigen::MatrixXd jac(r.size(), p);
    for (int c = 0; c < p; ++c) {
      Eigen::VectorXd yp = y, ym = y;
      yp(c) += fd_step;
      ym(c) -= fd_step;
      jac.col(c) = (eval(yp) - eval(ym)) / (2.0 * fd_step);
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    const double diag_floor = std::max(1e-12, jtj.diagonal().maxCoeff() * 1e-12);

    bool accepted = false;
    for (int trial = 0; trial < 14; ++trial) {
      Eigen::MatrixXd a = jtj;
      for (int c = 0; c < p; ++c) a(c, c) += lambda * std::max(jtj(c, c), diag_floor);
      const Eigen::VectorXd step = a.ldlt().solve(-jtr);
      Eigen::VectorXd y_next = y + step;
      y_next.normalize();
      const Eigen::VectorXd r_next = eval(y_next);
      const double cost_next = r_next.squaredNorm();
      if (cost_next < cost) {
        y = y_next;
        r = r_next;
        cost = cost_next;
        lambda = std::max(lambda * 0.35, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 5.0;
    }
    if (!accepted) break;
  }

  LmOutcome out;
  out.x = simplex_from_square(y);
  out.residual = order_residual(out.x, target_order, ensemble);
  return out;
}

}  // namespace detail

/// Multi-start search for N-pulse candidates cancelling all transition
/// orders up to target_order. Deterministic for a given seed, regardless of
/// worker count: restarts are independently seeded and results are merged
/// by sorting before deduplication. An empty solution list is a valid
/// outcome, not an error.
inline SearchResult search_sequence(int n_pulses, int target_order, int restarts, std::uint64_t seed,
                                    const OrderEnsemble &ensemble) {
  if (n_pulses < 1 || n_pulses > 8) {
    throw std::invalid_argument("unsupported: n_pulses must be in 1..8");
  }
  if (target_order < 1 || target_order > 8) {
    throw std::invalid_argument("unsupported-order: target_order must be in 1..8");
  }
  if (restarts < 1) {
    throw std::invalid_argument("invalid-parameter: restarts must be >= 1");
  }

  std::vector<detail::LmOutcome> outcomes(static_cast<std::size_t>(restarts));
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t i) {
    Prng rng(Prng::mix(seed, 0x5ea6c4 + i));
    outcomes[i] = detail::levenberg_marquardt_run(n_pulses + 1, target_order, ensemble, rng);
  });

  std::vector<SearchSolution> candidates;
  for (const auto &o : outcomes) {
    if (o.residual > kSearchSuspectResidual) continue;
    SearchSolution s;
    s.intervals = canonicalize_by_reflection(o.x);
    s.residual = o.residual;
    s.success = o.residual <= kSearchSuccessResidual;
    s.suspect = !s.success;
    candidates.push_back(std::move(s));
  }
  std::sort(candidates.begin(), candidates.end(), [](const SearchSolution &a, const SearchSolution &b) {
    if (a.residual != b.residual) return a.residual < b.residual;
    return std::lexicographical_compare(a.intervals.begin(), a.intervals.end(), b.intervals.begin(),
                                        b.intervals.end());
  });

  SearchResult result;
  result.n_pulses = n_pulses;
  result.target_order = target_order;
  result.restarts = restarts;
  for (auto &c : candidates) {
    bool duplicate = false;
    for (const auto &kept : result.solutions) {
      double dist = 0.0;
      for (std::size_t i = 0; i < c.intervals.size(); ++i) {
        dist = std::max(dist, std::abs(c.intervals[i] - kept.intervals[i]));
      }
      if (dist <= kSearchDedupeTol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) result.solutions.push_back(std::move(c));
  }
  for (const auto &s : result.solutions) {
    if (s.success) ++result.success_count;
  }
  return result;
}

inline SearchResult search_sequence(int n_pulses, int target_order, int restarts, std::uint64_t seed) {
  return search_sequence(n_pulses, target_order, restarts, seed, make_order_ensemble(seed));
}

}  // namespace superzeno
