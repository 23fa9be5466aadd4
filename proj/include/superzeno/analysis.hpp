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
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superzeno/evolve.hpp"
#include "superzeno/series.hpp"

namespace superzeno {

/// Suppression order measured two independent ways: a log-log slope fit of
/// the simulated transition amplitude, and the first surviving Taylor
/// coefficient of the transition block.
struct OrderEstimate {
  double fitted_slope = 0.0;
  std::pair<double, double> fit_window_et{0.0, 0.0};
  int taylor_order = 0;
  bool agree = false;  // |fitted_slope - taylor_order| <= 0.25
};

using OrderEnsemble = std::vector<std::pair<Hamiltonian, SubspaceSplit>>;

/// Random (H, split) pairs for order-condition work. Members are rejected
/// (and redrawn deterministically) if the bare coupling |QHP| is tiny,
/// which would mask a surviving low-order term.
inline OrderEnsemble make_order_ensemble(std::uint64_t seed,
                                         const std::vector<std::pair<int, int>> &shapes = {{4, 2}, {5, 2}, {6, 3}}) {
  OrderEnsemble out;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto [dim, dim_p] = shapes[i];
    SubspaceSplit split(dim, dim_p);
    for (std::uint64_t attempt = 0;; ++attempt) {
      Hamiltonian h = random_hamiltonian(dim, Prng::mix(seed, i * 1000 + attempt), 1.0);
      if (operator_norm(split.Q() * h.matrix() * split.P()) > 1e-6) {
        out.emplace_back(std::move(h), std::move(split));
        break;
      }
    }
  }
  return out;
}

/// Suppression order of a sequence on one Hamiltonian. The slope is fit on
/// a geometric ET grid restricted to amplitudes in [1e-11, 1e-3], clear of
/// both the O(1) regime and the rounding floor; the window used is
/// returned. The Taylor order uses threshold 1e-10 * E^k per coefficient.
inline OrderEstimate estimate_order(const PulseSequence &seq, const Hamiltonian &h, const SubspaceSplit &split) {
  if (operator_norm(split.Q() * h.matrix() * split.P()) < 1e-8) {
    throw std::invalid_argument("degenerate-case: |QHP| < 1e-8, no generic coupling for `" + seq.label + "`");
  }

  constexpr double kLowAmp = 1e-11;
  constexpr double kHighAmp = 1e-3;
  const double e_norm = h.norm_E();

  std::vector<double> log_et;
  std::vector<double> log_b;
  double window_lo = 0.0, window_hi = 0.0;
  const double ratio = std::pow(10.0, 1.0 / 8.0);
  for (double et = 1e-12; et <= 4.0000001; et *= ratio) {
    const double t = et / e_norm;
    const double b = operator_norm(transition_block(compose(seq, h, split, t), split));
    if (b < kLowAmp || b > kHighAmp) continue;
    if (log_et.empty()) window_lo = et;
    window_hi = et;
    log_et.push_back(std::log(et));
    log_b.push_back(std::log(b));
  }
  if (log_et.size() < 4) {
    throw std::invalid_argument("degenerate-case: no usable amplitude window for `" + seq.label + "`");
  }

  const std::size_t n = log_et.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += log_et[i];
    sy += log_b[i];
    sxx += log_et[i] * log_et[i];
    sxy += log_et[i] * log_b[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  int claimed = seq.claimed_order.value_or(0);
  const int max_order = std::min(kMaxSeriesOrder - 1, std::max(9, claimed + 2));
  const MatrixPolynomial series = series_of_sequence(seq, h, split, max_order);
  int taylor_order = max_order + 1;
  double tol = 1e-10;
  for (int k = 1; k <= max_order; ++k) {
    tol *= e_norm;
    if (operator_norm(transition_block(series.coefficient(k), split)) > tol) {
      taylor_order = k;
      break;
    }
  }

  OrderEstimate est;
  est.fitted_slope = slope;
  est.fit_window_et = {window_lo, window_hi};
  est.taylor_order = taylor_order;
  est.agree = std::abs(slope - taylor_order) <= 0.25;
  return est;
}

/// Order-condition residual: sum over the ensemble and over orders 1..target
/// of the squared Frobenius norm of the transition block of each Taylor
/// coefficient. Zero exactly when the candidate cancels every order up to
/// target on every member. Candidates are renormalized to unit sum.
inline double order_residual(const std::vector<double> &candidate, int target_order,
                             const OrderEnsemble &ensemble) {
  if (target_order < 1 || target_order > 8) {
    throw std::invalid_argument("unsupported-order: target_order must be in 1..8");
  }
  if (ensemble.empty()) {
    throw std::invalid_argument("invalid-parameter: ensemble is empty");
  }
  double sum = 0.0;
  for (double v : candidate) {
    if (!(v >= 0.0)) throw std::invalid_argument("invalid-candidate: negative interval");
    sum += v;
  }
  if (!(sum > 0.0)) throw std::invalid_argument("invalid-candidate: intervals sum to zero");
  std::vector<double> x(candidate);
  for (double &v : x) v /= sum;

  PulseSequence seq;
  seq.intervals = std::move(x);
  seq.label = "candidate";

  double residual = 0.0;
  for (const auto &[h, split] : ensemble) {
    const MatrixPolynomial series = series_of_sequence(seq, h, split, target_order);
    for (int k = 1; k <= target_order; ++k) {
      residual += transition_block(series.coefficient(k), split).squaredNorm();
    }
  }
  return residual;
}

struct KRecursionRow {
  int m = 0;
  double k_hat = 0.0;    // sup over the grid of b_norm / (ET)^{m+1}
  double k_bound = 0.0;  // 2^{-m(m+1)/2}
  bool ok = false;
};

struct KRecursionReport {
  std::vector<KRecursionRow> rows;
  bool all_ok = true;

  std::vector<std::string> csv_rows(char sep = ',') const {
    std::vector<std::string> out;
    for (const auto &r : rows) {
      std::string row = std::to_string(r.m);
      row += sep;
      row += format_real17(r.k_hat);
      row += sep;
      row += format_real17(r.k_bound);
      row += sep;
      row += r.ok ? '1' : '0';
      out.push_back(std::move(row));
    }
    return out;
  }
};

/// Empirical amplitude constants for the recursive family. For each m the
/// grid spans ET in (0, 1] but starts where the expected amplitude clears
/// 1e-12; below that the ratio measures rounding noise, not the constant.
inline KRecursionReport verify_k_recursion(int max_m, const OrderEnsemble &ensemble) {
  if (max_m < 0 || max_m > 6) {
    throw std::invalid_argument("unsupported: max_m must be in 0..6");
  }
  if (ensemble.empty()) {
    throw std::invalid_argument("invalid-parameter: ensemble is empty");
  }
  KRecursionReport report;
  for (int m = 0; m <= max_m; ++m) {
    const PulseSequence seq = recursive_sequence(m);
    const double k_bound = amplitude_constant_bound(m);
    const double et_lo = std::max(1e-3, std::pow(1e-12 / k_bound, 1.0 / (m + 1)));
    constexpr int kGridPoints = 25;
    double k_hat = 0.0;
    for (const auto &[h, split] : ensemble) {
      for (int g = 0; g < kGridPoints; ++g) {
        const double et = et_lo * std::pow(1.0 / et_lo, static_cast<double>(g) / (kGridPoints - 1));
        const double t = et / h.norm_E();
        const double b = operator_norm(transition_block(compose(seq, h, split, t), split));
        k_hat = std::max(k_hat, b / std::pow(et, m + 1));
      }
    }
    KRecursionRow row{m, k_hat, k_bound, k_hat <= k_bound + 1e-10};
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace superzeno
