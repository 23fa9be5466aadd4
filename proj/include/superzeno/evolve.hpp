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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superzeno/format.hpp"
#include "superzeno/hamiltonian.hpp"
#include "superzeno/sequences.hpp"
#include "superzeno/subspace.hpp"

namespace superzeno {

/// Exact pulsed evolution W(T) = U0(x_{N+1}T) J ... J U0(x_1 T), applied
/// right to left. Free-evolution factors are cached per distinct interval
/// (the constructions reuse very few distinct values).
inline CMatrix compose(const PulseSequence &seq, const Hamiltonian &h, const SubspaceSplit &split,
                       double total_time) {
  if (split.dim() != h.dim()) {
    throw std::invalid_argument("shape-error: split dim does not match Hamiltonian dim");
  }
  std::map<double, CMatrix> cache;
  auto factor = [&](double x) -> const CMatrix & {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, evolve_free(h, x * total_time)).first;
    return it->second;
  };
  CMatrix w = factor(seq.intervals.at(0));
  for (std::size_t j = 1; j < seq.intervals.size(); ++j) {
    w = factor(seq.intervals[j]) * (split.J() * w);
  }
  return w;
}

/// Worst-case leakage bound for the recursive family at order parameter m:
/// 2^{-m(m+1)} (ET)^{2m+2}.
inline double recursive_leakage_bound(int m, double et) {
  return std::exp2(-static_cast<double>(m) * (m + 1)) * std::pow(et, 2 * m + 2);
}

/// Amplitude-constant bound 2^{-m(m+1)/2}: B_m(t) <= K_m (Et)^{m+1}.
inline double amplitude_constant_bound(int m) {
  return std::exp2(-0.5 * static_cast<double>(m) * (m + 1));
}

struct LeakageReport {
  std::string sequence_label;
  double total_time_ET = 0.0;
  int pulse_count = 0;
  double b_norm = 0.0;    // largest singular value of the transition block
  double leakage = 0.0;   // b_norm^2, worst case over initial states in P
  std::optional<double> bound;
  bool bound_satisfied = true;

  /// CSV row: label,ET,N,b_norm,leakage,bound,satisfied (bound empty when absent).
  std::string csv_row(char sep = ',') const {
    std::string row = sequence_label;
    row += sep;
    row += format_real17(total_time_ET);
    row += sep;
    row += std::to_string(pulse_count);
    row += sep;
    row += format_real17(b_norm);
    row += sep;
    row += format_real17(leakage);
    row += sep;
    if (bound) row += format_real17(*bound);
    row += sep;
    row += bound_satisfied ? '1' : '0';
    return row;
  }
};

/// Worst-case leakage of the composed evolution: the squared operator norm
/// of the transition block, i.e. the supremum over initial states in P.
/// The recursive family carries its analytic bound; other families none.
inline LeakageReport leakage(const PulseSequence &seq, const Hamiltonian &h, const SubspaceSplit &split,
                             double total_time) {
  const CMatrix w = compose(seq, h, split, total_time);
  LeakageReport rep;
  rep.sequence_label = seq.label;
  rep.total_time_ET = h.norm_E() * total_time;
  rep.pulse_count = seq.pulse_count();
  rep.b_norm = operator_norm(transition_block(w, split));
  rep.leakage = rep.b_norm * rep.b_norm;
  if (seq.family == SequenceFamily::recursive) {
    rep.bound = recursive_leakage_bound(seq.param, rep.total_time_ET);
    rep.bound_satisfied = rep.leakage <= *rep.bound + 1e-12;
  }
  return rep;
}

/// Leakage for one specific initial state in P: |Q W |p>|^2.
inline double leakage_for_state(const PulseSequence &seq, const Hamiltonian &h, const SubspaceSplit &split,
                                double total_time, const CVector &initial) {
  if (initial.size() != split.dim()) {
    throw std::invalid_argument("shape-error: state dimension does not match split");
  }
  if (std::abs(initial.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("invalid-state: initial state is not normalized");
  }
  if ((split.Q() * initial).norm() > 1e-10) {
    throw std::invalid_argument("invalid-state: initial state is not in the protected subspace");
  }
  const CMatrix w = compose(seq, h, split, total_time);
  return (split.Q() * (w * initial)).squaredNorm();
}

/// Survival under repeated projective measurement of the protected
/// subspace at times T/N, 2T/N, ..., T: the state is projected back into P
/// after each free step. Returns 1 - |(P U)^N |p>|^2; for a one-dimensional
/// P this is 1 - |<p|U|p>|^{2N}.
inline double zeno_measurement_leakage(const Hamiltonian &h, const SubspaceSplit &split, double total_time,
                                       int n_measurements, const CVector &initial) {
  if (n_measurements < 1) {
    throw std::invalid_argument("invalid-parameter: n_measurements must be >= 1");
  }
  if (initial.size() != split.dim()) {
    throw std::invalid_argument("shape-error: state dimension does not match split");
  }
  if (std::abs(initial.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("invalid-state: initial state is not normalized");
  }
  if ((split.Q() * initial).norm() > 1e-10) {
    throw std::invalid_argument("invalid-state: initial state is not in the protected subspace");
  }
  const CMatrix step = split.P() * evolve_free(h, total_time / n_measurements);
  CVector v = initial;
  for (int k = 0; k < n_measurements; ++k) v = step * v;
  return 1.0 - v.squaredNorm();
}

/// Worst case of the above over initial states in P (smallest singular
/// value of the surviving P-block).
inline double zeno_worst_leakage(const Hamiltonian &h, const SubspaceSplit &split, double total_time,
                                 int n_measurements) {
  if (n_measurements < 1) {
    throw std::invalid_argument("invalid-parameter: n_measurements must be >= 1");
  }
  const CMatrix step = split.P() * evolve_free(h, total_time / n_measurements);
  CMatrix m = step;
  for (int k = 1; k < n_measurements; ++k) m = step * m;
  const CMatrix p_block = m.block(0, 0, split.dim_p(), split.dim_p());
  Eigen::JacobiSVD<CMatrix> svd(p_block);
  const double smin = svd.singularValues()(split.dim_p() - 1);
  return 1.0 - smin * smin;
}

enum class CostFamily { zeno_measurement, periodic, recursive };

inline const char *cost_family_name(CostFamily f) {
  switch (f) {
    case CostFamily::zeno_measurement: return "zeno";
    case CostFamily::periodic: return "periodic";
    default: return "superzeno";
  }
}

struct CostRow {
  CostFamily family;
  double et = 0.0;
  double epsilon = 0.0;
  int pulses = 0;       // smallest count with simulated worst-case leakage <= epsilon
  double achieved = 0.0;
  bool found = false;
};

/// Smallest intervention count per family reaching leakage <= epsilon,
/// scanning counts upward (N = 0 means free evolution / no measurement).
/// Leakage is simulated, never read off the analytic bounds.
inline std::vector<CostRow> cost_table(const Hamiltonian &h, const SubspaceSplit &split, double epsilon,
                                       const std::vector<double> &et_grid, int max_pulses = 4096) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw std::invalid_argument("invalid-tolerance: epsilon must be in (0, 1]");
  }
  const double e_norm = h.norm_E();
  std::vector<CostRow> rows;
  for (CostFamily family : {CostFamily::zeno_measurement, CostFamily::periodic, CostFamily::recursive}) {
    for (double et : et_grid) {
      if (et < 0.0) throw std::invalid_argument("invalid-parameter: ET values must be >= 0");
      const double total_time = (e_norm > 0.0) ? et / e_norm : 0.0;
      CostRow row{family, et, epsilon, 0, 0.0, false};
      const double free_leak = [&] {
        const double b = operator_norm(transition_block(evolve_free(h, total_time), split));
        return b * b;
      }();
      auto leak_at = [&](int n) -> double {
        if (n == 0) return free_leak;
        switch (family) {
          case CostFamily::zeno_measurement:
            return zeno_worst_leakage(h, split, total_time, n);
          case CostFamily::periodic:
            return leakage(periodic_sequence(n), h, split, total_time).leakage;
          default:
            // n is the recursion parameter here, not the pulse count.
            return leakage(recursive_sequence(n), h, split, total_time).leakage;
        }
      };
      if (family == CostFamily::recursive) {
        for (int m = 0; pulse_count_formula(m) <= max_pulses; ++m) {
          const double l = leak_at(m);
          if (l <= epsilon) {
            row.pulses = static_cast<int>(pulse_count_formula(m));
            row.achieved = l;
            row.found = true;
            break;
          }
        }
      } else {
        for (int n = 0; n <= max_pulses; ++n) {
          const double l = leak_at(n);
          if (l <= epsilon) {
            row.pulses = n;
            row.achieved = l;
            row.found = true;
            break;
          }
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace superzeno
