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

#include <string>
#include <vector>

#include "superzeno/analysis.hpp"
#include "superzeno/evolve.hpp"
#include "superzeno/parallel.hpp"

namespace superzeno {

/// Outcome of one bound check family over many cases.
struct SuiteReport {
  std::string name;
  long cases = 0;
  long violations = 0;
  double worst_excess = -1.0;  // max over cases of (value - bound); negative when all hold strictly

  bool ok() const { return violations == 0; }
};

/// Standard verification ensemble: dims 4..8, every dim_p, `reps` seeds per
/// shape (reps = 4 gives the canonical 100 members).
inline OrderEnsemble make_bound_ensemble(std::uint64_t base_seed = 1, int reps = 4) {
  OrderEnsemble out;
  std::uint64_t index = 0;
  for (int dim = 4; dim <= 8; ++dim) {
    for (int dim_p = 1; dim_p < dim; ++dim_p) {
      for (int rep = 0; rep < reps; ++rep) {
        out.emplace_back(random_hamiltonian(dim, Prng::mix(base_seed, index), 1.0), SubspaceSplit(dim, dim_p));
        ++index;
      }
    }
  }
  return out;
}

/// Ensemble from an explicit seed list at one shape (the CLI path).
inline OrderEnsemble make_seeded_ensemble(int dim, int dim_p, const std::vector<std::uint64_t> &seeds) {
  OrderEnsemble out;
  for (std::uint64_t s : seeds) {
    out.emplace_back(random_hamiltonian(dim, s, 1.0), SubspaceSplit(dim, dim_p));
  }
  return out;
}

/// Recursive-family bound checks over (member, ET, m) cells. Each cell is
/// simulated once; the leakage bound 2^{-m(m+1)}(ET)^{2m+2} + 1e-12 and the
/// amplitude bound 2^{-m(m+1)/2}(ET)^{m+1} + 1e-10 are both checked.
/// Cells evaluate independently; results do not depend on worker count.
inline std::pair<SuiteReport, SuiteReport> leakage_amplitude_suite(const OrderEnsemble &ensemble,
                                                                   const std::vector<double> &ets, int max_m) {
  struct Cell {
    double leak_excess;
    double amp_excess;
  };
  const std::size_t n_cells = ensemble.size();
  std::vector<Cell> worst(n_cells, Cell{-1.0, -1.0});
  std::vector<PulseSequence> seqs;
  for (int m = 0; m <= max_m; ++m) seqs.push_back(recursive_sequence(m));

  parallel_for(n_cells, [&](std::size_t i) {
    const auto &[h, split] = ensemble[i];
    Cell cell{-1.0, -1.0};
    for (double et : ets) {
      const double t = et / h.norm_E();
      for (int m = 0; m <= max_m; ++m) {
        const double b = operator_norm(transition_block(compose(seqs[static_cast<std::size_t>(m)], h, split, t), split));
        const double leak = b * b;
        cell.leak_excess = std::max(cell.leak_excess, leak - recursive_leakage_bound(m, et));
        cell.amp_excess = std::max(cell.amp_excess, b - amplitude_constant_bound(m) * std::pow(et, m + 1));
      }
    }
    worst[i] = cell;
  });

  SuiteReport leak_report{"recursive-leakage-bound", 0, 0, -1.0};
  SuiteReport amp_report{"recursive-amplitude-bound", 0, 0, -1.0};
  const long per_member = static_cast<long>(ets.size()) * (max_m + 1);
  for (const Cell &cell : worst) {
    leak_report.cases += per_member;
    amp_report.cases += per_member;
    if (cell.leak_excess > 1e-12) ++leak_report.violations;
    if (cell.amp_excess > 1e-10) ++amp_report.violations;
    leak_report.worst_excess = std::max(leak_report.worst_excess, cell.leak_excess);
    amp_report.worst_excess = std::max(amp_report.worst_excess, cell.amp_excess);
  }
  return {leak_report, amp_report};
}

/// Measurement-Zeno worst-case leakage against (ET)^2/N + 1e-10.
inline SuiteReport zeno_bound_suite(const OrderEnsemble &ensemble, double et, int n_lo, int n_hi) {
  SuiteReport report{"zeno-leakage-bound", 0, 0, -1.0};
  std::vector<double> excess(ensemble.size(), -1.0);
  parallel_for(ensemble.size(), [&](std::size_t i) {
    const auto &[h, split] = ensemble[i];
    const double t = et / h.norm_E();
    double worst = -1.0;
    for (int n = n_lo; n <= n_hi; ++n) {
      const double leak = zeno_worst_leakage(h, split, t, n);
      worst = std::max(worst, leak - et * et / n);
    }
    excess[i] = worst;
  });
  for (double e : excess) {
    report.cases += n_hi - n_lo + 1;
    if (e > 1e-10) ++report.violations;
    report.worst_excess = std::max(report.worst_excess, e);
  }
  return report;
}

/// Even-count periodic kicks: amplitude against (ET)^2/N + 1e-10 and
/// leakage against (ET)^4/N^2 + 1e-10.
inline SuiteReport periodic_bound_suite(const OrderEnsemble &ensemble, const std::vector<double> &ets,
                                        int n_hi) {
  SuiteReport report{"periodic-even-bound", 0, 0, -1.0};
  std::vector<double> excess(ensemble.size(), -1.0);
  std::vector<PulseSequence> seqs;
  for (int n = 2; n <= n_hi; n += 2) seqs.push_back(periodic_sequence(n));
  parallel_for(ensemble.size(), [&](std::size_t i) {
    const auto &[h, split] = ensemble[i];
    double worst = -1.0;
    for (double et : ets) {
      const double t = et / h.norm_E();
      for (const PulseSequence &seq : seqs) {
        const double b = operator_norm(transition_block(compose(seq, h, split, t), split));
        const double n = seq.param;
        worst = std::max(worst, b - et * et / n);
        worst = std::max(worst, b * b - std::pow(et, 4) / (n * n));
      }
    }
    excess[i] = worst;
  });
  for (double e : excess) {
    report.cases += static_cast<long>(ets.size()) * static_cast<long>(seqs.size());
    if (e > 1e-10) ++report.violations;
    report.worst_excess = std::max(report.worst_excess, e);
  }
  return report;
}

/// Pair-cancellation inequalities for projector splits: with J = Q - P,
///   |Q U J U P| <= 2 |Q U P| min(1, |U - I|)   for unitary U,
///   |Q V V P|   <= 2 |Q V P| min(1, |V - J|)   for unitary V.
/// Instances alternate Haar unitaries and short-time exponentials so both
/// branches of the min are exercised.
inline std::pair<SuiteReport, SuiteReport> inequality_suite(long count, std::uint64_t seed) {
  SuiteReport r11{"pair-inequality-U", 0, 0, -1.0};
  SuiteReport r12{"pair-inequality-V", 0, 0, -1.0};
  Prng rng(seed);
  for (long i = 0; i < count; ++i) {
    const int dim = 2 + static_cast<int>(rng.raw() % 7);
    const int dim_p = 1 + static_cast<int>(rng.raw() % static_cast<unsigned>(dim - 1));
    SubspaceSplit split(dim, dim_p);
    CMatrix u;
    if (i % 2 == 0) {
      u = random_unitary(dim, rng);
    } else {
      Hamiltonian h = random_hamiltonian(dim, rng.raw(), 1.0);
      u = evolve_free(h, rng.uniform() * 1.5);
    }

    const double lhs11 = operator_norm(split.Q() * u * split.J() * u * split.P());
    const double rhs11 = 2.0 * operator_norm(split.Q() * u * split.P()) *
                         std::min(1.0, operator_norm(u - CMatrix::Identity(dim, dim)));
    ++r11.cases;
    r11.worst_excess = std::max(r11.worst_excess, lhs11 - rhs11);
    if (lhs11 > rhs11 + 1e-10) ++r11.violations;

    CMatrix v;  // drawn independently of u; near J on odd instances
    if (i % 2 == 0) {
      v = random_unitary(dim, rng);
    } else {
      Hamiltonian h = random_hamiltonian(dim, rng.raw(), 1.0);
      v = split.J() * evolve_free(h, rng.uniform() * 1.5);
    }
    const double lhs12 = operator_norm(split.Q() * v * v * split.P());
    const double rhs12 =
        2.0 * operator_norm(split.Q() * v * split.P()) * std::min(1.0, operator_norm(v - split.J()));
    ++r12.cases;
    r12.worst_excess = std::max(r12.worst_excess, lhs12 - rhs12);
    if (lhs12 > rhs12 + 1e-10) ++r12.violations;
  }
  return {r11, r12};
}

struct CompareRow {
  std::string family;  // "periodic", "superzeno", "zeno"
  int n = 0;
  double bound = 0.0;
  double simulated = 0.0;  // worst case over the seeded ensemble
};

/// Bound-versus-simulation table for the three schedules at a fixed ET.
/// zeno and periodic run every N up to max_n; the recursive family runs at
/// its own pulse counts. Rows are sorted by family then N.
inline std::vector<CompareRow> build_compare_table(int dim, int dim_p, const std::vector<std::uint64_t> &seeds,
                                                   double et = 1.0, int max_n = 128) {
  const OrderEnsemble ensemble = make_seeded_ensemble(dim, dim_p, seeds);
  std::vector<CompareRow> rows;

  std::vector<int> recursive_ms;
  for (int m = 0; pulse_count_formula(m) <= max_n; ++m) recursive_ms.push_back(m);

  struct Task {
    const char *family;
    int n;
    int m;  // recursive parameter, -1 otherwise
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) tasks.push_back({"periodic", n, -1});
  for (int m : recursive_ms) tasks.push_back({"superzeno", static_cast<int>(pulse_count_formula(m)), m});
  for (int n = 1; n <= max_n; ++n) tasks.push_back({"zeno", n, -1});

  std::vector<CompareRow> computed(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const Task &task = tasks[i];
    CompareRow row;
    row.family = task.family;
    row.n = task.n;
    double sim = 0.0;
    if (std::string(task.family) == "zeno") {
      row.bound = et * et / task.n;
      for (const auto &[h, split] : ensemble) {
        sim = std::max(sim, zeno_worst_leakage(h, split, et / h.norm_E(), task.n));
      }
    } else if (std::string(task.family) == "periodic") {
      row.bound = std::pow(et, 4) / (static_cast<double>(task.n) * task.n);
      const PulseSequence seq = periodic_sequence(task.n);
      for (const auto &[h, split] : ensemble) {
        sim = std::max(sim, leakage(seq, h, split, et / h.norm_E()).leakage);
      }
    } else {
      row.bound = recursive_leakage_bound(task.m, et);
      const PulseSequence seq = recursive_sequence(task.m);
      for (const auto &[h, split] : ensemble) {
        sim = std::max(sim, leakage(seq, h, split, et / h.norm_E()).leakage);
      }
    }
    row.simulated = sim;
    computed[i] = std::move(row);
  });

  rows = std::move(computed);
  std::sort(rows.begin(), rows.end(), [](const CompareRow &a, const CompareRow &b) {
    if (a.family != b.family) return a.family < b.family;
    return a.n < b.n;
  });
  return rows;
}

}  // namespace superzeno
