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

// Command-line front end for the pulse-sequence library.
//
//   szcli gen <family> <param>           print one sequence line
//   szcli leak ...                       leakage reports over seeds x ET
//   szcli order ...                      suppression-order estimates
//   szcli compare ...                    bound vs simulated leakage curves
//   szcli search ...                     order-condition sequence search
//   szcli verify ...                     amplitude-constant table + bound suites
//
// Exit codes: 0 success, 1 a bound/agreement check failed, 2 bad flags,
// 3 output I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "superzeno/superzeno.hpp"

namespace {

using namespace superzeno;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitIoError = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PulseSequence sequence_from_family(const std::string &family, int param) {
  if (family == "recursive") return recursive_sequence(param);
  if (family == "yoshida") return yoshida_sequence(param);
  if (family == "optimal") return optimal_sequence(param);
  if (family == "periodic") return periodic_sequence(param);
  throw FlagError("unknown family `" + family + "`; expected recursive, yoshida, optimal or periodic");
}

void write_header(std::ostream &os, const RunConfig &cfg) {
  os << "# szcli " << kVersion << "\n";
  os << "# flags: " << cfg.to_flag_string() << "\n";
  os << "# seeds: " << cfg.seeds_string() << "\n";
}

int run_gen(const RunConfig &cfg, std::ostream &os) {
  PulseSequence seq;
  try {
    seq = sequence_from_family(cfg.family, cfg.param);
  } catch (const FlagError &) {
    throw;
  } catch (const std::exception &e) {
    // Out-of-range parameter for a known family; the message names the valid range.
    throw FlagError(e.what());
  }
  os << to_line(seq) << "\n";
  return kExitOk;
}

int run_leak(const RunConfig &cfg, std::ostream &os) {
  const PulseSequence seq = sequence_from_family(cfg.family, cfg.param);
  const char sep = cfg.separator();
  write_header(os, cfg);
  os << "label" << sep << "ET" << sep << "N" << sep << "b_norm" << sep << "leakage" << sep << "bound" << sep
     << "satisfied\n";
  bool all_ok = true;
  const SubspaceSplit split(cfg.dim, cfg.dim_p);
  for (std::uint64_t seed : cfg.seeds) {
    const Hamiltonian h = random_hamiltonian(cfg.dim, seed, 1.0);
    for (double et : cfg.et_values) {
      const LeakageReport rep = leakage(seq, h, split, et / h.norm_E());
      all_ok = all_ok && rep.bound_satisfied;
      os << rep.csv_row(sep) << "\n";
    }
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

int run_order(const RunConfig &cfg, std::ostream &os) {
  const PulseSequence seq = sequence_from_family(cfg.family, cfg.param);
  const char sep = cfg.separator();
  write_header(os, cfg);
  os << "label" << sep << "seed" << sep << "fitted_slope" << sep << "window_lo" << sep << "window_hi" << sep
     << "taylor_order" << sep << "agree\n";
  bool all_agree = true;
  const SubspaceSplit split(cfg.dim, cfg.dim_p);
  for (std::uint64_t seed : cfg.seeds) {
    const Hamiltonian h = random_hamiltonian(cfg.dim, seed, 1.0);
    const OrderEstimate est = estimate_order(seq, h, split);
    all_agree = all_agree && est.agree;
    os << seq.label << sep << seed << sep << format_real17(est.fitted_slope) << sep
       << format_real17(est.fit_window_et.first) << sep << format_real17(est.fit_window_et.second) << sep
       << est.taylor_order << sep << (est.agree ? '1' : '0') << "\n";
  }
  return all_agree ? kExitOk : kExitCheckFailed;
}

int run_compare(const RunConfig &cfg, std::ostream &os) {
  const char sep = cfg.separator();
  write_header(os, cfg);
  os << "family" << sep << "N" << sep << "bound_leakage" << sep << "simulated_leakage\n";
  const double et = cfg.et_values.empty() ? 1.0 : cfg.et_values.front();
  for (const CompareRow &row : build_compare_table(cfg.dim, cfg.dim_p, cfg.seeds, et)) {
    os << row.family << sep << row.n << sep << format_real17(row.bound) << sep << format_real17(row.simulated)
       << "\n";
  }
  return kExitOk;
}

int run_search(const RunConfig &cfg, std::ostream &os) {
  const int n_pulses = cfg.param;
  const int target = cfg.target_order > 0 ? cfg.target_order : cfg.param;
  const std::uint64_t seed = cfg.seeds.empty() ? 1 : cfg.seeds.front();
  const SearchResult result = search_sequence(n_pulses, target, cfg.restarts, seed);
  write_header(os, cfg);
  os << "# restarts: " << result.restarts << ", distinct solutions: " << result.solutions.size()
     << ", successes: " << result.success_count << "\n";
  if (result.solutions.empty()) {
    os << "# no solutions at n_pulses=" << n_pulses << ", target_order=" << target << " in " << result.restarts
       << " restarts; absence of solutions is evidence, not a proof\n";
  }
  int index = 0;
  for (const SearchSolution &sol : result.solutions) {
    PulseSequence seq;
    seq.intervals = sol.intervals;
    seq.label = "search n=" + std::to_string(n_pulses) + " order=" + std::to_string(target) + " sol=" +
                std::to_string(++index);
    os << to_line(seq) << "; " << format_real17(sol.residual) << "; " << (sol.success ? "success" : "suspect")
       << "\n";
  }
  return kExitOk;
}

int run_verify(const RunConfig &cfg, std::ostream &os) {
  const char sep = cfg.separator();
  write_header(os, cfg);
  const OrderEnsemble ensemble = make_seeded_ensemble(cfg.dim, cfg.dim_p, cfg.seeds);

  const KRecursionReport k_report = verify_k_recursion(cfg.max_m, ensemble);
  const auto [leak_suite, amp_suite] = leakage_amplitude_suite(ensemble, cfg.et_values, cfg.max_m);
  const SuiteReport zeno_suite = zeno_bound_suite(ensemble, 1.0, 10, 100);
  const SuiteReport periodic_suite = periodic_bound_suite(ensemble, {0.5, 1.0}, 32);
  const std::uint64_t ineq_seed = cfg.seeds.empty() ? 1 : cfg.seeds.front();
  const auto [ineq11, ineq12] = inequality_suite(500, ineq_seed);

  bool all_ok = k_report.all_ok;
  for (const SuiteReport *suite : {&leak_suite, &amp_suite, &zeno_suite, &periodic_suite, &ineq11, &ineq12}) {
    os << "# " << suite->name << ": " << (suite->cases - suite->violations) << "/" << suite->cases
       << " ok, worst excess " << format_real17(suite->worst_excess) << "\n";
    all_ok = all_ok && suite->ok();
  }

  os << "m" << sep << "K_hat" << sep << "K_bound" << sep << "ok\n";
  for (const std::string &row : k_report.csv_rows(sep)) os << row << "\n";
  return all_ok ? kExitOk : kExitCheckFailed;
}

int dispatch(const RunConfig &cfg, std::ostream &os) {
  switch (cfg.command) {
    case Command::gen: return run_gen(cfg, os);
    case Command::leak: return run_leak(cfg, os);
    case Command::order: return run_order(cfg, os);
    case Command::compare: return run_compare(cfg, os);
    case Command::search: return run_search(cfg, os);
    default: return run_verify(cfg, os);
  }
}

void print_usage(std::ostream &os) {
  os << "usage: szcli <gen|leak|order|compare|search|verify> [flags]\n"
        "  gen <family> <param>       families: recursive, yoshida, optimal, periodic\n"
        "flags:\n"
        "  --family F --param N       sequence selection\n"
        "  --dim D --dimp P           Hilbert-space and protected dimensions (default 4, 2)\n"
        "  --seeds a,b,c              Hamiltonian seeds (default 1..20)\n"
        "  --et v1,v2                 dimensionless ET values (default 1)\n"
        "  --epsilon x                leakage tolerance\n"
        "  --order r                  search target order (default: --param)\n"
        "  --restarts n               search restarts (default 64)\n"
        "  --max-m m                  verify: largest recursion parameter (default 4)\n"
        "  --out PATH --format csv|tsv\n"
        "environment: SUPERZENO_THREADS caps workers (0 = auto)\n";
}

}  // namespace

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
    print_usage(std::cout);
    return kExitOk;
  }

  RunConfig cfg;
  try {
    cfg = parse_run_config(args);
  } catch (const FlagError &e) {
    std::cerr << "szcli: " << e.what() << "\n";
    print_usage(std::cerr);
    return kExitBadFlags;
  }

  try {
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer);
    if (cfg.output_path.empty()) {
      std::cout << buffer.str();
      if (!std::cout.good()) return kExitIoError;
    } else {
      std::ofstream out(cfg.output_path, std::ios::binary);
      if (!out) {
        std::cerr << "szcli: cannot open `" << cfg.output_path << "` for writing\n";
        return kExitIoError;
      }
      out << buffer.str();
      out.flush();
      if (!out.good()) {
        std::cerr << "szcli: write to `" << cfg.output_path << "` failed\n";
        return kExitIoError;
      }
    }
    return code;
  } catch (const FlagError &e) {
    std::cerr << "szcli: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::invalid_argument &e) {
    std::cerr << "szcli: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::exception &e) {
    std::cerr << "szcli: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
