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

#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superzeno/format.hpp"

namespace superzeno {

enum class SequenceFamily { recursive, yoshida, optimal, periodic, custom };

inline const char *family_name(SequenceFamily f) {
  switch (f) {
    case SequenceFamily::recursive: return "recursive";
    case SequenceFamily::yoshida: return "yoshida";
    case SequenceFamily::optimal: return "optimal";
    case SequenceFamily::periodic: return "periodic";
    default: return "custom";
  }
}

/// A pulse schedule over a unit of total time: N pulses separated by N+1
/// interval fractions x_1..x_{N+1}, non-negative and summing to 1. x_1 is
/// the wait before the first pulse, x_{N+1} the wait after the last.
struct PulseSequence {
  std::vector<double> intervals;
  std::string label = "custom";
  SequenceFamily family = SequenceFamily::custom;
  int param = 0;
  std::optional<int> claimed_order;  // smallest r with transition amplitude O(t^r), when known

  int pulse_count() const { return static_cast<int>(intervals.size()) - 1; }

  double min_interval() const {
    double m = intervals.empty() ? 0.0 : intervals[0];
    for (double x : intervals) m = std::min(m, x);
    return m;
  }

  bool is_reflection_symmetric(double tol = 1e-12) const {
    const std::size_t n = intervals.size();
    for (std::size_t j = 0; j < n / 2; ++j) {
      if (std::abs(intervals[j] - intervals[n - 1 - j]) > tol) return false;
    }
    return true;
  }
};

namespace detail {

inline void validate_intervals(const std::vector<double> &x) {
  if (x.empty()) {
    throw std::invalid_argument("invalid-sequence: needs at least one interval");
  }
  double sum = 0.0;
  for (double v : x) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("invalid-sequence: negative or non-finite interval");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("invalid-sequence: intervals sum to " + format_real17(sum) + ", expected 1");
  }
}

}  // namespace detail

inline PulseSequence custom_sequence(std::vector<double> intervals, std::string label = "custom") {
  detail::validate_intervals(intervals);
  PulseSequence s;
  s.intervals = std::move(intervals);
  s.label = std::move(label);
  return s;
}

/// Number of pulses in the m-th recursive sequence:
/// (2^{m+1}-2)/3 for even m, (2^{m+1}-1)/3 for odd m.
inline long long pulse_count_formula(int m) {
  if (m < 0) throw std::invalid_argument("invalid-parameter: m must be >= 0");
  if (m > 60) throw std::invalid_argument("unsupported: pulse count overflows for m > 60");
  const long long p = (1LL << (m + 1));
  return (m % 2 == 0) ? (p - 2) / 3 : (p - 1) / 3;
}

/// The doubling construction: level m+1 halves level m and either inserts a
/// pulse at the seam (m even) or butts the two halves together, merging the
/// adjoining intervals (m odd). All intervals are dyadic with denominator
/// 2^m, so the arithmetic below is exact.
inline PulseSequence recursive_sequence(int m) {
  if (m < 0) throw std::invalid_argument("invalid-parameter: m must be >= 0");
  std::vector<double> x{1.0};
  for (int k = 0; k < m; ++k) {
    std::vector<double> h(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) h[i] = 0.5 * x[i];
    std::vector<double> next;
    next.reserve(2 * h.size());
    if (k % 2 == 0) {
      next.insert(next.end(), h.begin(), h.end());
      next.insert(next.end(), h.begin(), h.end());
    } else {
      next.insert(next.end(), h.begin(), h.end() - 1);
      next.push_back(h.back() + h.front());
      next.insert(next.end(), h.begin() + 1, h.end());
    }
    x = std::move(next);
  }
  PulseSequence s;
  s.intervals = std::move(x);
  s.family = SequenceFamily::recursive;
  s.param = m;
  s.claimed_order = m + 1;
  s.label = "recursive m=" + std::to_string(m);
  return s;
}

/// Reflection-symmetric tripling: given a schedule with odd suppression
/// order r, W'(t) = W(at) J W(bt) J W(at) with a = 1/(2 + 2^{1/r}),
/// b = 1 - 2a cancels the order-r term, and symmetry pushes the leading
/// term to the next odd order. Level L has 3^L - 1 pulses and order 2L+1.
inline PulseSequence yoshida_sequence(int level) {
  if (level < 0) throw std::invalid_argument("invalid-parameter: level must be >= 0");
  std::vector<double> x{1.0};
  int order = 1;
  for (int k = 0; k < level; ++k) {
    const double alpha = 1.0 / (2.0 + std::pow(2.0, 1.0 / order));
    const double beta = 1.0 - 2.0 * alpha;
    std::vector<double> next;
    next.reserve(3 * x.size());
    for (double v : x) next.push_back(alpha * v);
    for (double v : x) next.push_back(beta * v);
    for (double v : x) next.push_back(alpha * v);
    x = std::move(next);
    order += 2;
  }
  PulseSequence s;
  s.intervals = std::move(x);
  s.family = SequenceFamily::yoshida;
  s.param = level;
  s.claimed_order = order;
  s.label = "yoshida level=" + std::to_string(level);
  return s;
}

/// Minimal-pulse sequences: m pulses whose transition amplitude is
/// O(t^{m+1}). Known for m <= 5 only; no 6-pulse solution of order 7
/// exists (N_min(6) > 6). Irrational entries are computed, not typed in.
inline PulseSequence optimal_sequence(int m) {
  if (m < 0) throw std::invalid_argument("invalid-parameter: m must be >= 0");
  if (m > 5) {
    throw std::invalid_argument(
        "unsupported: optimal sequences are built in for m in 0..5 only (the classical bound N_min(6) > 6 "
        "is contradicted by search_sequence(6, 6), which finds 6-pulse order-7 solutions)");
  }
  std::vector<double> x;
  switch (m) {
    case 0: x = {1.0}; break;
    case 1: x = {0.5, 0.5}; break;
    case 2: x = {0.25, 0.5, 0.25}; break;
    case 3: {
      // Palindromic root of the fourth-order conditions, a^2 - b^2 + 2ab = 0
      // with 2a + 2b = 1; recovered independently by search_sequence(3, 3).
      const double a = (2.0 - std::sqrt(2.0)) / 4.0;
      const double b = std::sqrt(2.0) / 4.0;
      x = {a, b, b, a};
      break;
    }
    case 4: {
      const double beta = (3.0 - std::sqrt(5.0)) / 8.0;
      x = {beta, 0.25, 0.5 - 2.0 * beta, 0.25, beta};
      break;
    }
    case 5: {
      // Six intervals around five pulses. The outer pair is the smaller
      // root (2-sqrt(3))/4 = 1/4 - gamma; putting gamma = (sqrt(3)-1)/4
      // first fails the second-order condition (leading term O(t^2)),
      // which is easy to check with series_of_sequence.
      const double gamma = (std::sqrt(3.0) - 1.0) / 4.0;
      const double delta = 0.25 - gamma;
      x = {delta, gamma, 0.25, 0.25, gamma, delta};
      break;
    }
    default: break;
  }
  PulseSequence s;
  s.intervals = std::move(x);
  s.family = SequenceFamily::optimal;
  s.param = m;
  s.claimed_order = m + 1;
  s.label = "optimal m=" + std::to_string(m);
  return s;
}

/// n equispaced kicks at T/n, 2T/n, ..., T; the trailing interval is zero.
/// With this convention the first-order transition term cancels for even n.
inline PulseSequence periodic_sequence(int n) {
  if (n < 1) throw std::invalid_argument("invalid-parameter: n must be >= 1");
  std::vector<double> x(static_cast<std::size_t>(n) + 1, 1.0 / n);
  x.back() = 0.0;
  PulseSequence s;
  s.intervals = std::move(x);
  s.family = SequenceFamily::periodic;
  s.param = n;
  s.label = "periodic n=" + std::to_string(n);
  return s;
}

/// One-line text form: `label; N; x_1,...,x_{N+1}`.
inline std::string to_line(const PulseSequence &seq) {
  std::string out = seq.label + "; " + std::to_string(seq.pulse_count()) + "; ";
  for (std::size_t i = 0; i < seq.intervals.size(); ++i) {
    if (i) out += ',';
    out += format_real17(seq.intervals[i]);
  }
  return out;
}

namespace detail {

inline std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline bool parse_labeled_int(const std::string &label, const char *prefix, int *out) {
  const std::size_t n = std::string(prefix).size();
  if (label.compare(0, n, prefix) != 0) return false;
  try {
    std::size_t used = 0;
    int v = std::stoi(label.substr(n), &used);
    if (used == 0) return false;
    *out = v;
    return true;
  } catch (const std::exception &) {
    return false;
  }
}

}  // namespace detail

inline PulseSequence parse_line(const std::string &line) {
  const std::size_t s1 = line.find(';');
  const std::size_t s2 = (s1 == std::string::npos) ? std::string::npos : line.find(';', s1 + 1);
  if (s2 == std::string::npos) {
    throw std::invalid_argument("invalid-sequence: expected `label; N; x_1,...,x_{N+1}`");
  }
  const std::string label = detail::trim(line.substr(0, s1));
  const std::string count_text = detail::trim(line.substr(s1 + 1, s2 - s1 - 1));
  const std::string values = line.substr(s2 + 1);

  int n = 0;
  try {
    n = std::stoi(count_text);
  } catch (const std::exception &) {
    throw std::invalid_argument("invalid-sequence: pulse count `" + count_text + "` is not an integer");
  }

  std::vector<double> x;
  std::size_t pos = 0;
  while (pos <= values.size()) {
    std::size_t comma = values.find(',', pos);
    const std::string tok = detail::trim(values.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (tok.empty()) throw std::invalid_argument("invalid-sequence: empty interval field");
    try {
      x.push_back(std::stod(tok));
    } catch (const std::exception &) {
      throw std::invalid_argument("invalid-sequence: bad interval `" + tok + "`");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(x.size()) != n + 1) {
    throw std::invalid_argument("invalid-sequence: declared " + std::to_string(n) + " pulses but carries " +
                                std::to_string(x.size()) + " intervals");
  }
  detail::validate_intervals(x);

  PulseSequence s;
  s.intervals = std::move(x);
  s.label = label;
  int p = 0;
  if (detail::parse_labeled_int(label, "recursive m=", &p)) {
    s.family = SequenceFamily::recursive;
    s.param = p;
    s.claimed_order = p + 1;
  } else if (detail::parse_labeled_int(label, "yoshida level=", &p)) {
    s.family = SequenceFamily::yoshida;
    s.param = p;
    s.claimed_order = 2 * p + 1;
  } else if (detail::parse_labeled_int(label, "optimal m=", &p)) {
    s.family = SequenceFamily::optimal;
    s.param = p;
    s.claimed_order = p + 1;
  } else if (detail::parse_labeled_int(label, "periodic n=", &p)) {
    s.family = SequenceFamily::periodic;
    s.param = p;
  }
  return s;
}

}  // namespace superzeno
