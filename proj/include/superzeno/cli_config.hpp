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
#include <vector>

#include "superzeno/format.hpp"

namespace superzeno {

/// Bad command line. Maps to process exit code 2.
struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { gen, leak, order, compare, search, verify };

inline const char *command_name(Command c) {
  switch (c) {
    case Command::gen: return "gen";
    case Command::leak: return "leak";
    case Command::order: return "order";
    case Command::compare: return "compare";
    case Command::search: return "search";
    default: return "verify";
  }
}

enum class OutputFormat { csv, tsv };

/// Parsed command line. to_flag_string() emits the canonical form, and
/// parsing that form reproduces the config field for field.
struct RunConfig {
  Command command = Command::verify;
  std::string family = "recursive";
  int param = 0;
  int dim = 4;
  int dim_p = 2;
  std::vector<std::uint64_t> seeds;  // default 1..20
  std::vector<double> et_values{1.0};
  double epsilon = 1e-3;
  int target_order = 0;  // 0: defaults to param at execution time
  int restarts = 64;
  int max_m = 4;
  std::string output_path;  // empty means stdout
  OutputFormat format = OutputFormat::csv;

  RunConfig() {
    for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);
  }

  char separator() const { return format == OutputFormat::csv ? ',' : '\t'; }

  std::string seeds_string() const {
    std::vector<std::string> parts;
    for (auto s : seeds) parts.push_back(std::to_string(s));
    return join(parts, ',');
  }

  std::string et_string() const {
    std::vector<std::string> parts;
    for (double v : et_values) parts.push_back(format_real17(v));
    return join(parts, ',');
  }

  std::string to_flag_string() const {
    std::string s = command_name(command);
    s += " --family " + family;
    s += " --param " + std::to_string(param);
    s += " --dim " + std::to_string(dim);
    s += " --dimp " + std::to_string(dim_p);
    s += " --seeds " + seeds_string();
    s += " --et " + et_string();
    s += " --epsilon " + format_real17(epsilon);
    s += " --order " + std::to_string(target_order);
    s += " --restarts " + std::to_string(restarts);
    s += " --max-m " + std::to_string(max_m);
    if (!output_path.empty()) s += " --out " + output_path;
    s += " --format ";
    s += (format == OutputFormat::csv ? "csv" : "tsv");
    return s;
  }
};

namespace detail {

inline std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    out.push_back(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline long parse_long(const std::string &value, const std::string &flag) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception &) {
    throw FlagError("bad value for " + flag + ": `" + value + "`");
  }
}

inline double parse_double(const std::string &value, const std::string &flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception &) {
    throw FlagError("bad value for " + flag + ": `" + value + "`");
  }
}

}  // namespace detail

/// Parse everything after the program name. Accepts `--key value` and
/// `--key=value`. The gen command also accepts `gen <family> <param>`.
inline RunConfig parse_run_config(const std::vector<std::string> &args) {
  if (args.empty()) {
    throw FlagError("missing command; expected one of gen, leak, order, compare, search, verify");
  }
  RunConfig cfg;
  const std::string &cmd = args[0];
  if (cmd == "gen") cfg.command = Command::gen;
  else if (cmd == "leak") cfg.command = Command::leak;
  else if (cmd == "order") cfg.command = Command::order;
  else if (cmd == "compare") cfg.command = Command::compare;
  else if (cmd == "search") cfg.command = Command::search;
  else if (cmd == "verify") cfg.command = Command::verify;
  else throw FlagError("unknown command `" + cmd + "`; expected gen, leak, order, compare, search or verify");

  std::vector<std::string> positionals;
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string key = args[i];
    if (key.rfind("--", 0) != 0) {
      positionals.push_back(key);
      continue;
    }
    std::string value;
    const std::size_t eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= args.size()) throw FlagError("flag " + key + " needs a value");
      value = args[++i];
    }
    if (key == "--family") {
      cfg.family = value;
    } else if (key == "--param") {
      cfg.param = static_cast<int>(detail::parse_long(value, key));
    } else if (key == "--dim") {
      cfg.dim = static_cast<int>(detail::parse_long(value, key));
    } else if (key == "--dimp") {
      cfg.dim_p = static_cast<int>(detail::parse_long(value, key));
    } else if (key == "--seeds") {
      cfg.seeds.clear();
      for (const std::string &tok : detail::split_commas(value)) {
        const long v = detail::parse_long(tok, key);
        if (v < 0) throw FlagError("seeds must be non-negative");
        cfg.seeds.push_back(static_cast<std::uint64_t>(v));
      }
      if (cfg.seeds.empty()) throw FlagError("--seeds needs at least one value");
    } else if (key == "--et") {
      cfg.et_values.clear();
      for (const std::string &tok : detail::split_commas(value)) {
        cfg.et_values.push_back(detail::parse_double(tok, key));
      }
      if (cfg.et_values.empty()) throw FlagError("--et needs at least one value");
    } else if (key == "--epsilon") {
      cfg.epsilon = detail::parse_double(value, key);
    } else if (key == "--order") {
      cfg.target_order = static_cast<int>(detail::parse_long(value, key));
    } else if (key == "--restarts") {
      cfg.restarts = static_cast<int>(detail::parse_long(value, key));
    } else if (key == "--max-m") {
      cfg.max_m = static_cast<int>(detail::parse_long(value, key));
    } else if (key == "--out") {
      cfg.output_path = value;
    } else if (key == "--format") {
      if (value == "csv") cfg.format = OutputFormat::csv;
      else if (value == "tsv") cfg.format = OutputFormat::tsv;
      else throw FlagError("bad value for --format: `" + value + "` (csv or tsv)");
    } else {
      throw FlagError("unknown flag " + key);
    }
  }

  if (cfg.command == Command::gen && !positionals.empty()) {
    if (positionals.size() != 2) {
      throw FlagError("gen expects `gen <family> <param>`");
    }
    cfg.family = positionals[0];
    cfg.param = static_cast<int>(detail::parse_long(positionals[1], "param"));
  } else if (!positionals.empty()) {
    throw FlagError("unexpected argument `" + positionals[0] + "`");
  }
  return cfg;
}

}  // namespace superzeno
