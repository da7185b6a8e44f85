// Copyright 2026 The hamgrid Authors
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

// hamgrid: command-line front end over the C API.
//
// Exit codes: 0 success, 1 usage or schema error, 2 infeasible or failed
// verification, 3 construction stuck.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamgrid/hamgrid.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitStuck = 3;

struct UsageError {
  std::string message;
};

struct GridDeleter {
  void operator()(hg_grid* g) const { hg_grid_destroy(g); }
};
struct ResultDeleter {
  void operator()(hg_result* r) const { hg_result_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { hg_string_free(s); }
};
using GridPtr = std::unique_ptr<hg_grid, GridDeleter>;
using ResultPtr = std::unique_ptr<hg_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Throws UsageError for any status other than HG_OK.
void check(hg_status status) {
  if (status != HG_OK) {
    throw UsageError{std::string(hg_status_string(status)) + ": " + hg_last_error()};
  }
}

int parse_int(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError{flag + ": expected an integer, got '" + text + "'"};
  }
  return value;
}

std::vector<std::int32_t> parse_faults(const std::vector<std::string>& specs) {
  std::vector<std::int32_t> xy;
  for (const std::string& s : specs) {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
      throw UsageError{"--fault: expected x,y, got '" + s + "'"};
    }
    try {
      xy.push_back(parse_int(s.substr(0, comma), "--fault"));
      xy.push_back(parse_int(s.substr(comma + 1), "--fault"));
    } catch (const UsageError&) {
      throw UsageError{"--fault: expected x,y, got '" + s + "'"};
    }
  }
  return xy;
}

// "a..b" or a single value "a".
std::pair<int, int> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text, flag);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), flag), parse_int(text.substr(dots + 2), flag)};
}

std::vector<std::int32_t> parse_list(const std::string& text, const std::string& flag) {
  std::vector<std::int32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, flag));
  if (out.empty()) throw UsageError{flag + ": expected a comma-separated list"};
  return out;
}

hg_format parse_format(const std::string& name) {
  if (name == "ascii") return HG_FORMAT_ASCII;
  if (name == "svg") return HG_FORMAT_SVG;
  return HG_FORMAT_JSON;
}

GridPtr make_grid(int cols, int rows, const std::vector<std::string>& faults) {
  const auto xy = parse_faults(faults);
  hg_grid* g = nullptr;
  check(hg_grid_create(cols, rows, xy.data(), xy.size() / 2, &g));
  return GridPtr(g);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError{"--output: cannot write '" + output + "'"};
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string render(const hg_result* r, hg_format format) {
  char* raw = nullptr;
  check(hg_result_render(r, format, &raw));
  return StringPtr(raw).get();
}

int exit_for(const hg_result* r) {
  switch (hg_result_get_kind(r)) {
    case HG_RESULT_CYCLE:
    case HG_RESULT_PATH:
      return kExitOk;
    case HG_RESULT_NONE:
      return kExitInfeasible;
    case HG_RESULT_STUCK:
      break;
  }
  return kExitStuck;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct SolveArgs {
  int cols = 0;
  int rows = 0;
  std::vector<std::string> faults;
  std::string mode = "paper";
  std::string format = "json";
  std::string output;
  std::size_t oracle_threshold = 64;
};

int run_solve(const SolveArgs& a) {
  const GridPtr grid = make_grid(a.cols, a.rows, a.faults);
  hg_result* raw = nullptr;
  check(hg_solve(grid.get(), a.mode == "auto" ? HG_MODE_AUTO : HG_MODE_PAPER,
                 a.oracle_threshold, &raw));
  const ResultPtr result(raw);
  emit(render(result.get(), parse_format(a.format)), a.output);
  return exit_for(result.get());
}

int run_verify(const std::string& input) {
  const std::string text = read_input(input);
  char* raw = nullptr;
  const hg_status status = hg_verify_document(text.c_str(), &raw);
  const StringPtr violation(raw);
  if (status == HG_OK) {
    std::cout << "ok\n";
    return kExitOk;
  }
  if (status == HG_ERR_VERIFY_FAILED) {
    std::cout << "violation: " << (violation ? violation.get() : hg_last_error()) << '\n';
    return kExitInfeasible;
  }
  check(status);
  return kExitUsage;
}

struct OracleArgs {
  int cols = 0;
  int rows = 0;
  std::vector<std::string> faults;
  bool count = false;
  std::size_t cap = 0;
  std::string format = "json";
};

int run_oracle(const OracleArgs& a) {
  const GridPtr grid = make_grid(a.cols, a.rows, a.faults);
  if (a.count) {
    std::uint64_t n = 0;
    check(hg_oracle_count(grid.get(), a.cap, &n));
    std::cout << n << '\n';
    return kExitOk;
  }
  hg_result* raw = nullptr;
  check(hg_oracle_cycle(grid.get(), a.cap, &raw));
  const ResultPtr result(raw);
  emit(render(result.get(), parse_format(a.format)), "");
  return exit_for(result.get());
}

struct CensusArgs {
  std::string cols;
  std::string rows;
  int faults = 0;
  unsigned threads = 0;
  std::size_t cap = 64;
  std::string output;
};

int run_census(const CensusArgs& a) {
  const auto [cmin, cmax] = parse_range(a.cols, "--cols");
  const auto [rmin, rmax] = parse_range(a.rows, "--rows");
  const hg_census_request request{cmin, cmax, rmin, rmax, a.faults, a.threads, a.cap};
  char* raw = nullptr;
  check(hg_census_csv(&request, &raw));
  const StringPtr csv(raw);
  emit(csv.get(), a.output);
  return kExitOk;
}

struct BenchArgs {
  std::string sizes = "64,128,256,512";
  int reps = 3;
  std::string output;
};

int run_bench(const BenchArgs& a) {
  const auto sizes = parse_list(a.sizes, "--sizes");
  char* raw = nullptr;
  double exponent = 0;
  check(hg_bench_csv(sizes.data(), sizes.size(), a.reps, &raw, &exponent));
  const StringPtr csv(raw);
  emit(csv.get(), a.output);
  if (sizes.size() >= 2) std::cerr << "fitted exponent (two-fault time vs side): " << exponent << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian cycles and paths in grid graphs with up to two faults", "hamgrid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hg_version());

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "construct a Hamiltonian cycle or path");
  cmd_solve->add_option("--cols", solve.cols, "number of columns (m)")->required();
  cmd_solve->add_option("--rows", solve.rows, "number of rows (n)")->required();
  cmd_solve->add_option("--fault", solve.faults, "faulty vertex x,y (repeatable)")
      ->allow_extra_args(false);
  cmd_solve->add_option("--mode", solve.mode, "paper or auto")
      ->check(CLI::IsMember({"paper", "auto"}));
  cmd_solve->add_option("--format", solve.format, "json, ascii or svg")
      ->check(CLI::IsMember({"json", "ascii", "svg"}));
  cmd_solve->add_option("--output,-o", solve.output, "output file (default stdout)");
  cmd_solve->add_option("--oracle-threshold", solve.oracle_threshold,
                        "live-vertex cap for the exhaustive fallback in auto mode")
      ->check(CLI::PositiveNumber);

  std::string verify_input = "-";
  auto* cmd_verify = app.add_subcommand("verify", "check a JSON result document");
  cmd_verify->add_option("input", verify_input, "document path, or - for stdin");

  OracleArgs oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive search on a small grid");
  cmd_oracle->add_option("--cols", oracle.cols, "number of columns (m)")->required();
  cmd_oracle->add_option("--rows", oracle.rows, "number of rows (n)")->required();
  cmd_oracle->add_option("--fault", oracle.faults, "faulty vertex x,y (repeatable)")
      ->allow_extra_args(false);
  cmd_oracle->add_flag("--count", oracle.count, "count Hamiltonian cycles instead");
  cmd_oracle->add_option("--cap", oracle.cap, "live-vertex cap (default 64, 36 with --count)");
  cmd_oracle->add_option("--format", oracle.format, "json, ascii or svg")
      ->check(CLI::IsMember({"json", "ascii", "svg"}));

  CensusArgs census;
  auto* cmd_census = app.add_subcommand("census", "oracle vs solver over all placements");
  cmd_census->add_option("--cols", census.cols, "column range a..b")->required();
  cmd_census->add_option("--rows", census.rows, "row range a..b")->required();
  cmd_census->add_option("--faults", census.faults, "faults per instance (0, 1 or 2)")
      ->check(CLI::Range(0, 2));
  cmd_census->add_option("--threads", census.threads, "worker threads (default: all cores)");
  cmd_census->add_option("--cap", census.cap, "oracle live-vertex cap")
      ->check(CLI::PositiveNumber);
  cmd_census->add_option("--output,-o", census.output, "output file (default stdout)");

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "time the construction on square grids");
  cmd_bench->add_option("--sizes", bench.sizes, "comma-separated side lengths");
  cmd_bench->add_option("--reps", bench.reps, "repetitions per size")
      ->check(CLI::PositiveNumber);
  cmd_bench->add_option("--output,-o", bench.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_solve) return run_solve(solve);
    if (*cmd_verify) return run_verify(verify_input);
    if (*cmd_oracle) return run_oracle(oracle);
    if (*cmd_census) return run_census(census);
    if (*cmd_bench) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "hamgrid: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
