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

// Instance classification and the construction pipeline:
//
//   no faults, even-sized   strip 2-factor -> merge            (cycle)
//   no faults, odd-sized    strip [1,2]-factor -> merge        (path)
//   one Even fault, odd     [1,2]-factor -> delete -> repair -> merge
//   two faults, even        2-factor -> delete -> repair -> merge
//
// The pipeline is run in each symmetry frame of the instance, in an order
// that depends only on the instance's orbit, so that results commute with
// the grid symmetries. In Auto mode a small instance the construction cannot
// finish is handed to the exhaustive oracle.

#ifndef HAMGRID_SOLVER_HPP_
#define HAMGRID_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hamgrid/grid.hpp"
#include "hamgrid/merger.hpp"

namespace hamgrid {

enum class InfeasibleReason {
  kOddSizeNoCycle,
  kWrongFaultColor,
  kSameColorFaults,
  kDegreeBelowTwo,
  kDisconnected,
  kOracleExhausted,
};

const char* to_string(InfeasibleReason reason) noexcept;
std::optional<InfeasibleReason> infeasible_reason_from_string(std::string_view s);

enum class Method { kConstruction, kOracleSearch };
enum class Mode { kPaper, kAuto };

struct CycleOutcome {
  std::vector<Vertex> vertices;  // closure implicit
};
struct PathOutcome {
  std::vector<Vertex> vertices;
};
struct InfeasibleOutcome {
  InfeasibleReason reason;
};
struct StuckOutcome {
  std::string stage;   // "repair", "merge", "delete" or "size"
  std::string detail;
};

using Outcome =
    std::variant<CycleOutcome, PathOutcome, InfeasibleOutcome, StuckOutcome>;

enum class ResultKind { kCycle, kPath, kNone, kStuck };
const char* to_string(ResultKind kind) noexcept;

struct HamiltonResult {
  GridSpec grid;
  Outcome outcome;
  Method method = Method::kConstruction;

  ResultKind kind() const noexcept;
  // Vertex sequence of a cycle or path; empty otherwise.
  std::span<const Vertex> vertices() const noexcept;
};

enum class Verdict { kFeasible, kInfeasible };

struct PaperCondition {
  std::string name;
  std::string statement;
  bool applicable = false;
  bool holds = false;
};

struct FeasibilityReport {
  std::vector<PaperCondition> paper_conditions;
  bool parity_ok = false;
  bool min_degree_ok = false;
  bool connected = false;
  std::optional<Vertex> witness;  // a vertex of degree < 2, when one exists
  Verdict verdict = Verdict::kFeasible;
  std::optional<InfeasibleReason> reason;

  // Named paper condition, or nullptr.
  const PaperCondition* condition(std::string_view name) const noexcept;
};

// Condition names used in FeasibilityReport::paper_conditions.
inline constexpr std::string_view kCondEvenSized = "even_sized";
inline constexpr std::string_view kCondEvenFault = "single_fault_even";
inline constexpr std::string_view kCondDiffColors = "cond1_diff_colors";
inline constexpr std::string_view kCondCornerAdjacent = "cond2_corner_adjacent";

// Sound necessary conditions for a Hamiltonian cycle (color balance, minimum
// degree, connectivity), checked in that order. The two-fault corner
// condition is reported but never decides the verdict.
FeasibilityReport feasibility(const GridSpec& g);

struct SolveOptions {
  Mode mode = Mode::kPaper;
  std::size_t oracle_threshold = 64;  // live-vertex cap for the Auto fallback
  MergeObserver observer;             // sees every separant swap
};

HamiltonResult solve(const GridSpec& g, const SolveOptions& options = {});

struct Violation {
  enum class Kind { kBounds, kFault, kDistinct, kAdjacency, kClosure, kCoverage };
  Kind kind;
  std::size_t index = 0;

  std::string message() const;
};

// Checks a cycle (closed) or path against g. Linear in the grid size.
std::optional<Violation> verify(const GridSpec& g, std::span<const Vertex> vertices,
                                bool closed);
std::optional<Violation> verify(const HamiltonResult& result);

// Cycle rotated to start at its lexicographically smallest vertex, heading
// towards the smaller of that vertex's two cycle neighbors.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle);

// Path oriented to start at its lexicographically smaller end.
std::vector<Vertex> canonical_path(std::span<const Vertex> path);

}  // namespace hamgrid

#endif  // HAMGRID_SOLVER_HPP_
