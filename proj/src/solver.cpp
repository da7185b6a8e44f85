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

#include "hamgrid/solver.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "hamgrid/augmenter.hpp"
#include "hamgrid/factor.hpp"
#include "hamgrid/oracle.hpp"
#include "hamgrid/symmetry.hpp"

namespace hamgrid {

const char* to_string(InfeasibleReason reason) noexcept {
  switch (reason) {
    case InfeasibleReason::kOddSizeNoCycle: return "OddSizeNoCycle";
    case InfeasibleReason::kWrongFaultColor: return "WrongFaultColor";
    case InfeasibleReason::kSameColorFaults: return "SameColorFaults";
    case InfeasibleReason::kDegreeBelowTwo: return "DegreeBelowTwo";
    case InfeasibleReason::kDisconnected: return "Disconnected";
    case InfeasibleReason::kOracleExhausted: return "OracleExhausted";
  }
  return "Unknown";
}

std::optional<InfeasibleReason> infeasible_reason_from_string(std::string_view s) {
  for (auto r : {InfeasibleReason::kOddSizeNoCycle, InfeasibleReason::kWrongFaultColor,
                 InfeasibleReason::kSameColorFaults, InfeasibleReason::kDegreeBelowTwo,
                 InfeasibleReason::kDisconnected, InfeasibleReason::kOracleExhausted}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

const char* to_string(ResultKind kind) noexcept {
  switch (kind) {
    case ResultKind::kCycle: return "cycle";
    case ResultKind::kPath: return "path";
    case ResultKind::kNone: return "none";
    case ResultKind::kStuck: return "stuck";
  }
  return "unknown";
}

ResultKind HamiltonResult::kind() const noexcept {
  switch (outcome.index()) {
    case 0: return ResultKind::kCycle;
    case 1: return ResultKind::kPath;
    case 2: return ResultKind::kNone;
    default: return ResultKind::kStuck;
  }
}

std::span<const Vertex> HamiltonResult::vertices() const noexcept {
  if (const auto* c = std::get_if<CycleOutcome>(&outcome)) return c->vertices;
  if (const auto* p = std::get_if<PathOutcome>(&outcome)) return p->vertices;
  return {};
}

const PaperCondition* FeasibilityReport::condition(std::string_view name) const noexcept {
  for (const auto& c : paper_conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

FeasibilityReport feasibility(const GridSpec& g) {
  FeasibilityReport report;
  const auto faults = g.faults();

  report.paper_conditions.push_back(
      {std::string(kCondEvenSized), "fault-free grid is even-sized",
       faults.empty(), g.even_sized()});
  report.paper_conditions.push_back(
      {std::string(kCondEvenFault), "the single fault is an Even vertex",
       faults.size() == 1,
       faults.size() == 1 && color(faults[0]) == Color::kEven});
  const bool two = faults.size() == 2;
  report.paper_conditions.push_back(
      {std::string(kCondDiffColors), "the two faults have different colors", two,
       two && color(faults[0]) != color(faults[1])});
  const bool corner = two && (g.is_corner(faults[0]) || g.is_corner(faults[1]));
  report.paper_conditions.push_back(
      {std::string(kCondCornerAdjacent),
       "a corner fault has the other fault next to it", two,
       two && (!corner || manhattan(faults[0], faults[1]) == 1)});

  const auto fail = [&](InfeasibleReason r) {
    report.verdict = Verdict::kInfeasible;
    report.reason = r;
    return report;
  };

  // (a) A cycle alternates colors, so it needs as many Even as Odd vertices.
  std::size_t even = (g.vertex_count() + 1) / 2;
  for (Vertex f : faults) even -= color(f) == Color::kEven ? 1 : 0;
  const std::size_t odd = g.live_count() - even;
  if (g.live_count() % 2 != 0) return fail(InfeasibleReason::kOddSizeNoCycle);
  if (even != odd) {
    return fail(faults.size() == 1 ? InfeasibleReason::kWrongFaultColor
                                   : InfeasibleReason::kSameColorFaults);
  }
  report.parity_ok = true;

  // (b) Every vertex on a cycle has two cycle neighbors.
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex v = g.vertex_at(i);
    if (g.is_fault(v)) continue;
    if (live_neighbors_unchecked(g, v).size() < 2) {
      report.witness = v;
      return fail(InfeasibleReason::kDegreeBelowTwo);
    }
  }
  report.min_degree_ok = true;

  // (c) Connectivity of the live graph.
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < g.vertex_count() && stack.empty(); ++i) {
    if (!g.is_fault(g.vertex_at(i))) {
      stack.push_back(g.vertex_at(i));
      seen[i] = 1;
    }
  }
  std::size_t reached = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : live_neighbors_unchecked(g, v)) {
      if (!seen[g.index(w)]) {
        seen[g.index(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  if (reached != g.live_count()) return fail(InfeasibleReason::kDisconnected);
  report.connected = true;
  return report;
}

std::string Violation::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kBounds: os << "bounds at index " << index; break;
    case Kind::kFault: os << "fault at index " << index; break;
    case Kind::kDistinct: os << "distinctness at index " << index; break;
    case Kind::kAdjacency: os << "adjacency at index " << index; break;
    case Kind::kClosure: os << "closure"; break;
    case Kind::kCoverage: os << "coverage"; break;
  }
  return os.str();
}

std::optional<Violation> verify(const GridSpec& g, std::span<const Vertex> vertices,
                                bool closed) {
  using Kind = Violation::Kind;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (!g.in_bounds(v)) return Violation{Kind::kBounds, i};
    if (g.is_fault(v)) return Violation{Kind::kFault, i};
    if (seen[g.index(v)]) return Violation{Kind::kDistinct, i};
    seen[g.index(v)] = 1;
  }
  if (vertices.size() != g.live_count()) return Violation{Kind::kCoverage, 0};
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (manhattan(vertices[i], vertices[i + 1]) != 1) {
      return Violation{Kind::kAdjacency, i};
    }
  }
  if (closed && (vertices.size() < 3 ||
                 manhattan(vertices.back(), vertices.front()) != 1)) {
    return Violation{Kind::kClosure, vertices.size() - 1};
  }
  return std::nullopt;
}

std::optional<Violation> verify(const HamiltonResult& result) {
  switch (result.kind()) {
    case ResultKind::kCycle: return verify(result.grid, result.vertices(), true);
    case ResultKind::kPath: return verify(result.grid, result.vertices(), false);
    default: return std::nullopt;
  }
}

std::vector<Vertex> canonical_cycle(std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return {cycle.begin(), cycle.end()};
  const std::size_t n = cycle.size();
  const std::size_t at =
      static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const bool forward = cycle[(at + 1) % n] < cycle[(at + n - 1) % n];
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(forward ? cycle[(at + k) % n] : cycle[(at + n - k) % n]);
  }
  return out;
}

std::vector<Vertex> canonical_path(std::span<const Vertex> path) {
  std::vector<Vertex> out(path.begin(), path.end());
  if (out.size() > 1 && out.back() < out.front()) std::reverse(out.begin(), out.end());
  return out;
}

namespace {

struct Frame {
  Symmetry symmetry;
  GridSpec image;
};

// The distinct images of g under the grid symmetries, ordered by
// (cols, rows, faults). The order depends only on the orbit of g.
std::vector<Frame> frames_of(const GridSpec& g) {
  std::vector<Frame> frames;
  for (const Symmetry& s : all_symmetries()) {
    GridSpec image = apply(s, g);
    const bool duplicate = std::any_of(frames.begin(), frames.end(),
                                       [&](const Frame& f) { return f.image == image; });
    if (!duplicate) frames.push_back({s, std::move(image)});
  }
  const auto key = [](const GridSpec& h) {
    return std::make_tuple(h.cols(), h.rows(),
                           std::vector<Vertex>(h.faults().begin(), h.faults().end()));
  };
  std::stable_sort(frames.begin(), frames.end(), [&](const Frame& a, const Frame& b) {
    return key(a.image) < key(b.image);
  });
  return frames;
}

struct Attempt {
  std::optional<Component> component;
  std::string stage;
  std::string detail;
};

std::string describe_stuck(const MergeStuck& stuck) {
  std::ostringstream os;
  os << stuck.residual.size() << " components without separants";
  return os.str();
}

// One run of the pipeline inside a frame whose grid is `h`.
Attempt construct(const GridSpec& h, const SolveOptions& options) {
  Attempt out;
  if (h.fault_count() == 0) {
    const Factor f =
        h.even_sized() ? strip_two_factor(h) : strip_one_two_factor(h);
    MergeResult merged = merge_all(f, options.observer);
    if (auto* c = std::get_if<Component>(&merged.outcome)) {
      out.component = std::move(*c);
    } else {
      out.stage = "merge";
      out.detail = describe_stuck(std::get<MergeStuck>(merged.outcome));
    }
    return out;
  }

  const GridSpec base = h.without_faults();
  const Factor f = h.fault_count() == 1 ? strip_one_two_factor(base)
                                        : strip_two_factor(base);
  std::optional<SpanningSubgraph> m;
  try {
    m = delete_faults(f, h.faults());
  } catch (const Error& e) {
    out.stage = "delete";
    out.detail = e.what();
    return out;
  }

  std::size_t stuck_merges = 0;
  const FactorFilter accept = [&](const Factor& two_factor) {
    MergeResult merged = merge_all(two_factor, options.observer);
    if (auto* c = std::get_if<Component>(&merged.outcome)) {
      out.component = std::move(*c);
      return true;
    }
    ++stuck_merges;
    return false;
  };
  const auto repaired = repair_to_two_factor(*m, RepairOptions{}, accept);
  if (const auto* failed = std::get_if<RepairFailed>(&repaired)) {
    std::ostringstream os;
    os << failed->attempts << " augmentations, " << failed->two_factors
       << " 2-factors rejected, smallest sigma " << failed->sigma_left;
    out.stage = stuck_merges > 0 ? "merge" : "repair";
    out.detail = os.str();
  }
  return out;
}

bool pipeline_applies(const GridSpec& g) {
  if (g.fault_count() == 2) return std::min(g.cols(), g.rows()) >= 4;
  return true;
}

HamiltonResult finish(const GridSpec& g, Outcome outcome, Method method) {
  HamiltonResult result{g, std::move(outcome), method};
  if (auto v = verify(result)) {
    // Never hand out an unverified cycle or path.
    result.outcome = StuckOutcome{"verify", v->message()};
  }
  return result;
}

}  // namespace

HamiltonResult solve(const GridSpec& g, const SolveOptions& options) {
  const bool path_case = g.fault_count() == 0 && !g.even_sized();
  if (!path_case) {
    const FeasibilityReport report = feasibility(g);
    if (report.verdict == Verdict::kInfeasible) {
      return HamiltonResult{g, InfeasibleOutcome{*report.reason},
                            Method::kConstruction};
    }
  }

  std::vector<std::string> failures;
  if (pipeline_applies(g)) {
    for (const Frame& frame : frames_of(g)) {
      Attempt attempt = construct(frame.image, options);
      if (!attempt.component) {
        failures.push_back(attempt.stage + ": " + attempt.detail);
        continue;
      }
      std::vector<Vertex> original;
      original.reserve(attempt.component->vertices.size());
      for (Vertex v : attempt.component->vertices) {
        original.push_back(invert(frame.symmetry, g.cols(), g.rows(), v));
      }
      if (path_case) {
        return finish(g, PathOutcome{canonical_path(original)}, Method::kConstruction);
      }
      return finish(g, CycleOutcome{canonical_cycle(original)}, Method::kConstruction);
    }
  } else {
    failures.push_back("size: two-fault construction needs both dimensions >= 4");
  }

  std::string stage = failures.empty() ? "size" : failures.front().substr(0, failures.front().find(':'));
  std::ostringstream detail;
  detail << failures.size() << " frame(s) failed";
  if (!failures.empty()) detail << "; first: " << failures.front();

  if (options.mode == Mode::kAuto && g.live_count() <= options.oracle_threshold) {
    const OracleCycle found = oracle_cycle(g, OracleOptions{options.oracle_threshold, true});
    if (found.cycle) {
      return finish(g, CycleOutcome{canonical_cycle(*found.cycle)}, Method::kOracleSearch);
    }
    return HamiltonResult{g, InfeasibleOutcome{InfeasibleReason::kOracleExhausted},
                          Method::kOracleSearch};
  }
  return HamiltonResult{g, StuckOutcome{stage, detail.str()}, Method::kConstruction};
}

}  // namespace hamgrid
