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

#include "hamgrid/augmenter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hamgrid {

namespace {

constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);

// Breadth-first alternating search from `start`. Because the grid is
// bipartite, a vertex's distance parity from `start` is fixed by its color,
// so one visit per vertex suffices and tree paths are simple.
class AlternatingSearch {
 public:
  AlternatingSearch(const SpanningSubgraph& m, Vertex start)
      : m_(m), g_(m.grid()), parent_(g_.vertex_count(), kUnseen),
        depth_(g_.vertex_count(), 0), start_(start) {
    parent_[g_.index(start)] = g_.index(start);
    queue_.push_back(start);
  }

  // Next augmenting-path target in discovery order, if any.
  std::optional<Vertex> next_target() {
    while (!queue_.empty() || !pending_.empty()) {
      if (!pending_.empty()) {
        const Vertex t = pending_.front();
        pending_.pop_front();
        return t;
      }
      const Vertex u = queue_.front();
      queue_.pop_front();
      const std::size_t d = depth_[g_.index(u)];
      const Neighbors next = d % 2 == 0 ? blue_neighbors(u) : m_.member_neighbors(u);
      for (Vertex w : next) {
        const std::size_t wi = g_.index(w);
        if (parent_[wi] != kUnseen) continue;
        parent_[wi] = g_.index(u);
        depth_[wi] = d + 1;
        if ((d + 1) % 2 == 1 && m_.degree(w) == 1) {
          pending_.push_back(w);  // a target ends the walk; never expanded
        } else {
          queue_.push_back(w);
        }
      }
    }
    return std::nullopt;
  }

  AugmentingPath path_to(Vertex target) const {
    AugmentingPath p;
    std::size_t i = g_.index(target);
    const std::size_t root = g_.index(start_);
    while (i != root) {
      p.vertices.push_back(g_.vertex_at(i));
      i = parent_[i];
    }
    p.vertices.push_back(start_);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  }

 private:
  Neighbors blue_neighbors(Vertex u) const {
    Neighbors out;
    for (Vertex w : live_neighbors_unchecked(g_, u)) {
      if (!m_.has_edge(u, w)) out.push(w);
    }
    return out;
  }

  const SpanningSubgraph& m_;
  const GridSpec& g_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> depth_;
  std::deque<Vertex> queue_;
  std::deque<Vertex> pending_;
  Vertex start_;
};

std::vector<Vertex> unfilled_vertices(const SpanningSubgraph& m) {
  std::vector<Vertex> out;
  const GridSpec& g = m.grid();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex v = g.vertex_at(i);
    if (!g.is_fault(v) && m.degree(v) == 1) out.push_back(v);
  }
  return out;
}

// Orientation-free form used to drop duplicates found from both ends.
std::vector<Vertex> normalized(std::vector<Vertex> v) {
  if (row_major_less(v.back(), v.front())) std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<std::string> check_augmenting_path(const SpanningSubgraph& m,
                                                 const AugmentingPath& p) {
  const GridSpec& g = m.grid();
  const auto& vs = p.vertices;
  if (vs.size() < 2) return "path has fewer than two vertices";
  if (vs.size() % 2 != 0) return "path has an even number of edges";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::ostringstream os;
    if (!g.is_live(vs[i])) {
      os << "vertex " << vs[i] << " at index " << i << " is not live";
      return os.str();
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vs[j] == vs[i]) {
        os << "vertex " << vs[i] << " repeats at index " << i;
        return os.str();
      }
    }
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    std::ostringstream os;
    if (manhattan(vs[i], vs[i + 1]) != 1) {
      os << "vertices at index " << i << " and " << i + 1 << " are not adjacent";
      return os.str();
    }
    const bool red = m.has_edge(vs[i], vs[i + 1]);
    if (red != (AugmentingPath::color_of_edge(i) == EdgeColor::kRed)) {
      os << "edge " << i << " has the wrong color";
      return os.str();
    }
  }
  if (m.degree(vs.front()) != 1) return "first vertex is not unfilled";
  if (m.degree(vs.back()) != 1) return "last vertex is not unfilled";
  return std::nullopt;
}

std::optional<AugmentingPath> find_augmenting_path(const SpanningSubgraph& m,
                                                   Vertex start) {
  if (!m.grid().is_live(start) || m.degree(start) != 1) {
    std::ostringstream os;
    os << "search start " << start << " is not an unfilled vertex";
    throw Error(ErrorCode::kDomain, os.str(), start);
  }
  AlternatingSearch search(m, start);
  if (auto t = search.next_target()) return search.path_to(*t);
  return std::nullopt;
}

std::vector<AugmentingPath> augmenting_path_candidates(const SpanningSubgraph& m,
                                                       std::size_t limit) {
  std::vector<AugmentingPath> out;
  std::vector<std::vector<Vertex>> seen;
  for (Vertex start : unfilled_vertices(m)) {
    if (out.size() >= limit) break;
    AlternatingSearch search(m, start);
    while (out.size() < limit) {
      const auto t = search.next_target();
      if (!t) break;
      AugmentingPath p = search.path_to(*t);
      auto key = normalized(p.vertices);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(std::move(key));
      out.push_back(std::move(p));
    }
  }
  return out;
}

SpanningSubgraph apply_augment(const SpanningSubgraph& m, const AugmentingPath& p) {
  if (auto why = check_augmenting_path(m, p)) {
    throw Error(ErrorCode::kInvalidPath, "stale augmenting path: " + *why,
                p.vertices.empty() ? Vertex{} : p.vertices.front());
  }
  SpanningSubgraph out = m;
  const auto& vs = p.vertices;
  for (std::size_t i = 1; i + 1 < vs.size(); i += 2) {
    out.remove(Edge::between(vs[i], vs[i + 1]));
  }
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) {
    out.add(Edge::between(vs[i], vs[i + 1]));
  }
  return out;
}

namespace {

class Repairer {
 public:
  Repairer(const RepairOptions& options, const FactorFilter& accept)
      : options_(options), accept_(accept) {}

  std::optional<Factor> run(const SpanningSubgraph& m) {
    const std::size_t s = sigma(m);
    failed_.sigma_left = std::min(failed_.sigma_left, s);
    if (s == 0) {
      Factor f = Factor::from_subgraph(m);
      if (!accept_ || accept_(f)) return f;
      ++failed_.two_factors;
      return std::nullopt;
    }
    const std::vector<Vertex> open = unfilled_vertices(m);
    std::vector<AugmentingPath> tried;
    if (auto first = find_augmenting_path(m, open.front())) {
      tried.push_back(*first);
      if (auto f = attempt(m, *first)) return f;
    }
    if (options_.alternatives <= tried.size()) return std::nullopt;
    for (const AugmentingPath& p :
         augmenting_path_candidates(m, options_.alternatives)) {
      if (!tried.empty() && p == tried.front()) continue;
      if (auto f = attempt(m, p)) return f;
    }
    return std::nullopt;
  }

  RepairFailed failure() const { return failed_; }

 private:
  std::optional<Factor> attempt(const SpanningSubgraph& m, const AugmentingPath& p) {
    ++failed_.attempts;
    return run(apply_augment(m, p));
  }

  const RepairOptions& options_;
  const FactorFilter& accept_;
  RepairFailed failed_{0, 0, static_cast<std::size_t>(-1)};
};

}  // namespace

std::variant<Factor, RepairFailed> repair_to_two_factor(const SpanningSubgraph& m,
                                                        const RepairOptions& options,
                                                        const FactorFilter& accept) {
  const std::size_t s = sigma(m);
  if (s % 2 != 0) {
    throw Error(ErrorCode::kDomain, "sigma is odd; no 2-factor repair exists");
  }
  Repairer repairer(options, accept);
  if (auto f = repairer.run(m)) return std::move(*f);
  return repairer.failure();
}

}  // namespace hamgrid
