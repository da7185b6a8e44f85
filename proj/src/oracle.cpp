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

#include "hamgrid/oracle.hpp"

#include <sstream>

namespace hamgrid {

namespace {

// Live vertices renumbered densely; the start vertex is node 0.
struct Graph {
  std::vector<Vertex> at;
  std::vector<std::vector<int>> adj;  // E, N, W, S
  std::vector<bool> even;
};

Graph build(const GridSpec& g) {
  Graph out;
  std::vector<int> id(g.vertex_count(), -1);
  for (int x = 0; x < g.cols(); ++x) {
    for (int y = 0; y < g.rows(); ++y) {
      const Vertex v{x, y};  // lexicographic, so node 0 is the smallest
      if (g.is_fault(v)) continue;
      id[g.index(v)] = static_cast<int>(out.at.size());
      out.at.push_back(v);
      out.even.push_back(color(v) == Color::kEven);
    }
  }
  out.adj.resize(out.at.size());
  for (std::size_t i = 0; i < out.at.size(); ++i) {
    for (Vertex w : live_neighbors_unchecked(g, out.at[i])) {
      out.adj[i].push_back(id[g.index(w)]);
    }
  }
  return out;
}

class Search {
 public:
  Search(const Graph& graph, bool pruning, bool count_all)
      : g_(graph), n_(static_cast<int>(graph.at.size())), pruning_(pruning),
        count_all_(count_all), visited_(n_, false), avail_(n_, 0) {}

  void run() {
    if (n_ < 3) return;
    if (pruning_) {
      int even = 0;
      for (bool e : g_.even) even += e ? 1 : 0;
      if (2 * even != n_) return;
      for (int v = 0; v < n_; ++v) {
        if (g_.adj[v].size() < 2) return;
      }
    }
    for (int v = 0; v < n_; ++v) avail_[v] = static_cast<int>(g_.adj[v].size());
    for (bool e : g_.even) (e ? left_even_ : left_odd_) += 1;
    visit(0);
    extend(0);
  }

  std::uint64_t cycles() const { return directed_ / 2; }
  const std::optional<std::vector<int>>& first() const { return first_; }
  SearchStats& stats() { return stats_; }

 private:
  bool done() const { return !count_all_ && first_.has_value(); }

  void visit(int v) {
    visited_[v] = true;
    path_.push_back(v);
    (g_.even[v] ? left_even_ : left_odd_) -= 1;
  }

  void unvisit(int v) {
    visited_[v] = false;
    path_.pop_back();
    (g_.even[v] ? left_even_ : left_odd_) += 1;
  }

  bool adjacent(int a, int b) const {
    for (int w : g_.adj[a]) {
      if (w == b) return true;
    }
    return false;
  }

  void extend(int head) {
    if (done()) return;
    if (static_cast<int>(path_.size()) == n_) {
      if (adjacent(head, 0)) {
        ++directed_;
        if (!first_) first_ = path_;
      }
      return;
    }

    int forced = -1;
    if (pruning_ && head != 0) {
      if (!feasible(head)) return;
      for (int w : g_.adj[head]) {
        if (visited_[w] || avail_[w] != 2) continue;
        if (forced != -1) return;  // two neighbors both need the head
        forced = w;
      }
      if (forced != -1) ++stats_.forced;
    }

    for (int w : g_.adj[head]) {
      if (visited_[w] || (forced != -1 && w != forced)) continue;
      ++stats_.nodes;
      step(head, w);
      if (done()) return;
    }
  }

  // Moves the head from h to w, recurses, and restores state.
  void step(int h, int w) {
    visit(w);
    // h stops being the head; the start keeps its closing slot.
    const bool release = pruning_ && h != 0;
    bool alive = true;
    if (release) {
      for (int x : g_.adj[h]) {
        if (visited_[x]) continue;
        if (--avail_[x] < 2) alive = false;
      }
    }
    if (alive) extend(w);
    if (release) {
      for (int x : g_.adj[h]) {
        if (!visited_[x]) ++avail_[x];
      }
    }
    unvisit(w);
  }

  // Parity, closing-slot and connectivity tests on the unvisited remainder.
  bool feasible(int head) {
    const int left = left_even_ + left_odd_;
    if (left == 0) return true;
    // The rest of the cycle runs from a neighbor of head to a neighbor of 0.
    const bool first_even = !g_.even[head];
    const bool last_even = !g_.even[0];
    const int first_count = first_even ? left_even_ : left_odd_;
    const int other_count = first_even ? left_odd_ : left_even_;
    if (first_even == last_even) {
      if (first_count != other_count + 1) return false;
    } else if (first_count != other_count) {
      return false;
    }

    int need_start = 0;
    for (int w : g_.adj[0]) {
      if (!visited_[w] && avail_[w] == 2) ++need_start;
    }
    if (need_start > 1) return false;

    // The unvisited vertices must induce a connected subgraph.
    seen_.assign(n_, false);
    stack_.clear();
    int root = -1;
    for (int v = 0; v < n_ && root < 0; ++v) {
      if (!visited_[v]) root = v;
    }
    seen_[root] = true;
    stack_.push_back(root);
    int reached = 0;
    while (!stack_.empty()) {
      const int v = stack_.back();
      stack_.pop_back();
      ++reached;
      for (int w : g_.adj[v]) {
        if (!visited_[w] && !seen_[w]) {
          seen_[w] = true;
          stack_.push_back(w);
        }
      }
    }
    return reached == left;
  }

  const Graph& g_;
  int n_;
  bool pruning_;
  bool count_all_;
  std::vector<bool> visited_;
  std::vector<int> avail_;  // unvisited neighbors + head + start, per vertex
  std::vector<int> path_;
  int left_even_ = 0;
  int left_odd_ = 0;
  std::uint64_t directed_ = 0;
  std::optional<std::vector<int>> first_;
  SearchStats stats_;
  std::vector<bool> seen_;
  std::vector<int> stack_;
};

void check_cap(const GridSpec& g, std::size_t cap) {
  if (g.live_count() > cap) {
    std::ostringstream os;
    os << "oracle refuses " << g.cols() << "x" << g.rows() << " with "
       << g.live_count() << " live vertices (cap " << cap << ")";
    throw Error(ErrorCode::kCapExceeded, os.str());
  }
}

}  // namespace

OracleCycle oracle_cycle(const GridSpec& g, const OracleOptions& options) {
  check_cap(g, options.cap);
  const auto t0 = std::chrono::steady_clock::now();
  const Graph graph = build(g);
  Search search(graph, options.pruning, false);
  search.run();
  OracleCycle out;
  out.stats = search.stats();
  if (const auto& ids = search.first()) {
    std::vector<Vertex> cycle;
    cycle.reserve(ids->size());
    for (int id : *ids) cycle.push_back(graph.at[id]);
    out.cycle = std::move(cycle);
  }
  out.stats.found = out.cycle.has_value();
  out.stats.elapsed = std::chrono::steady_clock::now() - t0;
  return out;
}

std::uint64_t oracle_count(const GridSpec& g, const OracleOptions& options) {
  check_cap(g, options.cap);
  const Graph graph = build(g);
  Search search(graph, options.pruning, true);
  search.run();
  return search.cycles();
}

}  // namespace hamgrid
