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

#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "hamgrid/error.hpp"
#include "hamgrid/factor.hpp"
#include "hamgrid/merger.hpp"
#include "test_support.hpp"

namespace hamgrid {
namespace {

using ::testing::UnorderedElementsAre;

// Perimeter of the square block [lo, hi] x [lo, hi].
std::vector<Edge> ring(int lo, int hi) {
  std::vector<Edge> out;
  for (int i = lo; i < hi; ++i) {
    out.push_back(Edge::between({i, lo}, {i + 1, lo}));
    out.push_back(Edge::between({i, hi}, {i + 1, hi}));
    out.push_back(Edge::between({lo, i}, {lo, i + 1}));
    out.push_back(Edge::between({hi, i}, {hi, i + 1}));
  }
  return out;
}

SpanningSubgraph concentric_rings_8x8() {
  std::vector<Edge> edges;
  for (int k = 0; k < 4; ++k) {
    const auto r = ring(k, 7 - k);
    edges.insert(edges.end(), r.begin(), r.end());
  }
  return SpanningSubgraph::from_edges(GridSpec(8, 8), edges);
}

TEST(FindSeparant, BetweenAdjacentStrips) {
  const SpanningSubgraph m = strip_two_factor(GridSpec(6, 5)).subgraph();
  const ComponentLabels labels = label_components(m);
  ASSERT_EQ(labels.count, 3);
  const auto s = find_separant(m, labels, labels.of(m.grid(), {0, 0}), labels.of(m.grid(), {2, 0}));
  ASSERT_TRUE(s);
  EXPECT_FALSE(s->shared_a.horizontal());
  EXPECT_THAT((std::vector<int>{s->shared_a.a.x, s->shared_b.a.x}), UnorderedElementsAre(1, 2));
  EXPECT_FALSE(m.contains(s->bridges[0]));
  EXPECT_FALSE(m.contains(s->bridges[1]));
}

TEST(FindSeparant, NoneWithinOneComponent) {
  const SpanningSubgraph m = strip_two_factor(GridSpec(2, 6)).subgraph();
  const ComponentLabels labels = label_components(m);
  ASSERT_EQ(labels.count, 1);
  EXPECT_FALSE(find_separant(m, labels, 0, 0));
}

TEST(FindSeparant, NoneAcrossAnInterveningCycle) {
  const SpanningSubgraph m = concentric_rings_8x8();
  const ComponentLabels labels = label_components(m);
  ASSERT_EQ(labels.count, 4);
  const int outer = labels.of(m.grid(), {0, 0});
  const int middle = labels.of(m.grid(), {1, 1});
  const int third = labels.of(m.grid(), {2, 2});
  EXPECT_FALSE(find_separant(m, labels, outer, third));
  EXPECT_TRUE(find_separant(m, labels, outer, middle));
}

TEST(MergePair, PreservesDegreesAndJoinsComponents) {
  const SpanningSubgraph m = strip_two_factor(GridSpec(6, 5)).subgraph();
  const ComponentLabels labels = label_components(m);
  const auto s = find_separant(m, labels, labels.of(m.grid(), {0, 0}), labels.of(m.grid(), {2, 0}));
  ASSERT_TRUE(s);
  const SpanningSubgraph merged = merge_pair(m, *s);
  for (Vertex v : testing::live_vertices(m.grid())) EXPECT_EQ(merged.degree(v), m.degree(v));
  for (Vertex v : s->square.corners()) EXPECT_EQ(merged.degree(v), 2);
  EXPECT_EQ(label_components(merged).count, 2);
  EXPECT_EQ(merged.edge_count(), m.edge_count());
}

TEST(MergePair, StaleSeparantIsRejected) {
  const SpanningSubgraph m = strip_two_factor(GridSpec(6, 5)).subgraph();
  const ComponentLabels labels = label_components(m);
  const auto s = find_separant(m, labels, labels.of(m.grid(), {0, 0}), labels.of(m.grid(), {2, 0}));
  ASSERT_TRUE(s);
  const SpanningSubgraph merged = merge_pair(m, *s);
  try {
    merge_pair(merged, *s);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSeparant);
  }
}

TEST(MergePair, SameComponentSidesAreRejected) {
  const SpanningSubgraph m = strip_two_factor(GridSpec(2, 4)).subgraph();
  const UnitSquare sq{{0, 0}};
  const Separant bogus{sq, sq.left(), sq.right(), {sq.bottom(), sq.top()}};
  EXPECT_THROW(merge_pair(m, bogus), Error);
}

TEST(MergeAll, SixByFiveToHamiltonianCycle) {
  const Factor f = strip_two_factor(GridSpec(6, 5));
  std::size_t steps = 0;
  const MergeResult r = merge_all(f, [&](const SpanningSubgraph&, const Separant&,
                                         const SpanningSubgraph&) { ++steps; });
  ASSERT_TRUE(r.merged());
  const auto& c = std::get<Component>(r.outcome);
  EXPECT_EQ(c.kind, ComponentKind::kCycle);
  EXPECT_EQ(c.vertices.size(), 30u);
  EXPECT_TRUE(testing::is_hamiltonian(f.grid(), c.vertices, true));
  EXPECT_EQ(r.merges, 2u);
  EXPECT_EQ(steps, 2u);
}

TEST(MergeAll, PathAbsorbsCyclesKeepingEnds) {
  const Factor f = strip_one_two_factor(GridSpec(7, 5));
  const MergeResult r = merge_all(f);
  ASSERT_TRUE(r.merged());
  const auto& p = std::get<Component>(r.outcome);
  EXPECT_EQ(p.kind, ComponentKind::kPath);
  EXPECT_EQ(p.vertices.size(), 35u);
  EXPECT_TRUE(testing::is_hamiltonian(f.grid(), p.vertices, false));
  EXPECT_THAT((std::vector<Vertex>{p.vertices.front(), p.vertices.back()}),
              UnorderedElementsAre(Vertex{6, 0}, Vertex{6, 4}));
}

TEST(MergeAll, EveryStepPreservesDegreesAndDropsOneComponent) {
  for (int m = 2; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) {
      const GridSpec g(m, n);
      const Factor f = g.even_sized() ? strip_two_factor(g) : strip_one_two_factor(g);
      int failures = 0;
      const MergeResult r = merge_all(f, [&](const SpanningSubgraph& before, const Separant&,
                                             const SpanningSubgraph& after) {
        for (Vertex v : testing::live_vertices(g)) failures += before.degree(v) != after.degree(v);
        failures += label_components(before).count - 1 != label_components(after).count;
      });
      EXPECT_EQ(failures, 0) << m << "x" << n;
      EXPECT_TRUE(r.merged()) << m << "x" << n;
      EXPECT_EQ(r.merges, f.component_count() - 1);
    }
  }
}

TEST(MergeAll, Deterministic) {
  const Factor f = strip_two_factor(GridSpec(8, 6));
  EXPECT_EQ(merge_all(f).subgraph, merge_all(f).subgraph);
}

TEST(MergeAll, NestedRingsMerge) {
  const MergeResult r = merge_all(Factor::from_subgraph(concentric_rings_8x8()));
  ASSERT_TRUE(r.merged());
  EXPECT_EQ(r.merges, 3u);
  EXPECT_EQ(std::get<Component>(r.outcome).vertices.size(), 64u);
}

TEST(MergeAll, StuckCarriesResidualPartition) {
  // A full fault row splits the grid into two unit squares with no square
  // straddling them.
  const GridSpec g(2, 5, {{0, 2}, {1, 2}});
  const std::vector<Edge> edges = {
      Edge::between({0, 0}, {1, 0}), Edge::between({1, 0}, {1, 1}),
      Edge::between({0, 1}, {1, 1}), Edge::between({0, 0}, {0, 1}),
      Edge::between({0, 3}, {1, 3}), Edge::between({1, 3}, {1, 4}),
      Edge::between({0, 4}, {1, 4}), Edge::between({0, 3}, {0, 4})};
  const MergeResult r = merge_all(Factor::from_subgraph(SpanningSubgraph::from_edges(g, edges)));
  ASSERT_FALSE(r.merged());
  const auto& stuck = std::get<MergeStuck>(r.outcome);
  ASSERT_EQ(stuck.residual.size(), 2u);
  EXPECT_EQ(stuck.residual[0].vertices.front(), (Vertex{0, 0}));
  EXPECT_EQ(stuck.residual[1].vertices.front(), (Vertex{0, 3}));
  EXPECT_EQ(r.merges, 0u);
}

}  // namespace
}  // namespace hamgrid
