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

#include <set>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "hamgrid/augmenter.hpp"
#include "hamgrid/error.hpp"
#include "hamgrid/factor.hpp"
#include "hamgrid/merger.hpp"
#include "test_support.hpp"

namespace hamgrid {
namespace {

using ::testing::AnyOf;
using ::testing::ElementsAre;
using ::testing::Eq;

// Independent check of the alternating-path contract.
void expect_augmenting(const SpanningSubgraph& m, const AugmentingPath& p) {
  const auto& vs = p.vertices;
  ASSERT_GE(vs.size(), 2u);
  EXPECT_EQ(vs.size() % 2, 0u) << "odd edge count";
  EXPECT_EQ(m.degree(vs.front()), 1);
  EXPECT_EQ(m.degree(vs.back()), 1);
  EXPECT_NE(color(vs.front()), color(vs.back()));
  EXPECT_EQ(std::set<Vertex>(vs.begin(), vs.end()).size(), vs.size());
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    ASSERT_TRUE(testing::adjacent(vs[i], vs[i + 1]));
    EXPECT_TRUE(m.grid().is_live(vs[i]));
    EXPECT_EQ(m.has_edge(vs[i], vs[i + 1]), i % 2 == 1) << "edge " << i;
  }
}

SpanningSubgraph two_by_two_rungs() {
  const std::vector<Edge> edges{Edge::between({0, 0}, {1, 0}), Edge::between({0, 1}, {1, 1})};
  return SpanningSubgraph::from_edges(GridSpec(2, 2), edges);
}

SpanningSubgraph seven_by_seven_minus_u() {
  const Vertex u{2, 2};
  return delete_faults(strip_one_two_factor(GridSpec(7, 7)), std::span(&u, 1));
}

TEST(FindAugmentingPath, SingleBlueEdge) {
  const SpanningSubgraph m = two_by_two_rungs();
  EXPECT_EQ(sigma(m), 4u);
  const auto p = find_augmenting_path(m, {0, 0});
  ASSERT_TRUE(p);
  EXPECT_THAT(p->vertices, ElementsAre(Vertex{0, 0}, Vertex{0, 1}));
  EXPECT_FALSE(check_augmenting_path(m, *p));
}

TEST(FindAugmentingPath, OddFaultNeighbourReachesEvenPathEnd) {
  const SpanningSubgraph m = seven_by_seven_minus_u();
  for (Vertex a : {Vertex{2, 1}, Vertex{2, 3}}) {
    const auto p = find_augmenting_path(m, a);
    ASSERT_TRUE(p);
    expect_augmenting(m, *p);
    EXPECT_EQ(p->vertices.front(), a);
    EXPECT_THAT(p->vertices.back(), AnyOf(Eq(Vertex{6, 0}), Eq(Vertex{6, 6})));
  }
}

TEST(FindAugmentingPath, FilledStartIsADomainError) {
  const SpanningSubgraph m = strip_two_factor(GridSpec(4, 4)).subgraph();
  try {
    find_augmenting_path(m, {0, 0});
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
}

TEST(FindAugmentingPath, ShortestByEdgeCount) {
  const SpanningSubgraph m = seven_by_seven_minus_u();
  const auto best = find_augmenting_path(m, {2, 1});
  ASSERT_TRUE(best);
  for (const auto& c : augmenting_path_candidates(m, 32)) {
    if (c.vertices.front() == Vertex{2, 1}) {
      EXPECT_LE(best->edge_count(), c.edge_count());
    }
  }
}

TEST(AugmentingPathCandidates, AllValidAndDistinct) {
  const SpanningSubgraph m = seven_by_seven_minus_u();
  const auto cs = augmenting_path_candidates(m, 8);
  ASSERT_FALSE(cs.empty());
  EXPECT_LE(cs.size(), 8u);
  for (const auto& c : cs) expect_augmenting(m, c);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      auto rev = cs[j].vertices;
      std::reverse(rev.begin(), rev.end());
      EXPECT_NE(cs[i].vertices, cs[j].vertices);
      EXPECT_NE(cs[i].vertices, rev);
    }
  }
}

TEST(ApplyAugment, LowersSigmaByTwo) {
  const SpanningSubgraph m = two_by_two_rungs();
  const SpanningSubgraph m1 = apply_augment(m, {{{0, 0}, {0, 1}}});
  EXPECT_EQ(sigma(m1), 2u);
  EXPECT_EQ(m1.degree({0, 0}), 2);
  EXPECT_EQ(m1.degree({0, 1}), 2);
}

TEST(ApplyAugment, DegreeLedger) {
  const SpanningSubgraph m = seven_by_seven_minus_u();
  const auto p = find_augmenting_path(m, {2, 1});
  ASSERT_TRUE(p);
  const SpanningSubgraph m1 = apply_augment(m, *p);
  for (Vertex v : testing::live_vertices(m.grid())) {
    const bool end = v == p->vertices.front() || v == p->vertices.back();
    EXPECT_EQ(m1.degree(v), m.degree(v) + (end ? 1 : 0));
  }
  EXPECT_EQ(sigma(m1), sigma(m) - 2);
}

TEST(ApplyAugment, StalePathIsRejected) {
  const SpanningSubgraph m = two_by_two_rungs();
  const AugmentingPath p{{{0, 0}, {0, 1}}};
  const SpanningSubgraph m1 = apply_augment(m, p);
  try {
    apply_augment(m1, p);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPath);
  }
  EXPECT_TRUE(check_augmenting_path(m1, p));
}

TEST(RepairToTwoFactor, SevenBySevenMinusUGivesThreeCycles) {
  const auto r = repair_to_two_factor(seven_by_seven_minus_u());
  ASSERT_TRUE(std::holds_alternative<Factor>(r));
  const Factor& f = std::get<Factor>(r);
  EXPECT_TRUE(f.is_two_factor());
  EXPECT_EQ(f.cycles().size(), 3u);
  EXPECT_EQ(sigma(f.subgraph()), 0u);
  const MergeResult merged = merge_all(f);
  ASSERT_TRUE(merged.merged());
  EXPECT_TRUE(testing::is_hamiltonian(f.grid(), std::get<Component>(merged.outcome).vertices, true));
}

TEST(RepairToTwoFactor, ZeroSigmaIsUnchanged) {
  const SpanningSubgraph m = strip_two_factor(GridSpec(6, 4)).subgraph();
  const auto r = repair_to_two_factor(m);
  ASSERT_TRUE(std::holds_alternative<Factor>(r));
  EXPECT_EQ(std::get<Factor>(r).subgraph(), m);
}

TEST(RepairToTwoFactor, TwoFaultsOfDifferentColors) {
  const std::vector<Vertex> faults{{2, 3}, {5, 3}};
  const SpanningSubgraph m = delete_faults(strip_two_factor(GridSpec(8, 7)), faults);
  const auto r = repair_to_two_factor(m);
  ASSERT_TRUE(std::holds_alternative<Factor>(r));
  const Factor& f = std::get<Factor>(r);
  for (Vertex v : testing::live_vertices(f.grid())) EXPECT_EQ(f.subgraph().degree(v), 2);
}

// Degree sum 2L - sigma is even, so a 2-limited input never has odd sigma;
// the only reachable rejection is a non-2-limited input.
TEST(RepairToTwoFactor, SigmaOfTwoLimitedSubgraphIsEven) {
  for (const GridSpec& g : {GridSpec(7, 7), GridSpec(6, 6), GridSpec(5, 7)}) {
    const Factor f = g.even_sized() ? strip_two_factor(g) : strip_one_two_factor(g);
    for (Vertex u : testing::live_vertices(g)) {
      try {
        EXPECT_EQ(sigma(delete_faults(f, std::span(&u, 1))) % 2, 0u);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotTwoLimited);
      }
    }
  }
}

TEST(RepairToTwoFactor, RejectsNonTwoLimitedInput) {
  // (0,1) and (1,1) are left with degree 0.
  const GridSpec g(2, 2);
  const std::vector<Edge> edges{Edge::between({0, 0}, {1, 0})};
  try {
    repair_to_two_factor(SpanningSubgraph::from_edges(g, edges));
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTwoLimited);
  }
}

}  // namespace
}  // namespace hamgrid
