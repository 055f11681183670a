// Copyright 2026 The fuzzydom Authors
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

#include "fuzzydom/search.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fuzzydom/domination.hpp"

namespace fuzzydom {
namespace {

using fixtures::d;

bool contains(const AnchoredSearchResult& r, const VertexSet& s) {
  return std::any_of(r.sets.begin(), r.sets.end(), [&](const auto& e) { return e.members == s; });
}

TEST(MatrixTest, EightMatrix) {
  const FuzzyGraph g = fixtures::eight();
  const StrongAdjacencyMatrix m = strong_adjacency_matrix(g);
  ASSERT_EQ(m.size(), 8u);
  const std::size_t a1 = 0, a4 = 3, a5 = 4, a7 = 6, a8 = 7;
  for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(m.at(a1, j), j == a4 ? d("0.05") : kZero);
  for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(m.at(a7, j), j == a5 ? d("0.3") : kZero);
  EXPECT_EQ(m.at(a7, a8), kZero);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(m.at(i, i), kZero);
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(m.at(i, j), m.at(j, i));
  }
  EXPECT_EQ(m.row_minimum(a4), d("0.05"));
  EXPECT_EQ(m.weight({"a4", "a5", "a6"}), d("0.45"));
}

TEST(MatrixTest, K2AndDeltaTriangle) {
  const StrongAdjacencyMatrix k2 = strong_adjacency_matrix(fixtures::k2());
  EXPECT_EQ(k2.at(0, 1), d("0.5"));
  EXPECT_EQ(k2.at(1, 0), d("0.5"));
  const StrongAdjacencyMatrix tri = strong_adjacency_matrix(
      parse_fgf("vertex a 1\nvertex b 1\nvertex c 1\nedge a b 0.1\nedge b c 0.5\nedge a c 0.5\n"));
  EXPECT_EQ(tri.at(0, 1), kZero);
  EXPECT_EQ(tri.at(1, 2), d("0.5"));
  EXPECT_EQ(tri.at(0, 2), d("0.5"));
}

TEST(AnchoredSearchTest, EightFromA4) {
  const AnchoredSearchResult r = minimal_sds_containing(fixtures::eight(), "a4");
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(contains(r, {"a4", "a5", "a6"}));
  EXPECT_TRUE(contains(r, {"a4", "a7", "a8"}));
  EXPECT_EQ(r.sets[r.best].weight, d("0.45"));
  EXPECT_EQ(r.sets[r.best].members, (VertexSet{"a4", "a5", "a6"}));
  for (const auto& s : r.sets) {
    EXPECT_TRUE(s.members.count("a4"));
    EXPECT_TRUE(classify_set(fixtures::eight(), s.members).minimal_dominating);
  }
}

TEST(AnchoredSearchTest, EightFromA1) {
  const AnchoredSearchResult r = minimal_sds_containing(fixtures::eight(), "a1");
  EXPECT_EQ(r.sets[r.best].weight, d("1.25"));
  EXPECT_EQ(r.sets[r.best].members, (VertexSet{"a1", "a2", "a3", "a5", "a6"}));
}

TEST(AnchoredSearchTest, GreedyStopsAtFirstSuccess) {
  SearchOptions greedy;
  greedy.exhaustive = false;
  const AnchoredSearchResult r = minimal_sds_containing(fixtures::eight(), "a4", greedy);
  EXPECT_FALSE(r.exhaustive);
  ASSERT_EQ(r.sets.size(), 1u);
  EXPECT_TRUE(r.sets[0].members.count("a4"));
}

TEST(AnchoredSearchTest, Errors) {
  EXPECT_THROW(minimal_sds_containing(fixtures::eight(), "zz"), GraphError);
  EXPECT_THROW(minimal_sds_containing(parse_fgf("vertex a 1\nvertex b 1\nvertex c 1\nedge a b 1\n"), "a"),
               DominationError);
}

TEST(MinimalizeTest, ShrinksTheWholeVertexSet) {
  const FuzzyGraph g = fixtures::eight();
  const MinimalizeResult r =
      minimalize_containing(g, {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"}, "a4");
  EXPECT_TRUE(r.members.count("a4"));
  EXPECT_TRUE(classify_set(g, r.members).minimal_dominating);
}

TEST(MinimalizeTest, MinimalInputIsUnchanged) {
  const FuzzyGraph g = fixtures::eight();
  const MinimalizeResult r = minimalize_containing(g, {"a4", "a7", "a8"}, "a7");
  EXPECT_EQ(r.members, (VertexSet{"a4", "a7", "a8"}));
  EXPECT_FALSE(r.repaired);
}

TEST(MinimalizeTest, RejectsBadInput) {
  const FuzzyGraph g = fixtures::eight();
  EXPECT_THROW(minimalize_containing(g, {"a4"}, "a4"), DominationError);
  EXPECT_THROW(minimalize_containing(g, {"a4", "a5", "a6"}, "a1"), DominationError);
}

// u is a leaf of x1, and x1..x4 dominate everything, so greedy deletion would
// make u redundant; the dominators of N_s[u] must be replaced instead.
TEST(MinimalizeTest, RepairsWhenTheAnchorIsDominatedByOthers) {
  const FuzzyGraph g = parse_fgf(R"(vertex u 1
vertex x1 1
vertex x2 1
vertex x3 1
vertex x4 1
vertex y1 1
vertex y2 1
vertex y3 1
vertex y4 1
edge u x1 0.5
edge x1 x2 0.5
edge x2 x3 0.5
edge x3 x4 0.5
edge x1 y1 0.5
edge x2 y2 0.5
edge x3 y3 0.5
edge x4 y4 0.5
)");
  const MinimalizeResult r = minimalize_containing(g, {"u", "x1", "x2", "x3", "x4"}, "u");
  EXPECT_TRUE(r.repaired);
  EXPECT_TRUE(r.members.count("u"));
  EXPECT_TRUE(classify_set(g, r.members).minimal_dominating);
  EXPECT_FALSE(r.members.count("x1"));
}

}  // namespace
}  // namespace fuzzydom
