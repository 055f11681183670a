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

#include "fuzzydom/families.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fuzzydom/connectivity.hpp"
#include "oracle.hpp"

namespace fuzzydom {
namespace {

using fixtures::d;

std::vector<Decimal> ds(std::initializer_list<const char*> items) {
  std::vector<Decimal> out;
  for (const char* s : items) out.push_back(d(s));
  return out;
}

PartiteFamily bipartite_instance() { return {{ds({"0.2", "0.3", "0.4"}), ds({"0.4", "0.5", "0.6", "0.7"})}}; }

PartiteFamily rpartite_instance() {
  return {{ds({"0.1", "0.2", "0.5"}), ds({"0.4", "0.5", "0.6", "0.4"}), ds({"0.7", "0.5", "0.5"}),
           ds({"0.3", "0.5", "0.6", "0.7"})}};
}

TEST(GenerateTest, CompleteUsesTheMinRule) {
  const FuzzyGraph g = generate(CompleteFamily{ds({"0.3", "0.5", "0.9"})});
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"v1", "v2", "v3"}));
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.weight(0, 1), d("0.3"));
  EXPECT_EQ(g.weight(0, 2), d("0.3"));
  EXPECT_EQ(g.weight(1, 2), d("0.5"));
  EXPECT_TRUE(classify_structure(g).complete);
  EXPECT_EQ(kind_of(CompleteFamily{}), FamilyKind::kComplete);
}

TEST(GenerateTest, LabelsArePadded) {
  const FuzzyGraph g = generate(CompleteFamily{std::vector<Decimal>(10, kOne)});
  EXPECT_EQ(g.label(0), "v01");
  EXPECT_EQ(g.label(9), "v10");
}

TEST(GenerateTest, Bipartite) {
  const FuzzyGraph g = generate(bipartite_instance());
  EXPECT_EQ(g.vertex_count(), 7u);
  EXPECT_EQ(g.edge_count(), 12u);
  for (const auto& e : g.edges()) EXPECT_EQ(e.weight, min(g.membership(e.u), g.membership(e.v)));
  EXPECT_EQ(kind_of(bipartite_instance()), FamilyKind::kCompleteBipartite);
  EXPECT_TRUE(g.find("a1") && g.find("b4"));
}

TEST(GenerateTest, RPartite) {
  const FuzzyGraph g = generate(rpartite_instance());
  EXPECT_EQ(g.vertex_count(), 14u);
  EXPECT_EQ(g.edge_count(), 14u * 13u / 2 - (3 + 6 + 3 + 6));
  EXPECT_EQ(kind_of(rpartite_instance()), FamilyKind::kCompleteRPartite);
  EXPECT_TRUE(g.find("p1_1") && g.find("p4_4"));
}

TEST(GenerateTest, StarAndCycle) {
  const FuzzyGraph star = generate(StarFamily{d("1"), ds({"0.5", "0.6"}), ds({"0.3", "0.6"})});
  EXPECT_TRUE(classify_structure(star).fuzzy_star);
  EXPECT_EQ(star.labels(), (std::vector<std::string>{"c", "l1", "l2"}));

  const FuzzyGraph c6 = generate(CycleFamily{std::vector<Decimal>(6, kOne), std::vector<Decimal>(6, d("0.1"))});
  const StructureReport s = classify_structure(c6);
  EXPECT_TRUE(s.fuzzy_cycle);
  EXPECT_TRUE(s.beta_saturated);
}

TEST(GenerateTest, RejectsInvalidDescriptors) {
  EXPECT_THROW(generate(CompleteFamily{}), HypothesisError);
  EXPECT_THROW(generate(CompleteFamily{ds({"0"})}), HypothesisError);
  EXPECT_THROW(generate(PartiteFamily{{ds({"0.5"})}}), HypothesisError);
  EXPECT_THROW(generate(PartiteFamily{{ds({"0.5"}), {}}}), HypothesisError);
  EXPECT_THROW(generate(StarFamily{d("0.5"), ds({"0.5"}), ds({"0.6"})}), HypothesisError);
  EXPECT_THROW(generate(StarFamily{d("0.5"), ds({"0.5"}), {}}), HypothesisError);
  EXPECT_THROW(generate(CycleFamily{ds({"1", "1"}), ds({"0.1", "0.1"})}), HypothesisError);
  EXPECT_THROW(generate(CycleFamily{ds({"1", "1", "1", "1"}), ds({"0.1", "0.2", "0.3", "0.4"})}),
               HypothesisError);
}

TEST(UnionJoinTest, Union) {
  const FuzzyGraph a = generate(CompleteFamily{ds({"0.2", "0.4"})});
  EXPECT_THROW(graph_union(a, a), GraphError);
  std::map<std::string, std::string> rename = {{"v1", "w1"}, {"v2", "w2"}, {"v3", "w3"}};
  const FuzzyGraph c = generate(CompleteFamily{ds({"0.3", "0.5", "0.6"})}).relabeled(rename);
  const FuzzyGraph u = graph_union(a, c);
  EXPECT_EQ(u.vertex_count(), 5u);
  EXPECT_EQ(u.edge_count(), 4u);
  EXPECT_EQ(u, graph_union(c, a));
  const GraphStats s = stats(u);
  EXPECT_EQ(s.order_p, stats(a).order_p + stats(c).order_p);
  EXPECT_EQ(s.size_q, stats(a).size_q + stats(c).size_q);
}

TEST(UnionJoinTest, Join) {
  const FuzzyGraph k2 = parse_fgf("vertex a 0.6\nvertex b 0.9\nedge a b 0.6\n");
  const FuzzyGraph k1 = parse_fgf("vertex c 0.7\n");
  const FuzzyGraph j = graph_join(k2, k1);
  EXPECT_EQ(j.edge_count(), 3u);
  EXPECT_EQ(j.weight(j.index_of("a"), j.index_of("c")), d("0.6"));
  EXPECT_EQ(j.weight(j.index_of("b"), j.index_of("c")), d("0.7"));
  EXPECT_THROW(graph_join(k2, k2), GraphError);

  RandomGraphOptions o1, o2;
  o1.vertices = 4;
  o2.vertices = 3;
  o2.prefix = "w";
  const FuzzyGraph g1 = random_connected_graph(o1, 5), g2 = random_connected_graph(o2, 6);
  const FuzzyGraph big = graph_join(g1, g2);
  EXPECT_EQ(big.edge_count(), g1.edge_count() + g2.edge_count() + 12);
  for (const auto& e : classify_edges(big)) {
    const bool cross = big.label(e.edge.u)[0] != big.label(e.edge.v)[0];
    if (cross) EXPECT_TRUE(is_strong(e.edge_class));
  }
}

TEST(ClosedFormTest, Complete) {
  EXPECT_EQ(closed_form_sdi(CompleteFamily{ds({"0.3", "0.5", "0.9"})}), d("0.9"));
}

TEST(ClosedFormTest, BipartiteInstance) {
  EXPECT_EQ(closed_form_sdi(bipartite_instance()), d("3.1"));
  EXPECT_EQ(oracle::report(generate(bipartite_instance())).sdi, d("3.1"));
}

TEST(ClosedFormTest, RPartiteInstance) {
  EXPECT_EQ(closed_form_sdi(rpartite_instance()), d("3.1"));
  EXPECT_EQ(domination_report(generate(rpartite_instance())).sdi, d("3.1"));
}

TEST(ClosedFormTest, PartiteNeedsPartsOfTwo) {
  EXPECT_THROW(closed_form_sdi(PartiteFamily{{ds({"0.2"}), ds({"0.4", "0.5"})}}), HypothesisError);
}

TEST(ClosedFormTest, StarAndCycle) {
  const StarFamily star{d("1"), ds({"0.5", "0.6", "0.9"}), ds({"0.3", "0.6", "0.2"})};
  EXPECT_EQ(closed_form_sdi(star), d("0.2") + 3 * d("1.1"));
  EXPECT_EQ(oracle::report(generate(star)).sdi, closed_form_sdi(star));
  const CycleFamily c6{std::vector<Decimal>(6, kOne), std::vector<Decimal>(6, d("0.1"))};
  EXPECT_EQ(closed_form_sdi(c6), d("1.2"));
  // Only two light edges on a 5-cycle leave a vertex without a beta edge.
  const CycleFamily sparse{std::vector<Decimal>(5, kOne), ds({"0.1", "0.1", "0.5", "0.5", "0.5"})};
  EXPECT_THROW(closed_form_sdi(sparse), HypothesisError);
}

TEST(UnionFormulaTest, TwoCompleteGraphs) {
  const FuzzyGraph a = generate(CompleteFamily{ds({"0.2", "0.4"})});
  const FuzzyGraph c = generate(CompleteFamily{ds({"0.3", "0.5", "0.6"})})
                           .relabeled({{"v1", "w1"}, {"v2", "w2"}, {"v3", "w3"}});
  EXPECT_EQ(sdi_union_formula({a, c}), d("2.5"));
  EXPECT_EQ(oracle::report(graph_union(a, c)).sdi, d("2.5"));
  EXPECT_EQ(sdi_union_formula({a}), domination_report(a).sdi);
  EXPECT_THROW(sdi_union_formula({a, a}), GraphError);
}

TEST(UnionFormulaTest, ThreeComponents) {
  std::vector<FuzzyGraph> parts = {parse_fgf("vertex a 1\nvertex b 1\nedge a b 0.4\n"),
                                   parse_fgf("vertex c 1\nvertex d 1\nedge c d 0.2\n"),
                                   parse_fgf("vertex e 1\nvertex f 1\nedge e f 0.7\n")};
  const FuzzyGraph all = graph_union(graph_union(parts[0], parts[1]), parts[2]);
  EXPECT_EQ(sdi_union_formula(parts), oracle::report(all).sdi);
}

TEST(JoinFormulaTest, TwoK2s) {
  const FuzzyGraph a = parse_fgf("vertex a 0.6\nvertex b 0.9\nedge a b 0.5\n");
  const FuzzyGraph b = parse_fgf("vertex c 0.7\nvertex d 0.4\nedge c d 0.3\n");
  EXPECT_EQ(sdi_join_formula(a, b), oracle::report(graph_join(a, b)).sdi);
}

TEST(JoinFormulaTest, SingleVertexSide) {
  const FuzzyGraph a = parse_fgf("vertex a 0.6\nvertex b 0.9\nvertex c 0.8\nedge a b 0.5\nedge b c 0.4\n");
  const FuzzyGraph b = parse_fgf("vertex z 0.7\n");
  EXPECT_EQ(sdi_join_formula(a, b), oracle::report(graph_join(a, b)).sdi);
}

TEST(RandomTest, GeneratorsAreDeterministicAndValid) {
  RandomGraphOptions o;
  o.vertices = 9;
  EXPECT_EQ(random_connected_graph(o, 42), random_connected_graph(o, 42));
  EXPECT_NE(random_connected_graph(o, 42), random_connected_graph(o, 43));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FuzzyGraph g = random_connected_graph(o, seed);
    EXPECT_TRUE(validate(g).empty());
    EXPECT_TRUE(is_connected(g));
    for (auto m : g.memberships()) EXPECT_EQ(m.scaled() % 500, 0);
    EXPECT_TRUE(validate(generate(random_complete(5, seed))).empty());
    EXPECT_TRUE(validate(generate(random_star(4, seed))).empty());
    EXPECT_TRUE(classify_structure(generate(random_beta_saturated_cycle(3 + seed % 10, seed))).beta_saturated);
    EXPECT_TRUE(validate(generate(random_partite({2, 3}, seed))).empty());
  }
}

TEST(RandomTest, FuzzyTreesKeepTheirTree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FuzzyGraph g = random_fuzzy_tree(8, 3, seed);
    EXPECT_TRUE(validate(g).empty());
    EXPECT_TRUE(classify_structure(g).fuzzy_tree) << serialize_fgf(g);
  }
}

TEST(RandomTest, GridValues) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Decimal v = random_grid_value(rng, 2, 20);
    EXPECT_GE(v, d("0.1"));
    EXPECT_LE(v, d("1"));
    EXPECT_EQ(v.scaled() % 500, 0);
  }
}

}  // namespace
}  // namespace fuzzydom
