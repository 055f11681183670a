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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "fuzzydom/connectivity.hpp"
#include "fuzzydom/domination.hpp"
#include "fuzzydom/families.hpp"
#include "fuzzydom/fgf.hpp"
#include "fuzzydom/search.hpp"
#include "oracle.hpp"

namespace fuzzydom {
namespace {

FuzzyGraph sample(std::uint64_t seed, std::size_t max_vertices = 8) {
  RandomGraphOptions o;
  o.vertices = 2 + seed % (max_vertices - 1);
  o.density = 0.15 + 0.1 * static_cast<double>(seed % 5);
  return random_connected_graph(o, seed);
}

class Seeded : public ::testing::TestWithParam<std::uint64_t> {};

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Range<std::uint64_t>(0, 60));

TEST_P(Seeded, FgfRoundTrip) {
  const FuzzyGraph g = sample(GetParam(), 12);
  EXPECT_EQ(parse_fgf(serialize_fgf(g)), g);
}

TEST_P(Seeded, ConnectivityMatchesPathEnumeration) {
  const FuzzyGraph g = sample(GetParam(), 7);
  const oracle::Raw raw(g);
  const auto m = connectivity_matrix(g);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
      EXPECT_EQ(m.at(i, j), oracle::conn_by_paths(raw, g.label(i), g.label(j)));
      EXPECT_EQ(m.at(i, j), oracle::conn(raw, g.label(i), g.label(j)));
      EXPECT_EQ(m.at(i, j), m.at(j, i));
    }
  }
}

TEST_P(Seeded, ConnectivityIsMaxMinTransitive) {
  const FuzzyGraph g = sample(GetParam(), 10);
  const auto m = connectivity_matrix(g);
  const std::size_t n = g.vertex_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        EXPECT_GE(m.at(a, b), min(m.at(a, c), m.at(c, b)));
      }
    }
  }
}

TEST_P(Seeded, EdgeClassesMatchOracle) {
  const FuzzyGraph g = sample(GetParam(), 7);
  const auto expected = oracle::edge_classes(oracle::Raw(g));
  const auto got = classify_edges(g);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    const EdgeClass want = expected[i] == oracle::Cls::kAlpha  ? EdgeClass::kAlpha
                           : expected[i] == oracle::Cls::kBeta ? EdgeClass::kBeta
                                                               : EdgeClass::kDelta;
    EXPECT_EQ(got[i].edge_class, want);
    // Exactly one of >, =, < holds between the weight and the reduced CONN.
    const Decimal other = strength_of_connectedness(g, got[i].edge.u, got[i].edge.v, got[i].edge.u, got[i].edge.v);
    const Decimal w = got[i].edge.weight;
    EXPECT_EQ((w > other) + (w == other) + (w < other), 1);
  }
}

TEST_P(Seeded, SpanningTreeIsMaximum) {
  const FuzzyGraph g = sample(GetParam(), 8);
  const auto tree = maximum_spanning_tree(g);
  ASSERT_EQ(tree.size() + 1, g.vertex_count());
  Decimal total;
  for (const auto& e : tree) total += e.weight;
  EXPECT_EQ(total, *oracle::max_spanning_tree_weight(g));
  EXPECT_TRUE(is_connected(g.with_edges(tree)));
}

TEST_P(Seeded, DeltaDeletionChangesNothingElse) {
  const FuzzyGraph g = sample(GetParam(), 10);
  const auto classes = classify_edges(g);
  const auto conn = connectivity_matrix(g);
  for (const auto& e : classes) {
    if (e.edge_class != EdgeClass::kDelta) continue;
    const FuzzyGraph h = g.without_edge(e.edge.u, e.edge.v);
    const auto after = connectivity_matrix(h);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      for (std::size_t j = 0; j < g.vertex_count(); ++j) EXPECT_EQ(after.at(i, j), conn.at(i, j));
    }
    std::size_t k = 0;
    for (const auto& f : classify_edges(h)) {
      while (classes[k].edge == e.edge) ++k;
      EXPECT_EQ(f.edge, classes[k].edge);
      EXPECT_EQ(f.edge_class, classes[k].edge_class);
      ++k;
    }
  }
}

TEST_P(Seeded, WienerMatchesOracle) {
  const FuzzyGraph g = sample(GetParam(), 7);
  EXPECT_EQ(wiener_index(g), *oracle::wiener(g));
}

TEST_P(Seeded, ReportMatchesOracle) {
  const FuzzyGraph g = sample(GetParam(), 8);
  const DominationReport r = domination_report(g);
  const oracle::Report o = oracle::report(g);
  EXPECT_EQ(r.gamma_s, o.gamma_s);
  EXPECT_EQ(r.Gamma_s, o.Gamma_s);
  EXPECT_EQ(r.ir_s, o.ir_s);
  EXPECT_EQ(r.IR_s, o.IR_s);
  EXPECT_EQ(r.i_s, o.i_s);
  EXPECT_EQ(r.beta_s, o.beta_s);
  EXPECT_EQ(r.sdi, o.sdi);
  EXPECT_EQ(r.sdrfg, o.sdrfg);
  EXPECT_EQ(r.minimal_sds_count, o.minimal_count);
  for (const auto& [v, e] : r.sdd) {
    EXPECT_EQ(e.value, o.sdd.at(v)) << v;
    EXPECT_EQ(e.witness, o.witness.at(v)) << v;
  }
  DominationOptions maximal;
  maximal.upper_irredundance_maximal_only = true;
  EXPECT_EQ(domination_report(g, maximal).IR_s, oracle::report(g, true).IR_s);
}

TEST_P(Seeded, MinimalityIsDominationPlusIrredundance) {
  const FuzzyGraph g = sample(GetParam(), 7);
  const oracle::Strong st(g);
  for (const auto& s : st.subsets()) {
    const SetReport r = classify_set(g, s);
    EXPECT_EQ(r.minimal_dominating, r.dominating && r.irredundant);
    EXPECT_EQ(r.minimal_dominating, st.minimal_dominating(s));
    EXPECT_EQ(r.irredundant, st.irredundant(s));
    EXPECT_EQ(r.maximal_irredundant, st.maximal_irredundant(s));
    EXPECT_EQ(r.independent, st.independent(s));
    EXPECT_EQ(r.weight, st.weight(s));
  }
  const auto sets = enumerate_minimal_sds(g, 100000);
  std::vector<VertexSet> members;
  for (const auto& s : sets) members.push_back(s.members);
  EXPECT_EQ(members, oracle::minimal_sets(g));
}

TEST_P(Seeded, ParameterChains) {
  const FuzzyGraph g = sample(GetParam(), 10);
  const DominationReport r = domination_report(g);
  ASSERT_TRUE(r.i_s.has_value());
  EXPECT_LE(r.ir_s, r.gamma_s);
  EXPECT_LE(r.gamma_s, *r.i_s);
  EXPECT_LE(*r.i_s, r.beta_s);
  EXPECT_LE(r.beta_s, r.Gamma_s);
  EXPECT_LE(r.Gamma_s, r.IR_s);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  EXPECT_LE(n * r.gamma_s, r.sdi);
  EXPECT_LE(r.sdi, n * r.Gamma_s);
  for (const auto& [v, e] : r.sdd) {
    EXPECT_LE(r.gamma_s, e.value);
    EXPECT_LE(e.value, r.Gamma_s);
    EXPECT_TRUE(classify_set(g, e.witness).minimal_dominating);
    EXPECT_TRUE(e.witness.count(v));
  }
}

TEST_P(Seeded, ReportSurvivesDeltaDeletionAndRelabeling) {
  const FuzzyGraph g = sample(GetParam(), 10);
  const DominationReport r = domination_report(g);
  for (const auto& e : classify_edges(g)) {
    if (e.edge_class == EdgeClass::kDelta) EXPECT_EQ(domination_report(g.without_edge(e.edge.u, e.edge.v)), r);
  }
  std::vector<std::string> image = g.labels();
  std::mt19937_64 rng(GetParam());
  std::shuffle(image.begin(), image.end(), rng);
  std::map<std::string, std::string> mapping;
  for (std::size_t i = 0; i < image.size(); ++i) mapping[g.label(i)] = image[i];
  const DominationReport s = domination_report(g.relabeled(mapping));
  EXPECT_EQ(s.sdi, r.sdi);
  EXPECT_EQ(s.gamma_s, r.gamma_s);
  EXPECT_EQ(s.IR_s, r.IR_s);
  for (const auto& [v, e] : r.sdd) EXPECT_EQ(s.sdd.at(mapping.at(v)).value, e.value);
}

TEST_P(Seeded, IrredundanceBoundHoldsWithPrivateNeighborWeight) {
  const FuzzyGraph g = sample(GetParam(), 10);
  const IrredundanceBoundCheck c = check_irredundance_bound(g);
  const oracle::Report o = oracle::report(g);
  EXPECT_EQ(c.gamma_s, o.gamma_s);
  EXPECT_EQ(c.ir_s, o.ir_s);
  if (c.private_neighbor_weight) {
    EXPECT_LT(c.gamma_s, c.ir_s + *c.private_neighbor_weight) << serialize_fgf(g);
  }
  if (c.status == IrredundanceBoundCheck::Status::kHolds) {
    EXPECT_LT(c.gamma_s, c.ir_s + *c.hitting_weight);
  }
}

TEST_P(Seeded, AnchoredSearchFindsExactlyTheMinimalSets) {
  const FuzzyGraph g = sample(GetParam(), 9);
  const DominationReport r = domination_report(g);
  const auto everything = oracle::minimal_sets(g);
  const StrongAdjacencyMatrix m = strong_adjacency_matrix(g);
  for (const auto& anchor : g.labels()) {
    const AnchoredSearchResult found = minimal_sds_containing(g, anchor);
    std::set<VertexSet> got, want;
    for (const auto& s : found.sets) {
      got.insert(s.members);
      EXPECT_EQ(s.weight, m.weight(s.members));
      EXPECT_EQ(s.weight, classify_set(g, s.members).weight);
    }
    for (const auto& s : everything) {
      if (s.count(anchor)) want.insert(s);
    }
    EXPECT_EQ(got, want) << anchor;
    EXPECT_EQ(found.sets[found.best].weight, r.sdd.at(anchor).value);
    EXPECT_EQ(found.sets[found.best].members, r.sdd.at(anchor).witness);

    SearchOptions greedy;
    greedy.exhaustive = false;
    const AnchoredSearchResult first = minimal_sds_containing(g, anchor, greedy);
    ASSERT_EQ(first.sets.size(), 1u);
    EXPECT_TRUE(want.count(first.sets[0].members));
  }
}

class Minimalize : public ::testing::TestWithParam<std::uint64_t> {};

INSTANTIATE_TEST_SUITE_P(Seeds, Minimalize, ::testing::Range<std::uint64_t>(0, 100));

TEST_P(Minimalize, KeepsTheAnchorAndIsMinimal) {
  const std::uint64_t seed = GetParam();
  const FuzzyGraph g = sample(seed, 12);
  std::mt19937_64 rng(seed * 31 + 7);
  std::bernoulli_distribution keep(0.6);
  const std::string anchor = g.label(rng() % g.vertex_count());
  VertexSet s = {anchor};
  for (const auto& v : g.labels()) {
    if (keep(rng)) s.insert(v);
  }
  // Pad with vertices until the set dominates.
  for (const auto& v : g.labels()) {
    if (is_strong_dominating(g, s)) break;
    s.insert(v);
  }
  const MinimalizeResult r = minimalize_containing(g, s, anchor);
  EXPECT_TRUE(r.members.count(anchor));
  EXPECT_TRUE(classify_set(g, r.members).minimal_dominating) << serialize_fgf(g);
}

class Cycles : public ::testing::TestWithParam<std::uint64_t> {};

INSTANTIATE_TEST_SUITE_P(Seeds, Cycles, ::testing::Range<std::uint64_t>(0, 40));

TEST_P(Cycles, BetaEdgesAreEqualAndNoHeavierThanAlpha) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 3 + GetParam() % 8;
  CycleFamily f;
  for (std::size_t i = 0; i < n; ++i) f.memberships.push_back(kOne);
  for (std::size_t i = 0; i < n; ++i) f.edge_weights.push_back(random_grid_value(rng, 1, 6));
  const Decimal least = *std::min_element(f.edge_weights.begin(), f.edge_weights.end());
  f.edge_weights[(GetParam() * 7) % n] = least;
  if (std::count(f.edge_weights.begin(), f.edge_weights.end(), least) < 2) {
    f.edge_weights[(GetParam() * 7 + 1) % n] = least;
  }
  const FuzzyGraph g = generate(f);
  ASSERT_TRUE(classify_structure(g).fuzzy_cycle);
  std::vector<Decimal> beta, alpha;
  for (const auto& e : classify_edges(g)) {
    (e.edge_class == EdgeClass::kBeta ? beta : alpha).push_back(e.edge.weight);
    EXPECT_NE(e.edge_class, EdgeClass::kDelta);
  }
  ASSERT_FALSE(beta.empty());
  for (auto b : beta) {
    EXPECT_EQ(b, beta.front());
    for (auto a : alpha) EXPECT_LE(b, a);
  }
}

}  // namespace
}  // namespace fuzzydom
