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

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <tuple>

#include "fuzzydom/connectivity.hpp"

namespace fuzzydom {

namespace {

constexpr Decimal kGridStep = Decimal::from_scaled(500);  // 0.05

std::string numbered(const std::string& prefix, std::size_t i, std::size_t count) {
  const std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(count).size();
  return prefix + std::string(width - digits.size(), '0') + digits;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw HypothesisError(message);
}

FuzzyGraph checked(FuzzyGraph g) {
  auto violations = validate(g);
  if (!violations.empty()) throw HypothesisError("invalid family member: " + violations.front());
  return g;
}

std::string partite_label(std::size_t part, std::size_t index, const PartiteFamily& f) {
  if (f.parts.size() == 2) {
    return numbered(part == 0 ? "a" : "b", index + 1, f.parts[part].size());
  }
  return numbered(numbered("p", part + 1, f.parts.size()) + "_", index + 1, f.parts[part].size());
}

}  // namespace

FamilyKind kind_of(const FamilyDescriptor& d) {
  if (std::holds_alternative<CompleteFamily>(d)) return FamilyKind::kComplete;
  if (const auto* p = std::get_if<PartiteFamily>(&d)) {
    return p->parts.size() == 2 ? FamilyKind::kCompleteBipartite : FamilyKind::kCompleteRPartite;
  }
  if (std::holds_alternative<StarFamily>(d)) return FamilyKind::kStar;
  return FamilyKind::kCycle;
}

FuzzyGraph generate(const FamilyDescriptor& d) {
  std::vector<FuzzyGraph::VertexSpec> vs;
  std::vector<FuzzyGraph::EdgeSpec> es;

  if (const auto* f = std::get_if<CompleteFamily>(&d)) {
    require(!f->memberships.empty(), "complete family needs at least one vertex");
    const std::size_t n = f->memberships.size();
    for (std::size_t i = 0; i < n; ++i) vs.push_back({numbered("v", i + 1, n), f->memberships[i]});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        es.push_back({vs[i].label, vs[j].label, min(vs[i].membership, vs[j].membership)});
      }
    }
  } else if (const auto* f = std::get_if<PartiteFamily>(&d)) {
    require(f->parts.size() >= 2, "partite family needs at least two parts");
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < f->parts.size(); ++p) {
      require(!f->parts[p].empty(), "every part must be nonempty");
      for (std::size_t i = 0; i < f->parts[p].size(); ++i) {
        vs.push_back({partite_label(p, i, *f), f->parts[p][i]});
        part_of.push_back(p);
      }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (part_of[i] == part_of[j]) continue;
        es.push_back({vs[i].label, vs[j].label, min(vs[i].membership, vs[j].membership)});
      }
    }
  } else if (const auto* f = std::get_if<StarFamily>(&d)) {
    require(!f->leaves.empty(), "star needs at least one leaf");
    require(f->edge_weights.size() == f->leaves.size(), "star needs one edge weight per leaf");
    vs.push_back({"c", f->center});
    for (std::size_t i = 0; i < f->leaves.size(); ++i) {
      const std::string leaf = numbered("l", i + 1, f->leaves.size());
      vs.push_back({leaf, f->leaves[i]});
      require(f->edge_weights[i] <= min(f->center, f->leaves[i]),
              "star edge to " + leaf + " exceeds its endpoint memberships");
      es.push_back({"c", leaf, f->edge_weights[i]});
    }
  } else {
    const auto& c = std::get<CycleFamily>(d);
    const std::size_t n = c.memberships.size();
    require(n >= 3, "cycle needs at least three vertices");
    require(c.edge_weights.size() == n, "cycle needs one edge weight per vertex");
    const Decimal least = *std::min_element(c.edge_weights.begin(), c.edge_weights.end());
    require(std::count(c.edge_weights.begin(), c.edge_weights.end(), least) >= 2,
            "fuzzy cycle needs its least edge weight at least twice");
    for (std::size_t i = 0; i < n; ++i) vs.push_back({numbered("c", i + 1, n), c.memberships[i]});
    for (std::size_t i = 0; i < n; ++i) {
      es.push_back({vs[i].label, vs[(i + 1) % n].label, c.edge_weights[i]});
    }
  }
  return checked(FuzzyGraph(std::move(vs), std::move(es)));
}

FuzzyGraph graph_union(const FuzzyGraph& g1, const FuzzyGraph& g2) {
  for (const auto& label : g2.labels()) {
    if (g1.find(label)) throw GraphError("union needs disjoint labels; '" + label + "' repeats");
  }
  auto vs = g1.vertex_specs();
  auto more = g2.vertex_specs();
  vs.insert(vs.end(), more.begin(), more.end());
  auto es = g1.edge_specs();
  auto more_edges = g2.edge_specs();
  es.insert(es.end(), more_edges.begin(), more_edges.end());
  return FuzzyGraph(std::move(vs), std::move(es));
}

FuzzyGraph graph_join(const FuzzyGraph& g1, const FuzzyGraph& g2) {
  const FuzzyGraph u = graph_union(g1, g2);
  auto es = u.edge_specs();
  for (std::size_t i = 0; i < g1.vertex_count(); ++i) {
    for (std::size_t j = 0; j < g2.vertex_count(); ++j) {
      es.push_back({g1.label(i), g2.label(j), min(g1.membership(i), g2.membership(j))});
    }
  }
  return FuzzyGraph(u.vertex_specs(), std::move(es));
}

namespace {

Decimal partite_closed_form(const PartiteFamily& f) {
  require(f.parts.size() >= 2, "partite closed form needs at least two parts");
  for (const auto& part : f.parts) {
    // A singleton part dominates the whole graph on its own, which the closed
    // form does not account for.
    require(part.size() >= 2, "partite closed form needs every part to have two or more vertices");
  }
  std::size_t first_part = 0;
  Decimal least = f.parts[0][0];
  for (std::size_t p = 0; p < f.parts.size(); ++p) {
    for (auto m : f.parts[p]) {
      if (m < least) {
        least = m;
        first_part = p;
      }
    }
  }
  const auto& n1_part = f.parts[first_part];
  const auto n1 = static_cast<std::int64_t>(n1_part.size());
  std::int64_t rest_count = 0;
  // Everything except a_1, ordered by membership with N_1 vertices after
  // equal outsiders.
  std::vector<std::pair<Decimal, bool>> others;
  bool skipped_least = false;
  for (std::size_t p = 0; p < f.parts.size(); ++p) {
    for (auto m : f.parts[p]) {
      if (p == first_part && m == least && !skipped_least) {
        skipped_least = true;
        continue;
      }
      others.push_back({m, p == first_part});
      if (p != first_part) ++rest_count;
    }
  }
  std::stable_sort(others.begin(), others.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
  Decimal total = (2 * (rest_count + 1) + (n1 - 1)) * least;
  std::int64_t k_minus_1 = 1;
  for (const auto& [m, in_n1] : others) {
    if (!in_n1) {
      total += (n1 - k_minus_1) * m;
      break;
    }
    total += m;
    ++k_minus_1;
  }
  return total;
}

}  // namespace

Decimal closed_form_sdi(const FamilyDescriptor& d) {
  if (const auto* f = std::get_if<CompleteFamily>(&d)) {
    require(!f->memberships.empty(), "complete family needs at least one vertex");
    const auto n = static_cast<std::int64_t>(f->memberships.size());
    return n * *std::min_element(f->memberships.begin(), f->memberships.end());
  }
  if (const auto* f = std::get_if<PartiteFamily>(&d)) return partite_closed_form(*f);
  if (const auto* f = std::get_if<StarFamily>(&d)) {
    require(!f->edge_weights.empty(), "star needs at least one leaf");
    Decimal q;
    for (auto w : f->edge_weights) q += w;
    const auto n = static_cast<std::int64_t>(f->edge_weights.size());
    return *std::min_element(f->edge_weights.begin(), f->edge_weights.end()) + n * q;
  }
  const auto& f = std::get<CycleFamily>(d);
  const FuzzyGraph g = generate(d);
  require(classify_structure(g).beta_saturated, "cycle closed form needs a beta-saturated fuzzy cycle");
  const auto n = static_cast<std::int64_t>(f.memberships.size());
  const Decimal w = *std::min_element(f.edge_weights.begin(), f.edge_weights.end());
  return n * ((n + 2) / 3) * w;
}

Decimal sdi_union_formula(const std::vector<FuzzyGraph>& components,
                          const DominationOptions& options) {
  std::map<std::string, std::size_t> owner;
  std::int64_t n = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (const auto& label : components[i].labels()) {
      if (!owner.emplace(label, i).second) {
        throw GraphError("union needs disjoint labels; '" + label + "' repeats");
      }
    }
    n += static_cast<std::int64_t>(components[i].vertex_count());
  }
  Decimal total;
  for (const auto& c : components) {
    const DominationReport r = domination_report(c, options);
    total += r.sdi + (n - static_cast<std::int64_t>(c.vertex_count())) * r.gamma_s;
  }
  return total;
}

namespace {

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

/// Contribution of every vertex of `side` (a component of `join`).
Decimal join_side_sum(const FuzzyGraph& join, const StrongNeighborhoods& join_sn,
                      const FuzzyGraph& side) {
  std::vector<std::size_t> to_join(side.vertex_count());
  Mask side_mask = 0;
  for (std::size_t i = 0; i < side.vertex_count(); ++i) {
    to_join[i] = join.index_of(side.label(i));
    side_mask |= bit(to_join[i]);
  }
  const Mask other_mask = join_sn.all() & ~side_mask;
  const std::size_t m = side.vertex_count();

  Decimal total;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t u = to_join[i];
    bool found = false;
    Decimal best;
    auto offer = [&](Decimal w) {
      if (!found || w < best) best = w;
      found = true;
    };
    for (std::size_t v = 0; v < join_sn.size(); ++v) {
      if (!(other_mask & bit(v))) continue;
      const Mask pair = bit(u) | bit(v);
      if (join_sn.minimal_dominating(pair)) offer(join_sn.weight(pair));
    }
    // Subsets of u's own side containing u that are minimal SDSs of the join.
    const Mask rest = (bit(m) - 1) & ~bit(i);
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask local = sub | bit(i);
      Mask in_join = 0;
      for (Mask r = local; r != 0; r &= r - 1) in_join |= bit(to_join[std::countr_zero(r)]);
      if (join_sn.minimal_dominating(in_join)) {
        offer(join_sn.weight(in_join));
      }
      if (sub == 0) break;
    }
    if (!found) {
      throw HypothesisError("no candidate minimal SDS in the join contains '" + side.label(i) + "'");
    }
    total += best;
  }
  return total;
}

}  // namespace

Decimal sdi_join_formula(const FuzzyGraph& g1, const FuzzyGraph& g2,
                         const DominationOptions& options) {
  const FuzzyGraph join = graph_join(g1, g2);
  const std::size_t limit = std::min(options.max_exact, kHardExactLimit);
  if (join.vertex_count() > limit) {
    throw DominationError("join has " + std::to_string(join.vertex_count()) +
                          " vertices; exact evaluation is limited to " + std::to_string(limit));
  }
  StrongNeighborhoods join_sn(join);
  join_sn.require_weights();
  return join_side_sum(join, join_sn, g1) + join_side_sum(join, join_sn, g2);
}

Decimal random_grid_value(std::mt19937_64& rng, int lo_steps, int hi_steps) {
  std::uniform_int_distribution<int> pick(lo_steps, hi_steps);
  return pick(rng) * kGridStep;
}

namespace {

int grid_steps(Decimal d) { return static_cast<int>(d.scaled() / kGridStep.scaled()); }

Decimal random_vertex_membership(std::mt19937_64& rng) { return random_grid_value(rng, 2, 20); }

Decimal random_edge_weight(std::mt19937_64& rng, Decimal bound) {
  return random_grid_value(rng, 1, std::max(1, grid_steps(bound)));
}

}  // namespace

CompleteFamily random_complete(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CompleteFamily f;
  for (std::size_t i = 0; i < n; ++i) f.memberships.push_back(random_vertex_membership(rng));
  return f;
}

PartiteFamily random_partite(const std::vector<std::size_t>& part_sizes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PartiteFamily f;
  for (auto size : part_sizes) {
    auto& part = f.parts.emplace_back();
    for (std::size_t i = 0; i < size; ++i) part.push_back(random_vertex_membership(rng));
  }
  return f;
}

StarFamily random_star(std::size_t leaves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  StarFamily f;
  f.center = random_vertex_membership(rng);
  for (std::size_t i = 0; i < leaves; ++i) {
    f.leaves.push_back(random_vertex_membership(rng));
    f.edge_weights.push_back(random_edge_weight(rng, min(f.center, f.leaves.back())));
  }
  return f;
}

CycleFamily random_beta_saturated_cycle(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CycleFamily f;
  const Decimal w = random_grid_value(rng, 1, 10);
  std::bernoulli_distribution light(0.5);
  for (std::size_t i = 0; i < n; ++i) f.memberships.push_back(random_grid_value(rng, 10, 20));
  for (std::size_t i = 0; i < n; ++i) {
    const Decimal bound = min(f.memberships[i], f.memberships[(i + 1) % n]);
    f.edge_weights.push_back(light(rng) ? w : random_grid_value(rng, grid_steps(w) + 1, grid_steps(bound)));
  }
  // Vertex i touches edges i-1 and i.
  for (std::size_t i = 0; i < n; ++i) {
    if (f.edge_weights[(i + n - 1) % n] != w && f.edge_weights[i] != w) f.edge_weights[i] = w;
  }
  return f;
}

FuzzyGraph random_connected_graph(const RandomGraphOptions& options, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = options.vertices;
  std::vector<FuzzyGraph::VertexSpec> vs;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back({numbered(options.prefix, i + 1, n),
                  options.unit_vertices ? kOne : random_vertex_membership(rng)});
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<FuzzyGraph::EdgeSpec> es;
  std::vector<bool> linked(n * n, false);
  auto add = [&](std::size_t a, std::size_t b) {
    linked[a * n + b] = linked[b * n + a] = true;
    es.push_back({vs[a].label, vs[b].label,
                  random_edge_weight(rng, min(vs[a].membership, vs[b].membership))});
  };
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    add(order[i], order[parent(rng)]);
  }
  std::bernoulli_distribution extra(options.density);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!linked[a * n + b] && extra(rng)) add(a, b);
    }
  }
  return FuzzyGraph(std::move(vs), std::move(es));
}

FuzzyGraph random_fuzzy_tree(std::size_t vertices, std::size_t chords, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FuzzyGraph::VertexSpec> vs;
  for (std::size_t i = 0; i < vertices; ++i) {
    vs.push_back({numbered("v", i + 1, vertices), random_vertex_membership(rng)});
  }
  // Tree edges weigh at least 0.10 so every non-adjacent pair can take a
  // lighter chord.
  std::vector<FuzzyGraph::EdgeSpec> es;
  for (std::size_t i = 1; i < vertices; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    const std::size_t p = parent(rng);
    const int bound = grid_steps(min(vs[i].membership, vs[p].membership));
    es.push_back({vs[p].label, vs[i].label, random_grid_value(rng, 2, bound)});
  }
  const FuzzyGraph tree(vs, es);
  const auto conn = connectivity_matrix(tree);
  std::vector<std::pair<std::size_t, std::size_t>> open;
  for (std::size_t a = 0; a < vertices; ++a) {
    for (std::size_t b = a + 1; b < vertices; ++b) {
      if (!tree.has_edge(a, b)) open.emplace_back(a, b);
    }
  }
  std::shuffle(open.begin(), open.end(), rng);
  if (open.size() > chords) open.resize(chords);
  for (const auto& [a, b] : open) {
    const int below = std::min(grid_steps(conn.at(a, b)) - 1,
                               grid_steps(min(tree.membership(a), tree.membership(b))));
    es.push_back({tree.label(a), tree.label(b), random_grid_value(rng, 1, below)});
  }
  return FuzzyGraph(std::move(vs), std::move(es));
}

}  // namespace fuzzydom
