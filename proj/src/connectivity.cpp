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

#include "fuzzydom/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

namespace fuzzydom {

ConnectivityMatrix connectivity_matrix(const FuzzyGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Decimal> conn(n * n, kZero);
  for (const auto& e : g.edges()) {
    conn[e.u * n + e.v] = e.weight;
    conn[e.v * n + e.u] = e.weight;
  }
  // Max-min closure. Walks and simple paths have the same best strength.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || conn[i * n + k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const Decimal via = min(conn[i * n + k], conn[k * n + j]);
        if (via > conn[i * n + j]) conn[i * n + j] = via;
      }
    }
  }
  return ConnectivityMatrix(n, std::move(conn));
}

Decimal strength_of_connectedness(const FuzzyGraph& g, std::size_t a, std::size_t b,
                                  std::size_t skip_u, std::size_t skip_v) {
  const std::size_t n = g.vertex_count();
  auto skipped = [&](std::size_t x, std::size_t y) {
    return (x == skip_u && y == skip_v) || (x == skip_v && y == skip_u);
  };
  // Widest-path Dijkstra: best[x] is the strongest known path a..x.
  std::vector<Decimal> best(n, kZero);
  std::vector<bool> done(n, false);
  done[a] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != a && g.has_edge(a, j) && !skipped(a, j)) best[j] = g.weight(a, j);
  }
  while (true) {
    std::size_t pick = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!done[j] && !best[j].is_zero() && (pick == n || best[j] > best[pick])) pick = j;
    }
    if (pick == n) return kZero;
    if (pick == b) return best[b];
    done[pick] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || !g.has_edge(pick, j) || skipped(pick, j)) continue;
      const Decimal via = min(best[pick], g.weight(pick, j));
      if (via > best[j]) best[j] = via;
    }
  }
}

bool is_connected(const FuzzyGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y) {
      if (!seen[y] && g.has_edge(x, y)) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kAlpha:
      return "ALPHA";
    case EdgeClass::kBeta:
      return "BETA";
    case EdgeClass::kDelta:
      return "DELTA";
  }
  return "?";
}

std::vector<ClassifiedEdge> classify_edges(const FuzzyGraph& g) {
  std::vector<ClassifiedEdge> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const Decimal alternative = strength_of_connectedness(g, e.u, e.v, e.u, e.v);
    EdgeClass c = EdgeClass::kAlpha;
    if (e.weight == alternative) {
      c = EdgeClass::kBeta;
    } else if (e.weight < alternative) {
      c = EdgeClass::kDelta;
    }
    out.push_back({e, c});
  }
  return out;
}

FuzzyGraph strong_skeleton(const FuzzyGraph& g) {
  std::vector<Edge> kept;
  for (const auto& ce : classify_edges(g)) {
    if (is_strong(ce.edge_class)) kept.push_back(ce.edge);
  }
  return g.with_edges(kept);
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<Edge> maximum_spanning_tree(const FuzzyGraph& g) {
  if (!is_connected(g)) throw GraphError("maximum spanning tree needs a connected graph");
  std::vector<Edge> order = g.edges();
  std::stable_sort(order.begin(), order.end(),
                   [](const Edge& a, const Edge& b) { return a.weight > b.weight; });
  DisjointSets sets(g.vertex_count());
  std::vector<Edge> tree;
  for (const auto& e : order) {
    if (sets.unite(e.u, e.v)) tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return tree;
}

namespace {

bool is_underlying_cycle(const FuzzyGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n || !is_connected(g)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(i) != 2) return false;
  }
  return true;
}

bool is_star_tree(std::size_t n, const std::vector<Edge>& tree) {
  if (n < 2) return false;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : tree) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return std::any_of(degree.begin(), degree.end(), [&](std::size_t d) { return d == n - 1; });
}

}  // namespace

StructureReport classify_structure(const FuzzyGraph& g) {
  StructureReport r;
  const std::size_t n = g.vertex_count();
  r.connected = is_connected(g);

  r.complete = true;
  for (std::size_t i = 0; i < n && r.complete; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.weight(i, j) != min(g.membership(i), g.membership(j))) {
        r.complete = false;
        break;
      }
    }
  }

  if (r.connected && n > 0) {
    r.mst_edges = maximum_spanning_tree(g);
    // The tree must beat every chord strictly.
    const auto tree_conn = connectivity_matrix(g.with_edges(r.mst_edges));
    r.fuzzy_tree = true;
    for (const auto& e : g.edges()) {
      const bool in_tree = std::any_of(r.mst_edges.begin(), r.mst_edges.end(), [&](const Edge& t) {
        return t.u == e.u && t.v == e.v;
      });
      if (!in_tree && !(e.weight < tree_conn.at(e.u, e.v))) {
        r.fuzzy_tree = false;
        break;
      }
    }
    r.fuzzy_star = r.fuzzy_tree && is_star_tree(n, r.mst_edges);
  }

  if (is_underlying_cycle(g)) {
    Decimal least = g.edges().front().weight;
    for (const auto& e : g.edges()) least = min(least, e.weight);
    const auto minima = std::count_if(g.edges().begin(), g.edges().end(),
                                      [&](const Edge& e) { return e.weight == least; });
    r.fuzzy_cycle = minima >= 2;
    if (r.fuzzy_cycle) {
      std::vector<bool> touched(n, false);
      for (const auto& ce : classify_edges(g)) {
        if (ce.edge_class == EdgeClass::kBeta) touched[ce.edge.u] = touched[ce.edge.v] = true;
      }
      r.beta_saturated = std::all_of(touched.begin(), touched.end(), [](bool b) { return b; });
    }
  }
  return r;
}

WienerValue wiener_index(const FuzzyGraph& g) {
  const FuzzyGraph skeleton = strong_skeleton(g);
  if (!is_connected(skeleton)) {
    throw GraphError("Wiener index needs a connected strong skeleton");
  }
  const std::size_t n = g.vertex_count();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> dist(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = 0;
  for (const auto& e : skeleton.edges()) {
    dist[e.u * n + e.v] = std::min(dist[e.u * n + e.v], e.weight.scaled());
    dist[e.v * n + e.u] = dist[e.u * n + e.v];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dist[i * n + j] = std::min(dist[i * n + j], dist[i * n + k] + dist[k * n + j]);
      }
    }
  }
  WienerValue total;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      total += g.membership(i) * g.membership(j) * Decimal::from_scaled(dist[i * n + j]);
    }
  }
  return total;
}

}  // namespace fuzzydom
