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

#include "fuzzydom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace fuzzydom {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-' || c == '.' || c == ':' || c == '\'' || c == '+' ||
           c == '/';
  });
}

FuzzyGraph::FuzzyGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.label < b.label; });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_valid_label(vertices[i].label)) {
      throw GraphError("invalid vertex label '" + vertices[i].label + "'");
    }
    if (i > 0 && vertices[i].label == vertices[i - 1].label) {
      throw GraphError("duplicate vertex '" + vertices[i].label + "'");
    }
    labels_.push_back(vertices[i].label);
    memberships_.push_back(vertices[i].membership);
  }
  const std::size_t n = labels_.size();
  matrix_.assign(n * n, kZero);
  for (const auto& e : edges) {
    auto a = find(e.u);
    auto b = find(e.v);
    if (!a) throw GraphError("edge " + e.u + " " + e.v + " references unknown vertex '" + e.u + "'");
    if (!b) throw GraphError("edge " + e.u + " " + e.v + " references unknown vertex '" + e.v + "'");
    if (*a == *b) throw GraphError("self-loop on vertex '" + e.u + "'");
    auto [u, v] = std::minmax(*a, *b);
    if (std::any_of(edges_.begin(), edges_.end(),
                    [&](const Edge& x) { return x.u == u && x.v == v; })) {
      throw GraphError("duplicate edge " + labels_[u] + " " + labels_[v]);
    }
    edges_.push_back({u, v, e.weight});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  // Zero-weight edges cannot be represented in the matrix; they stay in
  // edges_ so validate() can report them.
  for (const auto& e : edges_) {
    matrix_[e.u * n + e.v] = e.weight;
    matrix_[e.v * n + e.u] = e.weight;
  }
}

std::optional<std::size_t> FuzzyGraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FuzzyGraph::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw GraphError("unknown vertex '" + std::string(label) + "'");
  return *i;
}

std::size_t FuzzyGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < vertex_count(); ++j) d += has_edge(i, j) ? 1 : 0;
  return d;
}

std::vector<FuzzyGraph::VertexSpec> FuzzyGraph::vertex_specs() const {
  std::vector<VertexSpec> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) out.push_back({labels_[i], memberships_[i]});
  return out;
}

std::vector<FuzzyGraph::EdgeSpec> FuzzyGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (const auto& e : edges_) out.push_back({labels_[e.u], labels_[e.v], e.weight});
  return out;
}

FuzzyGraph FuzzyGraph::without_edge(std::size_t u, std::size_t v) const {
  std::vector<Edge> kept;
  for (const auto& e : edges_) {
    if (!((e.u == u && e.v == v) || (e.u == v && e.v == u))) kept.push_back(e);
  }
  return with_edges(kept);
}

FuzzyGraph FuzzyGraph::with_edges(const std::vector<Edge>& kept) const {
  std::vector<EdgeSpec> specs;
  for (const auto& e : kept) specs.push_back({labels_.at(e.u), labels_.at(e.v), e.weight});
  return FuzzyGraph(vertex_specs(), std::move(specs));
}

FuzzyGraph FuzzyGraph::relabeled(const std::map<std::string, std::string>& mapping) const {
  auto rename = [&](const std::string& label) {
    auto it = mapping.find(label);
    if (it == mapping.end()) throw GraphError("relabeling misses vertex '" + label + "'");
    return it->second;
  };
  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < labels_.size(); ++i) vs.push_back({rename(labels_[i]), memberships_[i]});
  std::vector<EdgeSpec> es;
  for (const auto& e : edges_) es.push_back({rename(labels_[e.u]), rename(labels_[e.v]), e.weight});
  return FuzzyGraph(std::move(vs), std::move(es));
}

VertexSet FuzzyGraph::to_labels(const std::vector<std::size_t>& indices) const {
  VertexSet out;
  for (auto i : indices) out.insert(labels_.at(i));
  return out;
}

std::vector<std::size_t> FuzzyGraph::to_indices(const VertexSet& set) const {
  std::vector<std::size_t> out;
  for (const auto& label : set) out.push_back(index_of(label));
  return out;
}

std::vector<std::string> validate(const FuzzyGraph& g) {
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Decimal m = g.membership(i);
    if (m <= kZero || m > kOne) {
      violations.push_back("vertex " + g.label(i) + ": membership " + m.to_string() +
                           " outside (0,1]");
    }
  }
  for (const auto& e : g.edges()) {
    const std::string name = "edge " + g.label(e.u) + " " + g.label(e.v);
    if (e.weight <= kZero || e.weight > kOne) {
      violations.push_back(name + ": membership " + e.weight.to_string() + " outside (0,1]");
      continue;
    }
    const Decimal bound = min(g.membership(e.u), g.membership(e.v));
    if (e.weight > bound) {
      violations.push_back(name + ": membership " + e.weight.to_string() +
                           " exceeds endpoint minimum " + bound.to_string());
    }
  }
  return violations;
}

GraphStats stats(const FuzzyGraph& g) {
  GraphStats s;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  for (auto m : g.memberships()) s.order_p += m;
  for (const auto& e : g.edges()) s.size_q += e.weight;
  return s;
}

std::string format_set(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : set) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  return out + "}";
}

}  // namespace fuzzydom
