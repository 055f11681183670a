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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydom/decimal.hpp"

namespace fuzzydom {

/// Base of every error the library raises for bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

/// Vertex labels ordered lexicographically.
using VertexSet = std::set<std::string>;

/// An edge between vertex indices `u < v`.
struct Edge {
  std::size_t u;
  std::size_t v;
  Decimal weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// True when `label` is a usable vertex identifier: nonempty, made of
/// letters, digits and `_ - . : ' + /`.
bool is_valid_label(std::string_view label);

/**
 * Undirected fuzzy graph: a membership degree per vertex and per edge.
 *
 * Vertices are indexed by the lexicographic rank of their labels, so every
 * index-ordered traversal is also label-ordered. The graph is immutable; the
 * derivation helpers return new graphs.
 *
 * Construction enforces structure only (unique valid labels, known endpoints,
 * no loops or duplicate edges). Membership ranges and the edge bound
 * υ(ab) ≤ ϱ(a) ∧ ϱ(b) are checked by validate(), so that invalid data can be
 * held and reported on.
 */
class FuzzyGraph {
 public:
  struct VertexSpec {
    std::string label;
    Decimal membership;
  };
  struct EdgeSpec {
    std::string u;
    std::string v;
    Decimal weight;
  };

  FuzzyGraph() = default;
  FuzzyGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws GraphError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  Decimal membership(std::size_t i) const { return memberships_.at(i); }
  const std::vector<Decimal>& memberships() const { return memberships_; }

  /// Zero when there is no edge.
  Decimal weight(std::size_t i, std::size_t j) const {
    return matrix_[i * labels_.size() + j];
  }
  bool has_edge(std::size_t i, std::size_t j) const { return !weight(i, j).is_zero(); }

  /// Sorted by (u, v), i.e. lexicographically by label pair.
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t degree(std::size_t i) const;

  std::vector<VertexSpec> vertex_specs() const;
  std::vector<EdgeSpec> edge_specs() const;

  FuzzyGraph without_edge(std::size_t u, std::size_t v) const;
  /// Keeps the vertex set and only the listed edges.
  FuzzyGraph with_edges(const std::vector<Edge>& kept) const;
  /// Renames vertices; `mapping` must be a bijection onto valid labels.
  FuzzyGraph relabeled(const std::map<std::string, std::string>& mapping) const;

  VertexSet to_labels(const std::vector<std::size_t>& indices) const;
  std::vector<std::size_t> to_indices(const VertexSet& set) const;

  friend bool operator==(const FuzzyGraph& a, const FuzzyGraph& b) {
    return a.labels_ == b.labels_ && a.memberships_ == b.memberships_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Decimal> memberships_;
  std::vector<Edge> edges_;
  std::vector<Decimal> matrix_;
};

/// Lists every violated model invariant; empty when the graph is valid.
std::vector<std::string> validate(const FuzzyGraph& g);

struct GraphStats {
  Decimal order_p;
  Decimal size_q;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
};

GraphStats stats(const FuzzyGraph& g);

/// Formats `{a,b,c}`.
std::string format_set(const VertexSet& set);

}  // namespace fuzzydom
