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
#include <string_view>
#include <vector>

#include "fuzzydom/decimal.hpp"
#include "fuzzydom/graph.hpp"

namespace fuzzydom {

/// Strength of connectedness for every vertex pair: the maximum over paths of
/// the weakest edge on the path. Zero for disconnected pairs and on the
/// diagonal.
class ConnectivityMatrix {
 public:
  ConnectivityMatrix(std::size_t n, std::vector<Decimal> values)
      : n_(n), values_(std::move(values)) {}

  std::size_t size() const { return n_; }
  Decimal at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Decimal> values_;
};

ConnectivityMatrix connectivity_matrix(const FuzzyGraph& g);

/// CONN between `a` and `b` in `g` with the edge `{skip_u, skip_v}` ignored;
/// pass the same index twice to ignore nothing.
Decimal strength_of_connectedness(const FuzzyGraph& g, std::size_t a, std::size_t b,
                                  std::size_t skip_u, std::size_t skip_v);

bool is_connected(const FuzzyGraph& g);

enum class EdgeClass { kAlpha, kBeta, kDelta };

std::string_view to_string(EdgeClass c);

inline bool is_strong(EdgeClass c) { return c != EdgeClass::kDelta; }

struct ClassifiedEdge {
  Edge edge;
  EdgeClass edge_class;
};

/// α if υ(ab) > CONN(a,b) without ab, β if equal, δ if less. Edge order
/// follows FuzzyGraph::edges().
std::vector<ClassifiedEdge> classify_edges(const FuzzyGraph& g);

/// `g` with every δ-edge removed.
FuzzyGraph strong_skeleton(const FuzzyGraph& g);

/// Kruskal on descending weight; ties go to the lexicographically smaller
/// label pair. Throws GraphError when `g` is disconnected.
std::vector<Edge> maximum_spanning_tree(const FuzzyGraph& g);

struct StructureReport {
  bool connected = false;
  bool complete = false;
  bool fuzzy_tree = false;
  bool fuzzy_cycle = false;
  /// Only set for fuzzy cycles.
  bool beta_saturated = false;
  bool fuzzy_star = false;
  /// Empty when disconnected.
  std::vector<Edge> mst_edges;
};

StructureReport classify_structure(const FuzzyGraph& g);

/// Products of three 4-digit memberships need 12 digits to stay exact.
using WienerValue = FixedDecimal<12>;

/// Σ over unordered vertex pairs of ϱ(a)·ϱ(b)·d_s(a,b), where d_s is the least
/// total edge weight over paths made of strong edges. Throws GraphError when
/// the strong skeleton is disconnected.
WienerValue wiener_index(const FuzzyGraph& g);

}  // namespace fuzzydom
