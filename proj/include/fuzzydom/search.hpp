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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydom/decimal.hpp"
#include "fuzzydom/domination.hpp"
#include "fuzzydom/graph.hpp"

namespace fuzzydom {

/// n×n matrix with entry (i, j) = υ(v_i v_j) when that edge is strong and 0
/// otherwise. Labels are lexicographic.
class StrongAdjacencyMatrix {
 public:
  StrongAdjacencyMatrix(std::vector<std::string> labels, std::vector<Decimal> entries);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  Decimal at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

  /// Least positive entry of row i; nullopt for an all-zero row.
  std::optional<Decimal> row_minimum(std::size_t i) const;
  /// {v_i} ∪ {v_j : a_ij > 0} as a bitmask.
  Mask closed_neighborhood(std::size_t i) const;
  /// Σ of row minima over the members of `set`.
  Decimal weight(const VertexSet& set) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Decimal> entries_;
};

StrongAdjacencyMatrix strong_adjacency_matrix(const FuzzyGraph& g);

struct AnchoredSet {
  VertexSet members;
  Decimal weight;
};

struct AnchoredSearchResult {
  std::string anchor;
  /// Sorted by weight, then lexicographically.
  std::vector<AnchoredSet> sets;
  /// Index of a least-weight entry.
  std::size_t best = 0;
  bool exhaustive = false;
};

struct SearchOptions {
  /// Explore every feasible extension instead of stopping at the first
  /// dominating set reached.
  bool exhaustive = true;
  std::size_t max_vertices = kHardExactLimit;
};

/**
 * Grows a set from `anchor` one vertex at a time, in label order, admitting a
 * vertex only if every chosen vertex still has a nonempty residual
 * neighborhood N_s[x] ∖ ⋃ N_s[others]. A branch succeeds once the closed
 * neighborhoods cover every vertex. Each success is a minimal strong
 * dominating set containing the anchor; the exhaustive mode finds all of
 * them. Works from the strong adjacency matrix only.
 */
AnchoredSearchResult minimal_sds_containing(const FuzzyGraph& g, std::string_view anchor,
                                            const SearchOptions& options = {});

struct MinimalizeResult {
  VertexSet members;
  /// True when greedy deletion would have made the anchor redundant and the
  /// dominator-replacement repair ran instead.
  bool repaired = false;
};

/// Shrinks a strong dominating set containing `anchor` to a minimal one that
/// still contains it.
MinimalizeResult minimalize_containing(const FuzzyGraph& g, const VertexSet& s,
                                       std::string_view anchor);

}  // namespace fuzzydom
