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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydom/decimal.hpp"
#include "fuzzydom/graph.hpp"

namespace fuzzydom {

/// Raised when a domination quantity is undefined for the input (a vertex
/// without strong edges) or the input exceeds the exact-enumeration bound.
class DominationError : public Error {
 public:
  using Error::Error;
};

using Mask = std::uint64_t;

/// Largest vertex count the subset enumeration accepts, whatever the options.
inline constexpr std::size_t kHardExactLimit = 24;

struct DominationOptions {
  /// Exact mode refuses graphs with more vertices than this.
  std::size_t max_exact = 16;
  /// Restrict IR_s to maximal irredundant sets instead of all of them.
  bool upper_irredundance_maximal_only = false;
};

/**
 * Closed strong neighborhoods of a graph as bitmasks, plus each vertex's
 * contribution to W(S): the least weight of a strong edge incident to it.
 * Supports graphs of up to 64 vertices.
 */
class StrongNeighborhoods {
 public:
  explicit StrongNeighborhoods(const FuzzyGraph& g);

  std::size_t size() const { return closed_.size(); }
  Mask all() const { return all_; }
  Mask closed(std::size_t v) const { return closed_[v]; }
  Mask open(std::size_t v) const { return closed_[v] & ~(Mask{1} << v); }

  bool has_strong_edge(std::size_t v) const { return open(v) != 0; }
  /// Least strong incident weight; nullopt for a vertex without strong edges.
  std::optional<Decimal> vertex_weight(std::size_t v) const { return least_[v]; }

  /// Throws DominationError naming the first vertex without a strong edge.
  void require_weights() const;

  Mask covered(Mask s) const;
  bool dominates(Mask s) const { return covered(s) == all_; }
  Mask private_neighborhood(std::size_t v, Mask s) const;
  bool irredundant(Mask s) const;
  bool independent(Mask s) const;
  /// Dominating, and no single deletion keeps it dominating.
  bool minimal_dominating(Mask s) const;
  /// Irredundant, and no single addition keeps it irredundant.
  bool maximal_irredundant(Mask s) const;
  /// Requires every member to have a strong edge.
  Decimal weight(Mask s) const;

  const std::vector<std::string>& labels() const { return labels_; }
  Mask to_mask(const VertexSet& set) const;
  VertexSet to_set(Mask s) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Mask> closed_;
  std::vector<std::optional<Decimal>> least_;
  Mask all_ = 0;
};

/// Lexicographic order of the sorted member sequences.
bool lex_less(Mask a, Mask b);

VertexSet strong_closed_neighborhood(const FuzzyGraph& g, std::string_view v);

/// N_s[v] minus the closed strong neighborhoods of the other members of `s`.
VertexSet private_neighborhood(const FuzzyGraph& g, std::string_view v, const VertexSet& s);

bool is_strong_dominating(const FuzzyGraph& g, const VertexSet& s);

struct SetReport {
  VertexSet members;
  Decimal weight;
  bool dominating = false;
  bool minimal_dominating = false;
  bool irredundant = false;
  bool maximal_irredundant = false;
  bool independent = false;

  friend bool operator==(const SetReport&, const SetReport&) = default;
};

SetReport classify_set(const FuzzyGraph& g, const VertexSet& s);

/// Every minimal strong dominating set, lexicographically ordered. Throws
/// DominationError when more than `cap` sets exist.
std::vector<SetReport> enumerate_minimal_sds(const FuzzyGraph& g, std::size_t cap,
                                             const DominationOptions& options = {});

struct SddEntry {
  Decimal value;
  /// Lexicographically least minimum-weight minimal SDS containing the vertex.
  VertexSet witness;

  friend bool operator==(const SddEntry&, const SddEntry&) = default;
};

struct DominationReport {
  Decimal gamma_s;   // least weight of a minimal SDS
  Decimal Gamma_s;   // greatest weight of a minimal SDS
  Decimal ir_s;      // least weight of a maximal irredundant set
  Decimal IR_s;      // greatest weight of an irredundant set
  std::optional<Decimal> i_s;  // least weight of an independent SDS
  Decimal beta_s;    // greatest weight of an independent set
  std::map<std::string, SddEntry> sdd;
  Decimal sdi;
  Decimal min_sdd;
  Decimal max_sdd;
  /// Present iff every vertex has the same strong domination degree.
  std::optional<Decimal> sdrfg;
  std::size_t minimal_sds_count = 0;

  friend bool operator==(const DominationReport&, const DominationReport&) = default;
};

/// Exact computation by subset enumeration.
DominationReport domination_report(const FuzzyGraph& g, const DominationOptions& options = {});

/// Outcome of checking γ_s < ir_s + w, where w is the least weight of a subset
/// of a least-weight maximal irredundant set M that meets every
/// M_x = {a ∈ M : P[a,M] ⊆ N_s(x)} for the vertices x that M leaves
/// undominated.
struct IrredundanceBoundCheck {
  enum class Status { kVacuous, kHolds, kViolated };
  Status status = Status::kVacuous;
  Decimal gamma_s;
  Decimal ir_s;
  std::optional<Decimal> hitting_weight;
  /// Weight of one private neighbor b' ∈ P[b, M] ∖ {b} per member b of the
  /// hitting set. M plus these vertices dominates, so γ_s < ir_s + this
  /// weight always holds even when the bound with hitting_weight fails.
  std::optional<Decimal> private_neighbor_weight;
  VertexSet irredundant_set;
  VertexSet undominated;
  VertexSet hitting_set;
  std::string detail;
};

IrredundanceBoundCheck check_irredundance_bound(const FuzzyGraph& g,
                                                const DominationOptions& options = {});

}  // namespace fuzzydom
