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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydom/decimal.hpp"
#include "fuzzydom/domination.hpp"
#include "fuzzydom/graph.hpp"

namespace fuzzydom {

struct TheoremVerdict {
  enum class Status { kHolds, kVacuous, kViolated };

  std::string id;
  Status status = Status::kVacuous;
  std::optional<Decimal> lhs;
  std::optional<Decimal> rhs;
  std::string detail;
  /// FGF text of the offending graph (both graphs for pair checks); set only
  /// when the status is kViolated.
  std::string counterexample;
};

std::string_view to_string(TheoremVerdict::Status status);

/// Canonical ids checked on a single graph, in report order.
const std::vector<std::string>& single_graph_theorem_ids();

/// Canonical ids checked on a pair of graphs (union and join), in report order.
const std::vector<std::string>& pair_theorem_ids();

/// Maps a canonical id or a short alias such as "thm29" to its canonical id.
/// Throws std::invalid_argument for unknown names.
std::string resolve_theorem_id(std::string_view name);

struct VerifyOptions {
  DominationOptions domination;
  /// Seed for the random relabeling used by the isomorphism check.
  std::uint64_t seed = 1;
  /// Canonical ids or aliases; empty selects every applicable check.
  std::vector<std::string> theorems;
};

/// Runs the selected single-graph checks. Failures to evaluate (isolated
/// vertices, size bounds) become vacuous verdicts with the reason in detail.
std::vector<TheoremVerdict> verify_theorems(const FuzzyGraph& g, const VerifyOptions& options = {});

/// Runs the selected pair checks on the union and join of g1 and g2.
std::vector<TheoremVerdict> verify_pair(const FuzzyGraph& g1, const FuzzyGraph& g2,
                                        const VerifyOptions& options = {});

}  // namespace fuzzydom
