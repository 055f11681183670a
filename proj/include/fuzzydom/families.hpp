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
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "fuzzydom/decimal.hpp"
#include "fuzzydom/domination.hpp"
#include "fuzzydom/graph.hpp"

namespace fuzzydom {

/// A descriptor or closed form whose preconditions the input does not meet.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Complete fuzzy graph on the given vertex memberships; labels v1..vn.
struct CompleteFamily {
  std::vector<Decimal> memberships;
};

/// Complete multipartite graph. Two parts use labels a1.. and b1..; more
/// parts use p<part>_<index>.
struct PartiteFamily {
  std::vector<std::vector<Decimal>> parts;
};

/// Star with center `c` and leaves l1..ln.
struct StarFamily {
  Decimal center;
  std::vector<Decimal> leaves;
  std::vector<Decimal> edge_weights;
};

/// Cycle c1..cn; edge i joins c_i and c_(i+1 mod n).
struct CycleFamily {
  std::vector<Decimal> memberships;
  std::vector<Decimal> edge_weights;
};

using FamilyDescriptor = std::variant<CompleteFamily, PartiteFamily, StarFamily, CycleFamily>;

enum class FamilyKind { kComplete, kCompleteBipartite, kCompleteRPartite, kStar, kCycle };

FamilyKind kind_of(const FamilyDescriptor& d);

/// Builds the family member. Complete and partite edges get ϱ(a) ∧ ϱ(b).
/// Throws HypothesisError for an invalid descriptor (empty part, star edge
/// above an endpoint, cycle whose least edge weight is unique, ...).
FuzzyGraph generate(const FamilyDescriptor& d);

/// Disjoint union; labels must not overlap.
FuzzyGraph graph_union(const FuzzyGraph& g1, const FuzzyGraph& g2);

/// Union plus every cross edge ab weighted ϱ(a) ∧ ϱ(b).
FuzzyGraph graph_join(const FuzzyGraph& g1, const FuzzyGraph& g2);

/**
 * SDI from the family's closed form:
 *  - complete: n · least membership;
 *  - partite: [2(n_rest + 1) + (n_1 − 1)]ρ(a_1) + ρ(a_2) + … + ρ(a_(k−1))
 *    + (n_1 − (k − 1))ρ(b), with N_1 the part holding the least membership,
 *    b the least vertex outside N_1 and a_1..a_(k−1) the N_1 vertices below
 *    it. Needs at least two parts of at least two vertices each;
 *  - star with n leaves: least edge weight + n · q;
 *  - β-saturated fuzzy cycle with n vertices and β-weight w: n ⌈n/3⌉ w.
 * Throws HypothesisError when the descriptor falls outside these cases.
 */
Decimal closed_form_sdi(const FamilyDescriptor& d);

/// Σ SDI(X_i) + Σ (n − |V(X_i)|) γ_s(X_i) over label-disjoint components.
Decimal sdi_union_formula(const std::vector<FuzzyGraph>& components,
                          const DominationOptions& options = {});

/**
 * SDI of the join from its components: each u in one side contributes the
 * lesser of the best minimal pair {u, v} with v on the other side and the
 * best minimal SDS of the join that contains u and lies within u's side.
 * All weights are measured in the join.
 */
Decimal sdi_join_formula(const FuzzyGraph& g1, const FuzzyGraph& g2,
                         const DominationOptions& options = {});

// Seeded generators. Vertex memberships come from the grid 0.10, 0.15, ...,
// 1.00 and edge weights from 0.05, 0.10, ... up to the endpoint minimum, so
// ties (and hence β-edges) are common.

Decimal random_grid_value(std::mt19937_64& rng, int lo_steps, int hi_steps);

CompleteFamily random_complete(std::size_t n, std::uint64_t seed);
PartiteFamily random_partite(const std::vector<std::size_t>& part_sizes, std::uint64_t seed);
StarFamily random_star(std::size_t leaves, std::uint64_t seed);
/// Every vertex touches a least-weight edge.
CycleFamily random_beta_saturated_cycle(std::size_t n, std::uint64_t seed);

struct RandomGraphOptions {
  std::size_t vertices = 8;
  /// Probability of each non-tree edge on top of a random spanning tree.
  double density = 0.3;
  /// ϱ ≡ 1 instead of grid memberships.
  bool unit_vertices = false;
  /// Label prefix; vertices are <prefix>1..<prefix>n.
  std::string prefix = "v";
};

/// Connected, so every vertex has a strong edge.
FuzzyGraph random_connected_graph(const RandomGraphOptions& options, std::uint64_t seed);

/// Random tree plus up to `chords` non-tree edges, each weaker than the tree
/// path between its endpoints: a fuzzy tree whose chords are all δ-edges.
FuzzyGraph random_fuzzy_tree(std::size_t vertices, std::size_t chords, std::uint64_t seed);

}  // namespace fuzzydom
