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

#include "fuzzydom/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "fuzzydom/connectivity.hpp"

namespace fuzzydom {

namespace {

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

}  // namespace

StrongAdjacencyMatrix::StrongAdjacencyMatrix(std::vector<std::string> labels,
                                             std::vector<Decimal> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  if (entries_.size() != labels_.size() * labels_.size()) {
    throw std::invalid_argument("matrix entries do not match the label count");
  }
}

std::optional<Decimal> StrongAdjacencyMatrix::row_minimum(std::size_t i) const {
  std::optional<Decimal> least;
  for (std::size_t j = 0; j < size(); ++j) {
    const Decimal a = at(i, j);
    if (!a.is_zero() && (!least || a < *least)) least = a;
  }
  return least;
}

Mask StrongAdjacencyMatrix::closed_neighborhood(std::size_t i) const {
  Mask m = bit(i);
  for (std::size_t j = 0; j < size(); ++j) {
    if (!at(i, j).is_zero()) m |= bit(j);
  }
  return m;
}

Decimal StrongAdjacencyMatrix::weight(const VertexSet& set) const {
  Decimal w;
  for (const auto& label : set) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw GraphError("unknown vertex '" + label + "'");
    auto least = row_minimum(static_cast<std::size_t>(it - labels_.begin()));
    if (!least) throw DominationError("vertex '" + label + "' has no strong edge");
    w += *least;
  }
  return w;
}

StrongAdjacencyMatrix strong_adjacency_matrix(const FuzzyGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Decimal> entries(n * n, kZero);
  for (const auto& ce : classify_edges(g)) {
    if (!is_strong(ce.edge_class)) continue;
    entries[ce.edge.u * n + ce.edge.v] = ce.edge.weight;
    entries[ce.edge.v * n + ce.edge.u] = ce.edge.weight;
  }
  return StrongAdjacencyMatrix(g.labels(), std::move(entries));
}

AnchoredSearchResult minimal_sds_containing(const FuzzyGraph& g, std::string_view anchor,
                                            const SearchOptions& options) {
  const std::size_t start = g.index_of(anchor);
  const std::size_t n = g.vertex_count();
  if (n > std::min<std::size_t>(options.max_vertices, 64)) {
    throw DominationError("anchored search is limited to " +
                          std::to_string(std::min<std::size_t>(options.max_vertices, 64)) +
                          " vertices");
  }
  const StrongAdjacencyMatrix matrix = strong_adjacency_matrix(g);
  std::vector<Mask> closed(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!matrix.row_minimum(i)) {
      throw DominationError("vertex '" + g.label(i) + "' has no strong edge");
    }
    closed[i] = matrix.closed_neighborhood(i);
  }
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;

  auto covered_by = [&](Mask s) {
    Mask c = 0;
    for (Mask r = s; r != 0; r &= r - 1) c |= closed[std::countr_zero(r)];
    return c;
  };
  // Every member keeps a residual neighborhood no other member reaches.
  auto residuals_nonempty = [&](Mask s) {
    for (Mask r = s; r != 0; r &= r - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(r));
      if ((closed[v] & ~covered_by(s & ~bit(v))) == 0) return false;
    }
    return true;
  };

  std::set<Mask> emitted;
  std::unordered_set<Mask> visited;
  bool done = false;
  std::function<void(Mask, Mask)> extend = [&](Mask set, Mask covered) {
    if (!visited.insert(set).second) return;
    for (std::size_t v = 0; v < n && !done; ++v) {
      if (set & bit(v)) continue;
      const Mask next = set | bit(v);
      if (!residuals_nonempty(next)) continue;
      const Mask next_covered = covered | closed[v];
      if (next_covered == all) {
        emitted.insert(next);
        done = !options.exhaustive;
        continue;
      }
      extend(next, next_covered);
    }
  };
  if (closed[start] == all) {
    emitted.insert(bit(start));
  } else {
    extend(bit(start), closed[start]);
  }

  AnchoredSearchResult result;
  result.anchor = std::string(anchor);
  result.exhaustive = options.exhaustive;
  for (Mask m : emitted) {
    // Dominating by construction; check minimality by single deletions.
    for (Mask r = m; r != 0; r &= r - 1) {
      if (covered_by(m & ~(r & (~r + 1))) == all) {
        throw std::logic_error("anchored search emitted a non-minimal set");
      }
    }
    VertexSet members;
    for (Mask r = m; r != 0; r &= r - 1) members.insert(g.label(std::countr_zero(r)));
    const Decimal w = matrix.weight(members);
    result.sets.push_back({std::move(members), w});
  }
  std::sort(result.sets.begin(), result.sets.end(),
            [](const AnchoredSet& a, const AnchoredSet& b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                                  b.members.begin(), b.members.end());
            });
  result.best = 0;
  return result;
}

MinimalizeResult minimalize_containing(const FuzzyGraph& g, const VertexSet& s,
                                       std::string_view anchor) {
  const std::size_t u = g.index_of(anchor);
  if (!s.count(std::string(anchor))) {
    throw DominationError("anchor '" + std::string(anchor) + "' is not in the set");
  }
  StrongNeighborhoods sn(g);
  sn.require_weights();
  Mask set = sn.to_mask(s);
  if (!sn.dominates(set)) throw DominationError("input set is not strongly dominating");

  const std::size_t n = sn.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || !(set & bit(v))) continue;
      if (sn.dominates(set & ~bit(v))) {
        set &= ~bit(v);
        changed = true;
      }
    }
  }

  MinimalizeResult result;
  if (sn.dominates(set & ~bit(u))) {
    // The anchor is redundant: its closed neighborhood is dominated by other
    // members. Drop those dominators, replace each by its end-vertex
    // neighbors and a cover of its other neighbors away from N_s[u], then
    // strip members left without a private neighbor.
    result.repaired = true;
    const Mask around_u = sn.closed(u);
    Mask dominators = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u && (set & bit(v)) && (sn.closed(v) & around_u)) dominators |= bit(v);
    }
    Mask next = set & ~dominators;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(dominators & bit(v))) continue;
      const Mask outside = sn.open(v) & ~around_u;
      for (std::size_t x = 0; x < n; ++x) {
        if ((outside & bit(x)) && std::popcount(sn.open(x)) == 1) next |= bit(x);
      }
      for (std::size_t x = 0; x < n; ++x) {
        if ((outside & bit(x)) && !(sn.covered(next) & bit(x))) next |= bit(x);
      }
    }
    // Vertices only the removed dominators reached.
    for (std::size_t y = 0; y < n; ++y) {
      if (!(sn.covered(next) & bit(y))) next |= bit(y);
    }
    changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || !(next & bit(v))) continue;
        if (sn.private_neighborhood(v, next) == 0) {
          next &= ~bit(v);
          changed = true;
        }
      }
    }
    set = next;
  }

  if (!(set & bit(u)) || !sn.minimal_dominating(set)) {
    throw std::logic_error("minimalization produced a set that is not a minimal SDS");
  }
  result.members = sn.to_set(set);
  return result;
}

}  // namespace fuzzydom
