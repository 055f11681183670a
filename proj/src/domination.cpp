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

#include "fuzzydom/domination.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "fuzzydom/connectivity.hpp"

namespace fuzzydom {

namespace {

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

template <typename F>
void for_each_member(Mask s, F&& f) {
  while (s != 0) {
    const auto v = static_cast<std::size_t>(std::countr_zero(s));
    f(v);
    s &= s - 1;
  }
}

}  // namespace

StrongNeighborhoods::StrongNeighborhoods(const FuzzyGraph& g) : labels_(g.labels()) {
  const std::size_t n = g.vertex_count();
  if (n > 64) throw DominationError("strong neighborhoods support at most 64 vertices");
  closed_.resize(n);
  least_.assign(n, std::nullopt);
  for (std::size_t v = 0; v < n; ++v) closed_[v] = bit(v);
  all_ = n == 64 ? ~Mask{0} : bit(n) - 1;
  for (const auto& ce : classify_edges(g)) {
    if (!is_strong(ce.edge_class)) continue;
    const auto& e = ce.edge;
    closed_[e.u] |= bit(e.v);
    closed_[e.v] |= bit(e.u);
    for (auto x : {e.u, e.v}) {
      if (!least_[x] || e.weight < *least_[x]) least_[x] = e.weight;
    }
  }
}

void StrongNeighborhoods::require_weights() const {
  for (std::size_t v = 0; v < size(); ++v) {
    if (!least_[v]) {
      throw DominationError("vertex '" + labels_[v] +
                            "' has no strong edge; set weights are undefined");
    }
  }
}

Mask StrongNeighborhoods::covered(Mask s) const {
  Mask c = 0;
  for_each_member(s, [&](std::size_t v) { c |= closed_[v]; });
  return c;
}

Mask StrongNeighborhoods::private_neighborhood(std::size_t v, Mask s) const {
  return closed_[v] & ~covered(s & ~bit(v));
}

bool StrongNeighborhoods::irredundant(Mask s) const {
  bool ok = true;
  for_each_member(s, [&](std::size_t v) { ok = ok && private_neighborhood(v, s) != 0; });
  return ok;
}

bool StrongNeighborhoods::independent(Mask s) const {
  bool ok = true;
  for_each_member(s, [&](std::size_t v) { ok = ok && (open(v) & s) == 0; });
  return ok;
}

bool StrongNeighborhoods::minimal_dominating(Mask s) const {
  if (!dominates(s)) return false;
  bool ok = true;
  for_each_member(s, [&](std::size_t v) { ok = ok && !dominates(s & ~bit(v)); });
  return ok;
}

bool StrongNeighborhoods::maximal_irredundant(Mask s) const {
  if (!irredundant(s)) return false;
  for (std::size_t a = 0; a < size(); ++a) {
    if ((s & bit(a)) == 0 && irredundant(s | bit(a))) return false;
  }
  return true;
}

Decimal StrongNeighborhoods::weight(Mask s) const {
  Decimal w;
  for_each_member(s, [&](std::size_t v) {
    if (!least_[v]) {
      throw DominationError("vertex '" + labels_[v] + "' has no strong edge; weight undefined");
    }
    w += *least_[v];
  });
  return w;
}

Mask StrongNeighborhoods::to_mask(const VertexSet& set) const {
  Mask m = 0;
  for (const auto& label : set) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw GraphError("unknown vertex '" + label + "'");
    m |= bit(static_cast<std::size_t>(it - labels_.begin()));
  }
  return m;
}

VertexSet StrongNeighborhoods::to_set(Mask s) const {
  VertexSet out;
  for_each_member(s, [&](std::size_t v) { out.insert(labels_[v]); });
  return out;
}

bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const Mask low = diff & (~diff + 1);
  // Below `low` the sequences agree. The side holding `low` is smaller unless
  // the other side ends there.
  const Mask above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

VertexSet strong_closed_neighborhood(const FuzzyGraph& g, std::string_view v) {
  const std::size_t i = g.index_of(v);
  StrongNeighborhoods sn(g);
  return sn.to_set(sn.closed(i));
}

VertexSet private_neighborhood(const FuzzyGraph& g, std::string_view v, const VertexSet& s) {
  const std::size_t i = g.index_of(v);
  if (!s.count(std::string(v))) {
    throw GraphError("vertex '" + std::string(v) + "' is not a member of the set");
  }
  StrongNeighborhoods sn(g);
  return sn.to_set(sn.private_neighborhood(i, sn.to_mask(s)));
}

bool is_strong_dominating(const FuzzyGraph& g, const VertexSet& s) {
  StrongNeighborhoods sn(g);
  return sn.dominates(sn.to_mask(s));
}

SetReport classify_set(const FuzzyGraph& g, const VertexSet& s) {
  if (s.empty()) throw DominationError("classify_set needs a nonempty set");
  StrongNeighborhoods sn(g);
  sn.require_weights();
  const Mask m = sn.to_mask(s);
  SetReport r;
  r.members = s;
  r.weight = sn.weight(m);
  r.dominating = sn.dominates(m);
  r.minimal_dominating = sn.minimal_dominating(m);
  r.irredundant = sn.irredundant(m);
  r.maximal_irredundant = sn.maximal_irredundant(m);
  r.independent = sn.independent(m);
  return r;
}

namespace {

void require_exact_bounds(const FuzzyGraph& g, const DominationOptions& options) {
  const std::size_t limit = std::min(options.max_exact, kHardExactLimit);
  if (g.vertex_count() == 0) throw DominationError("graph has no vertices");
  if (g.vertex_count() > limit) {
    throw DominationError("graph has " + std::to_string(g.vertex_count()) +
                          " vertices; exact enumeration is limited to " + std::to_string(limit));
  }
}

/// Per-subset tables over all 2^n masks, built incrementally from the mask
/// with its lowest member removed.
class SubsetScan {
 public:
  explicit SubsetScan(const StrongNeighborhoods& sn)
      : sn_(sn), full_(static_cast<std::uint32_t>(sn.all())) {
    const std::size_t count = std::size_t{1} << sn.size();
    covered_.assign(count, 0);
    twice_.assign(count, 0);
    irredundant_.assign(count, false);
    independent_.assign(count, false);
    irredundant_[0] = independent_[0] = true;
    for (std::size_t mask = 1; mask < count; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      const std::size_t rest = mask & (mask - 1);
      const auto closed = static_cast<std::uint32_t>(sn.closed(low));
      covered_[mask] = covered_[rest] | closed;
      twice_[mask] = twice_[rest] | (covered_[rest] & closed);
      independent_[mask] =
          independent_[rest] && (static_cast<std::uint32_t>(sn.open(low)) & rest) == 0;
      if (irredundant_[rest]) {
        // A member is irredundant iff it covers something covered once.
        const std::uint32_t once = covered_[mask] & ~twice_[mask];
        bool ok = true;
        for_each_member(mask, [&](std::size_t v) {
          ok = ok && (static_cast<std::uint32_t>(sn.closed(v)) & once) != 0;
        });
        irredundant_[mask] = ok;
      }
    }
  }

  std::size_t count() const { return covered_.size(); }
  bool dominating(std::size_t mask) const { return covered_[mask] == full_; }
  bool irredundant(std::size_t mask) const { return irredundant_[mask]; }
  bool independent(std::size_t mask) const { return independent_[mask]; }

  bool minimal_dominating(std::size_t mask) const {
    if (!dominating(mask)) return false;
    bool ok = true;
    for_each_member(mask, [&](std::size_t v) { ok = ok && !dominating(mask & ~bit(v)); });
    return ok;
  }

  bool maximal_irredundant(std::size_t mask) const {
    if (!irredundant_[mask]) return false;
    for (std::size_t a = 0; a < sn_.size(); ++a) {
      if ((mask & bit(a)) == 0 && irredundant_[mask | bit(a)]) return false;
    }
    return true;
  }

 private:
  const StrongNeighborhoods& sn_;
  std::uint32_t full_;
  std::vector<std::uint32_t> covered_;
  std::vector<std::uint32_t> twice_;
  std::vector<bool> irredundant_;
  std::vector<bool> independent_;
};

/// Running minimum (or maximum) with a lexicographic tie-break on the set.
struct Extremum {
  explicit Extremum(bool maximize_value = false) : maximize(maximize_value) {}

  bool maximize = false;
  bool present = false;
  Decimal value;
  Mask set = 0;

  void offer(Decimal w, Mask s) {
    if (!present || (maximize ? w > value : w < value) || (w == value && lex_less(s, set))) {
      present = true;
      value = w;
      set = s;
    }
  }
};

}  // namespace

std::vector<SetReport> enumerate_minimal_sds(const FuzzyGraph& g, std::size_t cap,
                                             const DominationOptions& options) {
  require_exact_bounds(g, options);
  StrongNeighborhoods sn(g);
  sn.require_weights();
  SubsetScan scan(sn);
  std::vector<Mask> found;
  for (std::size_t mask = 1; mask < scan.count(); ++mask) {
    if (!scan.minimal_dominating(mask)) continue;
    if (found.size() == cap) {
      throw DominationError("more than " + std::to_string(cap) + " minimal dominating sets");
    }
    found.push_back(mask);
  }
  std::sort(found.begin(), found.end(), lex_less);
  std::vector<SetReport> out;
  out.reserve(found.size());
  for (Mask m : found) {
    SetReport r;
    r.members = sn.to_set(m);
    r.weight = sn.weight(m);
    r.dominating = true;
    r.minimal_dominating = true;
    r.irredundant = scan.irredundant(m);
    r.maximal_irredundant = scan.maximal_irredundant(m);
    r.independent = scan.independent(m);
    out.push_back(std::move(r));
  }
  return out;
}

DominationReport domination_report(const FuzzyGraph& g, const DominationOptions& options) {
  require_exact_bounds(g, options);
  StrongNeighborhoods sn(g);
  sn.require_weights();
  SubsetScan scan(sn);
  const std::size_t n = sn.size();

  std::vector<Decimal> vertex_weight(n);
  for (std::size_t v = 0; v < n; ++v) vertex_weight[v] = *sn.vertex_weight(v);

  Extremum gamma, upper_gamma{true}, ir, upper_ir{true}, indep_dom, beta{true};
  std::vector<Extremum> sdd(n);
  std::size_t minimal_count = 0;

  for (std::size_t mask = 1; mask < scan.count(); ++mask) {
    Decimal w;
    for_each_member(mask, [&](std::size_t v) { w += vertex_weight[v]; });
    const bool dominating = scan.dominating(mask);
    if (dominating && scan.minimal_dominating(mask)) {
      ++minimal_count;
      gamma.offer(w, mask);
      upper_gamma.offer(w, mask);
      for_each_member(mask, [&](std::size_t v) { sdd[v].offer(w, mask); });
    }
    if (scan.irredundant(mask)) {
      const bool maximal = scan.maximal_irredundant(mask);
      if (maximal) ir.offer(w, mask);
      if (maximal || !options.upper_irredundance_maximal_only) upper_ir.offer(w, mask);
    }
    if (scan.independent(mask)) {
      beta.offer(w, mask);
      if (dominating) indep_dom.offer(w, mask);
    }
  }

  DominationReport r;
  r.gamma_s = gamma.value;
  r.Gamma_s = upper_gamma.value;
  r.ir_s = ir.value;
  r.IR_s = upper_ir.value;
  if (indep_dom.present) r.i_s = indep_dom.value;
  r.beta_s = beta.value;
  r.minimal_sds_count = minimal_count;
  for (std::size_t v = 0; v < n; ++v) {
    // Every vertex lies in some minimal SDS: extend it to a maximal
    // independent set.
    r.sdd[sn.labels()[v]] = {sdd[v].value, sn.to_set(sdd[v].set)};
    r.sdi += sdd[v].value;
    r.min_sdd = v == 0 ? sdd[v].value : min(r.min_sdd, sdd[v].value);
    r.max_sdd = v == 0 ? sdd[v].value : max(r.max_sdd, sdd[v].value);
  }
  if (r.min_sdd == r.max_sdd) r.sdrfg = r.min_sdd;
  return r;
}

IrredundanceBoundCheck check_irredundance_bound(const FuzzyGraph& g,
                                                const DominationOptions& options) {
  require_exact_bounds(g, options);
  StrongNeighborhoods sn(g);
  sn.require_weights();
  SubsetScan scan(sn);

  Extremum gamma, ir;
  for (std::size_t mask = 1; mask < scan.count(); ++mask) {
    const bool minimal = scan.minimal_dominating(mask);
    const bool maximal = scan.maximal_irredundant(mask);
    if (!minimal && !maximal) continue;
    const Decimal w = sn.weight(mask);
    if (minimal) gamma.offer(w, mask);
    if (maximal) ir.offer(w, mask);
  }

  IrredundanceBoundCheck out;
  out.gamma_s = gamma.value;
  out.ir_s = ir.value;
  const Mask m = ir.set;
  out.irredundant_set = sn.to_set(m);
  const Mask undominated = sn.all() & ~sn.covered(m);
  out.undominated = sn.to_set(undominated);
  if (undominated == 0) {
    out.status = IrredundanceBoundCheck::Status::kVacuous;
    out.detail = "the least-weight maximal irredundant set dominates every vertex";
    return out;
  }

  std::vector<Mask> hit_targets;
  bool lemma_failed = false;
  for_each_member(undominated, [&](std::size_t x) {
    Mask m_x = 0;
    for_each_member(m, [&](std::size_t a) {
      const Mask priv = sn.private_neighborhood(a, m);
      if ((priv & ~sn.open(x)) == 0) m_x |= bit(a);
    });
    if (m_x == 0 && !lemma_failed) {
      lemma_failed = true;
      out.detail = "no member's private neighborhood lies inside N_s(" + sn.labels()[x] + ")";
    }
    hit_targets.push_back(m_x);
  });
  if (lemma_failed) {
    out.status = IrredundanceBoundCheck::Status::kViolated;
    return out;
  }

  // Least-weight subset of M meeting every target; M has at most n members.
  Extremum hitting;
  const Mask members = m;
  for (Mask sub = members; sub != 0; sub = (sub - 1) & members) {
    const bool hits = std::all_of(hit_targets.begin(), hit_targets.end(),
                                  [&](Mask t) { return (t & sub) != 0; });
    if (hits) hitting.offer(sn.weight(sub), sub);
  }
  out.hitting_weight = hitting.value;
  out.hitting_set = sn.to_set(hitting.set);
  Decimal substitutes;
  for_each_member(hitting.set, [&](std::size_t b) {
    std::optional<Decimal> lightest;
    for_each_member(sn.private_neighborhood(b, m) & ~bit(b), [&](std::size_t p) {
      const Decimal w = *sn.vertex_weight(p);
      if (!lightest || w < *lightest) lightest = w;
    });
    substitutes += *lightest;
  });
  out.private_neighbor_weight = substitutes;
  if (gamma.value < ir.value + hitting.value) {
    out.status = IrredundanceBoundCheck::Status::kHolds;
  } else {
    out.status = IrredundanceBoundCheck::Status::kViolated;
    out.detail = "gamma_s " + gamma.value.to_string() + " >= ir_s + w = " +
                 (ir.value + hitting.value).to_string();
  }
  return out;
}

}  // namespace fuzzydom
