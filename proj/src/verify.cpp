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

#include "fuzzydom/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "fuzzydom/connectivity.hpp"
#include "fuzzydom/families.hpp"
#include "fuzzydom/fgf.hpp"

namespace fuzzydom {

namespace {

using Status = TheoremVerdict::Status;

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"thm13", "sdd_bracket"},        {"thm16", "sdi_bracket"},
      {"thm17", "complete_sdi"},       {"thm26", "star_sdi"},
      {"prop27", "cycle_beta_equal"},  {"prop28", "cycle_beta_le_alpha"},
      {"thm29", "cycle_sdi"},          {"thm30", "delta_deletion"},
      {"thm31", "tree_mst_sdi"},       {"thm32", "tree_edge_deletion"},
      {"thm33", "isomorphism"},        {"prop42", "wiener_bound"},
      {"thm47", "parameter_chain"},    {"thm51", "irredundance_bound"},
      {"thm34", "union_sdi"},          {"thm35", "join_non_domination"},
      {"thm36", "join_sdi"},
  };
  return table;
}

TheoremVerdict vacuous(std::string id, std::string detail) {
  TheoremVerdict v;
  v.id = std::move(id);
  v.status = Status::kVacuous;
  v.detail = std::move(detail);
  return v;
}

TheoremVerdict decided(std::string id, bool holds, std::optional<Decimal> lhs,
                       std::optional<Decimal> rhs, std::string detail) {
  TheoremVerdict v;
  v.id = std::move(id);
  v.status = holds ? Status::kHolds : Status::kViolated;
  v.lhs = lhs;
  v.rhs = rhs;
  v.detail = std::move(detail);
  return v;
}

std::string not_evaluated(const std::string& why) { return "not evaluated: " + why; }

std::string chain_text(const DominationReport& r) {
  return "ir_s=" + r.ir_s.to_string() + " gamma_s=" + r.gamma_s.to_string() +
         " Gamma_s=" + r.Gamma_s.to_string() + " IR_s=" + r.IR_s.to_string();
}

/// Lazily computed facts about one graph, shared by the checks.
class Subject {
 public:
  Subject(const FuzzyGraph& g, const VerifyOptions& options) : g_(g), options_(options) {}

  const FuzzyGraph& graph() const { return g_; }
  const VerifyOptions& options() const { return options_; }

  const DominationReport* report() {
    if (!report_attempted_) {
      report_attempted_ = true;
      try {
        report_ = domination_report(g_, options_.domination);
      } catch (const Error& e) {
        report_error_ = e.what();
      }
    }
    return report_ ? &*report_ : nullptr;
  }
  const std::string& report_error() const { return report_error_; }

  const StructureReport& structure() {
    if (!structure_) structure_ = classify_structure(g_);
    return *structure_;
  }

  const std::vector<ClassifiedEdge>& classes() {
    if (!classes_) classes_ = classify_edges(g_);
    return *classes_;
  }

  bool all_edges_strong() {
    const auto& c = classes();
    return std::all_of(c.begin(), c.end(), [](const auto& e) { return is_strong(e.edge_class); });
  }

 private:
  const FuzzyGraph& g_;
  const VerifyOptions& options_;
  bool report_attempted_ = false;
  std::optional<DominationReport> report_;
  std::string report_error_;
  std::optional<StructureReport> structure_;
  std::optional<std::vector<ClassifiedEdge>> classes_;
};

std::optional<DominationReport> try_report(const FuzzyGraph& g, const DominationOptions& options,
                                           std::string* error) {
  try {
    return domination_report(g, options);
  } catch (const Error& e) {
    if (error) *error = e.what();
    return std::nullopt;
  }
}

TheoremVerdict check_sdd_bracket(Subject& s) {
  const std::string id = "sdd_bracket";
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  bool ok = r->ir_s <= r->gamma_s && r->Gamma_s <= r->IR_s;
  std::string detail = chain_text(*r);
  for (const auto& [label, entry] : r->sdd) {
    if (entry.value < r->gamma_s || entry.value > r->Gamma_s) {
      ok = false;
      detail += "; sdd(" + label + ")=" + entry.value.to_string() + " out of range";
    }
  }
  return decided(id, ok, r->min_sdd, r->max_sdd, detail);
}

TheoremVerdict check_sdi_bracket(Subject& s) {
  const std::string id = "sdi_bracket";
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  const auto n = static_cast<std::int64_t>(s.graph().vertex_count());
  const Decimal low = n * r->gamma_s;
  const Decimal high = n * r->Gamma_s;
  return decided(id, low <= r->sdi && r->sdi <= high, r->sdi, high,
                 "n*gamma_s=" + low.to_string() + " sdi=" + r->sdi.to_string() +
                     " n*Gamma_s=" + high.to_string());
}

TheoremVerdict check_complete_sdi(Subject& s) {
  const std::string id = "complete_sdi";
  if (!s.structure().complete) return vacuous(id, "graph is not complete");
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  const auto& m = s.graph().memberships();
  const Decimal least = *std::min_element(m.begin(), m.end());
  const Decimal formula = static_cast<std::int64_t>(m.size()) * least;
  const bool regular = r->sdrfg && *r->sdrfg == least;
  return decided(id, r->sdi == formula && regular, r->sdi, formula,
                 std::string("n*min membership; sdrfg ") + (regular ? "matches" : "does not match"));
}

TheoremVerdict check_star_sdi(Subject& s) {
  const std::string id = "star_sdi";
  if (!s.structure().fuzzy_star) return vacuous(id, "graph is not a fuzzy star");
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  const auto& tree = s.structure().mst_edges;
  Decimal q;
  Decimal least = tree.front().weight;
  for (const auto& e : tree) {
    q += e.weight;
    least = min(least, e.weight);
  }
  const Decimal formula = least + static_cast<std::int64_t>(tree.size()) * q;
  return decided(id, r->sdi == formula, r->sdi, formula, "least edge + n*q with q=" + q.to_string());
}

std::vector<Decimal> weights_of(const std::vector<ClassifiedEdge>& classes, EdgeClass c) {
  std::vector<Decimal> out;
  for (const auto& e : classes) {
    if (e.edge_class == c) out.push_back(e.edge.weight);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TheoremVerdict check_cycle_beta_equal(Subject& s) {
  const std::string id = "cycle_beta_equal";
  if (!s.structure().fuzzy_cycle) return vacuous(id, "graph is not a fuzzy cycle");
  const auto beta = weights_of(s.classes(), EdgeClass::kBeta);
  if (beta.empty()) return vacuous(id, "no beta edges");
  return decided(id, beta.front() == beta.back(), beta.front(), beta.back(),
                 "least and greatest beta edge weight");
}

TheoremVerdict check_cycle_beta_le_alpha(Subject& s) {
  const std::string id = "cycle_beta_le_alpha";
  if (!s.structure().fuzzy_cycle) return vacuous(id, "graph is not a fuzzy cycle");
  const auto beta = weights_of(s.classes(), EdgeClass::kBeta);
  const auto alpha = weights_of(s.classes(), EdgeClass::kAlpha);
  if (beta.empty() || alpha.empty()) return vacuous(id, "needs both alpha and beta edges");
  return decided(id, beta.back() <= alpha.front(), beta.back(), alpha.front(),
                 "greatest beta edge weight vs least alpha edge weight");
}

TheoremVerdict check_cycle_sdi(Subject& s) {
  const std::string id = "cycle_sdi";
  if (!s.structure().fuzzy_cycle || !s.structure().beta_saturated) {
    return vacuous(id, "graph is not a beta-saturated fuzzy cycle");
  }
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  const auto n = static_cast<std::int64_t>(s.graph().vertex_count());
  Decimal w = s.graph().edges().front().weight;
  for (const auto& e : s.graph().edges()) w = min(w, e.weight);
  const Decimal formula = n * ((n + 2) / 3) * w;
  return decided(id, r->sdi == formula, r->sdi, formula, "n*ceil(n/3)*w with w=" + w.to_string());
}

TheoremVerdict check_delta_deletion(Subject& s) {
  const std::string id = "delta_deletion";
  std::vector<Edge> delta;
  for (const auto& e : s.classes()) {
    if (e.edge_class == EdgeClass::kDelta) delta.push_back(e.edge);
  }
  if (delta.empty()) return vacuous(id, "no delta edges");
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  const FuzzyGraph& g = s.graph();
  std::optional<Decimal> changed_sdi;
  for (const auto& e : delta) {
    std::string error;
    const auto after = try_report(g.without_edge(e.u, e.v), s.options().domination, &error);
    if (!after || !(*after == *r)) {
      return decided(id, false, r->sdi, after ? std::optional(after->sdi) : std::nullopt,
                     "removing " + g.label(e.u) + g.label(e.v) + " changed the report" +
                         (after ? "" : ": " + error));
    }
  }
  return decided(id, true, r->sdi, r->sdi,
                 "report unchanged after removing each of " + std::to_string(delta.size()) +
                     " delta edges");
}

TheoremVerdict check_tree_mst_sdi(Subject& s) {
  const std::string id = "tree_mst_sdi";
  if (!s.structure().fuzzy_tree) return vacuous(id, "graph is not a fuzzy tree");
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  std::string error;
  const auto tree = try_report(s.graph().with_edges(s.structure().mst_edges),
                               s.options().domination, &error);
  if (!tree) return vacuous(id, not_evaluated(error));
  return decided(id, r->sdi == tree->sdi, r->sdi, tree->sdi, "sdi of graph vs sdi of its MST");
}

TheoremVerdict check_tree_edge_deletion(Subject& s) {
  const std::string id = "tree_edge_deletion";
  const FuzzyGraph& g = s.graph();
  if (!s.structure().fuzzy_tree) return vacuous(id, "graph is not a fuzzy tree");
  if (g.edge_count() + 1 <= g.vertex_count()) return vacuous(id, "underlying graph is a tree");
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  std::vector<Edge> order;
  for (const auto& e : s.classes()) {
    if (e.edge_class == EdgeClass::kDelta) order.push_back(e.edge);
  }
  for (const auto& e : s.classes()) {
    if (e.edge_class != EdgeClass::kDelta) order.push_back(e.edge);
  }
  for (const auto& e : order) {
    const auto after = try_report(g.without_edge(e.u, e.v), s.options().domination, nullptr);
    if (after && after->sdi == r->sdi) {
      return decided(id, true, r->sdi, after->sdi,
                     "removing " + g.label(e.u) + g.label(e.v) + " keeps the sdi");
    }
  }
  return decided(id, false, r->sdi, std::nullopt, "every single-edge deletion changes the sdi");
}

TheoremVerdict check_isomorphism(Subject& s) {
  const std::string id = "isomorphism";
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  const FuzzyGraph& g = s.graph();
  std::vector<std::string> image = g.labels();
  std::mt19937_64 rng(s.options().seed);
  std::shuffle(image.begin(), image.end(), rng);
  std::map<std::string, std::string> mapping;
  for (std::size_t i = 0; i < image.size(); ++i) mapping[g.label(i)] = image[i];
  std::string error;
  const auto other = try_report(g.relabeled(mapping), s.options().domination, &error);
  if (!other) return decided(id, false, r->sdi, std::nullopt, "relabeled graph failed: " + error);

  bool ok = r->gamma_s == other->gamma_s && r->Gamma_s == other->Gamma_s &&
            r->ir_s == other->ir_s && r->IR_s == other->IR_s && r->i_s == other->i_s &&
            r->beta_s == other->beta_s && r->sdi == other->sdi && r->min_sdd == other->min_sdd &&
            r->max_sdd == other->max_sdd && r->sdrfg == other->sdrfg &&
            r->minimal_sds_count == other->minimal_sds_count;
  std::string detail = "all parameters agree under a random relabeling";
  for (const auto& [label, entry] : r->sdd) {
    if (other->sdd.at(mapping.at(label)).value != entry.value) {
      ok = false;
      detail = "sdd(" + label + ") differs from sdd(" + mapping.at(label) + ")";
      break;
    }
  }
  return decided(id, ok, r->sdi, other->sdi, detail);
}

TheoremVerdict check_wiener_bound(Subject& s) {
  const std::string id = "wiener_bound";
  const FuzzyGraph& g = s.graph();
  if (g.vertex_count() < 2) return vacuous(id, "needs at least two vertices");
  if (!s.structure().connected) return vacuous(id, "graph is disconnected");
  if (!s.all_edges_strong()) return vacuous(id, "graph has delta edges");
  for (auto m : g.memberships()) {
    if (m != kOne) return vacuous(id, "needs every vertex membership equal to 1");
  }
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const WienerValue bound = n * wiener_index(g);
  constexpr std::int64_t kNarrow = WienerValue::kScale / Decimal::kScale;
  std::optional<Decimal> rhs;
  if (bound.scaled() % kNarrow == 0) rhs = Decimal::from_scaled(bound.scaled() / kNarrow);
  return decided(id, r->sdi.widen<WienerValue::kDigits>() <= bound, r->sdi, rhs,
                 "sdi vs n*WI with n*WI=" + bound.to_string());
}

TheoremVerdict check_parameter_chain(Subject& s) {
  const std::string id = "parameter_chain";
  const auto* r = s.report();
  if (!r) return vacuous(id, not_evaluated(s.report_error()));
  if (!r->i_s) return decided(id, false, r->ir_s, r->IR_s, "no independent dominating set");
  const std::vector<Decimal> chain = {r->ir_s, r->gamma_s, *r->i_s, r->beta_s, r->Gamma_s, r->IR_s};
  return decided(id, std::is_sorted(chain.begin(), chain.end()), r->ir_s, r->IR_s,
                 "ir_s=" + r->ir_s.to_string() + " gamma_s=" + r->gamma_s.to_string() +
                     " i_s=" + r->i_s->to_string() + " beta_s=" + r->beta_s.to_string() +
                     " Gamma_s=" + r->Gamma_s.to_string() + " IR_s=" + r->IR_s.to_string());
}

TheoremVerdict check_irredundance_bound(Subject& s) {
  const std::string id = "irredundance_bound";
  IrredundanceBoundCheck c;
  try {
    c = fuzzydom::check_irredundance_bound(s.graph(), s.options().domination);
  } catch (const Error& e) {
    return vacuous(id, not_evaluated(e.what()));
  }
  switch (c.status) {
    case IrredundanceBoundCheck::Status::kVacuous:
      return vacuous(id, c.detail);
    case IrredundanceBoundCheck::Status::kHolds:
    case IrredundanceBoundCheck::Status::kViolated: {
      std::optional<Decimal> rhs;
      if (c.hitting_weight) rhs = c.ir_s + *c.hitting_weight;
      std::string detail = c.detail;
      if (c.private_neighbor_weight) {
        detail = "M " + format_set(c.irredundant_set) + " B " + format_set(c.hitting_set) +
                 "; with private neighbors of B the bound is " +
                 (c.ir_s + *c.private_neighbor_weight).to_string();
      }
      return decided(id, c.status == IrredundanceBoundCheck::Status::kHolds, c.gamma_s, rhs,
                     detail);
    }
  }
  return vacuous(id, c.detail);
}

using SingleCheck = TheoremVerdict (*)(Subject&);

const std::map<std::string, SingleCheck>& single_checks() {
  static const std::map<std::string, SingleCheck> table = {
      {"complete_sdi", check_complete_sdi},
      {"cycle_beta_equal", check_cycle_beta_equal},
      {"cycle_beta_le_alpha", check_cycle_beta_le_alpha},
      {"cycle_sdi", check_cycle_sdi},
      {"delta_deletion", check_delta_deletion},
      {"irredundance_bound", check_irredundance_bound},
      {"isomorphism", check_isomorphism},
      {"parameter_chain", check_parameter_chain},
      {"sdd_bracket", check_sdd_bracket},
      {"sdi_bracket", check_sdi_bracket},
      {"star_sdi", check_star_sdi},
      {"tree_edge_deletion", check_tree_edge_deletion},
      {"tree_mst_sdi", check_tree_mst_sdi},
      {"wiener_bound", check_wiener_bound},
  };
  return table;
}

struct Pair {
  const FuzzyGraph& g1;
  const FuzzyGraph& g2;
  const VerifyOptions& options;
};

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

TheoremVerdict check_union_sdi(const Pair& p) {
  const std::string id = "union_sdi";
  try {
    const Decimal formula = sdi_union_formula({p.g1, p.g2}, p.options.domination);
    const DominationReport r = domination_report(graph_union(p.g1, p.g2), p.options.domination);
    return decided(id, r.sdi == formula, r.sdi, formula, "sdi of the union vs component formula");
  } catch (const Error& e) {
    return vacuous(id, not_evaluated(e.what()));
  }
}

/// Every subset of `side` that fails to dominate `side` must fail in `join`.
std::optional<std::string> non_domination_violation(const FuzzyGraph& side, const FuzzyGraph& join,
                                                    std::size_t* checked) {
  const StrongNeighborhoods side_sn(side);
  const StrongNeighborhoods join_sn(join);
  std::vector<std::size_t> to_join(side.vertex_count());
  for (std::size_t i = 0; i < side.vertex_count(); ++i) to_join[i] = join.index_of(side.label(i));
  const Mask all = side_sn.all();
  for (Mask local = 1; local <= all; ++local) {
    if (side_sn.dominates(local)) continue;
    ++*checked;
    Mask in_join = 0;
    for (Mask r = local; r != 0; r &= r - 1) in_join |= bit(to_join[std::countr_zero(r)]);
    if (join_sn.dominates(in_join)) return format_set(side_sn.to_set(local));
  }
  return std::nullopt;
}

TheoremVerdict check_join_non_domination(const Pair& p) {
  const std::string id = "join_non_domination";
  const std::size_t limit = std::min(p.options.domination.max_exact, kHardExactLimit);
  if (p.g1.vertex_count() > limit || p.g2.vertex_count() > limit) {
    return vacuous(id, not_evaluated("component exceeds the exact bound of " + std::to_string(limit)));
  }
  try {
    const FuzzyGraph join = graph_join(p.g1, p.g2);
    std::size_t checked = 0;
    for (const FuzzyGraph* side : {&p.g1, &p.g2}) {
      if (auto bad = non_domination_violation(*side, join, &checked)) {
        return decided(id, false, std::nullopt, std::nullopt,
                       *bad + " dominates the join but not its own graph");
      }
    }
    return decided(id, true, std::nullopt, std::nullopt,
                   std::to_string(checked) + " non-dominating subsets stay non-dominating");
  } catch (const Error& e) {
    return vacuous(id, not_evaluated(e.what()));
  }
}

TheoremVerdict check_join_sdi(const Pair& p) {
  const std::string id = "join_sdi";
  try {
    const Decimal formula = sdi_join_formula(p.g1, p.g2, p.options.domination);
    const DominationReport r = domination_report(graph_join(p.g1, p.g2), p.options.domination);
    return decided(id, r.sdi == formula, r.sdi, formula, "sdi of the join vs component formula");
  } catch (const Error& e) {
    return vacuous(id, not_evaluated(e.what()));
  }
}

bool every_edge_strong(const FuzzyGraph& g) {
  const auto c = classify_edges(g);
  return std::all_of(c.begin(), c.end(), [](const auto& e) { return is_strong(e.edge_class); });
}

TheoremVerdict check_strong_join_bound(const Pair& p) {
  const std::string id = "strong_join_bound";
  try {
    if (!every_edge_strong(p.g1) || !every_edge_strong(p.g2) ||
        !every_edge_strong(graph_join(p.g1, p.g2))) {
      return vacuous(id, "both graphs and their join need every edge strong");
    }
    const DominationReport r1 = domination_report(p.g1, p.options.domination);
    const DominationReport r2 = domination_report(p.g2, p.options.domination);
    const DominationReport r = domination_report(graph_join(p.g1, p.g2), p.options.domination);
    const Decimal bound = r1.sdi + r2.sdi;
    return decided(id, r.sdi <= bound, r.sdi, bound, "sdi of the join vs sum of component sdi");
  } catch (const Error& e) {
    return vacuous(id, not_evaluated(e.what()));
  }
}

using PairCheck = TheoremVerdict (*)(const Pair&);

const std::map<std::string, PairCheck>& pair_checks() {
  static const std::map<std::string, PairCheck> table = {
      {"join_non_domination", check_join_non_domination},
      {"join_sdi", check_join_sdi},
      {"strong_join_bound", check_strong_join_bound},
      {"union_sdi", check_union_sdi},
  };
  return table;
}

template <typename Table>
std::vector<std::string> keys_of(const Table& table) {
  std::vector<std::string> out;
  for (const auto& [id, check] : table) out.push_back(id);
  return out;
}

std::set<std::string> selection(const VerifyOptions& options) {
  std::set<std::string> ids;
  for (const auto& name : options.theorems) ids.insert(resolve_theorem_id(name));
  return ids;
}

}  // namespace

std::string_view to_string(TheoremVerdict::Status status) {
  switch (status) {
    case Status::kHolds:
      return "holds";
    case Status::kVacuous:
      return "vacuous";
    case Status::kViolated:
      return "violated";
  }
  return "vacuous";
}

const std::vector<std::string>& single_graph_theorem_ids() {
  static const std::vector<std::string> ids = keys_of(single_checks());
  return ids;
}

const std::vector<std::string>& pair_theorem_ids() {
  static const std::vector<std::string> ids = keys_of(pair_checks());
  return ids;
}

std::string resolve_theorem_id(std::string_view name) {
  if (auto it = aliases().find(name); it != aliases().end()) return it->second;
  const std::string id(name);
  if (single_checks().count(id) || pair_checks().count(id)) return id;
  throw std::invalid_argument("unknown theorem '" + id + "'");
}

std::vector<TheoremVerdict> verify_theorems(const FuzzyGraph& g, const VerifyOptions& options) {
  const auto wanted = selection(options);
  Subject subject(g, options);
  std::vector<TheoremVerdict> out;
  for (const auto& [id, check] : single_checks()) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    TheoremVerdict v = check(subject);
    if (v.status == Status::kViolated) v.counterexample = serialize_fgf(g);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<TheoremVerdict> verify_pair(const FuzzyGraph& g1, const FuzzyGraph& g2,
                                        const VerifyOptions& options) {
  const auto wanted = selection(options);
  const Pair pair{g1, g2, options};
  std::vector<TheoremVerdict> out;
  for (const auto& [id, check] : pair_checks()) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    TheoremVerdict v = check(pair);
    if (v.status == Status::kViolated) {
      v.counterexample = "# first graph\n" + serialize_fgf(g1) + "# second graph\n" + serialize_fgf(g2);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace fuzzydom
