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

#include "fuzzydom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzydom/connectivity.hpp"
#include "fuzzydom/domination.hpp"
#include "fuzzydom/families.hpp"
#include "fuzzydom/fgf.hpp"
#include "fuzzydom/graph.hpp"
#include "fuzzydom/search.hpp"
#include "fuzzydom/verify.hpp"

namespace fuzzydom::cli {

namespace {

using Json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kGridHelp =
    "Random instances draw vertex memberships from 0.10..1.00 and edge weights from "
    "0.05..min(endpoints), both in steps of 0.05, using a 64-bit Mersenne Twister seeded "
    "with --seed.";

struct Common {
  bool json = false;
  bool text = false;
  std::size_t max_exact = 16;

  bool use_json() const {
    if (json) return true;
    if (text) return false;
    const char* env = std::getenv("FUZZYDOM_OUTPUT");
    return env != nullptr && std::string(env) == "json";
  }

  DominationOptions domination() const {
    DominationOptions o;
    o.max_exact = max_exact;
    return o;
  }
};

void add_common(CLI::App* sub, Common& c, bool exact) {
  sub->add_flag("--json", c.json, "Emit a single JSON object (default from FUZZYDOM_OUTPUT=json)");
  sub->add_flag("--text", c.text, "Emit line-oriented text even if FUZZYDOM_OUTPUT=json");
  if (exact) {
    sub->add_option("--max-exact", c.max_exact, "Largest vertex count evaluated exactly")
        ->capture_default_str()
        ->check(CLI::Range(1, static_cast<int>(kHardExactLimit)));
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot read '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

FuzzyGraph load(const std::string& path, std::istream& in, ParseMode mode = ParseMode::kStrict) {
  return parse_fgf(read_input(path, in), mode);
}

std::string dec(Decimal d) { return d.to_string(); }

Json opt_dec(const std::optional<Decimal>& d) { return d ? Json(dec(*d)) : Json(nullptr); }

Json set_json(const VertexSet& s) {
  Json a = Json::array();
  for (const auto& v : s) a.push_back(v);
  return a;
}

std::vector<Decimal> parse_list(const std::string& text, const std::string& flag) {
  std::vector<Decimal> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto d = Decimal::parse(item);
    if (!d) throw UsageError(flag + ": invalid decimal '" + item + "'");
    out.push_back(*d);
  }
  if (out.empty()) throw UsageError(flag + ": expected a comma-separated list");
  return out;
}

std::vector<std::vector<Decimal>> parse_parts(const std::string& text) {
  std::vector<std::vector<Decimal>> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '/')) parts.push_back(parse_list(part, "--parts"));
  return parts;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw UsageError("--sizes: invalid size '" + item + "'");
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw UsageError("--sizes: expected a comma-separated list");
  return out;
}

Decimal parse_one(const std::string& text, const std::string& flag) {
  auto d = Decimal::parse(text);
  if (!d) throw UsageError(flag + ": invalid decimal '" + text + "'");
  return *d;
}

// Subcommands ---------------------------------------------------------------

int cmd_validate(const std::string& input, const Common& c, std::istream& in, std::ostream& out) {
  const FuzzyGraph g = load(input, in, ParseMode::kLenient);
  const auto violations = validate(g);
  const GraphStats st = stats(g);
  if (c.use_json()) {
    Json j;
    j["valid"] = violations.empty();
    j["violations"] = violations;
    j["vertices"] = st.vertex_count;
    j["edges"] = st.edge_count;
    j["order"] = dec(st.order_p);
    j["size"] = dec(st.size_q);
    out << j.dump(2) << "\n";
  } else {
    out << "valid: " << (violations.empty() ? "true" : "false") << "\n";
    out << "vertices: " << st.vertex_count << "\n";
    out << "edges: " << st.edge_count << "\n";
    out << "order: " << dec(st.order_p) << "\n";
    out << "size: " << dec(st.size_q) << "\n";
    for (const auto& v : violations) out << "violation: " << v << "\n";
  }
  return violations.empty() ? kExitOk : kExitDomainError;
}

int cmd_classify(const std::string& input, bool show_structure, const Common& c, std::istream& in,
                 std::ostream& out) {
  const FuzzyGraph g = load(input, in);
  const auto classes = classify_edges(g);
  const StructureReport s = classify_structure(g);
  if (c.use_json()) {
    Json edges = Json::array();
    for (const auto& e : classes) {
      edges.push_back({{"u", g.label(e.edge.u)},
                       {"v", g.label(e.edge.v)},
                       {"weight", dec(e.edge.weight)},
                       {"class", std::string(to_string(e.edge_class))}});
    }
    Json mst = Json::array();
    for (const auto& e : s.mst_edges) {
      mst.push_back({{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"weight", dec(e.weight)}});
    }
    Json j;
    j["edges"] = edges;
    j["structure"] = {{"connected", s.connected},       {"complete", s.complete},
                      {"fuzzy_tree", s.fuzzy_tree},     {"fuzzy_cycle", s.fuzzy_cycle},
                      {"beta_saturated", s.beta_saturated}, {"fuzzy_star", s.fuzzy_star},
                      {"mst_edges", mst}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : classes) {
    out << g.label(e.edge.u) << " " << g.label(e.edge.v) << " " << dec(e.edge.weight) << " "
        << to_string(e.edge_class) << "\n";
  }
  if (show_structure) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "beta_saturated: " << flag(s.beta_saturated) << "\n";
    out << "complete: " << flag(s.complete) << "\n";
    out << "connected: " << flag(s.connected) << "\n";
    out << "fuzzy_cycle: " << flag(s.fuzzy_cycle) << "\n";
    out << "fuzzy_star: " << flag(s.fuzzy_star) << "\n";
    out << "fuzzy_tree: " << flag(s.fuzzy_tree) << "\n";
    for (const auto& e : s.mst_edges) {
      out << "mst: " << g.label(e.u) << " " << g.label(e.v) << " " << dec(e.weight) << "\n";
    }
  }
  return kExitOk;
}

int cmd_conn(const std::string& input, const std::string& from, const std::string& to,
             const Common& c, std::istream& in, std::ostream& out) {
  const FuzzyGraph g = load(input, in);
  if (from.empty() != to.empty()) throw UsageError("--from and --to must be given together");
  if (!from.empty()) {
    const std::size_t a = g.index_of(from);
    const Decimal value = strength_of_connectedness(g, a, g.index_of(to), a, a);
    if (c.use_json()) {
      out << Json{{"a", from}, {"b", to}, {"conn", dec(value)}}.dump(2) << "\n";
    } else {
      out << "conn: " << dec(value) << "\n";
    }
    return kExitOk;
  }
  const auto m = connectivity_matrix(g);
  Json pairs = Json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
      if (c.use_json()) {
        pairs.push_back({{"a", g.label(i)}, {"b", g.label(j)}, {"conn", dec(m.at(i, j))}});
      } else {
        out << g.label(i) << " " << g.label(j) << " " << dec(m.at(i, j)) << "\n";
      }
    }
  }
  if (c.use_json()) out << Json{{"pairs", pairs}}.dump(2) << "\n";
  return kExitOk;
}

Json report_json(const DominationReport& r) {
  Json sdd = Json::object();
  for (const auto& [label, entry] : r.sdd) {
    sdd[label] = {{"value", dec(entry.value)}, {"witness", set_json(entry.witness)}};
  }
  Json j;
  j["gamma_s"] = dec(r.gamma_s);
  j["Gamma_s"] = dec(r.Gamma_s);
  j["ir_s"] = dec(r.ir_s);
  j["IR_s"] = dec(r.IR_s);
  j["i_s"] = opt_dec(r.i_s);
  j["beta_s"] = dec(r.beta_s);
  j["sdd"] = sdd;
  j["sdi"] = dec(r.sdi);
  j["sdrfg"] = opt_dec(r.sdrfg);
  return j;
}

int cmd_params(const std::string& input, bool maximal_only, const Common& c, std::istream& in,
               std::ostream& out, std::ostream& err) {
  const FuzzyGraph g = load(input, in);
  DominationOptions o = c.domination();
  o.upper_irredundance_maximal_only = maximal_only;
  const DominationReport r = domination_report(g, o);
  if (c.use_json()) {
    out << report_json(r).dump(2) << "\n";
  } else {
    out << "Gamma_s: " << dec(r.Gamma_s) << "\n";
    out << "IR_s: " << dec(r.IR_s) << "\n";
    out << "beta_s: " << dec(r.beta_s) << "\n";
    out << "gamma_s: " << dec(r.gamma_s) << "\n";
    out << "i_s: " << (r.i_s ? dec(*r.i_s) : "none") << "\n";
    out << "ir_s: " << dec(r.ir_s) << "\n";
  }
  const std::vector<Decimal> chain = {r.ir_s,   r.gamma_s,  r.i_s.value_or(r.gamma_s),
                                      r.beta_s, r.Gamma_s,  r.IR_s};
  if (!r.i_s || !std::is_sorted(chain.begin(), chain.end())) {
    err << "error: parameters violate ir_s <= gamma_s <= i_s <= beta_s <= Gamma_s <= IR_s\n";
    return kExitDomainError;
  }
  return kExitOk;
}

int cmd_sdd(const std::string& input, const std::string& vertex, const Common& c, std::istream& in,
            std::ostream& out) {
  const FuzzyGraph g = load(input, in);
  if (!vertex.empty()) g.index_of(vertex);
  const DominationReport r = domination_report(g, c.domination());
  if (c.use_json()) {
    Json sdd = report_json(r)["sdd"];
    if (!vertex.empty()) {
      out << Json{{"vertex", vertex}, {"sdd", sdd[vertex]["value"]}, {"witness", sdd[vertex]["witness"]}}
                 .dump(2)
          << "\n";
    } else {
      out << Json{{"sdd", sdd}}.dump(2) << "\n";
    }
    return kExitOk;
  }
  for (const auto& [label, entry] : r.sdd) {
    if (!vertex.empty() && label != vertex) continue;
    if (vertex.empty()) out << label << " ";
    out << "sdd: " << dec(entry.value) << " witness: " << format_set(entry.witness) << "\n";
  }
  return kExitOk;
}

int cmd_sdi(const std::string& input, const Common& c, std::istream& in, std::ostream& out) {
  const FuzzyGraph g = load(input, in);
  const DominationReport r = domination_report(g, c.domination());
  if (c.use_json()) {
    out << Json{{"sdi", dec(r.sdi)}, {"sdrfg", opt_dec(r.sdrfg)}}.dump(2) << "\n";
  } else {
    out << "sdi: " << dec(r.sdi) << "\n";
  }
  return kExitOk;
}

struct MsdsFlags {
  std::string vertex;
  bool all = false;
  std::string algorithm = "paper";
  std::size_t cap = 100000;
};

int cmd_msds(const std::string& input, const MsdsFlags& f, const Common& c, std::istream& in,
             std::ostream& out) {
  const FuzzyGraph g = load(input, in);
  std::vector<AnchoredSet> sets;
  if (f.algorithm == "paper" && !f.vertex.empty()) {
    SearchOptions o;
    o.exhaustive = f.all;
    o.max_vertices = c.max_exact;
    const auto result = minimal_sds_containing(g, f.vertex, o);
    sets = result.sets;
    if (!f.all && !sets.empty()) sets = {result.sets[result.best]};
  } else {
    if (!f.vertex.empty()) g.index_of(f.vertex);
    for (const auto& s : enumerate_minimal_sds(g, f.cap, c.domination())) {
      if (!f.vertex.empty() && !s.members.count(f.vertex)) continue;
      sets.push_back({s.members, s.weight});
    }
    std::stable_sort(sets.begin(), sets.end(),
                     [](const auto& a, const auto& b) { return a.weight < b.weight; });
    if (!f.vertex.empty() && !f.all && !sets.empty()) sets.resize(1);
  }
  if (c.use_json()) {
    Json list = Json::array();
    for (const auto& s : sets) list.push_back({{"members", set_json(s.members)}, {"weight", dec(s.weight)}});
    Json j;
    j["algorithm"] = f.vertex.empty() ? "oracle" : f.algorithm;
    j["anchor"] = f.vertex.empty() ? Json(nullptr) : Json(f.vertex);
    j["sets"] = list;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& s : sets) out << "set: " << format_set(s.members) << " weight: " << dec(s.weight) << "\n";
  return kExitOk;
}

struct GenFlags {
  std::string kind;
  std::string memberships;
  std::string parts;
  std::string sizes;
  std::string center;
  std::string leaves;
  std::string edge_weights;
  std::string edge_weight;
  std::string membership = "1";
  std::size_t n = 0;
  std::uint64_t seed = 1;
  double density = 0.3;
  bool unit = false;
  std::size_t chords = 2;
  std::string prefix;
};

FuzzyGraph build(const GenFlags& f) {
  auto need_n = [&](std::size_t least) {
    if (f.n < least) throw UsageError(f.kind + ": --n must be at least " + std::to_string(least));
    return f.n;
  };
  if (f.kind == "complete") {
    if (!f.memberships.empty()) return generate(CompleteFamily{parse_list(f.memberships, "--memberships")});
    return generate(random_complete(need_n(1), f.seed));
  }
  if (f.kind == "bipartite" || f.kind == "rpartite") {
    PartiteFamily family;
    if (!f.parts.empty()) {
      family.parts = parse_parts(f.parts);
    } else if (!f.sizes.empty()) {
      family = random_partite(parse_sizes(f.sizes), f.seed);
    } else {
      throw UsageError(f.kind + ": give --parts or --sizes");
    }
    if (f.kind == "bipartite" && family.parts.size() != 2) {
      throw UsageError("bipartite: expected exactly two parts");
    }
    return generate(family);
  }
  if (f.kind == "star") {
    if (!f.leaves.empty()) {
      if (f.center.empty() || f.edge_weights.empty()) {
        throw UsageError("star: --leaves needs --center and --edge-weights");
      }
      return generate(StarFamily{parse_one(f.center, "--center"), parse_list(f.leaves, "--leaves"),
                                 parse_list(f.edge_weights, "--edge-weights")});
    }
    return generate(random_star(need_n(1), f.seed));
  }
  if (f.kind == "cycle") {
    if (!f.memberships.empty() || !f.edge_weights.empty()) {
      return generate(CycleFamily{parse_list(f.memberships, "--memberships"),
                                  parse_list(f.edge_weights, "--edge-weights")});
    }
    const std::size_t n = need_n(3);
    if (!f.edge_weight.empty()) {
      return generate(CycleFamily{std::vector<Decimal>(n, parse_one(f.membership, "--membership")),
                                  std::vector<Decimal>(n, parse_one(f.edge_weight, "--edge-weight"))});
    }
    return generate(random_beta_saturated_cycle(n, f.seed));
  }
  if (f.kind == "random") {
    RandomGraphOptions o;
    o.vertices = f.n == 0 ? o.vertices : f.n;
    o.density = f.density;
    o.unit_vertices = f.unit;
    return random_connected_graph(o, f.seed);
  }
  if (f.kind == "tree") return random_fuzzy_tree(f.n == 0 ? 8 : f.n, f.chords, f.seed);
  throw UsageError("unknown kind '" + f.kind + "'");
}

int cmd_gen(const GenFlags& f, std::ostream& out) {
  FuzzyGraph g = build(f);
  if (!f.prefix.empty()) {
    std::map<std::string, std::string> mapping;
    for (const auto& label : g.labels()) mapping[label] = f.prefix + label;
    g = g.relabeled(mapping);
  }
  out << serialize_fgf(g);
  return kExitOk;
}

struct VerifyFlags {
  std::string with;
  std::string theorems;
  std::uint64_t seed = 1;
};

int cmd_verify(const std::string& input, const VerifyFlags& f, const Common& c, std::istream& in,
               std::ostream& out) {
  VerifyOptions o;
  o.domination = c.domination();
  o.seed = f.seed;
  if (!f.theorems.empty()) {
    std::stringstream ss(f.theorems);
    std::string id;
    while (std::getline(ss, id, ',')) {
      try {
        o.theorems.push_back(resolve_theorem_id(id));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  const auto& pair_ids = pair_theorem_ids();
  for (const auto& id : o.theorems) {
    const bool pair = std::find(pair_ids.begin(), pair_ids.end(), id) != pair_ids.end();
    if (pair && f.with.empty()) throw UsageError("theorem '" + id + "' needs --with");
    if (!pair && !f.with.empty()) throw UsageError("theorem '" + id + "' takes a single graph");
  }

  const FuzzyGraph g = load(input, in);
  std::vector<TheoremVerdict> verdicts;
  if (f.with.empty()) {
    verdicts = verify_theorems(g, o);
  } else {
    if (f.with == "-" && input == "-") throw UsageError("only one input may be standard input");
    verdicts = verify_pair(g, load(f.with, in), o);
  }

  bool violated = false;
  Json list = Json::array();
  for (const auto& v : verdicts) {
    violated = violated || v.status == TheoremVerdict::Status::kViolated;
    if (c.use_json()) {
      list.push_back({{"id", v.id},
                      {"status", std::string(to_string(v.status))},
                      {"lhs", opt_dec(v.lhs)},
                      {"rhs", opt_dec(v.rhs)},
                      {"detail", v.detail},
                      {"counterexample", v.counterexample.empty() ? Json(nullptr) : Json(v.counterexample)}});
      continue;
    }
    out << v.id << ": " << to_string(v.status);
    if (v.lhs) out << " lhs: " << dec(*v.lhs);
    if (v.rhs) out << " rhs: " << dec(*v.rhs);
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
    if (!v.counterexample.empty()) {
      std::istringstream lines(v.counterexample);
      std::string line;
      while (std::getline(lines, line)) out << "  " << line << "\n";
    }
  }
  if (c.use_json()) out << Json{{"verdicts", list}}.dump(2) << "\n";
  return violated ? kExitDomainError : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Strong domination parameters of fuzzy graphs", "fuzzydom"};
  app.require_subcommand(1, 1);
  app.footer(std::string("Input is FGF text; '-' reads standard input.\n") + kGridHelp);

  Common common;
  std::string input;

  auto* validate_cmd = app.add_subcommand("validate", "Check the fuzzy graph invariants");
  validate_cmd->add_option("input", input, "FGF file or -")->required();
  add_common(validate_cmd, common, false);

  bool show_structure = false;
  auto* classify_cmd = app.add_subcommand("classify", "Print alpha/beta/delta class of each edge");
  classify_cmd->add_option("input", input, "FGF file or -")->required();
  classify_cmd->add_flag("--structure", show_structure, "Also print structure flags and the MST");
  add_common(classify_cmd, common, false);

  std::string from, to;
  auto* conn_cmd = app.add_subcommand("conn", "Strength of connectedness");
  conn_cmd->add_option("input", input, "FGF file or -")->required();
  conn_cmd->add_option("--from", from, "First vertex of a single pair");
  conn_cmd->add_option("--to", to, "Second vertex of a single pair");
  add_common(conn_cmd, common, false);

  bool maximal_only = false;
  auto* params_cmd = app.add_subcommand("params", "The six strong domination parameters");
  params_cmd->add_option("input", input, "FGF file or -")->required();
  params_cmd->add_flag("--maximal-only", maximal_only,
                       "Take IR_s over maximal irredundant sets only");
  add_common(params_cmd, common, true);

  std::string sdd_vertex;
  auto* sdd_cmd = app.add_subcommand("sdd", "Strong domination degree with a witness set");
  sdd_cmd->add_option("input", input, "FGF file or -")->required();
  sdd_cmd->add_option("--vertex", sdd_vertex, "Report a single vertex");
  add_common(sdd_cmd, common, true);

  auto* sdi_cmd = app.add_subcommand("sdi", "Strong domination index");
  sdi_cmd->add_option("input", input, "FGF file or -")->required();
  add_common(sdi_cmd, common, true);

  MsdsFlags msds;
  auto* msds_cmd = app.add_subcommand("msds", "Minimal strong dominating sets");
  msds_cmd->add_option("input", input, "FGF file or -")->required();
  msds_cmd->add_option("--vertex", msds.vertex, "Only sets containing this vertex");
  msds_cmd->add_flag("--all", msds.all, "List every set instead of the lightest");
  msds_cmd->add_option("--algorithm", msds.algorithm, "Anchored search or subset enumeration")
      ->check(CLI::IsMember({"paper", "oracle"}))
      ->capture_default_str();
  msds_cmd->add_option("--cap", msds.cap, "Refuse when more sets than this exist")->capture_default_str();
  add_common(msds_cmd, common, true);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a family member as FGF");
  gen_cmd->footer(kGridHelp);
  gen_cmd->add_option("kind", gen.kind, "complete|bipartite|rpartite|star|cycle|random|tree")
      ->required()
      ->check(CLI::IsMember({"complete", "bipartite", "rpartite", "star", "cycle", "random", "tree"}));
  gen_cmd->add_option("--memberships", gen.memberships, "Comma-separated vertex memberships");
  gen_cmd->add_option("--parts", gen.parts, "Parts as lists separated by '/', e.g. 0.2,0.3/0.4,0.5");
  gen_cmd->add_option("--sizes", gen.sizes, "Random part sizes, e.g. 3,4");
  gen_cmd->add_option("--center", gen.center, "Star center membership");
  gen_cmd->add_option("--leaves", gen.leaves, "Star leaf memberships");
  gen_cmd->add_option("--edge-weights", gen.edge_weights, "Star or cycle edge weights");
  gen_cmd->add_option("--edge-weight", gen.edge_weight, "Uniform cycle edge weight");
  gen_cmd->add_option("--membership", gen.membership, "Uniform cycle vertex membership")
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Vertex count (cycle, random, tree, complete) or leaf count (star)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--density", gen.density, "Probability of each extra edge (random)")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_flag("--unit", gen.unit, "Give every vertex membership 1 (random)");
  gen_cmd->add_option("--chords", gen.chords, "Delta chords to add (tree)")->capture_default_str();
  gen_cmd->add_option("--prefix", gen.prefix, "Prepend to every label");

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Check the theorems on a graph or a pair");
  verify_cmd->add_option("input", input, "FGF file or -")->required();
  verify_cmd->add_option("--with", verify_flags.with, "Second graph; runs the union and join checks");
  verify_cmd->add_option("--theorems", verify_flags.theorems, "Comma-separated ids or aliases (thm29, ...)");
  verify_cmd->add_option("--seed", verify_flags.seed, "Seed for the random relabeling")->capture_default_str();
  add_common(verify_cmd, common, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(input, common, in, out);
    if (*classify_cmd) return cmd_classify(input, show_structure, common, in, out);
    if (*conn_cmd) return cmd_conn(input, from, to, common, in, out);
    if (*params_cmd) return cmd_params(input, maximal_only, common, in, out, err);
    if (*sdd_cmd) return cmd_sdd(input, sdd_vertex, common, in, out);
    if (*sdi_cmd) return cmd_sdi(input, common, in, out);
    if (*msds_cmd) return cmd_msds(input, msds, common, in, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verify_cmd) return cmd_verify(input, verify_flags, common, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace fuzzydom::cli
