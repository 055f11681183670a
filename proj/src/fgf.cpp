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

#include "fuzzydom/fgf.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace fuzzydom {

ParseError::ParseError(std::size_t line, const std::string& message)
    : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

Decimal parse_membership(std::string_view text, std::size_t line, ParseMode mode) {
  auto d = Decimal::parse(text);
  if (!d || text.front() == '-') {
    throw ParseError(line, "invalid membership '" + std::string(text) +
                               "' (expected a decimal with at most 4 fractional digits)");
  }
  if (mode == ParseMode::kStrict && (*d <= kZero || *d > kOne)) {
    throw ParseError(line, "membership " + std::string(text) + " outside (0,1]");
  }
  return *d;
}

}  // namespace

FuzzyGraph parse_fgf(std::string_view text, ParseMode mode) {
  std::vector<FuzzyGraph::VertexSpec> vertices;
  std::vector<FuzzyGraph::EdgeSpec> edges;
  std::map<std::string, Decimal, std::less<>> membership;
  std::set<std::pair<std::string, std::string>> seen_edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    const std::string_view keyword = fields.front();
    if (keyword == "vertex") {
      if (fields.size() != 3) throw ParseError(line_no, "expected 'vertex <label> <membership>'");
      std::string label(fields[1]);
      if (!is_valid_label(label)) throw ParseError(line_no, "invalid vertex label '" + label + "'");
      if (membership.count(label)) throw ParseError(line_no, "duplicate vertex '" + label + "'");
      const Decimal m = parse_membership(fields[2], line_no, mode);
      membership.emplace(label, m);
      vertices.push_back({std::move(label), m});
    } else if (keyword == "edge") {
      if (fields.size() != 4) {
        throw ParseError(line_no, "expected 'edge <label> <label> <membership>'");
      }
      std::string u(fields[1]);
      std::string v(fields[2]);
      for (const auto& label : {u, v}) {
        if (!membership.count(label)) {
          throw ParseError(line_no, "edge references unknown vertex '" + label + "'");
        }
      }
      if (u == v) throw ParseError(line_no, "self-loop on vertex '" + u + "'");
      auto key = std::minmax(u, v);
      if (!seen_edges.emplace(key.first, key.second).second) {
        throw ParseError(line_no, "duplicate edge " + key.first + " " + key.second);
      }
      const Decimal w = parse_membership(fields[3], line_no, mode);
      const Decimal bound = min(membership.find(u)->second, membership.find(v)->second);
      if (mode == ParseMode::kStrict && w > bound) {
        throw ParseError(line_no, "edge " + u + " " + v + " membership " + w.to_string() +
                                      " exceeds endpoint minimum " + bound.to_string());
      }
      edges.push_back({std::move(u), std::move(v), w});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(keyword) + "'");
    }
  }
  return FuzzyGraph(std::move(vertices), std::move(edges));
}

FuzzyGraph parse_fgf(std::istream& in, ParseMode mode) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_fgf(text, mode);
}

std::string serialize_fgf(const FuzzyGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out << "vertex " << g.label(i) << ' ' << g.membership(i).to_string() << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "edge " << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.weight.to_string() << '\n';
  }
  return out.str();
}

}  // namespace fuzzydom
