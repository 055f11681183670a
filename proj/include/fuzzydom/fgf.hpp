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
#include <istream>
#include <string>
#include <string_view>

#include "fuzzydom/graph.hpp"

namespace fuzzydom {

/// Malformed FGF input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class ParseMode {
  /// Reject anything violating the fuzzy-graph invariants.
  kStrict,
  /// Accept out-of-range memberships so validate() can report them.
  kLenient,
};

// FGF is line oriented:
//
//   # comment
//   vertex <label> <membership>
//   edge <label> <label> <membership>
//
// Memberships carry at most 4 fractional digits. Vertices must be declared
// before the edges that use them.
FuzzyGraph parse_fgf(std::string_view text, ParseMode mode = ParseMode::kStrict);
FuzzyGraph parse_fgf(std::istream& in, ParseMode mode = ParseMode::kStrict);

/// Vertices then edges, each lexicographic, memberships with 4 digits.
std::string serialize_fgf(const FuzzyGraph& g);

}  // namespace fuzzydom
