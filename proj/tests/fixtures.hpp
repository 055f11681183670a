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

#include <string>

#include "fuzzydom/decimal.hpp"
#include "fuzzydom/fgf.hpp"
#include "fuzzydom/graph.hpp"

namespace fixtures {

// Every vertex has membership 1; a7a8 is the only delta edge.
inline constexpr const char* kEight = R"(vertex a1 1
vertex a2 1
vertex a3 1
vertex a4 1
vertex a5 1
vertex a6 1
vertex a7 1
vertex a8 1
edge a1 a4 0.05
edge a2 a4 0.5
edge a3 a4 0.3
edge a4 a5 0.2
edge a4 a6 0.2
edge a5 a6 0.4
edge a5 a7 0.3
edge a6 a8 0.2
edge a7 a8 0.1
)";

inline fuzzydom::FuzzyGraph eight() { return fuzzydom::parse_fgf(kEight); }

inline fuzzydom::FuzzyGraph k2(const char* w = "0.5") {
  return fuzzydom::parse_fgf(std::string("vertex a 1\nvertex b 1\nedge a b ") + w + "\n");
}

inline fuzzydom::Decimal d(const char* text) { return fuzzydom::parse_decimal(text); }

}  // namespace fixtures
