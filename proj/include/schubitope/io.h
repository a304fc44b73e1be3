// Copyright 2026 The Schubitope Authors.
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

#ifndef SCHUBITOPE_IO_H_
#define SCHUBITOPE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schubitope/diagrams.h"
#include "schubitope/fillings.h"
#include "schubitope/polynomial.h"
#include "schubitope/schubitope.h"

namespace schubitope {

using Json = nlohmann::ordered_json;

// {"n":5,"boxes":[[1,1],[2,4],...]}, boxes row-major.
Json DiagramToJson(const Diagram& d);
// Throws ParseError naming the offending field.
Diagram DiagramFromJson(const Json& j);

// {"n":3,"total":4,"bounds":[{"S":[1],"b":3},...]}, subsets by increasing
// bitmask.
Json HRepToJson(const HRep& h);
HRep HRepFromJson(const Json& j);

// First line "n total", then "bitmask bound" per proper nonempty subset.
std::string HRepToHForm(const HRep& h);
HRep HRepFromHForm(std::string_view text);

// {"vertices":[[3,1,0],...]}, sorted lexicographically.
Json VerticesToJson(std::vector<LatticePoint> vertices);
std::vector<LatticePoint> VerticesFromJson(const Json& j);

// {"n":3,"terms":[{"e":[3,1,0],"c":1},...]}, exponents in lexicographic
// order. Coefficients beyond 64 bits are written as decimal strings.
Json PolynomialToJson(const Polynomial& f);
Polynomial PolynomialFromJson(const Json& j);

// Parses JSON text; throws ParseError with the parser's message.
Json ParseJson(std::string_view text);

}  // namespace schubitope

#endif  // SCHUBITOPE_IO_H_
