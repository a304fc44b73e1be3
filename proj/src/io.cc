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

#include "schubitope/io.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "schubitope/errors.h"
#include "schubitope/numeric.h"

namespace schubitope {
namespace {

const Json& Field(const Json& j, const char* name, const char* what) {
  if (!j.is_object()) {
    throw ParseError(std::string(what) + ": expected a JSON object");
  }
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string(what) + ": missing field \"" + name + "\"");
  }
  return *it;
}

std::int64_t IntegerField(const Json& j, const char* name, const char* what) {
  const Json& v = Field(j, name, what);
  if (!v.is_number_integer()) {
    throw ParseError(std::string(what) + ": field \"" + name +
                     "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<int> IntegerArray(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer()) {
      throw ParseError(where + " must contain integers");
    }
    const std::int64_t value = x.get<std::int64_t>();
    if (value < std::numeric_limits<int>::min() ||
        value > std::numeric_limits<int>::max()) {
      throw ParseError(where + " holds an out-of-range integer");
    }
    out.push_back(static_cast<int>(value));
  }
  return out;
}

int Dimension(const Json& j, const char* what) {
  const std::int64_t n = IntegerField(j, "n", what);
  if (n < 0 || n > kMaxDimension) {
    throw ParseError(std::string(what) + ": field \"n\" outside [0, 64]");
  }
  return static_cast<int>(n);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("rational: empty string");
  const std::size_t slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::string_view digits = part;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("rational: '" + s + "' is not of the form p or p/q");
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const BigInt num = parse_int(s.substr(0, slash));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("rational: zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string ToString(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Json DiagramToJson(const Diagram& d) {
  Json boxes = Json::array();
  for (const Box& b : d.boxes()) boxes.push_back({b.row, b.col});
  Json j;
  j["n"] = d.n();
  j["boxes"] = std::move(boxes);
  return j;
}

Diagram DiagramFromJson(const Json& j) {
  const int n = Dimension(j, "diagram");
  const Json& boxes = Field(j, "boxes", "diagram");
  if (!boxes.is_array()) {
    throw ParseError("diagram: field \"boxes\" must be an array");
  }
  std::vector<Box> out;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const std::string where = "diagram: boxes[" + std::to_string(k) + "]";
    std::vector<int> pair = IntegerArray(boxes[k], where);
    if (pair.size() != 2) throw ParseError(where + " must be [row, col]");
    out.push_back({pair[0], pair[1]});
  }
  try {
    return Diagram(n, std::move(out));
  } catch (const std::exception& e) {
    throw ParseError(std::string("diagram: field \"boxes\": ") + e.what());
  }
}

Json HRepToJson(const HRep& h) {
  Json bounds = Json::array();
  const std::uint64_t full = FullMask(h.n());
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Json entry;
    entry["S"] = IndexSet::FromMask(h.n(), mask).elements();
    entry["b"] = h.bound_by_mask(mask);
    bounds.push_back(std::move(entry));
  }
  Json j;
  j["n"] = h.n();
  j["total"] = h.total();
  j["bounds"] = std::move(bounds);
  return j;
}

HRep HRepFromJson(const Json& j) {
  const int n = Dimension(j, "hrep");
  if (n > kHRepMaxDimension) {
    throw ParseError("hrep: field \"n\" exceeds " +
                     std::to_string(kHRepMaxDimension));
  }
  HRep h(n, IntegerField(j, "total", "hrep"));
  const Json& bounds = Field(j, "bounds", "hrep");
  if (!bounds.is_array()) {
    throw ParseError("hrep: field \"bounds\" must be an array");
  }
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    const std::string where = "hrep: bounds[" + std::to_string(k) + "]";
    std::vector<int> elements =
        IntegerArray(Field(bounds[k], "S", where.c_str()), where + ".S");
    IndexSet s(n);
    for (int e : elements) {
      if (e < 1 || e > n) {
        throw ParseError(where + ".S has element " + std::to_string(e) +
                         " outside [1, " + std::to_string(n) + "]");
      }
      s.insert(e);
    }
    if (s.empty() || s.mask() == FullMask(n)) {
      throw ParseError(where + ".S must be a proper nonempty subset");
    }
    if (seen[s.mask()]) throw ParseError(where + ".S repeats a subset");
    seen[s.mask()] = true;
    h.set_bound(s, IntegerField(bounds[k], "b", where.c_str()));
  }
  return h;
}

std::string HRepToHForm(const HRep& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.total() << '\n';
  const std::uint64_t full = FullMask(h.n());
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    out << mask << ' ' << h.bound_by_mask(mask) << '\n';
  }
  return out.str();
}

HRep HRepFromHForm(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  std::int64_t total = 0;
  if (!(in >> n >> total) || n < 0 || n > kHRepMaxDimension) {
    throw ParseError("hform: first line must be \"n total\" with n <= " +
                     std::to_string(kHRepMaxDimension));
  }
  HRep h(n, total);
  std::uint64_t mask = 0;
  std::int64_t bound = 0;
  while (in >> mask >> bound) {
    if (mask == 0 || mask >= FullMask(n)) {
      throw ParseError("hform: bitmask " + std::to_string(mask) +
                       " is not a proper nonempty subset");
    }
    h.set_bound(IndexSet::FromMask(n, mask), bound);
  }
  if (!in.eof()) throw ParseError("hform: expected \"bitmask bound\" lines");
  return h;
}

Json VerticesToJson(std::vector<LatticePoint> vertices) {
  std::sort(vertices.begin(), vertices.end());
  Json j;
  j["vertices"] = vertices;
  return j;
}

std::vector<LatticePoint> VerticesFromJson(const Json& j) {
  const Json& vertices = Field(j, "vertices", "vertex set");
  if (!vertices.is_array()) {
    throw ParseError("vertex set: field \"vertices\" must be an array");
  }
  std::vector<LatticePoint> out;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    out.push_back(IntegerArray(vertices[k], "vertex set: vertices[" +
                                                std::to_string(k) + "]"));
  }
  return out;
}

Json PolynomialToJson(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json term;
    term["e"] = e;
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      term["c"] = static_cast<std::int64_t>(c);
    } else {
      term["c"] = c.str();
    }
    terms.push_back(std::move(term));
  }
  Json j;
  j["n"] = f.n();
  j["terms"] = std::move(terms);
  return j;
}

Polynomial PolynomialFromJson(const Json& j) {
  const int n = Dimension(j, "polynomial");
  const Json& terms = Field(j, "terms", "polynomial");
  if (!terms.is_array()) {
    throw ParseError("polynomial: field \"terms\" must be an array");
  }
  Polynomial f(n);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = "polynomial: terms[" + std::to_string(k) + "]";
    Exponent e = IntegerArray(Field(terms[k], "e", where.c_str()), where + ".e");
    if (static_cast<int>(e.size()) != n ||
        std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
      throw ParseError(where + ".e must hold n non-negative integers");
    }
    const Json& c = Field(terms[k], "c", where.c_str());
    BigInt coefficient;
    if (c.is_number_integer()) {
      coefficient = c.get<std::int64_t>();
    } else if (c.is_string()) {
      Rational parsed;
      try {
        parsed = ParseRational(c.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(where + ".c: " + e.what());
      }
      if (denominator(parsed) != 1) {
        throw ParseError(where + ".c must be an integer");
      }
      coefficient = numerator(parsed);
    } else {
      throw ParseError(where + ".c must be an integer");
    }
    if (coefficient == 0) throw ParseError(where + ".c must be non-zero");
    if (f.coefficient(e) != 0) throw ParseError(where + " repeats an exponent");
    f.AddTerm(e, coefficient);
  }
  return f;
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

}  // namespace schubitope
