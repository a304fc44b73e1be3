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

#ifndef SCHUBITOPE_NUMERIC_H_
#define SCHUBITOPE_NUMERIC_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubitope {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" or "p"; throws ParseError otherwise.
Rational ParseRational(std::string_view text);
// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& r);

}  // namespace schubitope

#endif  // SCHUBITOPE_NUMERIC_H_
