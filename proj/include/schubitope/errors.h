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

#ifndef SCHUBITOPE_ERRORS_H_
#define SCHUBITOPE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace schubitope {

// Vector or permutation sizes that do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An index or value outside its admissible range (rows, columns, parts).
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An input too large for an exhaustive routine.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A broken structural invariant: malformed fillings, inexact divisions.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Text that does not parse as the expected object.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace schubitope

#endif  // SCHUBITOPE_ERRORS_H_
