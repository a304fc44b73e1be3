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

#ifndef SCHUBITOPE_EXACT_LP_H_
#define SCHUBITOPE_EXACT_LP_H_

#include <optional>
#include <vector>

#include "schubitope/numeric.h"

namespace schubitope {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Finds lambda >= 0 with A lambda = b by a phase-one simplex over the
// rationals (Bland's rule, so it terminates on degenerate input). A is given
// row-major, m rows of k entries. Returns nullopt when infeasible.
std::optional<std::vector<Rational>> FindNonnegativeSolution(
    const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace schubitope

#endif  // SCHUBITOPE_EXACT_LP_H_
