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

#ifndef SCHUBITOPE_MATROID_H_
#define SCHUBITOPE_MATROID_H_

#include <vector>

#include "schubitope/index_set.h"

namespace schubitope {

// Ground-set cap for exhaustive basis and filling enumeration.
inline constexpr int kOracleMaxDimension = 12;

// Gale order T <= S: #T = #S and the sorted entries of T are dominated
// entrywise by the sorted entries of S.
bool GaleLeq(const IndexSet& t, const IndexSet& s);

// Bases of the Schubert matroid SM_n(S): all T <= S in Gale order, sorted by
// bitmask. Throws SizeError when n exceeds kOracleMaxDimension.
std::vector<IndexSet> SchubertMatroidBases(const IndexSet& s);

}  // namespace schubitope

#endif  // SCHUBITOPE_MATROID_H_
