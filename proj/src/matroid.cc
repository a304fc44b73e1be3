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

#include "schubitope/matroid.h"

#include "schubitope/errors.h"

namespace schubitope {

bool GaleLeq(const IndexSet& t, const IndexSet& s) {
  if (t.n() != s.n()) throw DimensionError("gale order across ground sets");
  if (t.size() != s.size()) return false;
  const std::vector<int> a = t.elements();
  const std::vector<int> b = s.elements();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<IndexSet> SchubertMatroidBases(const IndexSet& s) {
  const int n = s.n();
  if (n > kOracleMaxDimension) {
    throw SizeError("schubert matroid bases: n = " + std::to_string(n) +
                    " exceeds the enumeration cap " +
                    std::to_string(kOracleMaxDimension));
  }
  const int k = s.size();
  std::vector<IndexSet> bases;
  if (k == 0) {
    bases.emplace_back(n);
    return bases;
  }
  // Gosper's hack over k-subsets of [n].
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < limit;) {
    IndexSet t = IndexSet::FromMask(n, m);
    if (GaleLeq(t, s)) bases.push_back(t);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return bases;
}

}  // namespace schubitope
