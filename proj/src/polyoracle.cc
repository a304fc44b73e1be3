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

#include "schubitope/polyoracle.h"

#include "schubitope/errors.h"

namespace schubitope {
namespace {

int PickAscent(std::span<const int> v, Chain chain) {
  const int n = static_cast<int>(v.size());
  if (chain == Chain::kFirstAscent) {
    for (int i = 1; i < n; ++i) {
      if (v[i - 1] < v[i]) return i;
    }
  } else {
    for (int i = n - 1; i >= 1; --i) {
      if (v[i - 1] < v[i]) return i;
    }
  }
  return 0;
}

}  // namespace

Polynomial PolynomialOracle::Schubert(const Permutation& w, Chain chain) {
  const int n = w.degree();
  if (n > kSchubertMaxDimension) {
    throw SizeError("schubert polynomial: n = " + std::to_string(n) +
                    " exceeds the cap " + std::to_string(kSchubertMaxDimension));
  }
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = schubert_.find({w, chain});
    if (it != schubert_.end()) return it->second;
  }
  Polynomial result;
  const int i = PickAscent(w.entries(), chain);
  if (i == 0) {
    Exponent staircase(n);
    for (int k = 0; k < n; ++k) staircase[k] = n - 1 - k;
    result = Polynomial::Monomial(staircase);
  } else {
    result = DividedDifference(Schubert(w.TimesAdjacent(i), chain), i);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  schubert_.emplace(std::make_pair(w, chain), result);
  return result;
}

Polynomial PolynomialOracle::Key(const Composition& alpha, Chain chain) {
  const int n = alpha.size();
  if (n > kKeyMaxDimension || alpha.max_part() > kKeyMaxPart) {
    throw SizeError("key polynomial: caps are n <= " +
                    std::to_string(kKeyMaxDimension) + " and parts <= " +
                    std::to_string(kKeyMaxPart));
  }
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = key_.find({alpha, chain});
    if (it != key_.end()) return it->second;
  }
  Polynomial result;
  const int i = PickAscent(alpha.parts(), chain);
  if (i == 0) {
    result = Polynomial::Monomial(
        Exponent(alpha.parts().begin(), alpha.parts().end()));
  } else {
    std::vector<int> swapped(alpha.parts().begin(), alpha.parts().end());
    std::swap(swapped[i - 1], swapped[i]);
    result = Demazure(Key(Composition(std::move(swapped)), chain), i);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  key_.emplace(std::make_pair(alpha, chain), result);
  return result;
}

Polynomial SchubertPolynomial(const Permutation& w, Chain chain) {
  PolynomialOracle oracle;
  return oracle.Schubert(w, chain);
}

Polynomial KeyPolynomial(const Composition& alpha, Chain chain) {
  PolynomialOracle oracle;
  return oracle.Key(alpha, chain);
}

}  // namespace schubitope
