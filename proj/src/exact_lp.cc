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

#include "schubitope/exact_lp.h"

#include "schubitope/errors.h"

namespace schubitope {

std::optional<std::vector<Rational>> FindNonnegativeSolution(
    const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DimensionError("lp: rhs length differs from rows");
  const std::size_t k = m == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != k) throw DimensionError("lp: ragged constraint matrix");
  }
  // Columns: k structural, m artificial, then the right-hand side.
  const std::size_t cols = k + m;
  RationalMatrix t(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][k + i] = 1;
    t[i][cols] = flip ? -b[i] : b[i];
    basis[i] = k + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) cost[j] -= t[i][j];
    cost[cols] -= t[i][cols];
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == m) throw InvariantError("lp: unbounded phase-one problem");
    const Rational pivot = t[leave][enter];
    for (Rational& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= factor * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  // cost[cols] holds minus the objective value.
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> solution(k, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < k) solution[basis[i]] = t[i][cols];
  }
  return solution;
}

}  // namespace schubitope
