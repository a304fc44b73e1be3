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

#include "schubitope/certify.h"

#include <algorithm>
#include <bit>
#include <set>

#include "schubitope/errors.h"
#include "schubitope/exact_lp.h"

namespace schubitope {
namespace {

// Zero sets of rays over the constraint rows, as packed bits.
class RowSet {
 public:
  explicit RowSet(std::size_t rows) : words_((rows + 63) / 64, 0) {}
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool IsSubsetOf(const RowSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }
  RowSet Intersect(const RowSet& other) const {
    RowSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      out.words_[w] &= other.words_[w];
    }
    return out;
  }
  std::size_t size() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  std::vector<BigInt> coords;
  RowSet zeros;
};

BigInt Dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void MakePrimitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& x : v) g = gcd(g, abs(x));
  if (g > 1) {
    for (BigInt& x : v) x /= g;
  }
}

// Rows indices forming a basis of the row space, chosen greedily in order.
std::vector<std::size_t> IndependentRows(
    const std::vector<std::vector<BigInt>>& rows, std::size_t d) {
  std::vector<std::vector<Rational>> reduced;  // echelon rows
  std::vector<std::size_t> pivots_col;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < d; ++r) {
    std::vector<Rational> v(rows[r].begin(), rows[r].end());
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const std::size_t c = pivots_col[k];
      if (v[c] == 0) continue;
      const Rational factor = v[c] / reduced[k][c];
      for (std::size_t j = 0; j < d; ++j) v[j] -= factor * reduced[k][j];
    }
    auto it = std::find_if(v.begin(), v.end(),
                           [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    pivots_col.push_back(static_cast<std::size_t>(it - v.begin()));
    reduced.push_back(std::move(v));
    chosen.push_back(r);
  }
  return chosen;
}

// Columns of the inverse of the square matrix formed by `rows[chosen]`.
std::vector<std::vector<Rational>> InverseColumns(
    const std::vector<std::vector<BigInt>>& rows,
    const std::vector<std::size_t>& chosen) {
  const std::size_t d = chosen.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = Rational(rows[chosen[i]][j]);
    m[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    const Rational pivot = m[c][c];
    for (Rational& x : m[c]) x /= pivot;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational factor = m[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  std::vector<std::vector<Rational>> columns(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) columns[j][i] = m[i][d + j];
  }
  return columns;
}

std::vector<BigInt> ScaleToIntegers(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const Rational& x : v) {
    const BigInt den = denominator(x);
    l = l / gcd(l, den) * den;
  }
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(numerator(x) * (l / denominator(x)));
  MakePrimitive(out);
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> ConvexCombination(
    std::span<const LatticePoint> points, const LatticePoint& target) {
  const std::size_t dim = target.size();
  RationalMatrix a(dim + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(dim + 1);
  for (std::size_t q = 0; q < points.size(); ++q) {
    if (points[q].size() != dim) {
      throw DimensionError("convex combination: points of mixed dimension");
    }
    for (std::size_t i = 0; i < dim; ++i) a[i][q] = points[q][i];
    a[dim][q] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) b[i] = target[i];
  b[dim] = 1;
  return FindNonnegativeSolution(a, b);
}

std::vector<LatticePoint> ExtremePoints(std::span<const LatticePoint> points) {
  std::set<LatticePoint> unique(points.begin(), points.end());
  std::vector<LatticePoint> all(unique.begin(), unique.end());
  std::vector<LatticePoint> out;
  for (std::size_t p = 0; p < all.size(); ++p) {
    std::vector<LatticePoint> others;
    others.reserve(all.size() - 1);
    for (std::size_t q = 0; q < all.size(); ++q) {
      if (q != p) others.push_back(all[q]);
    }
    if (!ConvexCombination(others, all[p])) out.push_back(all[p]);
  }
  return out;
}

std::vector<RationalPoint> HRepVertices(const HRep& h) {
  const int n = h.n();
  if (n > kCertifyMaxDimension) {
    throw SizeError("vertex enumeration: n = " + std::to_string(n) +
                    " exceeds the cap " + std::to_string(kCertifyMaxDimension));
  }
  if (n == 0) {
    if (h.total() == 0) return {RationalPoint{}};
    return {};
  }
  // Homogenize with y = (x_1, ..., x_{n-1}, t) after eliminating
  // x_n = total t - sum_{i<n} x_i. Every constraint becomes row . y >= 0.
  const std::size_t d = static_cast<std::size_t>(n);
  std::vector<std::vector<BigInt>> rows;
  {
    std::vector<BigInt> t_nonnegative(d, 0);
    t_nonnegative[d - 1] = 1;
    rows.push_back(std::move(t_nonnegative));
  }
  const std::uint64_t full = FullMask(n);
  const std::uint64_t last = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<BigInt> row(d, 0);
    const std::int64_t b = h.bound_by_mask(mask);
    if (mask & last) {
      // b t - (total t - sum_{i<n, i not in S} x_i) >= 0.
      for (int i = 1; i < n; ++i) {
        if (!((mask >> (i - 1)) & 1u)) row[i - 1] = 1;
      }
      row[d - 1] = BigInt(b) - BigInt(h.total());
    } else {
      for (int i = 1; i < n; ++i) {
        if ((mask >> (i - 1)) & 1u) row[i - 1] = -1;
      }
      row[d - 1] = b;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t m = rows.size();

  const std::vector<std::size_t> initial = IndependentRows(rows, d);
  if (initial.size() < d) {
    throw InvariantError("vertex enumeration: the H-polytope is unbounded");
  }
  std::vector<bool> processed(m, false);
  std::vector<Ray> rays;
  for (const auto& column : InverseColumns(rows, initial)) {
    rays.push_back({ScaleToIntegers(column), RowSet(m)});
  }
  for (std::size_t r : initial) processed[r] = true;
  for (Ray& ray : rays) {
    for (std::size_t r : initial) {
      if (Dot(rows[r], ray.coords) == 0) ray.zeros.insert(r);
    }
  }

  for (std::size_t r = 0; r < m; ++r) {
    if (processed[r]) continue;
    processed[r] = true;
    std::vector<BigInt> values;
    values.reserve(rays.size());
    for (const Ray& ray : rays) values.push_back(Dot(rows[r], ray.coords));
    std::vector<Ray> next;
    std::vector<std::size_t> plus, minus;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (values[k] > 0) {
        plus.push_back(k);
      } else if (values[k] < 0) {
        minus.push_back(k);
      }
    }
    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        RowSet common = rays[p].zeros.Intersect(rays[q].zeros);
        if (common.size() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.IsSubsetOf(rays[k].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<BigInt> coords(d);
        for (std::size_t i = 0; i < d; ++i) {
          coords[i] = values[p] * rays[q].coords[i] -
                      values[q] * rays[p].coords[i];
        }
        MakePrimitive(coords);
        common.insert(r);
        next.push_back({std::move(coords), std::move(common)});
      }
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (values[k] == 0) rays[k].zeros.insert(r);
      if (values[k] >= 0) next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
  }

  std::set<RationalPoint> vertices;
  for (const Ray& ray : rays) {
    const BigInt& t = ray.coords[d - 1];
    if (t == 0) {
      throw InvariantError("vertex enumeration: the H-polytope is unbounded");
    }
    RationalPoint x(d);
    Rational rest = Rational(h.total());
    for (std::size_t i = 0; i + 1 < d; ++i) {
      x[i] = Rational(ray.coords[i], t);
      rest -= x[i];
    }
    x[d - 1] = rest;
    vertices.insert(std::move(x));
  }
  return {vertices.begin(), vertices.end()};
}

std::string PointToString(std::span<const int> p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string PointToString(std::span<const Rational> p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += ToString(p[i]);
  }
  return out + ")";
}

CertificationReport CertifyVertices(const HRep& h,
                                    std::span<const LatticePoint> points) {
  if (h.n() > kCertifyMaxDimension) {
    throw SizeError("certify: n = " + std::to_string(h.n()) +
                    " exceeds the cap " + std::to_string(kCertifyMaxDimension));
  }
  CertificationReport report;
  std::set<LatticePoint> unique;
  for (const LatticePoint& p : points) {
    if (static_cast<int>(p.size()) != h.n()) {
      throw DimensionError("certify: point " + PointToString(p) +
                           " has the wrong dimension");
    }
    unique.insert(p);
  }
  const std::vector<LatticePoint> all(unique.begin(), unique.end());

  for (const LatticePoint& p : all) {
    const RationalPoint q(p.begin(), p.end());
    if (std::optional<IndexSet> s = FirstViolation(h, q)) {
      report.membership = false;
      if (s->empty()) {
        report.witnesses.push_back("membership: " + PointToString(p) +
                                   " has coordinate sum != " +
                                   std::to_string(h.total()));
      } else {
        report.witnesses.push_back("membership: " + PointToString(p) +
                                   " violates the bound " +
                                   std::to_string(h.bound(*s)) + " on S = " +
                                   s->ToString());
      }
    }
  }

  for (std::size_t p = 0; p < all.size(); ++p) {
    std::vector<LatticePoint> others;
    for (std::size_t q = 0; q < all.size(); ++q) {
      if (q != p) others.push_back(all[q]);
    }
    if (std::optional<std::vector<Rational>> lambda =
            ConvexCombination(others, all[p])) {
      report.extremality = false;
      std::string combo;
      for (std::size_t q = 0; q < others.size(); ++q) {
        if ((*lambda)[q] == 0) continue;
        if (!combo.empty()) combo += " + ";
        combo += ToString((*lambda)[q]) + "*" + PointToString(others[q]);
      }
      report.witnesses.push_back("extremality: " + PointToString(all[p]) +
                                 " = " + combo);
    }
  }

  report.hrep_vertices = HRepVertices(h);
  for (const RationalPoint& v : report.hrep_vertices) {
    bool found = false;
    bool integral = std::all_of(v.begin(), v.end(), [](const Rational& x) {
      return denominator(x) == 1;
    });
    if (integral) {
      LatticePoint lp;
      for (const Rational& x : v) {
        lp.push_back(static_cast<int>(numerator(x)));
      }
      found = unique.count(lp) > 0;
    }
    if (!found) {
      report.coverage = false;
      report.witnesses.push_back("coverage: vertex " + PointToString(v) +
                                 " of the H-polytope is missing");
    }
  }
  return report;
}

}  // namespace schubitope
