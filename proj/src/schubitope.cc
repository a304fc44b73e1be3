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

#include "schubitope/schubitope.h"

#include <algorithm>
#include <bit>
#include <set>

#include "schubitope/errors.h"

namespace schubitope {

int ParenWord::MatchedPairs() const {
  int open = 0;
  int pairs = 0;
  for (Paren p : symbols_) {
    if (p == Paren::kOpen) {
      ++open;
    } else if (p == Paren::kClose && open > 0) {
      --open;
      ++pairs;
    }
  }
  return pairs;
}

int ParenWord::StarCount() const {
  return static_cast<int>(
      std::count(symbols_.begin(), symbols_.end(), Paren::kStar));
}

std::string ParenWord::ToString() const {
  std::string out;
  for (Paren p : symbols_) {
    switch (p) {
      case Paren::kOpen:
        out += "(";
        break;
      case Paren::kClose:
        out += ")";
        break;
      case Paren::kStar:
        out += "★";
        break;
    }
  }
  return out;
}

ParenWord ColumnWord(const Diagram& d, int j, const IndexSet& s) {
  if (s.n() != d.n()) throw DimensionError("word: subset of the wrong ground set");
  const Column column = d.column(j);
  std::vector<Paren> symbols;
  for (int i = 1; i <= d.n(); ++i) {
    const bool box = column.contains(i);
    const bool in_s = s.contains(i);
    if (box && in_s) {
      symbols.push_back(Paren::kStar);
    } else if (box) {
      symbols.push_back(Paren::kClose);
    } else if (in_s) {
      symbols.push_back(Paren::kOpen);
    }
  }
  return ParenWord(std::move(symbols));
}

std::vector<int> ThetaByColumn(const Diagram& d, const IndexSet& s) {
  std::vector<int> out;
  out.reserve(d.n());
  for (int j = 1; j <= d.n(); ++j) out.push_back(ColumnWord(d, j, s).Value());
  return out;
}

int Theta(const Diagram& d, const IndexSet& s) {
  int total = 0;
  for (int v : ThetaByColumn(d, s)) total += v;
  return total;
}

HRep::HRep(int n, std::int64_t total) : n_(n), total_(total) {
  if (n < 0 || n > kHRepMaxDimension) {
    throw SizeError("hrep: n = " + std::to_string(n) + " exceeds the cap " +
                    std::to_string(kHRepMaxDimension));
  }
  bounds_.assign(std::size_t{1} << n, 0);
}

void HRep::CheckProper(std::uint64_t mask) const {
  if (mask == 0 || mask == FullMask(n_)) {
    throw DomainError("hrep: bounds are indexed by proper nonempty subsets");
  }
}

std::int64_t HRep::bound(const IndexSet& s) const {
  if (s.n() != n_) throw DimensionError("hrep: subset of the wrong ground set");
  CheckProper(s.mask());
  return bounds_[s.mask()];
}

void HRep::set_bound(const IndexSet& s, std::int64_t value) {
  if (s.n() != n_) throw DimensionError("hrep: subset of the wrong ground set");
  CheckProper(s.mask());
  bounds_[s.mask()] = value;
}

HRep Hrep(const Diagram& d) {
  return BasePolytope(d.n(), [&d](const IndexSet& s) -> std::int64_t {
    return Theta(d, s);
  });
}

HRep BasePolytope(int n,
                  const std::function<std::int64_t(const IndexSet&)>& f) {
  HRep h(n, f(IndexSet::Full(n)));
  const std::uint64_t full = FullMask(n);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const IndexSet s = IndexSet::FromMask(n, mask);
    h.set_bound(s, f(s));
  }
  return h;
}

namespace {

template <typename T>
std::optional<IndexSet> FirstViolationImpl(const HRep& h,
                                           std::span<const T> point) {
  const int n = h.n();
  if (static_cast<int>(point.size()) != n) {
    throw DimensionError("member: point of length " +
                         std::to_string(point.size()) + " in dimension " +
                         std::to_string(n));
  }
  const std::uint64_t full = FullMask(n);
  std::vector<T> sums(std::size_t{1} << n, T(0));
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + point[low];
  }
  if (sums[full] != T(h.total())) return IndexSet(n);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (sums[mask] > T(h.bound_by_mask(mask))) {
      return IndexSet::FromMask(n, mask);
    }
  }
  return std::nullopt;
}

}  // namespace

bool Member(const HRep& h, std::span<const int> point) {
  std::vector<std::int64_t> wide(point.begin(), point.end());
  return !FirstViolationImpl<std::int64_t>(h, wide).has_value();
}

bool Member(const HRep& h, std::span<const Rational> point) {
  return !FirstViolation(h, point).has_value();
}

std::optional<IndexSet> FirstViolation(const HRep& h,
                                       std::span<const Rational> point) {
  return FirstViolationImpl<Rational>(h, point);
}

LatticePoint EdmondsVertex(const SetFunction& f, const Permutation& w) {
  const int n = w.degree();
  LatticePoint x(n, 0);
  IndexSet prefix(n);
  int previous = f(prefix);
  for (int k = 1; k <= n; ++k) {
    prefix.insert(w(k));
    const int current = f(prefix);
    x[w(k) - 1] = current - previous;
    previous = current;
  }
  return x;
}

std::optional<std::pair<IndexSet, IndexSet>> FindSubmodularityViolation(
    int n, const SetFunction& f) {
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<int> values(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    values[m] = f(IndexSet::FromMask(n, m));
  }
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::uint64_t t = s + 1; t < count; ++t) {
      if (values[s] + values[t] < values[s | t] + values[s & t]) {
        return std::make_pair(IndexSet::FromMask(n, s),
                              IndexSet::FromMask(n, t));
      }
    }
  }
  return std::nullopt;
}

std::vector<LatticePoint> Vertices(const Diagram& d, VertexOptions options) {
  if (options.skyline_shortcut) {
    if (std::optional<Composition> alpha = AsSkyline(d)) {
      std::vector<LatticePoint> out;
      for (const Composition& beta : VertexCompositions(*alpha)) {
        out.emplace_back(beta.parts().begin(), beta.parts().end());
      }
      return out;
    }
  }
  if (d.n() > kVertexSweepMaxDimension) {
    throw SizeError("vertices: sweeping S_" + std::to_string(d.n()) +
                    " exceeds the cap n <= " +
                    std::to_string(kVertexSweepMaxDimension));
  }
  std::set<LatticePoint> out;
  for (const Permutation& w : AllPermutations(d.n())) {
    out.insert(VertexVector(d, w));
  }
  return {out.begin(), out.end()};
}

std::map<LatticePoint, std::vector<Permutation>> VertexFibers(const Diagram& d) {
  if (d.n() > kVertexSweepMaxDimension) {
    throw SizeError("vertex fibers: n = " + std::to_string(d.n()) +
                    " exceeds the cap " +
                    std::to_string(kVertexSweepMaxDimension));
  }
  std::map<LatticePoint, std::vector<Permutation>> fibers;
  for (const Permutation& w : AllPermutations(d.n())) {
    fibers[VertexVector(d, w)].push_back(w);
  }
  return fibers;
}

}  // namespace schubitope
