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

#ifndef SCHUBITOPE_SCHUBITOPE_H_
#define SCHUBITOPE_SCHUBITOPE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schubitope/diagrams.h"
#include "schubitope/fillings.h"
#include "schubitope/index_set.h"
#include "schubitope/numeric.h"
#include "schubitope/perms.h"

namespace schubitope {

// Largest n for which Hrep() materializes all 2^n - 2 halfspaces.
inline constexpr int kHRepMaxDimension = 16;
// Largest n for the full S_n sweep in Vertices().
inline constexpr int kVertexSweepMaxDimension = 9;

enum class Paren : char { kOpen, kClose, kStar };

// word_{j,S}(D) read down one column.
class ParenWord {
 public:
  ParenWord() = default;
  explicit ParenWord(std::vector<Paren> symbols) : symbols_(std::move(symbols)) {}

  std::span<const Paren> symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }

  // "()" pairs under the inside-out convention: each close matches the
  // nearest unmatched open to its left.
  int MatchedPairs() const;
  int StarCount() const;
  // Matched pairs plus stars.
  int Value() const { return MatchedPairs() + StarCount(); }

  // "(", ")" and "★".
  std::string ToString() const;

  friend bool operator==(const ParenWord&, const ParenWord&) = default;

 private:
  std::vector<Paren> symbols_;
};

// Rows 1..n of column j: "(" when (i,j) is not a box and i is in S, ")" when
// it is a box and i is not in S, "★" when it is a box and i is in S.
ParenWord ColumnWord(const Diagram& d, int j, const IndexSet& s);

// theta^j_D(S) for j = 1..n.
std::vector<int> ThetaByColumn(const Diagram& d, const IndexSet& s);

// theta_D(S) = sum_j theta^j_D(S).
int Theta(const Diagram& d, const IndexSet& s);

// {x : sum x_i = total, sum_{i in S} x_i <= bound(S) for proper nonempty S}.
// Bounds are stored by bitmask for every proper nonempty subset.
class HRep {
 public:
  HRep() = default;
  // All bounds zero. Throws SizeError above kHRepMaxDimension.
  HRep(int n, std::int64_t total);

  int n() const { return n_; }
  std::int64_t total() const { return total_; }
  std::int64_t bound(const IndexSet& s) const;
  std::int64_t bound_by_mask(std::uint64_t mask) const { return bounds_[mask]; }
  // Throws DomainError for the empty set or [n].
  void set_bound(const IndexSet& s, std::int64_t value);

  friend bool operator==(const HRep&, const HRep&) = default;

 private:
  void CheckProper(std::uint64_t mask) const;

  int n_ = 0;
  std::int64_t total_ = 0;
  std::vector<std::int64_t> bounds_;  // indexed by mask; 0 and [n] unused
};

// The Schubitope S_D: total #D and bound theta_D(S).
HRep Hrep(const Diagram& d);

// Base polytope B_f of a set function on 2^[n]: total f([n]), bounds f(S).
HRep BasePolytope(int n, const std::function<std::int64_t(const IndexSet&)>& f);

bool Member(const HRep& h, std::span<const int> point);
bool Member(const HRep& h, std::span<const Rational> point);
// The first violated subset (by increasing bitmask), or nullopt when the
// point is a member. The empty set stands for the equality constraint.
std::optional<IndexSet> FirstViolation(const HRep& h, std::span<const Rational> point);

using SetFunction = std::function<int(const IndexSet&)>;

// Edmonds' greedy point: x_{w_k} = f({w_1..w_k}) - f({w_1..w_{k-1}}).
LatticePoint EdmondsVertex(const SetFunction& f, const Permutation& w);

// A pair (S, T) with f(S) + f(T) < f(S u T) + f(S n T), if any, over all
// pairs of subsets of [n].
std::optional<std::pair<IndexSet, IndexSet>> FindSubmodularityViolation(
    int n, const SetFunction& f);

struct VertexOptions {
  // For skyline diagrams, read the vertices off VertexCompositions instead
  // of sweeping S_n.
  bool skyline_shortcut = false;
};

// {x(w) : w in S_n}, deduplicated and sorted lexicographically. Throws
// SizeError when a sweep is needed and n > kVertexSweepMaxDimension.
std::vector<LatticePoint> Vertices(const Diagram& d, VertexOptions options = {});

// Every vertex together with the permutations w producing it, each list in
// lexicographic order.
std::map<LatticePoint, std::vector<Permutation>> VertexFibers(const Diagram& d);

}  // namespace schubitope

#endif  // SCHUBITOPE_SCHUBITOPE_H_
