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

#ifndef SCHUBITOPE_PERMS_H_
#define SCHUBITOPE_PERMS_H_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubitope/errors.h"

namespace schubitope {

// A permutation of [n] in one-line notation w_1 ... w_n.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless `one_line` is a bijection on [n].
  explicit Permutation(std::vector<int> one_line);

  static Permutation Identity(int n);
  // n (n-1) ... 1.
  static Permutation Longest(int n);
  // Digit string ("2641375") or comma-separated values ("10,2,1,...").
  static Permutation Parse(std::string_view text);

  int degree() const { return static_cast<int>(entries_.size()); }
  // w(i), 1-indexed.
  int operator()(int i) const { return entries_[i - 1]; }
  std::span<const int> entries() const { return entries_; }

  // Number of inversions, which equals the Coxeter length.
  int length() const;
  Permutation inverse() const;
  bool IsIdentity() const;

  // w s_i: swaps the entries in positions i and i+1.
  Permutation TimesAdjacent(int i) const;
  // s_i w: swaps the values i and i+1.
  Permutation AdjacentTimes(int i) const;
  // Composition of maps, (u * v)(i) = u(v(i)).
  Permutation operator*(const Permutation& other) const;

  // Digit string for n <= 9, comma-separated otherwise.
  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// A weak composition: n non-negative parts.
class Composition {
 public:
  Composition() = default;
  // Throws DomainError on a negative part.
  explicit Composition(std::vector<int> parts);
  // Comma-separated parts, e.g. "2,0,1,3".
  static Composition Parse(std::string_view csv);

  int size() const { return static_cast<int>(parts_.size()); }
  // alpha_i, 1-indexed.
  int part(int i) const { return parts_[i - 1]; }
  std::span<const int> parts() const { return parts_; }
  int total() const;
  int max_part() const;
  // Weakly decreasing.
  bool IsPartition() const;

  std::string ToString() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// A word i_1 ... i_k in the adjacent transpositions s_1, ..., s_{n-1}.
struct ReducedWord {
  std::vector<int> indices;

  // s_{i_1} s_{i_2} ... s_{i_k} in S_n.
  Permutation Product(int n) const;
  // True when the product has length exactly k.
  bool IsReduced(int n) const;
};

// A reduced word for w, obtained by sorting w with adjacent swaps.
ReducedWord ReducedWordOf(const Permutation& w);

// v . w = (v_{w_1}, ..., v_{w_n}).
template <typename T>
std::vector<T> Act(std::span<const T> v, const Permutation& w) {
  if (static_cast<int>(v.size()) != w.degree()) {
    throw DimensionError("act: vector of length " + std::to_string(v.size()) +
                         " against a permutation of degree " +
                         std::to_string(w.degree()));
  }
  std::vector<T> out;
  out.reserve(v.size());
  for (int w_i : w.entries()) out.push_back(v[w_i - 1]);
  return out;
}

template <typename T>
std::vector<T> Act(const std::vector<T>& v, const Permutation& w) {
  return Act(std::span<const T>(v), w);
}

Composition Act(const Composition& alpha, const Permutation& w);

// Strong Bruhat order via the rank-matrix (prefix dominance) criterion.
bool BruhatLeq(const Permutation& u, const Permutation& w);

// Bruhat order via the subword property: u <= w iff some subword of a fixed
// reduced word of w is a reduced word of u. Exponential; oracle use only.
bool BruhatLeqBySubword(const Permutation& u, const Permutation& w);

// All of S_n in lexicographic order.
std::vector<Permutation> AllPermutations(int n);

// The lower Bruhat interval [e, w], sorted.
std::vector<Permutation> LowerInterval(const Permutation& w);

// Parts of alpha sorted weakly decreasingly.
Composition LambdaOf(const Composition& alpha);

// The shortest permutation w with LambdaOf(alpha) . w = alpha. Equal parts
// receive consecutive labels from left to right.
Permutation WOf(const Composition& alpha);

// beta <= alpha: same sorted parts and WOf(beta) <= WOf(alpha) in Bruhat order.
bool CompositionLeq(const Composition& beta, const Composition& alpha);

// Oracle for CompositionLeq: beta is reachable from alpha by swaps t_{i,j}
// with i < j and alpha_i < alpha_j.
bool CompositionLeqBySwaps(const Composition& beta, const Composition& alpha);

// {beta : beta <= alpha}, computed as {lambda(alpha) . sigma : sigma <= w(alpha)},
// deduplicated and sorted lexicographically.
std::vector<Composition> VertexCompositions(const Composition& alpha);

}  // namespace schubitope

#endif  // SCHUBITOPE_PERMS_H_
