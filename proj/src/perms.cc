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

#include "schubitope/perms.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

namespace schubitope {
namespace {

std::vector<int> ParseIntList(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw ParseError(std::string(what) + ": '" + std::string(token) +
                       "' is not an integer");
    }
    out.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line)
    : entries_(std::move(one_line)) {
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v]) {
      throw DomainError("permutation: entries must be a bijection on [" +
                        std::to_string(n) + "]");
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::Longest(int n) {
  std::vector<int> e(n);
  std::iota(e.rbegin(), e.rend(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::Parse(std::string_view text) {
  if (text.empty()) return Permutation();
  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    entries = ParseIntList(text, "permutation");
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw ParseError("permutation: '" + std::string(text) +
                         "' is not a digit string");
      }
      entries.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(entries));
  } catch (const DomainError&) {
    throw ParseError("permutation: '" + std::string(text) +
                     "' is not a bijection on [n]");
  }
}

int Permutation::length() const {
  int inversions = 0;
  for (int i = 0; i < degree(); ++i) {
    for (int j = i + 1; j < degree(); ++j) {
      if (entries_[i] > entries_[j]) ++inversions;
    }
  }
  return inversions;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(degree());
  for (int i = 0; i < degree(); ++i) inv[entries_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

bool Permutation::IsIdentity() const {
  for (int i = 0; i < degree(); ++i) {
    if (entries_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::TimesAdjacent(int i) const {
  if (i < 1 || i >= degree()) {
    throw DomainError("s_" + std::to_string(i) + " outside S_" +
                      std::to_string(degree()));
  }
  Permutation out = *this;
  std::swap(out.entries_[i - 1], out.entries_[i]);
  return out;
}

Permutation Permutation::AdjacentTimes(int i) const {
  if (i < 1 || i >= degree()) {
    throw DomainError("s_" + std::to_string(i) + " outside S_" +
                      std::to_string(degree()));
  }
  Permutation out = *this;
  for (int& v : out.entries_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) {
    throw DimensionError("product of permutations of different degrees");
  }
  std::vector<int> out(degree());
  for (int i = 0; i < degree(); ++i) out[i] = entries_[other.entries_[i] - 1];
  return Permutation(std::move(out));
}

std::string Permutation::ToString() const {
  std::string out;
  const bool digits = degree() <= 9;
  for (int i = 0; i < degree(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw DomainError("composition: negative part");
  }
}

Composition Composition::Parse(std::string_view csv) {
  if (csv.empty()) return Composition();
  std::vector<int> parts = ParseIntList(csv, "composition");
  for (int p : parts) {
    if (p < 0) {
      throw ParseError("composition: negative part in '" + std::string(csv) +
                       "'");
    }
  }
  return Composition(std::move(parts));
}

int Composition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::max_part() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

bool Composition::IsPartition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Composition::ToString() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Permutation ReducedWord::Product(int n) const {
  Permutation w = Permutation::Identity(n);
  for (int i : indices) w = w.TimesAdjacent(i);
  return w;
}

bool ReducedWord::IsReduced(int n) const {
  return Product(n).length() == static_cast<int>(indices.size());
}

ReducedWord ReducedWordOf(const Permutation& w) {
  // Peel right descents: w = w' s_i with l(w') = l(w) - 1.
  ReducedWord word;
  Permutation current = w;
  while (!current.IsIdentity()) {
    int i = 1;
    while (current(i) < current(i + 1)) ++i;
    word.indices.push_back(i);
    current = current.TimesAdjacent(i);
  }
  std::reverse(word.indices.begin(), word.indices.end());
  return word;
}

Composition Act(const Composition& alpha, const Permutation& w) {
  return Composition(Act(alpha.parts(), w));
}

bool BruhatLeq(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) {
    throw DimensionError("bruhat: permutations of different degrees");
  }
  const int n = u.degree();
  // count[j] = #{a <= i : x(a) >= j}, updated one prefix at a time.
  std::vector<int> cu(n + 2, 0), cw(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= u(i); ++j) ++cu[j];
    for (int j = 1; j <= w(i); ++j) ++cw[j];
    for (int j = 1; j <= n; ++j) {
      if (cu[j] > cw[j]) return false;
    }
  }
  return true;
}

bool BruhatLeqBySubword(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) {
    throw DimensionError("bruhat: permutations of different degrees");
  }
  const int n = w.degree();
  const ReducedWord word = ReducedWordOf(w);
  const int k = static_cast<int>(word.indices.size());
  if (k > 24) throw SizeError("subword oracle: reduced word longer than 24");
  const int target = u.length();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    if (std::popcount(mask) != target) continue;
    Permutation p = Permutation::Identity(n);
    for (int t = 0; t < k; ++t) {
      if ((mask >> t) & 1u) p = p.TimesAdjacent(word.indices[t]);
    }
    if (p == u) return true;
  }
  return false;
}

std::vector<Permutation> AllPermutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::vector<Permutation> LowerInterval(const Permutation& w) {
  // Every u < v is reached by repeatedly undoing an inversion v -> v t_{ij}.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  std::vector<int> start(w.entries().begin(), w.entries().end());
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    std::vector<int> v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (v[i] < v[j]) continue;
        std::vector<int> u = v;
        std::swap(u[i], u[j]);
        if (seen.insert(u).second) queue.push_back(std::move(u));
      }
    }
  }
  std::vector<Permutation> out;
  out.reserve(seen.size());
  for (const auto& e : seen) out.emplace_back(e);
  return out;
}

Composition LambdaOf(const Composition& alpha) {
  std::vector<int> parts(alpha.parts().begin(), alpha.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Composition(std::move(parts));
}

Permutation WOf(const Composition& alpha) {
  const int n = alpha.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Positions sorted by decreasing part, ties left to right.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return alpha.parts()[a] > alpha.parts()[b];
  });
  std::vector<int> w(n);
  for (int label = 0; label < n; ++label) w[order[label]] = label + 1;
  return Permutation(std::move(w));
}

bool CompositionLeq(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) {
    throw DimensionError("composition order: lengths differ");
  }
  if (LambdaOf(beta) != LambdaOf(alpha)) return false;
  return BruhatLeq(WOf(beta), WOf(alpha));
}

bool CompositionLeqBySwaps(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) {
    throw DimensionError("composition order: lengths differ");
  }
  std::set<Composition> seen{alpha};
  std::deque<Composition> queue{alpha};
  while (!queue.empty()) {
    Composition current = std::move(queue.front());
    queue.pop_front();
    if (current == beta) return true;
    std::vector<int> parts(current.parts().begin(), current.parts().end());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        if (parts[i] >= parts[j]) continue;
        std::swap(parts[i], parts[j]);
        Composition next(parts);
        std::swap(parts[i], parts[j]);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

std::vector<Composition> VertexCompositions(const Composition& alpha) {
  const Composition lambda = LambdaOf(alpha);
  std::set<Composition> out;
  for (const Permutation& sigma : LowerInterval(WOf(alpha))) {
    out.insert(Act(lambda, sigma));
  }
  return {out.begin(), out.end()};
}

}  // namespace schubitope
