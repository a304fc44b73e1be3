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

#ifndef SCHUBITOPE_INDEX_SET_H_
#define SCHUBITOPE_INDEX_SET_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubitope {

// Largest ground set [n] representable by IndexSet.
inline constexpr int kMaxDimension = 64;

// A subset of [n] = {1, ..., n} stored as a bitmask; element i is bit i-1.
// Used both for row sets of diagram columns and for the subsets S that
// index rank functions and halfspaces.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int n);

  static IndexSet FromMask(int n, std::uint64_t mask);
  static IndexSet FromElements(int n, std::span<const int> elements);
  static IndexSet Full(int n);
  // Parses "1,3,4" (or "" for the empty set).
  static IndexSet Parse(int n, std::string_view csv);

  int n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const;
  int size() const;
  bool empty() const { return mask_ == 0; }

  void insert(int i);
  void erase(int i);

  // Elements in increasing order.
  std::vector<int> elements() const;
  IndexSet complement() const;

  IndexSet operator|(const IndexSet& other) const;
  IndexSet operator&(const IndexSet& other) const;
  bool IsSubsetOf(const IndexSet& other) const;

  // "{1,3}".
  std::string ToString() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  void CheckElement(int i) const;

  int n_ = 0;
  std::uint64_t mask_ = 0;
};

// Bitmask of [n].
std::uint64_t FullMask(int n);

}  // namespace schubitope

#endif  // SCHUBITOPE_INDEX_SET_H_
