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

#ifndef SCHUBITOPE_DIAGRAMS_H_
#define SCHUBITOPE_DIAGRAMS_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubitope/index_set.h"
#include "schubitope/perms.h"

namespace schubitope {

// A column D_j of a diagram viewed as its set of occupied rows in [n].
using Column = IndexSet;

// Box (row, col), 1-indexed, rows counted top to bottom.
struct Box {
  int row = 0;
  int col = 0;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// A set of boxes in the n x n grid. Boxes are kept in row-major order.
class Diagram {
 public:
  Diagram() = default;
  // Throws DomainError for boxes outside the grid and InvariantError for
  // repeated boxes.
  Diagram(int n, std::vector<Box> boxes);

  static Diagram Empty(int n) { return Diagram(n, {}); }
  // Convenience: one set of occupied columns per row, rows 1..n.
  static Diagram FromRows(int n, const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  // #D.
  int size() const { return static_cast<int>(boxes_.size()); }
  std::span<const Box> boxes() const { return boxes_; }
  bool contains(int row, int col) const;

  // D_j; throws DomainError unless 1 <= j <= n.
  Column column(int j) const;
  std::vector<Column> columns() const;

  // One line per row, a box drawn as "□" and an empty cell as ".".
  std::string ToText() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  int n_ = 0;
  std::vector<Box> boxes_;
  std::vector<std::uint64_t> column_masks_;
};

// D(w) = {(i, j) : j < w_i and w^{-1}(j) > i}.
Diagram Rothe(const Permutation& w);

// D(alpha): the first alpha_i boxes of row i, in an n x n grid with
// n = alpha.size(). Throws DomainError when a part exceeds n.
Diagram Skyline(const Composition& alpha);

// The composition alpha with Skyline(alpha) == d, if d is left-justified.
std::optional<Composition> AsSkyline(const Diagram& d);

}  // namespace schubitope

#endif  // SCHUBITOPE_DIAGRAMS_H_
