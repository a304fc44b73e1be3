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

#include "schubitope/diagrams.h"

#include <algorithm>

#include "schubitope/errors.h"

namespace schubitope {

Diagram::Diagram(int n, std::vector<Box> boxes)
    : n_(n), boxes_(std::move(boxes)), column_masks_(n, 0) {
  if (n < 0 || n > kMaxDimension) {
    throw DomainError("diagram: grid size " + std::to_string(n) +
                      " outside [0, 64]");
  }
  std::sort(boxes_.begin(), boxes_.end());
  for (std::size_t k = 0; k < boxes_.size(); ++k) {
    const Box& b = boxes_[k];
    if (b.row < 1 || b.row > n || b.col < 1 || b.col > n) {
      throw DomainError("diagram: box (" + std::to_string(b.row) + "," +
                        std::to_string(b.col) + ") outside the " +
                        std::to_string(n) + "x" + std::to_string(n) + " grid");
    }
    if (k > 0 && boxes_[k - 1] == b) {
      throw InvariantError("diagram: duplicate box (" + std::to_string(b.row) +
                           "," + std::to_string(b.col) + ")");
    }
    column_masks_[b.col - 1] |= std::uint64_t{1} << (b.row - 1);
  }
}

Diagram Diagram::FromRows(int n, const std::vector<std::vector<int>>& rows) {
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int c : rows[i]) boxes.push_back({static_cast<int>(i) + 1, c});
  }
  return Diagram(n, std::move(boxes));
}

bool Diagram::contains(int row, int col) const {
  if (col < 1 || col > n_ || row < 1 || row > n_) return false;
  return (column_masks_[col - 1] >> (row - 1)) & 1u;
}

Column Diagram::column(int j) const {
  if (j < 1 || j > n_) {
    throw DomainError("diagram: column " + std::to_string(j) +
                      " outside [1, " + std::to_string(n_) + "]");
  }
  return Column::FromMask(n_, column_masks_[j - 1]);
}

std::vector<Column> Diagram::columns() const {
  std::vector<Column> out;
  out.reserve(n_);
  for (int j = 1; j <= n_; ++j) out.push_back(column(j));
  return out;
}

std::string Diagram::ToText() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out += contains(i, j) ? "□" : ".";
    out += '\n';
  }
  return out;
}

Diagram Rothe(const Permutation& w) {
  const int n = w.degree();
  const Permutation inv = w.inverse();
  std::vector<Box> boxes;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < w(i); ++j) {
      if (inv(j) > i) boxes.push_back({i, j});
    }
  }
  return Diagram(n, std::move(boxes));
}

Diagram Skyline(const Composition& alpha) {
  const int n = alpha.size();
  std::vector<Box> boxes;
  for (int i = 1; i <= n; ++i) {
    if (alpha.part(i) > n) {
      throw DomainError("skyline: part " + std::to_string(alpha.part(i)) +
                        " in row " + std::to_string(i) + " exceeds n = " +
                        std::to_string(n));
    }
    for (int j = 1; j <= alpha.part(i); ++j) boxes.push_back({i, j});
  }
  return Diagram(n, std::move(boxes));
}

std::optional<Composition> AsSkyline(const Diagram& d) {
  std::vector<int> parts(d.n(), 0);
  for (const Box& b : d.boxes()) {
    // Row-major order: a left-justified row lists columns 1, 2, ... in turn.
    if (b.col != parts[b.row - 1] + 1) return std::nullopt;
    ++parts[b.row - 1];
  }
  return Composition(std::move(parts));
}

}  // namespace schubitope
