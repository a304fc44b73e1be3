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

#include "schubitope/fillings.h"

#include <algorithm>
#include <bit>

#include "schubitope/errors.h"
#include "schubitope/matroid.h"

namespace schubitope {

ColumnFilling::ColumnFilling(Column column)
    : column_(column), values_(column.n() + 1, 0) {}

int ColumnFilling::value(int row) const {
  if (row < 1 || row > n()) return 0;
  return values_[row];
}

void ColumnFilling::assign(int row, int value) {
  if (!column_.contains(row)) {
    throw DomainError("filling: row " + std::to_string(row) +
                      " is not a box of the column");
  }
  if (value < 1 || value > n()) {
    throw DomainError("filling: value " + std::to_string(value) +
                      " outside [1, " + std::to_string(n()) + "]");
  }
  values_[row] = value;
}

void ColumnFilling::clear(int row) {
  if (row >= 1 && row <= n()) values_[row] = 0;
}

int ColumnFilling::size() const {
  return static_cast<int>(
      std::count_if(values_.begin(), values_.end(), [](int v) { return v; }));
}

int ColumnFilling::count(int value) const {
  if (value == 0) return 0;
  return static_cast<int>(std::count(values_.begin(), values_.end(), value));
}

std::vector<std::pair<int, int>> ColumnFilling::entries() const {
  std::vector<std::pair<int, int>> out;
  for (int row = 1; row <= n(); ++row) {
    if (values_[row] != 0) out.emplace_back(row, values_[row]);
  }
  return out;
}

bool ColumnFilling::IsFlagged() const {
  for (int row = 1; row <= n(); ++row) {
    if (values_[row] > row) return false;
  }
  return true;
}

bool ColumnFilling::IsColumnStrict() const {
  std::vector<bool> seen(n() + 1, false);
  for (int row = 1; row <= n(); ++row) {
    const int v = values_[row];
    if (v == 0) continue;
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool ColumnFilling::IsIncreasing() const {
  int last = 0;
  for (int row = 1; row <= n(); ++row) {
    const int v = values_[row];
    if (v == 0) continue;
    if (v <= last) return false;
    last = v;
  }
  return true;
}

DiagramFilling::DiagramFilling(Diagram diagram,
                               std::vector<ColumnFilling> columns)
    : diagram_(std::move(diagram)), columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != diagram_.n()) {
    throw DimensionError("diagram filling: one column filling per column");
  }
}

int DiagramFilling::size() const {
  int total = 0;
  for (const ColumnFilling& c : columns_) total += c.size();
  return total;
}

LatticePoint DiagramFilling::Content() const {
  LatticePoint x(diagram_.n(), 0);
  for (const ColumnFilling& c : columns_) {
    for (const auto& [row, v] : c.entries()) ++x[v - 1];
  }
  return x;
}

std::string DiagramFilling::ToText() const {
  const int n = diagram_.n();
  std::size_t width = std::to_string(std::max(n, 1)).size();
  auto pad = [width](std::string cell) {
    // "·" is one column wide but two bytes.
    std::size_t shown = cell == "·" ? 1 : cell.size();
    return std::string(width - std::min(width, shown), ' ') + cell;
  };
  std::string out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out += ' ';
      if (!diagram_.contains(i, j)) {
        out += pad(".");
      } else if (int v = value(i, j); v != 0) {
        out += pad(std::to_string(v));
      } else {
        out += pad("·");
      }
    }
    out += '\n';
  }
  return out;
}

ColumnFilling FillColumn(const Column& column, std::span<const int> order) {
  const int n = column.n();
  ColumnFilling f(column);
  std::uint64_t empty = column.mask();
  std::uint64_t used = 0;
  for (int v : order) {
    if (v < 1 || v > n) {
      throw DomainError("fill: value " + std::to_string(v) + " outside [1, " +
                        std::to_string(n) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (used & bit) {
      throw DomainError("fill: value " + std::to_string(v) + " repeated");
    }
    used |= bit;
    // Empty boxes in rows >= v.
    const std::uint64_t candidates = empty & ~(bit - 1);
    if (candidates == 0) continue;
    const int row = std::countr_zero(candidates) + 1;
    f.assign(row, v);
    empty &= ~(std::uint64_t{1} << (row - 1));
  }
  return f;
}

DiagramFilling FillDiagram(const Diagram& d, const Permutation& w) {
  if (w.degree() != d.n()) {
    throw DimensionError("fill: permutation of degree " +
                         std::to_string(w.degree()) + " on a diagram with n = " +
                         std::to_string(d.n()));
  }
  std::vector<ColumnFilling> columns;
  columns.reserve(d.n());
  for (int j = 1; j <= d.n(); ++j) {
    columns.push_back(FillColumn(d.column(j), w.entries()));
  }
  return DiagramFilling(d, std::move(columns));
}

LatticePoint VertexVector(const Diagram& d, const Permutation& w) {
  return FillDiagram(d, w).Content();
}

int RankFilling(const Column& column, const IndexSet& s) {
  if (column.n() != s.n()) throw DimensionError("rank: ground sets differ");
  const std::vector<int> order = s.elements();
  const int rank = FillColumn(column, order).size();
#ifndef NDEBUG
  std::vector<int> reversed(order.rbegin(), order.rend());
  if (FillColumn(column, reversed).size() != rank) {
    throw InvariantError("rank: filling size depends on the order of S");
  }
#endif
  return rank;
}

int RankBrute(const Column& column, const IndexSet& s) {
  if (column.n() != s.n()) throw DimensionError("rank: ground sets differ");
  int best = 0;
  for (const IndexSet& basis : SchubertMatroidBases(column)) {
    best = std::max(best, (basis & s).size());
  }
  return best;
}

namespace {

struct MaxFillingSearch {
  std::vector<int> rows;    // boxes of C, top to bottom
  std::vector<int> values;  // elements of S
  int limit = 0;            // min(#C, #S), the trivial upper bound
  int best = 0;

  void Run(std::size_t box, std::uint64_t used, int filled) {
    if (filled > best) best = filled;
    if (best == limit) return;
    if (box == rows.size()) return;
    if (filled + static_cast<int>(rows.size() - box) <= best) return;
    const int row = rows[box];
    for (int v : values) {
      if (v > row) break;
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (used & bit) continue;
      Run(box + 1, used | bit, filled + 1);
      if (best == limit) return;
    }
    Run(box + 1, used, filled);
  }
};

}  // namespace

int RankMaxFilling(const Column& column, const IndexSet& s) {
  if (column.n() != s.n()) throw DimensionError("rank: ground sets differ");
  if (column.n() > kOracleMaxDimension) {
    throw SizeError("max filling search: n = " + std::to_string(column.n()) +
                    " exceeds the enumeration cap " +
                    std::to_string(kOracleMaxDimension));
  }
  MaxFillingSearch search;
  search.rows = column.elements();
  search.values = s.elements();
  search.limit = std::min(column.size(), s.size());
  search.Run(0, 0, 0);
  return search.best;
}

int RankDiagram(const Diagram& d, const IndexSet& s) {
  int total = 0;
  for (int j = 1; j <= d.n(); ++j) total += RankFilling(d.column(j), s);
  return total;
}

ColumnFilling SortFilling(const ColumnFilling& f) {
  if (!f.IsFlagged() || !f.IsColumnStrict()) {
    throw InvariantError("sort: input must be flagged and column-strict");
  }
  std::vector<int> rows, values;
  for (const auto& [row, v] : f.entries()) {
    rows.push_back(row);
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  ColumnFilling out(f.column());
  for (std::size_t k = 0; k < rows.size(); ++k) out.assign(rows[k], values[k]);
  if (!out.IsFlagged()) {
    throw InvariantError("sort: result is not flagged");
  }
  return out;
}

ColumnFilling Standardize(const ColumnFilling& f) {
  if (!f.IsFlagged() || !f.IsColumnStrict() || !f.IsIncreasing()) {
    throw InvariantError(
        "standardize: input must be flagged, column-strict and increasing");
  }
  ColumnFilling out = f;
  // Entries in increasing order are exactly the entries top to bottom.
  for (const auto& [start_row, v] : f.entries()) {
    for (int row = v; row < start_row; ++row) {
      if (out.column().contains(row) && !out.occupied(row)) {
        out.clear(start_row);
        out.assign(row, v);
        break;
      }
    }
  }
  return out;
}

}  // namespace schubitope
