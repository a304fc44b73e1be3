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

#ifndef SCHUBITOPE_FILLINGS_H_
#define SCHUBITOPE_FILLINGS_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schubitope/diagrams.h"
#include "schubitope/index_set.h"
#include "schubitope/perms.h"

namespace schubitope {

// An integer point of R^n, coordinates 1..n stored at indices 0..n-1.
using LatticePoint = std::vector<int>;

// A partial assignment of positive integers to the boxes of one column.
// Values are stored per row; 0 marks an empty box.
class ColumnFilling {
 public:
  ColumnFilling() = default;
  explicit ColumnFilling(Column column);

  const Column& column() const { return column_; }
  int n() const { return column_.n(); }

  // Value in `row`, or 0 when the box is empty or absent.
  int value(int row) const;
  bool occupied(int row) const { return value(row) != 0; }
  // Throws DomainError unless `row` is a box of the column and 1 <= value <= n.
  void assign(int row, int value);
  void clear(int row);

  // |F|: the number of non-empty boxes.
  int size() const;
  // Occurrences of `value`.
  int count(int value) const;
  // (row, value) pairs, top to bottom.
  std::vector<std::pair<int, int>> entries() const;

  // Entry in row i never exceeds i.
  bool IsFlagged() const;
  // Entries pairwise distinct.
  bool IsColumnStrict() const;
  // Entries strictly increase from top to bottom.
  bool IsIncreasing() const;

  friend bool operator==(const ColumnFilling&, const ColumnFilling&) = default;

 private:
  Column column_;
  std::vector<int> values_;  // indexed by row, slot 0 unused
};

// A filling of a whole diagram, one ColumnFilling per column.
class DiagramFilling {
 public:
  DiagramFilling() = default;
  DiagramFilling(Diagram diagram, std::vector<ColumnFilling> columns);

  const Diagram& diagram() const { return diagram_; }
  const ColumnFilling& column(int j) const { return columns_[j - 1]; }
  int value(int row, int col) const { return column(col).value(row); }
  int size() const;
  // x_k = number of appearances of k, for k = 1..n.
  LatticePoint Content() const;

  // The diagram grid with each box showing its value (or "·" when the box is
  // empty) and "." outside the diagram; cells separated by one space.
  std::string ToText() const;

 private:
  Diagram diagram_;
  std::vector<ColumnFilling> columns_;
};

// The greedy column filling: each entry of `order`, in turn, goes into the
// topmost empty box whose row index is at least the entry; entries with no
// such box are skipped. `order` must hold distinct values of [n].
ColumnFilling FillColumn(const Column& column, std::span<const int> order);

// F_w(D): FillColumn on every column with the order w_1 ... w_n.
DiagramFilling FillDiagram(const Diagram& d, const Permutation& w);

// x(w): the content of F_w(D).
LatticePoint VertexVector(const Diagram& d, const Permutation& w);

// Rank of S in SM_n(C) as the size of the greedy filling by S (increasing
// order; any order gives the same size).
int RankFilling(const Column& column, const IndexSet& s);

// max #(S cap B) over the bases B of SM_n(C). Throws SizeError when
// n > kOracleMaxDimension.
int RankBrute(const Column& column, const IndexSet& s);

// max |F| over column-strict flagged fillings of C with entries in S, by
// exhaustive search. Throws SizeError when n > kOracleMaxDimension.
int RankMaxFilling(const Column& column, const IndexSet& s);

// r_D(S) = sum over columns of RankFilling.
int RankDiagram(const Diagram& d, const IndexSet& s);

// Keeps the occupied boxes and rearranges the entries increasingly from top
// to bottom. Throws InvariantError unless the input is flagged and
// column-strict.
ColumnFilling SortFilling(const ColumnFilling& f);

// Moves the entries a_1 < ... < a_k upwards in turn, each to the highest empty
// box above it whose row index is at least the entry. Throws InvariantError
// unless the input is flagged, column-strict and increasing.
ColumnFilling Standardize(const ColumnFilling& f);

}  // namespace schubitope

#endif  // SCHUBITOPE_FILLINGS_H_
