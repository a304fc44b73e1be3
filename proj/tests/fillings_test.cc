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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "schubitope/errors.h"
#include "test_util.h"

namespace schubitope {
namespace {

using testing::AllSubsets;

std::vector<std::pair<int, int>> Entries(const ColumnFilling& f) {
  return f.entries();
}

ColumnFilling Make(int n, std::vector<int> rows,
                   std::vector<std::pair<int, int>> entries) {
  ColumnFilling f(IndexSet::FromElements(n, rows));
  for (const auto& [row, value] : entries) f.assign(row, value);
  return f;
}

TEST(FillColumnTest, Examples) {
  const std::vector<int> w{3, 1, 5, 6, 2, 4};
  EXPECT_EQ(Entries(FillColumn(IndexSet::Parse(6, "2,3,4,6"), w)),
            (std::vector<std::pair<int, int>>{{2, 1}, {3, 3}, {4, 2}, {6, 5}}));
  const std::vector<int> p{2, 1, 3};
  EXPECT_EQ(Entries(FillColumn(IndexSet::Parse(3, "1,3"), p)),
            (std::vector<std::pair<int, int>>{{1, 1}, {3, 2}}));
  EXPECT_EQ(FillColumn(IndexSet(3), p).size(), 0);
}

TEST(FillColumnTest, RejectsBadOrders) {
  const Column c = IndexSet::Parse(3, "1,3");
  const std::vector<int> repeated{1, 1};
  const std::vector<int> outside{4};
  EXPECT_THROW(FillColumn(c, repeated), DomainError);
  EXPECT_THROW(FillColumn(c, outside), DomainError);
}

TEST(ColumnFillingTest, AssignErrors) {
  ColumnFilling f(IndexSet::Parse(3, "2"));
  EXPECT_THROW(f.assign(1, 1), DomainError);
  EXPECT_THROW(f.assign(2, 4), DomainError);
  f.assign(2, 3);
  EXPECT_FALSE(f.IsFlagged());
  EXPECT_TRUE(f.IsColumnStrict());
}

TEST(FillDiagramTest, EighteenBoxDiagram) {
  const Diagram d = testing::EighteenBoxDiagram();
  ASSERT_EQ(d.size(), 18);
  const DiagramFilling f = FillDiagram(d, Permutation::Parse("315624"));
  EXPECT_EQ(f.size(), 18);
  for (const auto& [cell, value] : testing::EighteenBoxFilling()) {
    EXPECT_EQ(f.value(cell.first, cell.second), value)
        << "(" << cell.first << "," << cell.second << ")";
  }
  EXPECT_EQ(f.Content(), (LatticePoint{6, 2, 6, 0, 3, 1}));
  EXPECT_EQ(VertexVector(d, Permutation::Parse("315624")),
            (LatticePoint{6, 2, 6, 0, 3, 1}));
}

TEST(FillDiagramTest, TrapezoidSixFillings) {
  const Diagram d = testing::TrapezoidDiagram();
  const std::map<std::string, std::vector<int>> expected = {
      // value at (1,1), (3,1), (3,2), (3,3)
      {"123", {1, 2, 1, 1}}, {"132", {1, 3, 1, 1}}, {"213", {1, 2, 2, 2}},
      {"231", {1, 2, 2, 2}}, {"312", {1, 3, 3, 3}}, {"321", {1, 3, 3, 3}}};
  for (const auto& [perm, values] : expected) {
    const DiagramFilling f = FillDiagram(d, Permutation::Parse(perm));
    EXPECT_EQ((std::vector<int>{f.value(1, 1), f.value(3, 1), f.value(3, 2),
                                f.value(3, 3)}),
              values)
        << perm;
  }
  EXPECT_EQ(VertexVector(d, Permutation::Parse("213")), (LatticePoint{1, 3, 0}));
  EXPECT_EQ(VertexVector(d, Permutation::Parse("231")), (LatticePoint{1, 3, 0}));
  EXPECT_EQ(VertexVector(d, Permutation::Parse("132")), (LatticePoint{3, 0, 1}));
}

TEST(FillDiagramTest, EdgeCases) {
  EXPECT_EQ(VertexVector(Diagram::Empty(3), Permutation::Parse("231")),
            (LatticePoint{0, 0, 0}));
  EXPECT_THROW(FillDiagram(Diagram::Empty(3), Permutation::Parse("21")),
               DimensionError);
  // Weakly decreasing skyline: row k always holds k.
  const Diagram d = Skyline(Composition({3, 2, 2, 0}));
  for (const Permutation& w : AllPermutations(4)) {
    const DiagramFilling f = FillDiagram(d, w);
    for (const Box& b : d.boxes()) EXPECT_EQ(f.value(b.row, b.col), b.row);
  }
}

TEST(FillDiagramTest, FillingsAreFlaggedAndStrict) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Box> boxes;
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        if (rng() % 3 == 0) boxes.push_back({i, j});
      }
    }
    const Diagram d(5, boxes);
    std::vector<int> entries(5);
    std::iota(entries.begin(), entries.end(), 1);
    std::shuffle(entries.begin(), entries.end(), rng);
    const DiagramFilling f = FillDiagram(d, Permutation(entries));
    for (int j = 1; j <= 5; ++j) {
      EXPECT_TRUE(f.column(j).IsFlagged());
      EXPECT_TRUE(f.column(j).IsColumnStrict());
    }
    const LatticePoint x = f.Content();
    EXPECT_LE(std::accumulate(x.begin(), x.end(), 0), d.size());
  }
}

TEST(FillDiagramTest, TextMarksEmptyBoxes) {
  const Diagram d(2, {{1, 1}, {2, 1}});
  ColumnFilling column(d.column(1));
  column.assign(2, 1);
  const std::string text =
      DiagramFilling(d, {column, ColumnFilling(d.column(2))}).ToText();
  EXPECT_NE(text.find("1"), std::string::npos);
  EXPECT_NE(text.find("·"), std::string::npos);
}

TEST(RankTest, Examples) {
  const IndexSet s = IndexSet::Parse(5, "1,3");
  const Column c = IndexSet::Parse(5, "1,4,5");
  EXPECT_EQ(RankFilling(c, s), 2);
  EXPECT_EQ(RankBrute(c, s), 2);
  EXPECT_EQ(RankMaxFilling(c, s), 2);
  EXPECT_EQ(RankFilling(IndexSet::Parse(5, "3"), s), 1);
  EXPECT_EQ(RankBrute(IndexSet::Parse(5, "3"), s), 1);
  EXPECT_EQ(RankMaxFilling(IndexSet::Parse(2, "1"), IndexSet::Parse(2, "2")), 0);
  EXPECT_EQ(RankMaxFilling(IndexSet::Parse(2, "2"), IndexSet::Parse(2, "1,2")), 1);
  EXPECT_EQ(RankBrute(c, IndexSet::Full(5)), 3);
  EXPECT_EQ(RankFilling(IndexSet(5), s), 0);
  EXPECT_EQ(RankMaxFilling(c, IndexSet(5)), 0);
  EXPECT_THROW(RankMaxFilling(IndexSet(13), IndexSet(13)), SizeError);
}

TEST(RankTest, AllThreeAgreeWithOracle) {
  for (const IndexSet& c : AllSubsets(5)) {
    for (const IndexSet& s : AllSubsets(5)) {
      const int expected = testing::RankOracle(c, s);
      ASSERT_EQ(RankFilling(c, s), expected) << c.ToString() << s.ToString();
      ASSERT_EQ(RankBrute(c, s), expected);
      ASSERT_EQ(RankMaxFilling(c, s), expected);
    }
  }
}

TEST(RankTest, IsAMatroidRankFunction) {
  for (const IndexSet& c : AllSubsets(5)) {
    for (const IndexSet& s : AllSubsets(5)) {
      EXPECT_LE(RankFilling(c, s), std::min(s.size(), c.size()));
      for (const IndexSet& t : AllSubsets(5)) {
        if (s.IsSubsetOf(t)) EXPECT_LE(RankFilling(c, s), RankFilling(c, t));
      }
    }
  }
}

TEST(RankTest, DiagramRankSumsColumns) {
  const Diagram d = testing::D9();
  EXPECT_EQ(RankDiagram(d, IndexSet::Parse(5, "1,3")), 7);
  EXPECT_EQ(RankDiagram(d, IndexSet::Full(5)), 9);
  EXPECT_EQ(RankDiagram(d, IndexSet(5)), 0);
}

TEST(SortStandardizeTest, EightRowColumn) {
  const ColumnFilling f =
      Make(8, {1, 3, 4, 5, 7, 8}, {{3, 3}, {4, 1}, {7, 6}, {8, 2}});
  const ColumnFilling sorted = SortFilling(f);
  EXPECT_EQ(Entries(sorted),
            (std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {7, 3}, {8, 6}}));
  EXPECT_EQ(Entries(Standardize(sorted)),
            (std::vector<std::pair<int, int>>{{1, 1}, {3, 2}, {4, 3}, {7, 6}}));
}

TEST(SortStandardizeTest, FixedPointsAndErrors) {
  const ColumnFilling increasing = Make(4, {1, 2, 4}, {{1, 1}, {4, 3}});
  EXPECT_EQ(SortFilling(increasing), increasing);
  const ColumnFilling single = Make(4, {2, 3}, {{3, 2}});
  EXPECT_EQ(SortFilling(single), single);
  const ColumnFilling full = Make(3, {1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}});
  EXPECT_EQ(Standardize(full), full);
  const ColumnFilling blocked = Make(2, {1, 2}, {{2, 2}});
  EXPECT_EQ(Standardize(blocked), blocked);

  EXPECT_THROW(SortFilling(Make(3, {1}, {{1, 2}})), InvariantError);
  EXPECT_THROW(Standardize(Make(3, {2, 3}, {{2, 2}, {3, 1}})), InvariantError);
}

}  // namespace
}  // namespace schubitope
