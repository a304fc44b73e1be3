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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "schubitope/errors.h"
#include "test_util.h"

namespace schubitope {
namespace {

using testing::AllSubsets;

Diagram RandomDiagram(int n, std::mt19937_64& rng) {
  std::vector<Box> boxes;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (rng() & 1u) boxes.push_back({i, j});
    }
  }
  return Diagram(n, boxes);
}

TEST(ParenWordTest, MatchingIsInsideOut) {
  using P = Paren;
  EXPECT_EQ(ParenWord({P::kOpen, P::kOpen, P::kClose, P::kClose}).MatchedPairs(), 2);
  EXPECT_EQ(ParenWord({P::kClose, P::kOpen}).MatchedPairs(), 0);
  EXPECT_EQ(ParenWord({P::kOpen, P::kStar, P::kClose}).MatchedPairs(), 1);
  EXPECT_EQ(ParenWord({P::kOpen, P::kStar, P::kClose}).Value(), 2);
  EXPECT_EQ(ParenWord().Value(), 0);
}

TEST(ColumnWordTest, D9) {
  const Diagram d = testing::D9();
  const IndexSet s = IndexSet::Parse(5, "1,3");
  const std::vector<std::string> words = {"★())", "(★", "(()", "()★)", "()("};
  for (int j = 1; j <= 5; ++j) {
    EXPECT_EQ(ColumnWord(d, j, s).ToString(), words[j - 1]) << j;
  }
  EXPECT_EQ(ThetaByColumn(d, s), (std::vector<int>{2, 1, 1, 2, 1}));
  EXPECT_EQ(Theta(d, s), 7);
}

TEST(ColumnWordTest, EmptySetGivesOnlyCloses) {
  const Diagram d = testing::D9();
  for (int j = 1; j <= 5; ++j) {
    const ParenWord word = ColumnWord(d, j, IndexSet(5));
    for (Paren p : word.symbols()) {
      EXPECT_EQ(p, Paren::kClose);
    }
  }
}

TEST(ThetaTest, EdgeCases) {
  const Diagram d = testing::D9();
  EXPECT_EQ(Theta(d, IndexSet::Full(5)), 9);
  EXPECT_EQ(Theta(d, IndexSet(5)), 0);
  EXPECT_EQ(Theta(Diagram::Empty(4), IndexSet::Parse(4, "2,3")), 0);
  EXPECT_EQ(Theta(Skyline(Composition({1, 0, 3})), IndexSet::Parse(3, "2,3")), 3);
}

TEST(ThetaTest, EqualsRankOnRandomDiagrams) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram d = RandomDiagram(5, rng);
    for (const IndexSet& s : AllSubsets(5)) {
      int oracle = 0;
      for (const Column& c : d.columns()) oracle += testing::RankOracle(c, s);
      ASSERT_EQ(Theta(d, s), oracle);
    }
  }
}

TEST(HRepTest, SkylineExample) {
  const HRep h = Hrep(Skyline(Composition({1, 0, 3})));
  EXPECT_EQ(h.n(), 3);
  EXPECT_EQ(h.total(), 4);
  const std::vector<std::pair<std::string, int>> bounds = {
      {"1", 3}, {"2", 3}, {"3", 3}, {"1,2", 4}, {"1,3", 4}, {"2,3", 3}};
  for (const auto& [s, b] : bounds) {
    EXPECT_EQ(h.bound(IndexSet::Parse(3, s)), b) << s;
  }
}

TEST(HRepTest, EdgeCases) {
  const HRep empty = Hrep(Diagram::Empty(3));
  EXPECT_EQ(empty.total(), 0);
  for (const IndexSet& s : AllSubsets(3)) {
    if (!s.empty() && s.size() < 3) EXPECT_EQ(empty.bound(s), 0);
  }
  const HRep one = Hrep(Diagram(2, {{1, 1}}));
  EXPECT_EQ(one.total(), 1);
  EXPECT_EQ(one.bound(IndexSet::Parse(2, "1")), 1);
  EXPECT_EQ(one.bound(IndexSet::Parse(2, "2")), 0);
  HRep h(2, 0);
  EXPECT_THROW(h.set_bound(IndexSet(2), 1), DomainError);
  EXPECT_THROW(h.set_bound(IndexSet::Full(2), 1), DomainError);
  EXPECT_THROW(HRep(17, 0), SizeError);
}

TEST(MemberTest, Examples) {
  const HRep h = Hrep(Skyline(Composition({1, 0, 3})));
  EXPECT_TRUE(Member(h, std::vector<int>{2, 1, 1}));
  EXPECT_FALSE(Member(h, std::vector<int>{4, 0, 0}));
  EXPECT_FALSE(Member(h, std::vector<int>{1, 1, 1}));
  const std::vector<Rational> half{Rational(1, 2), Rational(1, 2), Rational(3)};
  EXPECT_FALSE(Member(h, half));
  ASSERT_TRUE(FirstViolation(h, half).has_value());
  EXPECT_EQ(FirstViolation(h, half)->ToString(), "{2,3}");
  const std::vector<Rational> off{Rational(1), Rational(1), Rational(1)};
  EXPECT_TRUE(FirstViolation(h, off)->empty());
  const std::vector<Rational> in{Rational(3, 2), Rational(3, 2), Rational(1)};
  EXPECT_FALSE(FirstViolation(h, in).has_value());
  EXPECT_THROW(Member(h, std::vector<int>{1, 3}), DimensionError);
}

TEST(EdmondsTest, Examples) {
  const Diagram d = Skyline(Composition({1, 0, 3}));
  const SetFunction rank = [&d](const IndexSet& s) { return RankDiagram(d, s); };
  EXPECT_EQ(EdmondsVertex(rank, Permutation::Parse("213")), (LatticePoint{1, 3, 0}));
  const SetFunction zero = [](const IndexSet&) { return 0; };
  EXPECT_EQ(EdmondsVertex(zero, Permutation::Parse("312")), (LatticePoint{0, 0, 0}));
  const std::vector<int> c{4, -1, 2};
  const SetFunction modular = [&c](const IndexSet& s) {
    int total = 0;
    for (int i : s.elements()) total += c[i - 1];
    return total;
  };
  for (const Permutation& w : AllPermutations(3)) {
    EXPECT_EQ(EdmondsVertex(modular, w), LatticePoint(c.begin(), c.end()));
  }
}

TEST(SubmodularityTest, DetectsViolations) {
  const SetFunction square = [](const IndexSet& s) { return s.size() * s.size(); };
  EXPECT_TRUE(FindSubmodularityViolation(3, square).has_value());
  const Diagram d = testing::D9();
  const SetFunction theta = [&d](const IndexSet& s) { return Theta(d, s); };
  EXPECT_FALSE(FindSubmodularityViolation(5, theta).has_value());
}

TEST(VerticesTest, Examples) {
  EXPECT_EQ(Vertices(testing::TrapezoidDiagram()),
            (std::vector<LatticePoint>{{1, 0, 3}, {1, 3, 0}, {3, 0, 1}, {3, 1, 0}}));
  EXPECT_EQ(Vertices(Diagram(3, {{1, 1}})), (std::vector<LatticePoint>{{1, 0, 0}}));
  EXPECT_EQ(Vertices(Diagram::Empty(2)), (std::vector<LatticePoint>{{0, 0}}));
  EXPECT_THROW(Vertices(Diagram::Empty(10)), SizeError);
}

TEST(VerticesTest, SkylineShortcutMatchesSweep) {
  for (const Composition& a : testing::AllCompositions(4, 3)) {
    EXPECT_EQ(Vertices(Skyline(a), {.skyline_shortcut = true}),
              Vertices(Skyline(a)))
        << a.ToString();
  }
  // Large skylines work through the shortcut alone.
  const Diagram big = Skyline(Composition({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(Vertices(big, {.skyline_shortcut = true}).size(), 11u);
}

TEST(VerticesTest, FibersPartitionSymmetricGroup) {
  const auto fibers = VertexFibers(testing::TrapezoidDiagram());
  ASSERT_EQ(fibers.size(), 4u);
  std::size_t total = 0;
  for (const auto& [x, perms] : fibers) total += perms.size();
  EXPECT_EQ(total, 6u);
  EXPECT_EQ(fibers.at({1, 3, 0}),
            (std::vector<Permutation>{Permutation::Parse("213"),
                                      Permutation::Parse("231")}));
}

TEST(VerticesTest, VerticesSatisfyHRepTightly) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Diagram d = RandomDiagram(4, rng);
    const HRep h = Hrep(d);
    for (const Permutation& w : AllPermutations(4)) {
      const LatticePoint x = VertexVector(d, w);
      ASSERT_TRUE(Member(h, x));
      IndexSet prefix(4);
      int sum = 0;
      for (int k = 1; k < 4; ++k) {
        prefix.insert(w(k));
        sum += x[w(k) - 1];
        EXPECT_EQ(sum, h.bound(prefix));
      }
    }
  }
}

TEST(BasePolytopeTest, MatchesHrepForTheta) {
  const Diagram d = testing::D9();
  const HRep h = BasePolytope(
      5, [&d](const IndexSet& s) -> std::int64_t { return Theta(d, s); });
  EXPECT_EQ(h, Hrep(d));
}

}  // namespace
}  // namespace schubitope
