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

#include "schubitope/certify.h"

#include <gtest/gtest.h>

#include <vector>

#include "schubitope/errors.h"
#include "schubitope/exact_lp.h"
#include "test_util.h"

namespace schubitope {
namespace {

TEST(ExactLpTest, FeasibleAndInfeasible) {
  // x + y = 1, x - y = 1/2.
  const RationalMatrix a = {{Rational(1), Rational(1)},
                            {Rational(1), Rational(-1)}};
  const auto x = FindNonnegativeSolution(a, {Rational(1), Rational(1, 2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(3, 4));
  EXPECT_EQ((*x)[1], Rational(1, 4));
  EXPECT_FALSE(FindNonnegativeSolution(a, {Rational(1), Rational(2)}).has_value());
  // Negative right-hand sides are handled by row flips.
  const auto y = FindNonnegativeSolution({{Rational(-1)}}, {Rational(-2)});
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ((*y)[0], Rational(2));
}

TEST(ExactLpTest, DegenerateSystem) {
  const RationalMatrix a = {{Rational(1), Rational(1), Rational(1)},
                            {Rational(1), Rational(1), Rational(1)},
                            {Rational(0), Rational(0), Rational(1)}};
  const auto x = FindNonnegativeSolution(a, {Rational(1), Rational(1), Rational(0)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[2], Rational(0));
  EXPECT_EQ((*x)[0] + (*x)[1], Rational(1));
}

TEST(ConvexCombinationTest, InsideAndOutside) {
  const std::vector<LatticePoint> square = {{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  const auto inside = ConvexCombination(square, {1, 1});
  ASSERT_TRUE(inside.has_value());
  Rational sum = 0;
  for (const Rational& l : *inside) sum += l;
  EXPECT_EQ(sum, Rational(1));
  EXPECT_FALSE(ConvexCombination(square, {3, 0}).has_value());
}

TEST(ExtremePointsTest, DropsInteriorAndDuplicates) {
  const std::vector<LatticePoint> pts = {
      {0, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 2}, {1, 0}, {2, 2}};
  EXPECT_EQ(ExtremePoints(pts),
            (std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  EXPECT_EQ(ExtremePoints(std::vector<LatticePoint>{{1, 1}}),
            (std::vector<LatticePoint>{{1, 1}}));
}

TEST(HRepVerticesTest, Trapezoid) {
  const std::vector<RationalPoint> v =
      HRepVertices(Hrep(Skyline(Composition({1, 0, 3}))));
  const std::vector<RationalPoint> expected = {
      {Rational(1), Rational(0), Rational(3)},
      {Rational(1), Rational(3), Rational(0)},
      {Rational(3), Rational(0), Rational(1)},
      {Rational(3), Rational(1), Rational(0)}};
  EXPECT_EQ(v, expected);
}

TEST(HRepVerticesTest, Hypersimplex) {
  // sum = 2, x_i <= 1.
  HRep h(3, 2);
  for (const IndexSet& s : testing::AllSubsets(3)) {
    if (s.empty() || s.size() == 3) continue;
    h.set_bound(s, s.size() == 1 ? 1 : 2);
  }
  const std::vector<RationalPoint> v = HRepVertices(h);
  EXPECT_EQ(v, (std::vector<RationalPoint>{
                   {Rational(0), Rational(1), Rational(1)},
                   {Rational(1), Rational(0), Rational(1)},
                   {Rational(1), Rational(1), Rational(0)}}));
  EXPECT_THROW(HRepVertices(HRep(7, 0)), SizeError);
}

TEST(HRepVerticesTest, EmptyAndPointPolytopes) {
  HRep infeasible(2, 2);
  infeasible.set_bound(IndexSet::Parse(2, "1"), 0);
  infeasible.set_bound(IndexSet::Parse(2, "2"), 0);
  EXPECT_TRUE(HRepVertices(infeasible).empty());
  const std::vector<RationalPoint> point = HRepVertices(Hrep(Diagram::Empty(3)));
  ASSERT_EQ(point.size(), 1u);
  EXPECT_EQ(point[0], (RationalPoint{Rational(0), Rational(0), Rational(0)}));
}

TEST(CertifyTest, Passes) {
  const HRep h = Hrep(Skyline(Composition({1, 0, 3})));
  const std::vector<LatticePoint> v = {{3, 1, 0}, {3, 0, 1}, {1, 3, 0}, {1, 0, 3}};
  EXPECT_TRUE(CertifyVertices(h, v).passed());
  HRep segment(2, 1);
  segment.set_bound(IndexSet::Parse(2, "1"), 1);
  segment.set_bound(IndexSet::Parse(2, "2"), 1);
  EXPECT_EQ(segment, Hrep(Diagram(2, {{2, 1}})));
  EXPECT_TRUE(CertifyVertices(segment, std::vector<LatticePoint>{{1, 0}, {0, 1}})
                  .passed());
}

TEST(CertifyTest, MissingVertexFailsCoverage) {
  const HRep h = Hrep(Skyline(Composition({1, 0, 3})));
  const std::vector<LatticePoint> v = {{3, 1, 0}, {3, 0, 1}, {1, 3, 0}};
  const CertificationReport r = CertifyVertices(h, v);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.coverage);
  EXPECT_TRUE(r.membership);
  EXPECT_TRUE(r.extremality);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(r.witnesses.front().find("(1,0,3)"), std::string::npos);
}

TEST(CertifyTest, NonVertexFailsExtremality) {
  const HRep h = Hrep(Skyline(Composition({1, 0, 3})));
  const std::vector<LatticePoint> v = {
      {3, 1, 0}, {3, 0, 1}, {1, 3, 0}, {1, 0, 3}, {2, 1, 1}};
  const CertificationReport r = CertifyVertices(h, v);
  EXPECT_FALSE(r.extremality);
  EXPECT_TRUE(r.membership);
}

TEST(CertifyTest, OutsidePointFailsMembership) {
  const HRep h = Hrep(Skyline(Composition({1, 0, 3})));
  const std::vector<LatticePoint> v = {
      {3, 1, 0}, {3, 0, 1}, {1, 3, 0}, {1, 0, 3}, {4, 0, 0}};
  EXPECT_FALSE(CertifyVertices(h, v).membership);
  EXPECT_THROW(CertifyVertices(h, std::vector<LatticePoint>{{1, 1}}),
               DimensionError);
}

TEST(CertifyTest, RotheVertexSetsAtFour) {
  for (const Permutation& w : AllPermutations(4)) {
    const Diagram d = Rothe(w);
    EXPECT_TRUE(CertifyVertices(Hrep(d), Vertices(d)).passed()) << w.ToString();
  }
}

}  // namespace
}  // namespace schubitope
