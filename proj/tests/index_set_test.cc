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

#include "schubitope/index_set.h"

#include <gtest/gtest.h>

#include <vector>

#include "schubitope/errors.h"

namespace schubitope {
namespace {

TEST(IndexSetTest, ParseAndPrint) {
  const IndexSet s = IndexSet::Parse(5, "3,1");
  EXPECT_EQ(s.elements(), (std::vector<int>{1, 3}));
  EXPECT_EQ(s.ToString(), "{1,3}");
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(IndexSet::Parse(4, "").empty());
}

TEST(IndexSetTest, ParseRejectsGarbage) {
  EXPECT_THROW(IndexSet::Parse(3, "1,x"), ParseError);
  EXPECT_THROW(IndexSet::Parse(3, "4"), ParseError);
  EXPECT_THROW(IndexSet::Parse(3, "0"), ParseError);
}

TEST(IndexSetTest, SetAlgebra) {
  const IndexSet a = IndexSet::Parse(4, "1,2");
  const IndexSet b = IndexSet::Parse(4, "2,4");
  EXPECT_EQ((a | b).ToString(), "{1,2,4}");
  EXPECT_EQ((a & b).ToString(), "{2}");
  EXPECT_EQ(a.complement().ToString(), "{3,4}");
  EXPECT_TRUE((a & b).IsSubsetOf(a));
  EXPECT_FALSE(a.IsSubsetOf(b));
  EXPECT_EQ(IndexSet::Full(4).mask(), FullMask(4));
}

TEST(IndexSetTest, InsertEraseBounds) {
  IndexSet s(3);
  s.insert(3);
  EXPECT_TRUE(s.contains(3));
  s.erase(3);
  EXPECT_TRUE(s.empty());
  EXPECT_THROW(s.insert(4), DomainError);
  EXPECT_THROW(s.insert(0), DomainError);
  EXPECT_THROW(IndexSet::FromMask(2, 0b100), DomainError);
  EXPECT_THROW(IndexSet(65), DomainError);
}

TEST(IndexSetTest, MismatchedGroundSets) {
  EXPECT_THROW(IndexSet(3) | IndexSet(4), DimensionError);
  EXPECT_THROW(IndexSet(3) & IndexSet(4), DimensionError);
}

TEST(IndexSetTest, FullWidth) {
  const IndexSet full = IndexSet::Full(64);
  EXPECT_EQ(full.size(), 64);
  EXPECT_TRUE(full.complement().empty());
}

}  // namespace
}  // namespace schubitope
