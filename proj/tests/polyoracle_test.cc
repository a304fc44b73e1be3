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

#include "schubitope/polyoracle.h"

#include <gtest/gtest.h>

#include <set>
#include <thread>
#include <vector>

#include "schubitope/certify.h"
#include "schubitope/errors.h"
#include "test_util.h"

namespace schubitope {
namespace {

using testing::AllCompositions;
using testing::ToPoint;

TEST(SchubertTest, Examples) {
  EXPECT_EQ(SchubertPolynomial(Permutation::Parse("321")),
            Polynomial::Monomial({2, 1, 0}));
  EXPECT_EQ(SchubertPolynomial(Permutation::Identity(4)),
            Polynomial::Constant(4, 1));
  EXPECT_EQ(SchubertPolynomial(Permutation::Parse("132")).ToString(), "x1 + x2");
  EXPECT_EQ(SchubertPolynomial(Permutation::Parse("312")).ToString(), "x1^2");
  EXPECT_EQ(SchubertPolynomial(Permutation::Parse("231")).ToString(), "x1*x2");
}

TEST(SchubertTest, MatchesCompatibleSequenceOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : AllPermutations(n)) {
      ASSERT_EQ(SchubertPolynomial(w), testing::SchubertOracle(w)) << w.ToString();
    }
  }
}

TEST(SchubertTest, ChainsAgreeAndCapHolds) {
  PolynomialOracle oracle;
  for (const Permutation& w : AllPermutations(4)) {
    EXPECT_EQ(oracle.Schubert(w, Chain::kFirstAscent),
              oracle.Schubert(w, Chain::kLastAscent));
  }
  EXPECT_THROW(SchubertPolynomial(Permutation::Identity(8)), SizeError);
}

TEST(KeyTest, Examples) {
  const Polynomial k = KeyPolynomial(Composition({1, 0, 3}));
  EXPECT_EQ(k.ToString(),
            "x1^3*x2 + x1^3*x3 + x1^2*x2^2 + x1^2*x2*x3 + x1^2*x3^2 + "
            "x1*x2^3 + x1*x2^2*x3 + x1*x2*x3^2 + x1*x3^3");
  EXPECT_EQ(KeyPolynomial(Composition({3, 1, 0})), Polynomial::Monomial({3, 1, 0}));
  EXPECT_EQ(KeyPolynomial(Composition({0, 1})).ToString(), "x1 + x2");
  EXPECT_THROW(KeyPolynomial(Composition({5, 0})), SizeError);
  EXPECT_THROW(KeyPolynomial(Composition({0, 0, 0, 0, 0, 0, 1})), SizeError);
}

TEST(KeyTest, MatchesKohnertOracle) {
  for (const Composition& alpha : AllCompositions(4, 2)) {
    ASSERT_EQ(KeyPolynomial(alpha), testing::KeyOracle(alpha)) << alpha.ToString();
  }
  for (const Composition& alpha : AllCompositions(3, 3)) {
    ASSERT_EQ(KeyPolynomial(alpha), testing::KeyOracle(alpha)) << alpha.ToString();
  }
}

TEST(KeyTest, NewtonVerticesAreVertexCompositions) {
  for (const Composition& alpha : AllCompositions(3, 3)) {
    const std::vector<LatticePoint> extreme =
        ExtremePoints(NewtonExponents(KeyPolynomial(alpha)));
    std::vector<LatticePoint> expected;
    for (const Composition& b : VertexCompositions(alpha)) {
      expected.push_back(ToPoint(b));
    }
    EXPECT_EQ(extreme, expected) << alpha.ToString();
  }
}

TEST(KeyTest, NewtonExponentsOfExample) {
  const std::vector<LatticePoint> e = NewtonExponents(KeyPolynomial(Composition({1, 0, 3})));
  EXPECT_EQ(e.size(), 9u);
  const std::set<LatticePoint> s(e.begin(), e.end());
  EXPECT_TRUE(s.count({3, 1, 0}));
  EXPECT_TRUE(s.count({1, 1, 2}));
}

TEST(OracleTest, ConcurrentUseIsConsistent) {
  PolynomialOracle oracle;
  std::vector<Polynomial> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&oracle, &results, t] {
      results[t] = oracle.Schubert(Permutation::Parse("41532"));
    });
  }
  for (std::thread& t : threads) t.join();
  for (const Polynomial& p : results) EXPECT_EQ(p, results.front());
  EXPECT_EQ(results.front(), testing::SchubertOracle(Permutation::Parse("41532")));
}

}  // namespace
}  // namespace schubitope
