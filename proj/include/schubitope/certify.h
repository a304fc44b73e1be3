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

#ifndef SCHUBITOPE_CERTIFY_H_
#define SCHUBITOPE_CERTIFY_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubitope/fillings.h"
#include "schubitope/numeric.h"
#include "schubitope/schubitope.h"

namespace schubitope {

inline constexpr int kCertifyMaxDimension = 6;

using RationalPoint = std::vector<Rational>;

// Coefficients lambda >= 0, sum lambda = 1, with sum lambda_q q = target, or
// nullopt when target lies outside conv(points).
std::optional<std::vector<Rational>> ConvexCombination(
    std::span<const LatticePoint> points, const LatticePoint& target);

// The extreme points of conv(points), deduplicated and sorted.
std::vector<LatticePoint> ExtremePoints(std::span<const LatticePoint> points);

// Vertices of the H-polytope by exact double description, sorted. Throws
// SizeError above kCertifyMaxDimension and InvariantError if the polytope is
// unbounded.
std::vector<RationalPoint> HRepVertices(const HRep& h);

struct CertificationReport {
  // Every point satisfies the H-description.
  bool membership = true;
  // No point is a convex combination of the others.
  bool extremality = true;
  // Every vertex of the H-polytope is among the points.
  bool coverage = true;
  // One line per failure, each carrying a reproducible witness.
  std::vector<std::string> witnesses;
  // The H-polytope's vertices as computed by double description.
  std::vector<RationalPoint> hrep_vertices;

  bool passed() const { return membership && extremality && coverage; }
};

// Checks exactly that `points` is the vertex set of the H-polytope. Passing
// all three checks means conv(points) equals the H-polytope and every point
// is one of its vertices.
CertificationReport CertifyVertices(const HRep& h,
                                    std::span<const LatticePoint> points);

std::string PointToString(std::span<const int> p);
std::string PointToString(std::span<const Rational> p);

}  // namespace schubitope

#endif  // SCHUBITOPE_CERTIFY_H_
