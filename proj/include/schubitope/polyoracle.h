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

#ifndef SCHUBITOPE_POLYORACLE_H_
#define SCHUBITOPE_POLYORACLE_H_

#include <map>
#include <mutex>
#include <utility>

#include "schubitope/perms.h"
#include "schubitope/polynomial.h"

namespace schubitope {

inline constexpr int kSchubertMaxDimension = 7;
inline constexpr int kKeyMaxDimension = 6;
inline constexpr int kKeyMaxPart = 4;

// Which ascent the recursions step along. Both give the same polynomial;
// having two lets tests compare distinct chains.
enum class Chain { kFirstAscent, kLastAscent };

// Schubert and key polynomials by divided-difference and Demazure
// recursions, memoized per instance. Safe to share between threads: the memo
// tables only ever gain entries, and racing inserts store equal values.
class PolynomialOracle {
 public:
  // S_{w0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}; S_w = d_i S_{w s_i} at an
  // ascent w_i < w_{i+1}. Throws SizeError when n > kSchubertMaxDimension.
  Polynomial Schubert(const Permutation& w, Chain chain = Chain::kFirstAscent);

  // kappa_alpha = x^alpha for a partition; otherwise kappa_alpha =
  // pi_i kappa_{alpha s_i} at an ascent alpha_i < alpha_{i+1}. Throws
  // SizeError when n > kKeyMaxDimension or a part exceeds kKeyMaxPart.
  Polynomial Key(const Composition& alpha, Chain chain = Chain::kFirstAscent);

 private:
  std::mutex mutex_;
  std::map<std::pair<Permutation, Chain>, Polynomial> schubert_;
  std::map<std::pair<Composition, Chain>, Polynomial> key_;
};

// One-shot helpers with a fresh memo table.
Polynomial SchubertPolynomial(const Permutation& w,
                              Chain chain = Chain::kFirstAscent);
Polynomial KeyPolynomial(const Composition& alpha,
                         Chain chain = Chain::kFirstAscent);

}  // namespace schubitope

#endif  // SCHUBITOPE_POLYORACLE_H_
