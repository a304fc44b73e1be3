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

#ifndef SCHUBITOPE_POLYNOMIAL_H_
#define SCHUBITOPE_POLYNOMIAL_H_

#include <map>
#include <string>
#include <vector>

#include "schubitope/fillings.h"
#include "schubitope/numeric.h"

namespace schubitope {

using Exponent = std::vector<int>;

// A polynomial in x_1..x_n with integer coefficients, stored sparsely by
// exponent vector in lexicographic order. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial Constant(int n, const BigInt& c);
  static Polynomial Monomial(const Exponent& e, const BigInt& c = 1);

  int n() const { return n_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  // Coefficient of x^e (zero when absent).
  BigInt coefficient(const Exponent& e) const;

  // Adds c x^e, dropping the term if it cancels.
  void AddTerm(const Exponent& e, const BigInt& c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  // x_i f.
  Polynomial MultiplyByVariable(int i) const;
  // s_i f: exchanges x_i and x_{i+1}.
  Polynomial SwapVariables(int i) const;

  // "x1^3*x2 + 2*x1*x3", terms in decreasing lexicographic order; "0" for
  // the zero polynomial.
  std::string ToString() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void CheckExponent(const Exponent& e) const;
  void CheckIndex(int i) const;

  int n_ = 0;
  std::map<Exponent, BigInt> terms_;
};

// (f - s_i f) / (x_i - x_{i+1}). Throws InvariantError if the division is
// not exact, which would indicate an arithmetic bug.
Polynomial DividedDifference(const Polynomial& f, int i);

// pi_i f = DividedDifference(x_i f, i).
Polynomial Demazure(const Polynomial& f, int i);

// The support of f as a sorted set of exponent vectors.
std::vector<LatticePoint> NewtonExponents(const Polynomial& f);

}  // namespace schubitope

#endif  // SCHUBITOPE_POLYNOMIAL_H_
