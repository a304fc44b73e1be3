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

#include "schubitope/polynomial.h"

#include "schubitope/errors.h"

namespace schubitope {

Polynomial Polynomial::Constant(int n, const BigInt& c) {
  Polynomial p(n);
  p.AddTerm(Exponent(n, 0), c);
  return p;
}

Polynomial Polynomial::Monomial(const Exponent& e, const BigInt& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.AddTerm(e, c);
  return p;
}

void Polynomial::CheckExponent(const Exponent& e) const {
  if (static_cast<int>(e.size()) != n_) {
    throw DimensionError("polynomial: exponent of length " +
                         std::to_string(e.size()) + " in " +
                         std::to_string(n_) + " variables");
  }
  for (int a : e) {
    if (a < 0) throw DomainError("polynomial: negative exponent");
  }
}

void Polynomial::CheckIndex(int i) const {
  if (i < 1 || i >= n_) {
    throw DomainError("polynomial: operator index " + std::to_string(i) +
                      " outside [1, " + std::to_string(n_ - 1) + "]");
  }
}

BigInt Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::AddTerm(const Exponent& e, const BigInt& c) {
  CheckExponent(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.n_ != n_) throw DimensionError("polynomial: variable counts differ");
  for (const auto& [e, c] : other.terms_) AddTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.n_ != n_) throw DimensionError("polynomial: variable counts differ");
  for (const auto& [e, c] : other.terms_) AddTerm(e, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.n_ != n_) throw DimensionError("polynomial: variable counts differ");
  Polynomial out(n_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      Exponent e(n_);
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      out.AddTerm(e, c1 * c2);
    }
  }
  return out;
}

Polynomial Polynomial::MultiplyByVariable(int i) const {
  if (i < 1 || i > n_) {
    throw DomainError("polynomial: variable x" + std::to_string(i) +
                      " outside x1..x" + std::to_string(n_));
  }
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent shifted = e;
    ++shifted[i - 1];
    out.terms_.emplace(std::move(shifted), c);
  }
  return out;
}

Polynomial Polynomial::SwapVariables(int i) const {
  CheckIndex(i);
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent swapped = e;
    std::swap(swapped[i - 1], swapped[i]);
    out.terms_.emplace(std::move(swapped), c);
  }
  return out;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt magnitude = c;
    if (c < 0) {
      out += out.empty() ? "-" : " - ";
      magnitude = -c;
    } else if (!out.empty()) {
      out += " + ";
    }
    std::string monomial;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += "x" + std::to_string(i + 1);
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += magnitude.str() + "*" + monomial;
    }
  }
  return out;
}

Polynomial DividedDifference(const Polynomial& f, int i) {
  const Polynomial g = f - f.SwapVariables(i);
  // g is antisymmetric under s_i: the term at (p, q) in slots (i, i+1) pairs
  // with minus the term at (q, p), and
  //   x_i^p x_{i+1}^q - x_i^q x_{i+1}^p
  //     = (x_i - x_{i+1}) x_i^q x_{i+1}^q sum_{k=0}^{p-q-1} x_i^{p-q-1-k} x_{i+1}^k
  // for p > q.
  Polynomial quotient(f.n());
  for (const auto& [e, c] : g.terms()) {
    const int p = e[i - 1];
    const int q = e[i];
    Exponent mirror = e;
    std::swap(mirror[i - 1], mirror[i]);
    if (p == q || g.coefficient(mirror) != -c) {
      throw InvariantError("divided difference: f - s_i f is not antisymmetric");
    }
    if (p < q) continue;
    for (int k = 0; k < p - q; ++k) {
      Exponent term = e;
      term[i - 1] = p - 1 - k;
      term[i] = q + k;
      quotient.AddTerm(term, c);
    }
  }
  // Remainder check: quotient * (x_i - x_{i+1}) must give back g.
  const Polynomial back =
      quotient.MultiplyByVariable(i) - quotient.MultiplyByVariable(i + 1);
  if (back != g) {
    throw InvariantError("divided difference: division left a remainder");
  }
  return quotient;
}

Polynomial Demazure(const Polynomial& f, int i) {
  return DividedDifference(f.MultiplyByVariable(i), i);
}

std::vector<LatticePoint> NewtonExponents(const Polynomial& f) {
  std::vector<LatticePoint> out;
  out.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) out.push_back(e);
  return out;
}

}  // namespace schubitope
