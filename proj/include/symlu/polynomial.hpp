// Copyright 2026 The symlu Authors
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

#pragma once

#include <array>
#include <map>
#include <string>

namespace symlu {

/// Exponents (n1, n2, n3) of x^n1 y^n2 z^n3.
using Exponents = std::array<int, 3>;

/// Real polynomial in x, y, z with sparse monomial storage.
class Polynomial3 {
 public:
  using Terms = std::map<Exponents, double>;

  Polynomial3() = default;

  static Polynomial3 constant(double c);
  static Polynomial3 monomial(const Exponents& e, double c = 1.0);
  static Polynomial3 x() { return monomial({1, 0, 0}); }
  static Polynomial3 y() { return monomial({0, 1, 0}); }
  static Polynomial3 z() { return monomial({0, 0, 1}); }
  /// x^2 + y^2 + z^2.
  static Polynomial3 radius_squared();
  /// x^2 + y^2.
  static Polynomial3 planar_radius_squared();

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  double coeff(const Exponents& e) const;
  void add(const Exponents& e, double c);

  /// Highest total degree with a nonzero coefficient; -1 for the zero
  /// polynomial.
  int degree() const;
  double max_abs() const;
  Polynomial3 pruned(double tol) const;
  Polynomial3 pow(int k) const;

  std::string str() const;

  Polynomial3& operator+=(const Polynomial3& o);
  Polynomial3& operator-=(const Polynomial3& o);
  Polynomial3& operator*=(double s);

  friend Polynomial3 operator+(Polynomial3 p, const Polynomial3& q) { return p += q; }
  friend Polynomial3 operator-(Polynomial3 p, const Polynomial3& q) { return p -= q; }
  friend Polynomial3 operator*(double s, Polynomial3 p) { return p *= s; }
  friend Polynomial3 operator*(const Polynomial3& p, const Polynomial3& q);

 private:
  Terms terms_;
};

/// max over monomials of |p - q|.
double max_abs_diff(const Polynomial3& p, const Polynomial3& q);

}  // namespace symlu
