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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace symlu {

using Complex = std::complex<double>;

/// Element a*A + b*B + c*C of su(2) in the basis A = i sigma_z, B = i sigma_y,
/// C = i sigma_x.
///
/// Norms use the rescaled Hilbert-Schmidt norm |M| = (2 tr(M^dagger M))^{1/2},
/// which evaluates to 2 sqrt(a^2 + b^2 + c^2) in these coordinates. With that
/// norm the bracket is exactly the cross product of the vectors 2(a, b, c).
struct Su2Element {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  static Su2Element A() { return {1.0, 0.0, 0.0}; }
  static Su2Element B() { return {0.0, 1.0, 0.0}; }
  static Su2Element C() { return {0.0, 0.0, 1.0}; }

  /// Vector v with M = i (v . sigma), i.e. (c, b, a).
  Eigen::Vector3d sigma_vector() const { return {c, b, a}; }
  static Su2Element from_sigma_vector(const Eigen::Vector3d& v) {
    return {v(2), v(1), v(0)};
  }

  Eigen::Matrix2cd matrix() const;

  double hs_norm() const;
  bool is_zero(double tol) const { return hs_norm() <= tol; }

  Su2Element& operator+=(const Su2Element& o);
  Su2Element& operator-=(const Su2Element& o);
  Su2Element& operator*=(double s);

  friend Su2Element operator+(Su2Element x, const Su2Element& y) { return x += y; }
  friend Su2Element operator-(Su2Element x, const Su2Element& y) { return x -= y; }
  friend Su2Element operator*(double s, Su2Element x) { return x *= s; }
  friend Su2Element operator-(Su2Element x) { return x *= -1.0; }
};

/// Hilbert-Schmidt inner product matching Su2Element::hs_norm.
double hs_inner(const Su2Element& x, const Su2Element& y);

/// Lie bracket [x, y] = xy - yx.
Su2Element bracket(const Su2Element& x, const Su2Element& y);

/// An element (M_1, ..., M_n) of the local algebra su(2)^{+n}.
class LocalAlgebraElement {
 public:
  LocalAlgebraElement() = default;
  explicit LocalAlgebraElement(std::size_t n) : parts_(n) {}
  explicit LocalAlgebraElement(std::vector<Su2Element> parts)
      : parts_(std::move(parts)) {}

  /// M placed on qubit k (0-based), zero elsewhere.
  static LocalAlgebraElement single(std::size_t n, std::size_t k,
                                    const Su2Element& m);
  /// (m, m, ..., m).
  static LocalAlgebraElement uniform(std::size_t n, const Su2Element& m);

  std::size_t qubits() const { return parts_.size(); }
  const Su2Element& operator[](std::size_t k) const { return parts_[k]; }
  Su2Element& operator[](std::size_t k) { return parts_[k]; }
  const std::vector<Su2Element>& parts() const { return parts_; }

  double hs_norm() const;

  /// Coordinates (a_1, b_1, c_1, a_2, ...) of length 3n.
  Eigen::VectorXd coordinates() const;
  static LocalAlgebraElement from_coordinates(const Eigen::VectorXd& v);

  LocalAlgebraElement& operator+=(const LocalAlgebraElement& o);
  LocalAlgebraElement& operator-=(const LocalAlgebraElement& o);
  LocalAlgebraElement& operator*=(double s);

  friend LocalAlgebraElement operator+(LocalAlgebraElement x,
                                       const LocalAlgebraElement& y) {
    return x += y;
  }
  friend LocalAlgebraElement operator-(LocalAlgebraElement x,
                                       const LocalAlgebraElement& y) {
    return x -= y;
  }
  friend LocalAlgebraElement operator*(double s, LocalAlgebraElement x) {
    return x *= s;
  }

 private:
  std::vector<Su2Element> parts_;
};

double hs_inner(const LocalAlgebraElement& x, const LocalAlgebraElement& y);

/// Componentwise bracket.
LocalAlgebraElement bracket(const LocalAlgebraElement& x,
                            const LocalAlgebraElement& y);

/// SU(2) element with rows (a, -conj(b)) and (b, conj(a)).
struct Unitary2 {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  static Unitary2 identity() { return {}; }
  /// i sigma_x.
  static Unitary2 i_x() { return {Complex(0, 0), Complex(0, 1)}; }

  /// Reads an SU(2) matrix; throws ParamOutOfRange if `m` is not of the
  /// special-unitary form within `tol`.
  static Unitary2 from_matrix(const Eigen::Matrix2cd& m, double tol = 1e-10);

  Eigen::Matrix2cd matrix() const;
  Unitary2 adjoint() const { return {std::conj(a), -b}; }
  double unitarity_defect() const { return std::abs(std::norm(a) + std::norm(b) - 1.0); }

  friend Unitary2 operator*(const Unitary2& x, const Unitary2& y);
};

/// Proper rotation of R^3, acting on column vectors.
class Rotation3 {
 public:
  Rotation3() : m_(Eigen::Matrix3d::Identity()) {}
  explicit Rotation3(const Eigen::Matrix3d& m) : m_(m) {}

  const Eigen::Matrix3d& matrix() const { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }

  double orthogonality_defect() const;
  double determinant() const { return m_.determinant(); }

  friend Rotation3 operator*(const Rotation3& x, const Rotation3& y) {
    return Rotation3(x.m_ * y.m_);
  }

 private:
  Eigen::Matrix3d m_;
};

/// Matrix of sigma_j -> g sigma_j g^dagger in the ordered basis
/// (sigma_x, sigma_y, sigma_z): column j holds the image of sigma_j.
Rotation3 adjoint_rotation(const Unitary2& g);

/// One of the two SU(2) preimages of a proper rotation (the one with
/// nonnegative real part of `a`).
Unitary2 unitary_from_rotation(const Rotation3& r);

/// g M g^dagger.
Su2Element conjugate(const Unitary2& g, const Su2Element& m);

/// exp(t M) computed from the axis-angle closed form.
Unitary2 exp_su2(const Su2Element& m, double t);

/// (g_1, ..., g_n) acting as g_1 (x) ... (x) g_n.
class LocalUnitary {
 public:
  LocalUnitary() = default;
  explicit LocalUnitary(std::vector<Unitary2> factors)
      : factors_(std::move(factors)) {}

  static LocalUnitary identity(std::size_t n) {
    return LocalUnitary(std::vector<Unitary2>(n));
  }
  static LocalUnitary uniform(std::size_t n, const Unitary2& g) {
    return LocalUnitary(std::vector<Unitary2>(n, g));
  }

  std::size_t qubits() const { return factors_.size(); }
  const Unitary2& operator[](std::size_t k) const { return factors_[k]; }
  Unitary2& operator[](std::size_t k) { return factors_[k]; }
  const std::vector<Unitary2>& factors() const { return factors_; }

  LocalUnitary adjoint() const;

  /// Flips the sign of each factor so that its first nonzero entry of (a, b)
  /// has positive real part (or positive imaginary part when purely
  /// imaginary). g and -g act identically by conjugation.
  LocalUnitary sign_normalized() const;

  friend LocalUnitary operator*(const LocalUnitary& x, const LocalUnitary& y);

 private:
  std::vector<Unitary2> factors_;
};

LocalAlgebraElement conjugate(const LocalUnitary& g,
                              const LocalAlgebraElement& m);

}  // namespace symlu
