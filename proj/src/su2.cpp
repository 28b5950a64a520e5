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

#include "symlu/su2.hpp"

#include <cmath>

#include <Eigen/Geometry>

#include "symlu/error.hpp"

namespace symlu {

namespace {

const Complex kI(0.0, 1.0);

Eigen::Matrix2cd pauli_matrix(int j) {
  Eigen::Matrix2cd m;
  switch (j) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: m.setIdentity(); break;
  }
  return m;
}

}  // namespace

Eigen::Matrix2cd Su2Element::matrix() const {
  Eigen::Matrix2cd m;
  m << Complex(a, 0), Complex(c, -b), Complex(c, b), Complex(-a, 0);
  return kI * m;
}

double Su2Element::hs_norm() const { return 2.0 * std::sqrt(a * a + b * b + c * c); }

Su2Element& Su2Element::operator+=(const Su2Element& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  return *this;
}

Su2Element& Su2Element::operator-=(const Su2Element& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  return *this;
}

Su2Element& Su2Element::operator*=(double s) {
  a *= s;
  b *= s;
  c *= s;
  return *this;
}

double hs_inner(const Su2Element& x, const Su2Element& y) {
  return 4.0 * (x.a * y.a + x.b * y.b + x.c * y.c);
}

// [A, B] = 2C, [B, C] = 2A, [C, A] = 2B.
Su2Element bracket(const Su2Element& x, const Su2Element& y) {
  return {2.0 * (x.b * y.c - x.c * y.b), 2.0 * (x.c * y.a - x.a * y.c),
          2.0 * (x.a * y.b - x.b * y.a)};
}

LocalAlgebraElement LocalAlgebraElement::single(std::size_t n, std::size_t k,
                                                const Su2Element& m) {
  LocalAlgebraElement e(n);
  e[k] = m;
  return e;
}

LocalAlgebraElement LocalAlgebraElement::uniform(std::size_t n,
                                                 const Su2Element& m) {
  return LocalAlgebraElement(std::vector<Su2Element>(n, m));
}

double LocalAlgebraElement::hs_norm() const { return std::sqrt(hs_inner(*this, *this)); }

Eigen::VectorXd LocalAlgebraElement::coordinates() const {
  Eigen::VectorXd v(3 * parts_.size());
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    v(3 * k) = parts_[k].a;
    v(3 * k + 1) = parts_[k].b;
    v(3 * k + 2) = parts_[k].c;
  }
  return v;
}

LocalAlgebraElement LocalAlgebraElement::from_coordinates(const Eigen::VectorXd& v) {
  LocalAlgebraElement e(static_cast<std::size_t>(v.size() / 3));
  for (std::size_t k = 0; k < e.qubits(); ++k) {
    e[k] = {v(3 * k), v(3 * k + 1), v(3 * k + 2)};
  }
  return e;
}

LocalAlgebraElement& LocalAlgebraElement::operator+=(const LocalAlgebraElement& o) {
  if (o.qubits() != qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "local algebra sum");
  }
  for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] += o.parts_[k];
  return *this;
}

LocalAlgebraElement& LocalAlgebraElement::operator-=(const LocalAlgebraElement& o) {
  if (o.qubits() != qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "local algebra difference");
  }
  for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] -= o.parts_[k];
  return *this;
}

LocalAlgebraElement& LocalAlgebraElement::operator*=(double s) {
  for (auto& p : parts_) p *= s;
  return *this;
}

double hs_inner(const LocalAlgebraElement& x, const LocalAlgebraElement& y) {
  if (x.qubits() != y.qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "local algebra inner product");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < x.qubits(); ++k) s += hs_inner(x[k], y[k]);
  return s;
}

LocalAlgebraElement bracket(const LocalAlgebraElement& x,
                            const LocalAlgebraElement& y) {
  if (x.qubits() != y.qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "local algebra bracket");
  }
  LocalAlgebraElement r(x.qubits());
  for (std::size_t k = 0; k < x.qubits(); ++k) r[k] = bracket(x[k], y[k]);
  return r;
}

Unitary2 Unitary2::from_matrix(const Eigen::Matrix2cd& m, double tol) {
  Unitary2 g{m(0, 0), m(1, 0)};
  const double defect = (m - g.matrix()).cwiseAbs().maxCoeff();
  if (defect > tol || g.unitarity_defect() > tol) {
    throw Error(ErrorKind::ParamOutOfRange, "matrix is not in SU(2)");
  }
  return g;
}

Eigen::Matrix2cd Unitary2::matrix() const {
  Eigen::Matrix2cd m;
  m << a, -std::conj(b), b, std::conj(a);
  return m;
}

Unitary2 operator*(const Unitary2& x, const Unitary2& y) {
  // First column of the product determines the SU(2) element.
  return {x.a * y.a - std::conj(x.b) * y.b, x.b * y.a + std::conj(x.a) * y.b};
}

double Rotation3::orthogonality_defect() const {
  return (m_.transpose() * m_ - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

Rotation3 adjoint_rotation(const Unitary2& g) {
  const Eigen::Matrix2cd u = g.matrix();
  const Eigen::Matrix2cd ud = u.adjoint();
  Eigen::Matrix3d r;
  for (int j = 1; j <= 3; ++j) {
    const Eigen::Matrix2cd image = u * pauli_matrix(j) * ud;
    for (int k = 1; k <= 3; ++k) {
      r(k - 1, j - 1) = 0.5 * (pauli_matrix(k) * image).trace().real();
    }
  }
  return Rotation3(r);
}

Unitary2 unitary_from_rotation(const Rotation3& r) {
  const Eigen::AngleAxisd aa(r.matrix());
  // A rotation by phi about n is exp(-i phi/2 n.sigma).
  Unitary2 g = exp_su2(Su2Element::from_sigma_vector(-aa.axis()), 0.5 * aa.angle());
  if (g.a.real() < 0) g = {-g.a, -g.b};
  return g;
}

Su2Element conjugate(const Unitary2& g, const Su2Element& m) {
  return Su2Element::from_sigma_vector(adjoint_rotation(g).matrix() * m.sigma_vector());
}

Unitary2 exp_su2(const Su2Element& m, double t) {
  const Eigen::Vector3d v = m.sigma_vector();
  const double len = v.norm();
  if (len == 0.0 || t == 0.0) return Unitary2::identity();
  const Eigen::Vector3d axis = v / len;
  const double theta = t * len;
  const double s = std::sin(theta);
  return {Complex(std::cos(theta), s * axis(2)), Complex(-s * axis(1), s * axis(0))};
}

LocalUnitary LocalUnitary::adjoint() const {
  std::vector<Unitary2> f;
  f.reserve(factors_.size());
  for (const auto& g : factors_) f.push_back(g.adjoint());
  return LocalUnitary(std::move(f));
}

LocalUnitary LocalUnitary::sign_normalized() const {
  constexpr double kZero = 1e-12;
  std::vector<Unitary2> f = factors_;
  for (auto& g : f) {
    for (double x : {g.a.real(), g.a.imag(), g.b.real(), g.b.imag()}) {
      if (std::abs(x) > kZero) {
        if (x < 0) {
          g.a = -g.a;
          g.b = -g.b;
        }
        break;
      }
    }
  }
  return LocalUnitary(std::move(f));
}

LocalUnitary operator*(const LocalUnitary& x, const LocalUnitary& y) {
  if (x.qubits() != y.qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "local unitary product");
  }
  std::vector<Unitary2> f;
  f.reserve(x.qubits());
  for (std::size_t k = 0; k < x.qubits(); ++k) f.push_back(x[k] * y[k]);
  return LocalUnitary(std::move(f));
}

LocalAlgebraElement conjugate(const LocalUnitary& g, const LocalAlgebraElement& m) {
  if (g.qubits() != m.qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "conjugating algebra element");
  }
  LocalAlgebraElement r(m.qubits());
  for (std::size_t k = 0; k < m.qubits(); ++k) r[k] = conjugate(g[k], m[k]);
  return r;
}

}  // namespace symlu
