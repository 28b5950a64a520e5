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

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "symlu/error.hpp"
#include "symlu/states.hpp"
#include "symlu/symmetric.hpp"

namespace symlu {
namespace {

using testing::Rng;

PauliOperator random_symmetric(std::size_t n, Rng& rng) {
  return symmetrize(testing::random_pauli(n, 4 * n, rng));
}

TEST(Symmetrize, TwoElementOrbit) {
  PauliOperator p(2);
  p.add("zi", 1.0);
  const PauliOperator s = symmetrize(p);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.coeff("zi"), 0.5);
  EXPECT_DOUBLE_EQ(s.coeff("iz"), 0.5);
}

TEST(Symmetrize, ThreeDistinctSymbolsMatchDensePermutationAverage) {
  PauliOperator p(3);
  p.add("xyi", 1.0);
  const PauliOperator s = symmetrize(p);
  EXPECT_EQ(s.size(), 6u);
  for (const auto& [packed, c] : s.terms()) EXPECT_NEAR(c, 1.0 / 6.0, 1e-15);
  const Eigen::MatrixXcd dense = testing::dense_symmetrize(testing::dense_oracle(p), 3);
  EXPECT_LT(max_abs_diff(testing::pauli_oracle(dense, 3), s), 1e-14);
}

TEST(Symmetrize, IdempotentTracePreservingAndDenseConsistent) {
  Rng rng(51);
  for (std::size_t n = 1; n <= 4; ++n) {
    const PauliOperator p = testing::random_pauli(n, 10, rng);
    const PauliOperator s = symmetrize(p);
    EXPECT_LT(max_abs_diff(symmetrize(s), s), 1e-15);
    EXPECT_NEAR(s.trace(), p.trace(), 1e-12);
    EXPECT_TRUE(is_symmetric(s));
    const Eigen::MatrixXcd dense = testing::dense_symmetrize(testing::dense_oracle(p), n);
    EXPECT_LT(max_abs_diff(testing::pauli_oracle(dense, n), s), 1e-12);
  }
}

TEST(IsSymmetric, DetectsBrokenOrbit) {
  PauliOperator p(3);
  p.add("zii", 0.1);
  p.add("izi", 0.1);
  EXPECT_FALSE(is_symmetric(p));
  p.add("iiz", 0.1);
  EXPECT_TRUE(is_symmetric(p));
  p.add("iiz", 1e-6);
  EXPECT_FALSE(is_symmetric(p));
}

TEST(OrbitHelpers, SizesAndMembers) {
  EXPECT_EQ(orbit_size({1, 1, 1, 0}), 6u);
  EXPECT_EQ(orbit_size({2, 0, 0, 2}), 6u);
  EXPECT_EQ(orbit_members({2, 0, 0, 2}).size(), 6u);
  EXPECT_EQ(orbit_size({0, 0, 0, 5}), 1u);
}

TEST(FN, CompletelyMixedIsConstantOne) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Polynomial3 f = f_n(completely_mixed(n));
    EXPECT_LT(max_abs_diff(f, Polynomial3::constant(1.0)), 1e-15) << n;
  }
}

TEST(FN, SwapSumMapsToFourRadiusSquared) {
  PauliOperator u(2);
  u.add("xx", 1.0);
  u.add("yy", 1.0);
  u.add("zz", 1.0);
  EXPECT_LT(max_abs_diff(f_n(u), 4.0 * Polynomial3::radius_squared()), 1e-15);
}

TEST(FN, SingletPolynomial) {
  // Pinned: Sym basis element (1/4) sigma_i sigma_i maps to x_i^2, so the
  // singlet (Id - XX - YY - ZZ)/4 maps to 1 - (x^2 + y^2 + z^2).
  const Polynomial3 f = f_n(singlet());
  EXPECT_LT(max_abs_diff(f, Polynomial3::constant(1.0) - Polynomial3::radius_squared()), 1e-14);
  // Dense cross-check of the singlet itself.
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  const Eigen::MatrixXcd proj = psi * psi.adjoint();
  EXPECT_LT(max_abs_diff(testing::pauli_oracle(proj, 2), singlet()), 1e-15);
}

TEST(FN, Linear) {
  Rng rng(52);
  const PauliOperator a = random_symmetric(3, rng);
  const PauliOperator b = random_symmetric(3, rng);
  EXPECT_LT(max_abs_diff(f_n(0.3 * a + 0.7 * b), 0.3 * f_n(a) + 0.7 * f_n(b)), 1e-14);
}

TEST(FN, RejectsAsymmetricInput) {
  PauliOperator p(2);
  p.add("zi", 1.0);
  try {
    f_n(p);
    FAIL() << "expected NotSymmetric";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(FNInverse, SmallCases) {
  EXPECT_LT(max_abs_diff(f_n_inv(Polynomial3::constant(1.0), 3), completely_mixed(3)), 1e-15);
  PauliOperator half_z(1);
  half_z.add("z", 0.5);
  EXPECT_LT(max_abs_diff(f_n_inv(Polynomial3::z(), 1), half_z), 1e-15);
}

TEST(FNInverse, RoundTrips) {
  Rng rng(53);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Polynomial3 f = testing::random_polynomial(static_cast<int>(n), rng);
    const PauliOperator rho = f_n_inv(f, n);
    EXPECT_TRUE(is_symmetric(rho));
    EXPECT_LT(max_abs_diff(f_n(rho), f), 1e-12) << n;
    const PauliOperator s = random_symmetric(n, rng);
    EXPECT_LT(max_abs_diff(f_n_inv(f_n(s), n), s), 1e-12) << n;
  }
}

TEST(FNInverse, DegreeTooHigh) {
  try {
    f_n_inv(Polynomial3::z().pow(3), 2);
    FAIL() << "expected DegreeTooHigh";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooHigh);
  }
}

TEST(PolyProduct, UnitAndSymmetrizedTensor) {
  Rng rng(54);
  const Polynomial3 f = testing::random_polynomial(2, rng);
  EXPECT_LT(max_abs_diff(poly_product(f, Polynomial3::constant(1.0)), f), 1e-16);

  PauliOperator half_z(1);
  half_z.add("z", 0.5);
  const Polynomial3 zz = f_n(symmetrize(tensor(half_z, half_z)));
  EXPECT_LT(max_abs_diff(zz, poly_product(Polynomial3::z(), Polynomial3::z())), 1e-15);

  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 2));
    const PauliOperator r1 = random_symmetric(n, rng);
    const PauliOperator r2 = random_symmetric(m, rng);
    EXPECT_LT(max_abs_diff(f_n(symmetrize(tensor(r1, r2))), poly_product(f_n(r1), f_n(r2))), 1e-9);
  }
}

TEST(Phi, Examples) {
  EXPECT_LT((phi(Unitary2::identity()).matrix() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(),
            1e-15);
  const Rotation3 r = phi(exp_su2(Su2Element::A(), 0.4));
  EXPECT_NEAR(r(2, 2), 1.0, 1e-15);
  EXPECT_NEAR(r(0, 2), 0.0, 1e-15);
  EXPECT_NEAR(r(2, 0), 0.0, 1e-15);
  const Rotation3 ix = phi(Unitary2::i_x());
  EXPECT_LT((ix.matrix() - Eigen::Vector3d(1, -1, -1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(Phi, HomomorphismOrthogonalDetOne) {
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const Unitary2 g = testing::random_unitary(rng);
    const Unitary2 h = testing::random_unitary(rng);
    EXPECT_LT((phi(g * h).matrix() - phi(g).matrix() * phi(h).matrix()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(phi(g).orthogonality_defect(), 1e-12);
    EXPECT_NEAR(phi(g).determinant(), 1.0, 1e-12);
  }
}

TEST(Rg, IdentityAndRotationInvariant) {
  Rng rng(56);
  const Polynomial3 f = testing::random_polynomial(3, rng);
  EXPECT_LT(max_abs_diff(r_g(Unitary2::identity(), f), f), 1e-15);
  const Polynomial3 r2 = Polynomial3::radius_squared();
  for (int trial = 0; trial < 20; ++trial) {
    const Unitary2 g = testing::random_unitary(rng);
    EXPECT_LT(max_abs_diff(r_g(g, r2), r2), 1e-12);
    EXPECT_LT(max_abs_diff(r_g(g, r2.pow(2) - 3.0 * r2), r2.pow(2) - 3.0 * r2), 1e-12);
  }
}

TEST(Rg, CompositionOrder) {
  // R_{gh} = R_g o R_h, verified on random inputs.
  Rng rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    const Unitary2 g = testing::random_unitary(rng);
    const Unitary2 h = testing::random_unitary(rng);
    const Polynomial3 f = testing::random_polynomial(3, rng);
    EXPECT_LT(max_abs_diff(r_g(g * h, f), r_g(g, r_g(h, f))), 1e-11);
  }
}

TEST(Rg, CommutingDiagram) {
  Rng rng(58);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Unitary2 g = testing::random_unitary(rng);
      const PauliOperator rho = random_symmetric(n, rng);
      const Polynomial3 lhs = f_n(conjugate(LocalUnitary::uniform(n, g), rho));
      EXPECT_LT(max_abs_diff(lhs, r_g(g, f_n(rho))), 1e-9);
    }
  }
}

TEST(Rg, ZAxisInvariantSubspace) {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const Unitary2 g = exp_su2(Su2Element::A(), rng.uniform(-3, 3));
    Polynomial3 f;
    for (int r = 0; r <= 3; ++r) {
      for (int s = 0; r + 2 * s <= 4; ++s) {
        f += rng.uniform(-1, 1) * (Polynomial3::z().pow(r) * Polynomial3::planar_radius_squared().pow(s));
      }
    }
    EXPECT_LT(max_abs_diff(r_g(g, f), f), 1e-12);
  }
}

TEST(IrrepDims, Examples) {
  EXPECT_EQ(homogeneous_irrep_dims(0), std::vector<int>({1}));
  EXPECT_EQ(homogeneous_irrep_dims(2), std::vector<int>({5, 1}));
  EXPECT_EQ(homogeneous_irrep_dims(5), std::vector<int>({11, 7, 3}));
  for (int p = 0; p <= 10; ++p) {
    const auto dims = homogeneous_irrep_dims(p);
    int monomials = 0;
    for (int a = 0; a <= p; ++a) monomials += p - a + 1;
    EXPECT_EQ(std::accumulate(dims.begin(), dims.end(), 0), monomials);
  }
}

TEST(TrivialU1Dim, Examples) {
  EXPECT_EQ(trivial_u1_dim(0), 1);
  EXPECT_EQ(trivial_u1_dim(4), 3);
  EXPECT_EQ(trivial_u1_dim(7), 4);
  for (int p = 0; p <= 10; ++p) {
    int pairs = 0;
    for (int r = 0; r <= p; ++r) {
      if ((p - r) % 2 == 0) ++pairs;
    }
    EXPECT_EQ(trivial_u1_dim(p), pairs);
  }
}

}  // namespace
}  // namespace symlu
