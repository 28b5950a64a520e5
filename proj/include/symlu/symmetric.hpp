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
#include <cstddef>
#include <cstdint>
#include <vector>

#include "symlu/pauli.hpp"
#include "symlu/polynomial.hpp"
#include "symlu/su2.hpp"
#include "symlu/tolerances.hpp"

namespace symlu {

/// Symbol counts (n0, n1, n2, n3) of a Pauli index; the permutation orbit
/// of an index is determined by them.
using OrbitSignature = std::array<int, 4>;

/// Number of distinct arrangements n! / (n0! n1! n2! n3!).
std::uint64_t orbit_size(const OrbitSignature& sig);

/// Packed indices of every arrangement of the signature, in increasing order.
std::vector<std::uint64_t> orbit_members(const OrbitSignature& sig);

/// (1/n!) sum_pi P_pi rho P_pi^{-1}, computed as orbit averages.
PauliOperator symmetrize(const PauliOperator& rho);

/// True when every permutation orbit carries equal coefficients within tol.num.
bool is_symmetric(const PauliOperator& rho, const Tolerances& tol = {});

/// Maps (1/2^n) Sym(sigma_0^n0 sigma_1^n1 sigma_2^n2 sigma_3^n3) to
/// x^n1 y^n2 z^n3. Throws NotSymmetric when rho is not permutation invariant.
Polynomial3 f_n(const PauliOperator& rho, const Tolerances& tol = {});

/// Inverse of f_n on polynomials of degree <= n. Throws DegreeTooHigh.
PauliOperator f_n_inv(const Polynomial3& f, std::size_t n);

Polynomial3 poly_product(const Polynomial3& f, const Polynomial3& g);

/// Adjoint action of g on (i sigma_x, i sigma_y, i sigma_z), matching the
/// polynomial variables (x, y, z).
Rotation3 phi(const Unitary2& g);

/// R_g(f)(x, y, z) = f((x, y, z) phi(g)), with (x, y, z) a row vector.
Polynomial3 r_g(const Unitary2& g, const Polynomial3& f);

/// Dimensions 2l + 1 of the SO(3) irreducibles in degree-p homogeneous
/// polynomials: l = p, p - 2, ..., p mod 2.
std::vector<int> homogeneous_irrep_dims(int p);

/// Dimension of the rotation-about-z invariants in degree p.
int trivial_u1_dim(int p);

}  // namespace symlu
