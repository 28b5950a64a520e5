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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "symlu/pauli.hpp"
#include "symlu/su2.hpp"
#include "symlu/tolerances.hpp"

namespace symlu {

inline constexpr std::size_t kMaxStabilizerQubits = 10;

/// A subspace of su(2)^n given by a basis that is orthonormal under the sum of
/// the per-qubit rescaled Hilbert-Schmidt inner products. In coordinates, each
/// element has Euclidean norm 1/2.
struct AlgebraBasis {
  std::size_t n = 0;
  std::vector<LocalAlgebraElement> elements;
  /// Largest |ad_M(rho)| over the elements when produced by stabilizer_basis.
  double residual = 0.0;

  std::size_t dim() const { return elements.size(); }

  /// 3n x dim matrix of coordinates.
  Eigen::MatrixXd coordinates() const;

  /// Orthonormalizes the span of `spanning` (rank decided with tol.rank).
  static AlgebraBasis from_span(std::size_t n, const std::vector<LocalAlgebraElement>& spanning,
                                const Tolerances& tol = {});
};

/// K_rho = {M in su(2)^n : [M, rho] = 0}. Throws ResourceLimit for n > 10 and
/// IllConditioned when the singular-value gap at the rank threshold is too small.
AlgebraBasis stabilizer_basis(const PauliOperator& rho, const Tolerances& tol = {});

/// Numerical rank of the i-th parts of K: 0, 1 or 3. Throws Rank2Anomaly.
int projection_dim(const AlgebraBasis& k, std::size_t qubit, const Tolerances& tol = {});

std::vector<int> projection_dims(const AlgebraBasis& k, const Tolerances& tol = {});

/// Number of parts with norm above tol.sparse.
std::size_t weight(const LocalAlgebraElement& m, const Tolerances& tol = {});

/// Largest residual of a bracket of two basis elements after projection onto
/// the span.
double closure_residual(const AlgebraBasis& k);

struct Block {
  std::vector<std::size_t> qubits;
  LocalAlgebraElement u;
  LocalAlgebraElement v;
  LocalAlgebraElement w;
};

struct BlockDecomposition {
  std::size_t n = 0;
  std::vector<Block> blocks;
  std::vector<std::size_t> s_qubits;
  /// Orthonormal basis of the abelian summand.
  std::vector<LocalAlgebraElement> s_basis;
  std::vector<std::size_t> r_qubits;
  /// Carries each block triple to (A, B, C)/2 on its qubits and each S
  /// direction onto the A axis.
  LocalUnitary aligner;
};

/// Splits a bracket-closed K into su(2) blocks, an abelian part and idle
/// qubits. Throws NotClosed.
BlockDecomposition decompose_algebra(const AlgebraBasis& k, const Tolerances& tol = {});

struct BlockRelationReport {
  struct Entry {
    double uv_w = 0.0;
    double vw_u = 0.0;
    double wu_v = 0.0;
    /// max |<X_b, Y_b> - delta| over qubits b and X, Y in {U, V, W}.
    double orthonormality = 0.0;
    /// max |g X_b g^+ - X_std| for the aligned triple.
    double alignment = 0.0;
  };
  std::vector<Entry> blocks;
  bool ok = true;
};

BlockRelationReport verify_block_relations(const BlockDecomposition& d,
                                           const Tolerances& tol = {});

/// A unitary h with h m h^+ along `target` (same sigma-vector direction).
/// When m points opposite to target the rotation is taken about `fallback_axis`.
Unitary2 rotation_to(const Eigen::Vector3d& from, const Eigen::Vector3d& to,
                     const Eigen::Vector3d& fallback_axis);

}  // namespace symlu
