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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "symlu/su2.hpp"
#include "symlu/tolerances.hpp"

namespace symlu {

/// Hard cap imposed by the 2-bit-per-qubit packing into 64 bits.
inline constexpr std::size_t kMaxPauliQubits = 32;

/// Multi-index i_1 i_2 ... i_n over {0, 1, 2, 3} (identity, x, y, z).
///
/// Qubit 0 is the leftmost tensor factor and occupies the two most
/// significant bits, so packed integers sort in the same order as the
/// index strings.
class PauliIndex {
 public:
  PauliIndex(std::size_t n, std::uint64_t packed);

  static PauliIndex identity(std::size_t n) { return PauliIndex(n, 0); }
  /// Accepts the letters i/x/y/z (either case) or the digits 0-3.
  static PauliIndex parse(std::string_view text);

  std::size_t qubits() const { return n_; }
  std::uint64_t packed() const { return packed_; }

  int operator[](std::size_t k) const {
    return static_cast<int>((packed_ >> shift(k)) & 3u);
  }
  PauliIndex with(std::size_t k, int symbol) const;

  /// Number of occurrences of each symbol 0..3.
  std::array<int, 4> counts() const;
  /// Lower-case letters over {i, x, y, z}.
  std::string str() const;

  auto operator<=>(const PauliIndex&) const = default;

 private:
  unsigned shift(std::size_t k) const { return static_cast<unsigned>(2 * (n_ - 1 - k)); }

  std::size_t n_;
  std::uint64_t packed_;
};

/// Hermitian operator sum_I s_I sigma_I with real coefficients, stored
/// sparsely by packed index.
class PauliOperator {
 public:
  using Terms = std::map<std::uint64_t, double>;

  explicit PauliOperator(std::size_t n);

  /// s * identity.
  static PauliOperator identity(std::size_t n, double s = 1.0);

  std::size_t qubits() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  double coeff(const PauliIndex& index) const;
  double coeff(std::string_view index) const { return coeff(PauliIndex::parse(index)); }
  void add(const PauliIndex& index, double s);
  void add(std::string_view index, double s) { add(PauliIndex::parse(index), s); }
  void add_packed(std::uint64_t packed, double s);

  /// tr(rho) = 2^n s_{00...0}.
  double trace() const;
  double max_abs() const;
  double norm2() const;

  /// Copy without terms of magnitude <= tol.
  PauliOperator pruned(double tol) const;

  PauliOperator& operator+=(const PauliOperator& o);
  PauliOperator& operator-=(const PauliOperator& o);
  PauliOperator& operator*=(double s);

  friend PauliOperator operator+(PauliOperator x, const PauliOperator& y) { return x += y; }
  friend PauliOperator operator-(PauliOperator x, const PauliOperator& y) { return x -= y; }
  friend PauliOperator operator*(double s, PauliOperator x) { return x *= s; }

 private:
  void check_compatible(const PauliOperator& o) const;

  std::size_t n_;
  Terms terms_;
};

/// max_I |s_I - s'_I|.
double max_abs_diff(const PauliOperator& x, const PauliOperator& y);

/// x (x) y on n + m qubits, x occupying the leftmost factors.
PauliOperator tensor(const PauliOperator& x, const PauliOperator& y);

using DenseMatrix = Eigen::MatrixXcd;

/// Computational-basis matrix over bit strings; qubit 0 is the most
/// significant bit of the row/column index.
class DenseHermitian {
 public:
  DenseHermitian(std::size_t n, DenseMatrix m);

  std::size_t qubits() const { return n_; }
  const DenseMatrix& matrix() const { return m_; }
  double hermiticity_defect() const;

 private:
  std::size_t n_;
  DenseMatrix m_;
};

DenseHermitian pauli_to_dense(const PauliOperator& p);

/// s_I = tr(sigma_I D) / 2^n. Throws HermiticityViolation when D departs
/// from Hermitian by more than tol.herm; drops coefficients below tol.sparse.
PauliOperator dense_to_pauli(const DenseHermitian& d, const Tolerances& tol = {});

/// <row| P |col> for computational basis strings.
Complex matrix_element(const PauliOperator& p, std::uint64_t row, std::uint64_t col);

/// One entry of the single-qubit bracket table: [E, sigma_j] = coeff * sigma_symbol.
struct BracketTerm {
  int symbol;
  double coeff;
};

/// generator: 0 -> A, 1 -> B, 2 -> C. symbol: 1..3. A zero bracket is
/// reported with coeff 0.
BracketTerm single_qubit_bracket(int generator, int symbol);

/// [M, rho], expanded termwise over tensor factors.
PauliOperator ad_action(const LocalAlgebraElement& m, const PauliOperator& rho);

/// g rho g^dagger, applied one tensor factor at a time.
PauliOperator conjugate(const LocalUnitary& g, const PauliOperator& rho,
                        const Tolerances& tol = {});

/// Entries of [sum_k a_k A^(k), rho] from the closed-form phase rule.
DenseMatrix zeta_coeffs(std::span<const double> a, const DenseHermitian& rho);

/// Entries of [sum_k c_k C^(k), rho] from the closed-form bit-flip rule.
DenseMatrix eta_coeffs(std::span<const double> c, const DenseHermitian& rho);

}  // namespace symlu
