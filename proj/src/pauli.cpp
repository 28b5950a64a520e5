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

#include "symlu/pauli.hpp"

#include <cmath>

#include "symlu/error.hpp"

namespace symlu {

namespace {

const Complex kI(0.0, 1.0);

// Rows: generator A, B, C. Columns: sigma_x, sigma_y, sigma_z.
// Derived from the 2x2 commutators [i sigma_m, sigma_v] = -2 (m x v) . sigma;
// the unit test single_qubit_bracket_matches_matrices regenerates it.
constexpr BracketTerm kBracket[3][3] = {
    {{2, -2.0}, {1, 2.0}, {3, 0.0}},   // A = i sigma_z
    {{3, 2.0}, {2, 0.0}, {1, -2.0}},   // B = i sigma_y
    {{1, 0.0}, {3, -2.0}, {2, 2.0}},   // C = i sigma_x
};

// <r| sigma_j |c> for single bits.
Complex pauli_entry(int j, unsigned r, unsigned c) {
  switch (j) {
    case 0: return r == c ? 1.0 : 0.0;
    case 1: return r != c ? 1.0 : 0.0;
    case 2: return r == c ? Complex(0.0) : (r == 0 ? -kI : kI);
    default: return r != c ? 0.0 : (r == 0 ? 1.0 : -1.0);
  }
}

unsigned bit(std::uint64_t x, std::size_t n, std::size_t k) {
  return static_cast<unsigned>((x >> (n - 1 - k)) & 1u);
}

// Columns where sigma_I has its nonzero entry in row r: c = r ^ flip_mask.
std::uint64_t flip_mask(const PauliIndex& idx) {
  std::uint64_t mask = 0;
  const std::size_t n = idx.qubits();
  for (std::size_t k = 0; k < n; ++k) {
    const int s = idx[k];
    if (s == 1 || s == 2) mask |= std::uint64_t{1} << (n - 1 - k);
  }
  return mask;
}

Complex string_entry(const PauliIndex& idx, std::uint64_t r, std::uint64_t c) {
  Complex v = 1.0;
  const std::size_t n = idx.qubits();
  for (std::size_t k = 0; k < n && v != 0.0; ++k) {
    v *= pauli_entry(idx[k], bit(r, n, k), bit(c, n, k));
  }
  return v;
}

void check_dense_size(std::size_t n, const DenseMatrix& m) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "dense matrix is not 2^n x 2^n");
  }
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::HermiticityViolation: return "HermiticityViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::Rank2Anomaly: return "Rank2Anomaly";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::UnclassifiableDimension: return "UnclassifiableDimension";
    case ErrorKind::ZeroClassUnsupported: return "ZeroClassUnsupported";
    case ErrorKind::BasisExpansionResidual: return "BasisExpansionResidual";
  }
  return "Unknown";
}

PauliIndex::PauliIndex(std::size_t n, std::uint64_t packed) : n_(n), packed_(packed) {
  if (n == 0 || n > kMaxPauliQubits) {
    throw Error(ErrorKind::ParamOutOfRange, "qubit count must be in 1..32");
  }
  if (n < kMaxPauliQubits && (packed >> (2 * n)) != 0) {
    throw Error(ErrorKind::ParamOutOfRange, "packed index exceeds qubit count");
  }
}

PauliIndex PauliIndex::parse(std::string_view text) {
  std::uint64_t packed = 0;
  for (char ch : text) {
    int s;
    switch (ch) {
      case 'i': case 'I': case '0': s = 0; break;
      case 'x': case 'X': case '1': s = 1; break;
      case 'y': case 'Y': case '2': s = 2; break;
      case 'z': case 'Z': case '3': s = 3; break;
      default:
        throw Error(ErrorKind::ParamOutOfRange,
                    "bad Pauli symbol '" + std::string(1, ch) + "'");
    }
    packed = (packed << 2) | static_cast<std::uint64_t>(s);
  }
  return PauliIndex(text.size(), packed);
}

PauliIndex PauliIndex::with(std::size_t k, int symbol) const {
  const std::uint64_t cleared = packed_ & ~(std::uint64_t{3} << shift(k));
  return PauliIndex(n_, cleared | (static_cast<std::uint64_t>(symbol) << shift(k)));
}

std::array<int, 4> PauliIndex::counts() const {
  std::array<int, 4> c{};
  for (std::size_t k = 0; k < n_; ++k) ++c[(*this)[k]];
  return c;
}

std::string PauliIndex::str() const {
  std::string s(n_, 'i');
  for (std::size_t k = 0; k < n_; ++k) s[k] = "ixyz"[(*this)[k]];
  return s;
}

PauliOperator::PauliOperator(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxPauliQubits) {
    throw Error(ErrorKind::ParamOutOfRange, "qubit count must be in 1..32");
  }
}

PauliOperator PauliOperator::identity(std::size_t n, double s) {
  PauliOperator p(n);
  p.add_packed(0, s);
  return p;
}

double PauliOperator::coeff(const PauliIndex& index) const {
  if (index.qubits() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "index length differs from qubit count");
  }
  auto it = terms_.find(index.packed());
  return it == terms_.end() ? 0.0 : it->second;
}

void PauliOperator::add(const PauliIndex& index, double s) {
  if (index.qubits() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "index length differs from qubit count");
  }
  add_packed(index.packed(), s);
}

void PauliOperator::add_packed(std::uint64_t packed, double s) {
  if (s == 0.0) return;
  auto [it, inserted] = terms_.emplace(packed, s);
  if (!inserted) {
    it->second += s;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double PauliOperator::trace() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? 0.0 : std::ldexp(it->second, static_cast<int>(n_));
}

double PauliOperator::max_abs() const {
  double m = 0.0;
  for (const auto& [k, s] : terms_) m = std::max(m, std::abs(s));
  return m;
}

double PauliOperator::norm2() const {
  double m = 0.0;
  for (const auto& [k, s] : terms_) m += s * s;
  return std::sqrt(m);
}

PauliOperator PauliOperator::pruned(double tol) const {
  PauliOperator p(n_);
  for (const auto& [k, s] : terms_) {
    if (std::abs(s) > tol) p.terms_.emplace_hint(p.terms_.end(), k, s);
  }
  return p;
}

void PauliOperator::check_compatible(const PauliOperator& o) const {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "qubit counts differ");
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
  check_compatible(o);
  for (const auto& [k, s] : o.terms_) add_packed(k, s);
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& o) {
  check_compatible(o);
  for (const auto& [k, s] : o.terms_) add_packed(k, -s);
  return *this;
}

PauliOperator& PauliOperator::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

double max_abs_diff(const PauliOperator& x, const PauliOperator& y) {
  return (x - y).max_abs();
}

PauliOperator tensor(const PauliOperator& x, const PauliOperator& y) {
  PauliOperator r(x.qubits() + y.qubits());
  const unsigned shift = static_cast<unsigned>(2 * y.qubits());
  for (const auto& [kx, sx] : x.terms()) {
    for (const auto& [ky, sy] : y.terms()) r.add_packed((kx << shift) | ky, sx * sy);
  }
  return r;
}

DenseHermitian::DenseHermitian(std::size_t n, DenseMatrix m) : n_(n), m_(std::move(m)) {
  check_dense_size(n_, m_);
}

double DenseHermitian::hermiticity_defect() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

DenseHermitian pauli_to_dense(const PauliOperator& p) {
  const std::size_t n = p.qubits();
  if (n > 14) throw Error(ErrorKind::ResourceLimit, "dense expansion beyond 14 qubits");
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  for (const auto& [packed, s] : p.terms()) {
    const PauliIndex idx(n, packed);
    const std::uint64_t mask = flip_mask(idx);
    for (std::uint64_t r = 0; r < dim; ++r) {
      const std::uint64_t c = r ^ mask;
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
          s * string_entry(idx, r, c);
    }
  }
  return DenseHermitian(n, std::move(m));
}

PauliOperator dense_to_pauli(const DenseHermitian& d, const Tolerances& tol) {
  if (d.hermiticity_defect() > tol.herm) {
    throw Error(ErrorKind::HermiticityViolation, "input matrix is not Hermitian");
  }
  const std::size_t n = d.qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  const DenseMatrix& m = d.matrix();
  PauliOperator p(n);
  for (std::uint64_t packed = 0; packed < count; ++packed) {
    const PauliIndex idx(n, packed);
    const std::uint64_t mask = flip_mask(idx);
    Complex acc = 0.0;
    for (std::uint64_t r = 0; r < dim; ++r) {
      const std::uint64_t c = r ^ mask;
      acc += string_entry(idx, r, c) *
             m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
    }
    const double s = std::ldexp(acc.real(), -static_cast<int>(n));
    if (std::abs(s) > tol.sparse) p.add_packed(packed, s);
  }
  return p;
}

Complex matrix_element(const PauliOperator& p, std::uint64_t row, std::uint64_t col) {
  const std::size_t n = p.qubits();
  const std::uint64_t want = row ^ col;
  Complex acc = 0.0;
  for (const auto& [packed, s] : p.terms()) {
    const PauliIndex idx(n, packed);
    if (flip_mask(idx) != want) continue;
    acc += s * string_entry(idx, row, col);
  }
  return acc;
}

BracketTerm single_qubit_bracket(int generator, int symbol) {
  if (generator < 0 || generator > 2 || symbol < 1 || symbol > 3) {
    throw Error(ErrorKind::ParamOutOfRange, "bracket table index");
  }
  return kBracket[generator][symbol - 1];
}

PauliOperator ad_action(const LocalAlgebraElement& m, const PauliOperator& rho) {
  const std::size_t n = rho.qubits();
  if (m.qubits() != n) {
    throw Error(ErrorKind::DimensionMismatch, "algebra element and operator sizes differ");
  }
  PauliOperator out(n);
  for (const auto& [packed, s] : rho.terms()) {
    const PauliIndex idx(n, packed);
    for (std::size_t k = 0; k < n; ++k) {
      const int j = idx[k];
      if (j == 0) continue;
      const double weights[3] = {m[k].a, m[k].b, m[k].c};
      for (int e = 0; e < 3; ++e) {
        const BracketTerm t = kBracket[e][j - 1];
        if (weights[e] == 0.0 || t.coeff == 0.0) continue;
        out.add_packed(idx.with(k, t.symbol).packed(), s * weights[e] * t.coeff);
      }
    }
  }
  return out;
}

PauliOperator conjugate(const LocalUnitary& g, const PauliOperator& rho,
                        const Tolerances& tol) {
  const std::size_t n = rho.qubits();
  if (g.qubits() != n) {
    throw Error(ErrorKind::DimensionMismatch, "local unitary and operator sizes differ");
  }
  PauliOperator cur = rho;
  for (std::size_t k = 0; k < n; ++k) {
    const Rotation3 r = adjoint_rotation(g[k]);
    PauliOperator next(n);
    for (const auto& [packed, s] : cur.terms()) {
      const PauliIndex idx(n, packed);
      const int j = idx[k];
      if (j == 0) {
        next.add_packed(packed, s);
        continue;
      }
      for (int i = 1; i <= 3; ++i) {
        const double w = r(i - 1, j - 1);
        if (w != 0.0) next.add_packed(idx.with(k, i).packed(), s * w);
      }
    }
    cur = std::move(next);
  }
  return cur.pruned(tol.sparse);
}

DenseMatrix zeta_coeffs(std::span<const double> a, const DenseHermitian& rho) {
  const std::size_t n = rho.qubits();
  if (a.size() != n) throw Error(ErrorKind::DimensionMismatch, "zeta coefficient vector");
  const DenseMatrix& m = rho.matrix();
  DenseMatrix out = DenseMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      double phase = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        const unsigned ir = bit(static_cast<std::uint64_t>(r), n, l);
        const unsigned jc = bit(static_cast<std::uint64_t>(c), n, l);
        if (ir != jc) phase += (ir == 0 ? 1.0 : -1.0) * a[l];
      }
      out(r, c) = 2.0 * kI * m(r, c) * phase;
    }
  }
  return out;
}

DenseMatrix eta_coeffs(std::span<const double> c, const DenseHermitian& rho) {
  const std::size_t n = rho.qubits();
  if (c.size() != n) throw Error(ErrorKind::DimensionMismatch, "eta coefficient vector");
  const DenseMatrix& m = rho.matrix();
  DenseMatrix out = DenseMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const auto flip = static_cast<Eigen::Index>(std::uint64_t{1} << (n - 1 - k));
        acc += c[k] * (m(r ^ flip, col) - m(r, col ^ flip));
      }
      out(r, col) = kI * acc;
    }
  }
  return out;
}

}  // namespace symlu
