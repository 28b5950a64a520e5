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

#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace symlu::testing {

namespace {
const Complex kI(0.0, 1.0);
}

Eigen::Matrix2cd pauli2(int j) {
  Eigen::Matrix2cd m;
  switch (j) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {
Eigen::MatrixXcd pauli_string(const PauliIndex& idx) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t k = 0; k < idx.qubits(); ++k) m = kron(m, pauli2(idx[k]));
  return m;
}
}  // namespace

Eigen::MatrixXcd dense_oracle(const PauliOperator& p) {
  const auto dim = Eigen::Index{1} << p.qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [packed, s] : p.terms()) m += s * pauli_string(PauliIndex(p.qubits(), packed));
  return m;
}

PauliOperator pauli_oracle(const Eigen::MatrixXcd& m, std::size_t n, double drop) {
  PauliOperator out(n);
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  for (std::uint64_t packed = 0; packed < count; ++packed) {
    const PauliIndex idx(n, packed);
    const Complex s = (pauli_string(idx) * m).trace() / static_cast<double>(m.rows());
    if (std::abs(s.real()) > drop) out.add(idx, s.real());
  }
  return out;
}

Eigen::MatrixXcd dense_local(const LocalAlgebraElement& m) {
  const std::size_t n = m.qubits();
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t k = 0; k < n; ++k) {
    const Su2Element& p = m[k];
    const Eigen::Matrix2cd local = kI * (p.a * pauli2(3) + p.b * pauli2(2) + p.c * pauli2(1));
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q) {
      term = kron(term, q == k ? Eigen::MatrixXcd(local) : Eigen::MatrixXcd::Identity(2, 2));
    }
    out += term;
  }
  return out;
}

Eigen::MatrixXcd dense_unitary(const LocalUnitary& g) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (const Unitary2& f : g.factors()) {
    Eigen::Matrix2cd u;
    u << f.a, -std::conj(f.b), f.b, std::conj(f.a);
    m = kron(m, u);
  }
  return m;
}

Eigen::Matrix2cd expm_series(const Eigen::Matrix2cd& m) {
  int squarings = 0;
  double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2;
    ++squarings;
  }
  const Eigen::Matrix2cd x = m / std::pow(2.0, squarings);
  Eigen::Matrix2cd term = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Identity();
  for (int k = 1; k < 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

Eigen::MatrixXcd qubit_permutation(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    Eigen::Index image = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto bit = (b >> (n - 1 - k)) & 1;
      image |= bit << (n - 1 - static_cast<std::size_t>(perm[k]));
    }
    p(image, b) = 1.0;
  }
  return p;
}

Eigen::MatrixXcd dense_symmetrize(const Eigen::MatrixXcd& m, std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  int count = 0;
  do {
    const Eigen::MatrixXcd p = qubit_permutation(perm);
    sum += p * m * p.adjoint();
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / static_cast<double>(count);
}

std::size_t dense_stabilizer_dim(const PauliOperator& rho, double rel_tol) {
  const std::size_t n = rho.qubits();
  const Eigen::MatrixXcd r = dense_oracle(rho);
  const Eigen::Index cells = r.size();
  Eigen::MatrixXd cols(2 * cells, static_cast<Eigen::Index>(3 * n));
  for (std::size_t k = 0; k < n; ++k) {
    for (int g = 0; g < 3; ++g) {
      Su2Element e;
      (g == 0 ? e.a : g == 1 ? e.b : e.c) = 1.0;
      const Eigen::MatrixXcd m = dense_local(LocalAlgebraElement::single(n, k, e));
      const Eigen::MatrixXcd comm = m * r - r * m;
      const Eigen::Map<const Eigen::VectorXcd> v(comm.data(), cells);
      const auto col = static_cast<Eigen::Index>(3 * k + static_cast<std::size_t>(g));
      cols.col(col).head(cells) = v.real();
      cols.col(col).tail(cells) = v.imag();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols);
  const auto& s = svd.singularValues();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return 3 * n - rank;
}

WeightPartition minimal_weight_partition(const AlgebraBasis& k, double tol) {
  const std::size_t n = k.n;
  const Eigen::MatrixXd coords = k.coordinates();  // 3n x d
  const auto d = coords.cols();
  WeightPartition out;

  // Elements supported inside mask: nullspace of the rows outside mask.
  auto supported = [&](unsigned mask) -> Eigen::MatrixXd {
    std::vector<Eigen::Index> outside;
    for (std::size_t q = 0; q < n; ++q) {
      if (!(mask >> q & 1u)) {
        for (int r = 0; r < 3; ++r) outside.push_back(static_cast<Eigen::Index>(3 * q + r));
      }
    }
    if (d == 0) return Eigen::MatrixXd(3 * n, 0);
    if (outside.empty()) return coords;
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(outside.size()), d);
    for (std::size_t i = 0; i < outside.size(); ++i) {
      rows.row(static_cast<Eigen::Index>(i)) = coords.row(outside[i]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > tol) ++rank;
    }
    return coords * svd.matrixV().rightCols(d - rank);
  };

  auto proj_rank = [&](std::size_t q) {
    if (d == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(coords.middleRows(static_cast<Eigen::Index>(3 * q), 3));
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > tol) ++rank;
    }
    return rank;
  };

  std::vector<unsigned> masks(1u << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });

  for (std::size_t i = 0; i < n; ++i) {
    const int r = proj_rank(i);
    if (r == 0) {
      out.r_qubits.push_back(i);
      continue;
    }
    if (r == 1) {
      out.s_qubits.push_back(i);
      continue;
    }
    for (unsigned mask : masks) {
      if (!(mask >> i & 1u)) continue;
      const Eigen::MatrixXd sub = supported(mask);
      if (sub.cols() == 0) continue;
      if (sub.middleRows(static_cast<Eigen::Index>(3 * i), 3).cwiseAbs().maxCoeff() > tol) {
        std::vector<std::size_t> block;
        for (std::size_t q = 0; q < n; ++q) {
          if (mask >> q & 1u) block.push_back(q);
        }
        if (std::find(out.blocks.begin(), out.blocks.end(), block) == out.blocks.end()) {
          out.blocks.push_back(block);
        }
        break;
      }
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

}  // namespace symlu::testing
