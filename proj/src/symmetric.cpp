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

#include "symlu/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "symlu/error.hpp"

namespace symlu {

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return r;
}

int qubit_count(const OrbitSignature& sig) { return sig[0] + sig[1] + sig[2] + sig[3]; }

struct OrbitTally {
  double sum = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t present = 0;
};

std::map<OrbitSignature, OrbitTally> tally_orbits(const PauliOperator& rho) {
  std::map<OrbitSignature, OrbitTally> out;
  for (const auto& [packed, s] : rho.terms()) {
    const OrbitSignature sig = PauliIndex(rho.qubits(), packed).counts();
    auto [it, inserted] = out.try_emplace(sig);
    OrbitTally& t = it->second;
    if (inserted) {
      t.lo = t.hi = s;
    } else {
      t.lo = std::min(t.lo, s);
      t.hi = std::max(t.hi, s);
    }
    t.sum += s;
    ++t.present;
  }
  return out;
}

bool orbit_consistent(const OrbitSignature& sig, const OrbitTally& t, double tol) {
  if (t.present == orbit_size(sig)) return t.hi - t.lo <= tol;
  // Absent members are zero.
  return std::max(std::abs(t.lo), std::abs(t.hi)) <= tol;
}

}  // namespace

std::uint64_t orbit_size(const OrbitSignature& sig) {
  int remaining = qubit_count(sig);
  std::uint64_t r = 1;
  for (int s = 0; s < 3; ++s) {
    r *= binomial(remaining, sig[s]);
    remaining -= sig[s];
  }
  return r;
}

std::vector<std::uint64_t> orbit_members(const OrbitSignature& sig) {
  std::vector<int> symbols;
  for (int s = 0; s < 4; ++s) symbols.insert(symbols.end(), sig[s], s);
  std::vector<std::uint64_t> out;
  out.reserve(orbit_size(sig));
  do {
    std::uint64_t packed = 0;
    for (int s : symbols) packed = (packed << 2) | static_cast<std::uint64_t>(s);
    out.push_back(packed);
  } while (std::next_permutation(symbols.begin(), symbols.end()));
  return out;
}

PauliOperator symmetrize(const PauliOperator& rho) {
  PauliOperator out(rho.qubits());
  for (const auto& [sig, t] : tally_orbits(rho)) {
    const double avg = t.sum / static_cast<double>(orbit_size(sig));
    if (avg == 0.0) continue;
    for (std::uint64_t packed : orbit_members(sig)) out.add_packed(packed, avg);
  }
  return out;
}

bool is_symmetric(const PauliOperator& rho, const Tolerances& tol) {
  for (const auto& [sig, t] : tally_orbits(rho)) {
    if (!orbit_consistent(sig, t, tol.num)) return false;
  }
  return true;
}

Polynomial3 f_n(const PauliOperator& rho, const Tolerances& tol) {
  const int n = static_cast<int>(rho.qubits());
  Polynomial3 f;
  for (const auto& [sig, t] : tally_orbits(rho)) {
    if (!orbit_consistent(sig, t, tol.num)) {
      throw Error(ErrorKind::NotSymmetric, "unequal coefficients on a permutation orbit");
    }
    // rho holds c / (2^n |orbit|) on each orbit member.
    f.add({sig[1], sig[2], sig[3]}, std::ldexp(t.sum, n));
  }
  return f;
}

PauliOperator f_n_inv(const Polynomial3& f, std::size_t n) {
  if (f.degree() > static_cast<int>(n)) {
    throw Error(ErrorKind::DegreeTooHigh, "polynomial degree exceeds qubit count");
  }
  PauliOperator out(n);
  for (const auto& [e, c] : f.terms()) {
    const OrbitSignature sig{static_cast<int>(n) - e[0] - e[1] - e[2], e[0], e[1], e[2]};
    const double s =
        std::ldexp(c, -static_cast<int>(n)) / static_cast<double>(orbit_size(sig));
    for (std::uint64_t packed : orbit_members(sig)) out.add_packed(packed, s);
  }
  return out;
}

Polynomial3 poly_product(const Polynomial3& f, const Polynomial3& g) { return f * g; }

Rotation3 phi(const Unitary2& g) { return adjoint_rotation(g); }

Polynomial3 r_g(const Unitary2& g, const Polynomial3& f) {
  const Rotation3 rot = phi(g);
  // Variable j becomes sum_k x_k rot(k, j).
  std::array<std::vector<Polynomial3>, 3> powers;
  const int deg = std::max(f.degree(), 0);
  for (int j = 0; j < 3; ++j) {
    Polynomial3 lin;
    for (int k = 0; k < 3; ++k) {
      Exponents e{0, 0, 0};
      e[k] = 1;
      lin.add(e, rot(k, j));
    }
    powers[j].push_back(Polynomial3::constant(1.0));
    for (int p = 1; p <= deg; ++p) powers[j].push_back(powers[j].back() * lin);
  }
  Polynomial3 out;
  for (const auto& [e, c] : f.terms()) {
    out += c * (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]);
  }
  return out;
}

std::vector<int> homogeneous_irrep_dims(int p) {
  if (p < 0) throw Error(ErrorKind::ParamOutOfRange, "negative degree");
  std::vector<int> dims;
  for (int j = 0; j <= p / 2; ++j) dims.push_back(2 * (p - 2 * j) + 1);
  return dims;
}

int trivial_u1_dim(int p) {
  if (p < 0) throw Error(ErrorKind::ParamOutOfRange, "negative degree");
  return p / 2 + 1;
}

}  // namespace symlu
