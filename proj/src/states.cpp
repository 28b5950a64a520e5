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

#include "symlu/states.hpp"

#include <bit>
#include <cmath>

#include "symlu/error.hpp"
#include "symlu/symmetric.hpp"

namespace symlu {

namespace {

struct LocalTerm {
  int symbol;
  Complex coeff;
};

// |i><j| in the Pauli basis.
std::vector<LocalTerm> outer_terms(unsigned i, unsigned j) {
  const Complex half(0.5, 0.0);
  const Complex ihalf(0.0, 0.5);
  if (i == j) return {{0, half}, {3, i == 0 ? half : -half}};
  if (i == 0) return {{1, half}, {2, ihalf}};
  return {{1, half}, {2, -ihalf}};
}

// Adds z |row><col| + conj(z) |col><row| for row != col, or Re(z) |row><row|.
void add_outer(PauliOperator& out, std::uint64_t row, std::uint64_t col, Complex z) {
  const std::size_t n = out.qubits();
  std::vector<std::pair<std::uint64_t, Complex>> acc{{0, z}};
  for (std::size_t k = 0; k < n; ++k) {
    const unsigned r = static_cast<unsigned>((row >> (n - 1 - k)) & 1u);
    const unsigned c = static_cast<unsigned>((col >> (n - 1 - k)) & 1u);
    std::vector<std::pair<std::uint64_t, Complex>> next;
    next.reserve(acc.size() * 2);
    for (const auto& [packed, w] : acc) {
      for (const LocalTerm& t : outer_terms(r, c)) {
        next.emplace_back((packed << 2) | static_cast<std::uint64_t>(t.symbol), w * t.coeff);
      }
    }
    acc = std::move(next);
  }
  const double scale = row == col ? 1.0 : 2.0;
  for (const auto& [packed, w] : acc) out.add_packed(packed, scale * w.real());
}

PauliOperator pure_state(std::size_t n, const std::vector<std::pair<std::uint64_t, Complex>>& amps) {
  PauliOperator out(n);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    add_outer(out, amps[i].first, amps[i].first, std::norm(amps[i].second));
    for (std::size_t j = i + 1; j < amps.size(); ++j) {
      add_outer(out, amps[i].first, amps[j].first,
                amps[i].second * std::conj(amps[j].second));
    }
  }
  return out;
}

std::uint64_t excitation_string(std::size_t n, std::size_t k) {
  // |1>^k |0>^(n-k): the k leftmost qubits are excited.
  std::uint64_t bits = 0;
  for (std::size_t q = 0; q < k; ++q) bits |= std::uint64_t{1} << (n - 1 - q);
  return bits;
}

PauliOperator u_pair() {
  PauliOperator u(2);
  u.add("xx", 1.0);
  u.add("yy", 1.0);
  u.add("zz", 1.0);
  return u;
}

PauliOperator planar_pair() {
  PauliOperator u(2);
  u.add("xx", 1.0);
  u.add("yy", 1.0);
  return u;
}

// Tensor product of a possibly empty list of factors padded with identity up to n qubits.
PauliOperator padded(std::size_t n, const std::vector<PauliOperator>& factors) {
  std::size_t used = 0;
  for (const auto& f : factors) used += f.qubits();
  if (used > n) throw Error(ErrorKind::ParamOutOfRange, "factors exceed qubit count");
  PauliOperator out = used < n ? PauliOperator::identity(n - used) : PauliOperator::identity(1);
  bool first = used < n;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out = first ? tensor(*it, out) : *it;
    first = true;
  }
  return out;
}

PauliOperator power(const PauliOperator& p, std::size_t k) {
  PauliOperator out = p;
  for (std::size_t i = 1; i < k; ++i) out = tensor(out, p);
  return out;
}

void require_n(std::size_t n) {
  if (n == 0 || n > kMaxPauliQubits) {
    throw Error(ErrorKind::ParamOutOfRange, "qubit count out of range");
  }
}

}  // namespace

PauliOperator completely_mixed(std::size_t n) {
  require_n(n);
  return PauliOperator::identity(n, std::ldexp(1.0, -static_cast<int>(n)));
}

PauliOperator product_zero(std::size_t n) {
  require_n(n);
  PauliOperator out(n);
  add_outer(out, 0, 0, 1.0);
  return out;
}

PauliOperator dicke_rho(std::size_t n, std::size_t k) {
  require_n(n);
  if (k > n) throw Error(ErrorKind::ParamOutOfRange, "dicke excitation count exceeds n");
  PauliOperator out(n);
  const std::uint64_t s = excitation_string(n, k);
  add_outer(out, s, s, 1.0);
  return symmetrize(out);
}

PauliOperator dicke_pure(std::size_t n, std::size_t k) {
  require_n(n);
  if (k > n) throw Error(ErrorKind::ParamOutOfRange, "dicke excitation count exceeds n");
  std::vector<std::pair<std::uint64_t, Complex>> amps;
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (static_cast<std::size_t>(std::popcount(b)) == k) amps.emplace_back(b, 1.0);
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(amps.size()));
  for (auto& [b, a] : amps) a *= norm;
  return pure_state(n, amps);
}

PauliOperator ghz_rho(std::size_t n, Complex alpha, Complex beta, const Tolerances& tol) {
  require_n(n);
  if (n < 2) throw Error(ErrorKind::ParamOutOfRange, "GHZ state needs n >= 2");
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol.num) {
    throw Error(ErrorKind::NotNormalized, "|alpha|^2 + |beta|^2 != 1");
  }
  const std::uint64_t ones = (std::uint64_t{1} << n) - 1;
  std::vector<std::pair<std::uint64_t, Complex>> amps;
  if (alpha != 0.0) amps.emplace_back(0, alpha);
  if (beta != 0.0) amps.emplace_back(ones, beta);
  return pure_state(n, amps);
}

PauliOperator werner_basis(std::size_t n, std::size_t k) {
  require_n(n);
  if (2 * k > n) throw Error(ErrorKind::ParamOutOfRange, "werner basis needs 2k <= n");
  if (k == 0) return PauliOperator::identity(n);
  return symmetrize(padded(n, {power(u_pair(), k)}));
}

PauliOperator ghz_mixture(std::size_t n, const std::vector<double>& c, double d,
                          Complex alpha, Complex beta, const Tolerances& tol) {
  require_n(n);
  if (c.size() != n + 1) {
    throw Error(ErrorKind::ParamOutOfRange, "ghz mixture needs n + 1 Dicke weights");
  }
  double total = d;
  bool negative = d < 0;
  for (double w : c) {
    total += w;
    negative = negative || w < 0;
  }
  if (negative || std::abs(total - 1.0) > tol.num) {
    throw Error(ErrorKind::NotNormalized, "mixture weights must be nonnegative and sum to 1");
  }
  PauliOperator out(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (c[k] != 0.0) out += c[k] * dicke_rho(n, k);
  }
  if (d != 0.0) out += d * ghz_rho(n, alpha, beta, tol);
  return out;
}

PauliOperator singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return pure_state(2, {{0b01, r}, {0b10, -r}});
}

PauliOperator ghz_corner(std::size_t n, Complex gamma) {
  require_n(n);
  PauliOperator out(n);
  add_outer(out, 0, (std::uint64_t{1} << n) - 1, gamma);
  return out;
}

PauliOperator zz_example(std::size_t n, double a) {
  require_n(n);
  PauliOperator out = completely_mixed(n);
  out.add(PauliIndex::parse(std::string(n, 'z')), a);
  return out;
}

PauliOperator werner_family(std::size_t n, const std::vector<double>& c) {
  if (c.size() != n / 2 + 1) {
    throw Error(ErrorKind::ParamOutOfRange, "werner family needs floor(n/2) + 1 coefficients");
  }
  PauliOperator out(n);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0.0) out += c[k] * werner_basis(n, k);
  }
  return out;
}

PauliOperator product_family(std::size_t n, const std::vector<double>& c) {
  if (c.size() != n + 1) {
    throw Error(ErrorKind::ParamOutOfRange, "product family needs n + 1 coefficients");
  }
  PauliOperator z(1);
  z.add("z", 1.0);
  PauliOperator out(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (c[k] == 0.0) continue;
    PauliOperator term = k == 0 ? PauliOperator::identity(n) : symmetrize(padded(n, {power(z, k)}));
    out += c[k] * term;
  }
  return out;
}

PauliOperator dicke_family(std::size_t n, const std::map<std::pair<int, int>, double>& b) {
  PauliOperator z(1);
  z.add("z", 1.0);
  PauliOperator out(n);
  for (const auto& [rs, coeff] : b) {
    const auto [r, s] = rs;
    if (r < 0 || s < 0 || static_cast<std::size_t>(r + 2 * s) > n) {
      throw Error(ErrorKind::ParamOutOfRange, "dicke family needs r + 2s <= n");
    }
    if (coeff == 0.0) continue;
    std::vector<PauliOperator> factors;
    if (s > 0) factors.push_back(power(planar_pair(), static_cast<std::size_t>(s)));
    if (r > 0) factors.push_back(power(z, static_cast<std::size_t>(r)));
    out += coeff * symmetrize(padded(n, factors));
  }
  return out;
}

PauliOperator build_named_state(const NamedStateSpec& spec, const Tolerances& tol) {
  const std::string& kind = spec.kind;
  if (kind == "completely_mixed") return completely_mixed(spec.n);
  if (kind == "product_zero") return product_zero(spec.n);
  if (kind == "dicke") return dicke_rho(spec.n, spec.k);
  if (kind == "dicke_pure") return dicke_pure(spec.n, spec.k);
  if (kind == "ghz_pure") return ghz_rho(spec.n, spec.alpha, spec.beta, tol);
  if (kind == "ghz_mixture") {
    return ghz_mixture(spec.n, spec.weights, spec.d, spec.alpha, spec.beta, tol);
  }
  if (kind == "werner_basis") return werner_basis(spec.n, spec.k);
  if (kind == "singlet") {
    if (spec.n != 2) throw Error(ErrorKind::ParamOutOfRange, "singlet is a 2-qubit state");
    return singlet();
  }
  if (kind == "zz_example") return zz_example(spec.n, spec.a);
  throw Error(ErrorKind::ParamOutOfRange, "unknown preset kind '" + kind + "'");
}

}  // namespace symlu
