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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symlu/pauli.hpp"
#include "symlu/tolerances.hpp"

namespace symlu {

/// Id / 2^n.
PauliOperator completely_mixed(std::size_t n);

/// |0...0><0...0|.
PauliOperator product_zero(std::size_t n);

/// Sym |1^k 0^(n-k)><1^k 0^(n-k)|: the uniform mixture of the C(n, k)
/// computational-basis projectors with k excitations. Diagonal.
PauliOperator dicke_rho(std::size_t n, std::size_t k);

/// Projector onto the normalized symmetric superposition of all
/// k-excitation strings.
PauliOperator dicke_pure(std::size_t n, std::size_t k);

/// |G><G| with |G> = alpha |0...0> + beta |1...1>. Throws NotNormalized.
PauliOperator ghz_rho(std::size_t n, Complex alpha, Complex beta,
                      const Tolerances& tol = {});

/// Sym(u^(x)k (x) Id^(x)(n-2k)) with u = XX + YY + ZZ. Not normalized.
PauliOperator werner_basis(std::size_t n, std::size_t k);

/// sum_k c_k dicke_rho(n, k) + d ghz_rho(n, alpha, beta). The weights must be
/// nonnegative and sum to 1.
PauliOperator ghz_mixture(std::size_t n, const std::vector<double>& c, double d,
                          Complex alpha, Complex beta, const Tolerances& tol = {});

/// Projector onto (|01> - |10>) / sqrt(2).
PauliOperator singlet();

/// gamma |0...0><1...1| + conj(gamma) |1...1><0...0|.
PauliOperator ghz_corner(std::size_t n, Complex gamma);

/// Id / 2^n + a Z^(x)n.
PauliOperator zz_example(std::size_t n, double a);

/// sum_k c_k werner_basis(n, k), k = 0..floor(n/2).
PauliOperator werner_family(std::size_t n, const std::vector<double>& c);

/// sum_k c_k Sym(Z^(x)k (x) Id^(x)(n-k)), k = 0..n.
PauliOperator product_family(std::size_t n, const std::vector<double>& c);

/// sum b_{r,s} Sym((XX + YY)^(x)s (x) Z^(x)r (x) Id^(x)(n-r-2s)).
PauliOperator dicke_family(std::size_t n,
                           const std::map<std::pair<int, int>, double>& b);

/// Preset description accepted by build_named_state. `kind` is one of
/// completely_mixed, product_zero, dicke, dicke_pure, ghz_pure, ghz_mixture,
/// werner_basis, singlet, zz_example.
struct NamedStateSpec {
  std::string kind;
  std::size_t n = 0;
  std::size_t k = 0;
  double a = 0.0;
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
  std::vector<double> weights;
  double d = 0.0;
};

PauliOperator build_named_state(const NamedStateSpec& spec, const Tolerances& tol = {});

}  // namespace symlu
