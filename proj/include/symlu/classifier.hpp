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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symlu/pauli.hpp"
#include "symlu/stabilizer.hpp"
#include "symlu/su2.hpp"
#include "symlu/tolerances.hpp"

namespace symlu {

enum class ClassTag { FullLG, Werner, Product, GHZ, Dicke, Zero };

std::string_view to_string(ClassTag tag);

struct StabilizerClass {
  ClassTag tag = ClassTag::Zero;
  std::size_t n = 0;
  AlgebraBasis basis;
  std::vector<int> projection_dims;
  /// g with g K g^+ equal to the standard stabilizer of the class.
  LocalUnitary aligner;

  std::size_t dim() const { return basis.dim(); }
};

/// Classifies a permutation-symmetric state by its stabilizer. Throws
/// NotSymmetric, UnclassifiableDimension and the stabilizer_basis errors.
StabilizerClass classify(const PauliOperator& rho, const Tolerances& tol = {});

/// The tag assigned from (projection dim, stabilizer dim) alone, without the
/// symmetry precondition and without computing an aligner. For n = 2 with a
/// one-dimensional stabilizer the GHZ/Dicke split uses the relative sign of
/// the two parts, which is not invariant under non-uniform local unitaries.
ClassTag stabilizer_tag(const PauliOperator& rho, const Tolerances& tol = {});

struct CanonicalForm {
  ClassTag tag = ClassTag::Zero;
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<double> coefficients;
  /// The other coefficient set reachable by a local unitary, when it differs
  /// from `coefficients`.
  std::optional<std::vector<double>> twin;
  /// Maps representative(coefficients) onto representative(twin).
  LocalUnitary twin_generator;
  /// representative = aligner rho aligner^+.
  LocalUnitary aligner;
  /// Max |representative - aligner rho aligner^+| over Pauli coefficients.
  double residual = 0.0;
};

/// Throws ZeroClassUnsupported and BasisExpansionResidual, plus classify's
/// errors.
CanonicalForm canonical_form(const PauliOperator& rho, const Tolerances& tol = {});

/// The class representative with the given coefficients.
PauliOperator representative(ClassTag tag, std::size_t n, const std::vector<double>& coefficients);
inline PauliOperator representative(const CanonicalForm& cf) {
  return representative(cf.tag, cf.n, cf.coefficients);
}

/// Applies the class twin rule to a coefficient list; nullopt when the rule
/// leaves the coefficients unchanged.
std::optional<std::vector<double>> twin_coefficients(ClassTag tag, std::size_t n,
                                                     const std::vector<double>& coefficients,
                                                     const Tolerances& tol = {});

enum class Verdict { Equivalent, Inequivalent, Unknown };

std::string_view to_string(Verdict v);

struct Equivalence {
  Verdict verdict = Verdict::Unknown;
  ClassTag tag_a = ClassTag::Zero;
  ClassTag tag_b = ClassTag::Zero;
  /// Set when verdict == Equivalent: witness rho_a witness^+ = rho_b.
  std::optional<LocalUnitary> witness;
  double witness_residual = 0.0;
  bool used_twin = false;
  std::string note;
};

Equivalence lu_equivalent(const PauliOperator& rho_a, const PauliOperator& rho_b,
                          const Tolerances& tol = {});

struct DiagAntidiagReport {
  enum class Form { Diagonal, Antidiagonal, Generic };
  struct Factor {
    Form form = Form::Generic;
    /// g A g^+ = sign A; 0 for generic factors.
    int sign = 0;
  };
  bool applicable = false;
  std::vector<Factor> factors;
  /// True when every factor is diagonal or antidiagonal.
  bool normalizes = false;
};

std::string_view to_string(DiagAntidiagReport::Form f);

DiagAntidiagReport check_diag_antidiag(const LocalUnitary& g, ClassTag tag,
                                       const Tolerances& tol = {});
inline DiagAntidiagReport check_diag_antidiag(const LocalUnitary& g, const StabilizerClass& c,
                                              const Tolerances& tol = {}) {
  return check_diag_antidiag(g, c.tag, tol);
}

}  // namespace symlu
