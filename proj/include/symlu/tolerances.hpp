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

namespace symlu {

/// Numerical thresholds shared by every stage of the pipeline.
struct Tolerances {
  /// Absolute agreement on Pauli/polynomial coefficients of size O(1).
  double num = 1e-9;
  /// Allowed asymmetry |D - D^dagger| of a dense Hermitian input.
  double herm = 1e-10;
  /// Coefficients below this are dropped from sparse storage.
  double sparse = 1e-12;
  /// Singular values below rank * sigma_max count as zero.
  double rank = 1e-7;
  /// Required ratio between the smallest kept and largest dropped singular
  /// value; anything tighter aborts with IllConditioned.
  double gap = 1e3;
  /// Orthonormality of algebra bases.
  double orth = 1e-8;
  /// Unitarity and diagonal/antidiagonal detection for 2x2 factors.
  double unit = 1e-10;
};

}  // namespace symlu
