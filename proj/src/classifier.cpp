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

#include "symlu/classifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "symlu/error.hpp"
#include "symlu/states.hpp"
#include "symlu/symmetric.hpp"

namespace symlu {

namespace {

std::string dims_text(std::size_t n, std::size_t d, int p) {
  return "n=" + std::to_string(n) + ", dim K=" + std::to_string(d) +
         ", projection dim=" + std::to_string(p);
}

ClassTag tag_from_dims(std::size_t n, const AlgebraBasis& k, const std::vector<int>& dims) {
  const int p = dims.empty() ? 0 : dims.front();
  if (std::any_of(dims.begin(), dims.end(), [p](int q) { return q != p; })) {
    throw Error(ErrorKind::UnclassifiableDimension, "projection dims differ between qubits");
  }
  const std::size_t d = k.dim();
  if (p == 0 && d == 0) return ClassTag::Zero;
  if (p == 3 && d == 3 * n) return ClassTag::FullLG;
  if (p == 3 && d == 3) return ClassTag::Werner;
  if (p == 1 && d == n) return ClassTag::Product;
  if (p == 1 && n >= 3 && d == n - 1) return ClassTag::GHZ;
  if (p == 1 && n >= 3 && d == 1) return ClassTag::Dicke;
  if (p == 1 && n == 2 && d == 1) {
    const LocalAlgebraElement& m = k.elements.front();
    const double cosine = hs_inner(m[0], m[1]) / (m[0].hs_norm() * m[1].hs_norm());
    if (cosine > 1.0 - 1e-6) return ClassTag::Dicke;
    if (cosine < -1.0 + 1e-6) return ClassTag::GHZ;
  }
  throw Error(ErrorKind::UnclassifiableDimension, dims_text(n, d, p));
}

// Dominant direction of the qubit-0 parts, with its first clearly nonzero
// component made positive so the result does not depend on SVD signs.
Su2Element principal_direction(const AlgebraBasis& k) {
  Eigen::MatrixXd parts(3, k.dim());
  for (std::size_t j = 0; j < k.dim(); ++j) {
    const Su2Element& p = k.elements[j][0];
    parts.col(static_cast<Eigen::Index>(j)) << p.a, p.b, p.c;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(parts, Eigen::ComputeFullU);
  Eigen::Vector3d u = svd.matrixU().col(0);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(u(i)) > 1e-9) {
      if (u(i) < 0) u = -u;
      break;
    }
  }
  return {u(0), u(1), u(2)};
}

LocalUnitary werner_pair_aligner(const PauliOperator& rho) {
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t(i, j) = rho.coeff(PauliIndex(2, static_cast<std::uint64_t>(((i + 1) << 2) | (j + 1))));
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d q = svd.matrixU() * svd.matrixV().transpose();
  if (q.determinant() < 0) q = -q;
  return LocalUnitary({Unitary2::identity(), unitary_from_rotation(Rotation3(q))});
}

LocalUnitary class_aligner(const PauliOperator& rho, ClassTag tag, const AlgebraBasis& k) {
  const std::size_t n = rho.qubits();
  switch (tag) {
    case ClassTag::Werner:
      return n == 2 ? werner_pair_aligner(rho) : LocalUnitary::identity(n);
    case ClassTag::Product:
    case ClassTag::GHZ:
    case ClassTag::Dicke: {
      const Su2Element nvec = principal_direction(k);
      const Unitary2 g = rotation_to(nvec.sigma_vector(), Su2Element::A().sigma_vector(),
                                     Eigen::Vector3d::UnitX());
      return LocalUnitary::uniform(n, g);
    }
    default:
      return LocalUnitary::identity(n);
  }
}

double scaled(const Polynomial3& f, const Exponents& e, std::size_t n) {
  return std::ldexp(f.coeff(e), -static_cast<int>(n));
}

std::vector<std::pair<int, int>> dicke_indices(std::size_t n) {
  std::vector<std::pair<int, int>> idx;
  for (int r = 0; r <= static_cast<int>(n); ++r) {
    for (int s = 0; r + 2 * s <= static_cast<int>(n); ++s) idx.emplace_back(r, s);
  }
  return idx;
}

// Product-class states whose only non-identity term is Z^(x)n admit a single
// flipped qubit; for even n that is the only nontrivial twin.
bool product_pure_top(std::size_t n, const std::vector<double>& c, double tol) {
  if (n < 2 || n % 2 != 0) return false;
  for (std::size_t k = 1; k < n; ++k) {
    if (std::abs(c[k]) > tol) return false;
  }
  return true;
}

// Dicke-class states whose only pair term is b(0, n/2) (n even) admit iZ on
// a single qubit, which flips that coefficient and nothing else.
std::optional<std::size_t> dicke_half_pair(std::size_t n, const std::vector<double>& c, double tol) {
  if (n % 2 != 0) return std::nullopt;
  const auto idx = dicke_indices(n);
  std::optional<std::size_t> pos;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto [r, s] = idx[i];
    if (s == 0 || std::abs(c[i]) <= tol) continue;
    if (r != 0 || 2 * s != static_cast<int>(n)) return std::nullopt;
    pos = i;
  }
  return pos;
}

LocalUnitary twin_generator(ClassTag tag, std::size_t n, const std::vector<double>& c, double tol) {
  if (tag == ClassTag::Product && product_pure_top(n, c, tol)) {
    LocalUnitary g = LocalUnitary::identity(n);
    g[n - 1] = Unitary2::i_x();
    return g;
  }
  if (tag == ClassTag::Product || tag == ClassTag::GHZ || tag == ClassTag::Dicke) {
    return LocalUnitary::uniform(n, Unitary2::i_x());
  }
  return LocalUnitary::identity(n);
}

// Sign of the coefficient that the class convention requires to be positive
// (GHZ: the first asymmetric sector pair); 0 when the convention is already
// symmetric.
int convention_sign(ClassTag tag, std::size_t n, const std::vector<double>& c, double tol) {
  switch (tag) {
    case ClassTag::Product: {
      if (product_pure_top(n, c, tol)) return std::abs(c[n]) > tol ? (c[n] > 0 ? 1 : -1) : 0;
      for (std::size_t k = 1; k <= n; k += 2) {
        if (std::abs(c[k]) > tol) return c[k] > 0 ? 1 : -1;
      }
      return 0;
    }
    case ClassTag::GHZ: {
      for (std::size_t k = 0; k <= n; ++k) {
        const double diff = c[k] - c[n - k];
        if (std::abs(diff) > tol) return diff > 0 ? 1 : -1;
      }
      return 0;
    }
    case ClassTag::Dicke: {
      const auto idx = dicke_indices(n);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i].first % 2 == 1 && std::abs(c[i]) > tol) return c[i] > 0 ? 1 : -1;
      }
      return 0;
    }
    default:
      return 0;
  }
}

std::vector<double> apply_twin_rule(ClassTag tag, std::size_t n, std::vector<double> c, double tol) {
  switch (tag) {
    case ClassTag::Product:
      if (product_pure_top(n, c, tol)) {
        c[n] = -c[n];
      } else {
        for (std::size_t k = 1; k <= n; k += 2) c[k] = -c[k];
      }
      break;
    case ClassTag::GHZ:
      std::reverse(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n + 1));
      break;
    case ClassTag::Dicke: {
      const auto idx = dicke_indices(n);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i].first % 2 == 1) c[i] = -c[i];
      }
      break;
    }
    default:
      break;
  }
  return c;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Diagonal of a state whose terms are I/Z strings (others are ignored).
std::vector<double> diagonal(const PauliOperator& rho) {
  const std::size_t n = rho.qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<double> diag(dim, 0.0);
  for (const auto& [packed, s] : rho.terms()) {
    const PauliIndex idx(n, packed);
    std::uint64_t zmask = 0;
    bool diagonal_term = true;
    for (std::size_t k = 0; k < n && diagonal_term; ++k) {
      const int j = idx[k];
      if (j == 3) {
        zmask |= std::uint64_t{1} << (n - 1 - k);
      } else if (j != 0) {
        diagonal_term = false;
      }
    }
    if (!diagonal_term) continue;
    for (std::uint64_t b = 0; b < dim; ++b) {
      diag[b] += (std::popcount(b & zmask) % 2 == 0) ? s : -s;
    }
  }
  return diag;
}

void clean(std::vector<double>& c, double tol) {
  for (double& x : c) {
    if (std::abs(x) <= tol) x = 0.0;
  }
}

struct Extraction {
  std::vector<double> coefficients;
  LocalUnitary aligner;
};

Extraction extract(const PauliOperator& rho, const StabilizerClass& cls, const Tolerances& tol) {
  const std::size_t n = rho.qubits();
  Extraction ex{{}, cls.aligner};
  PauliOperator aligned = conjugate(cls.aligner, rho, tol);
  switch (cls.tag) {
    case ClassTag::FullLG:
      ex.coefficients = {aligned.coeff(PauliIndex::identity(n))};
      break;
    case ClassTag::Werner: {
      const Polynomial3 f = f_n(aligned, tol);
      for (int k = 0; 2 * k <= static_cast<int>(n); ++k) {
        ex.coefficients.push_back(scaled(f, {2 * k, 0, 0}, n));
      }
      break;
    }
    case ClassTag::Product: {
      const Polynomial3 f = f_n(aligned, tol);
      for (int k = 0; k <= static_cast<int>(n); ++k) {
        ex.coefficients.push_back(scaled(f, {0, 0, k}, n));
      }
      break;
    }
    case ClassTag::Dicke: {
      const Polynomial3 f = f_n(aligned, tol);
      for (const auto& [r, s] : dicke_indices(n)) {
        ex.coefficients.push_back(scaled(f, {2 * s, 0, r}, n));
      }
      break;
    }
    case ClassTag::GHZ: {
      // Rotate the corner coherence onto the positive real axis with a
      // uniform phase exp(tA), which multiplies the corner by exp(2int).
      const std::uint64_t ones = (std::uint64_t{1} << n) - 1;
      const Complex corner = matrix_element(aligned, 0, ones);
      if (std::abs(corner) > tol.sparse) {
        const double t = -std::arg(corner) / (2.0 * static_cast<double>(n));
        const LocalUnitary phase = LocalUnitary::uniform(n, exp_su2(Su2Element::A(), t));
        ex.aligner = phase * ex.aligner;
        aligned = conjugate(phase, aligned, tol);
      }
      const std::vector<double> diag = diagonal(aligned);
      ex.coefficients.assign(n + 2, 0.0);
      for (std::uint64_t b = 0; b <= ones; ++b) {
        ex.coefficients[static_cast<std::size_t>(std::popcount(b))] += diag[b];
      }
      ex.coefficients[n + 1] = matrix_element(aligned, 0, ones).real();
      break;
    }
    case ClassTag::Zero:
      throw Error(ErrorKind::ZeroClassUnsupported, "state has a zero stabilizer");
  }
  clean(ex.coefficients, tol.sparse);
  return ex;
}

CanonicalForm canonical_from_class(const PauliOperator& rho, const StabilizerClass& cls,
                                   const Tolerances& tol) {
  const std::size_t n = rho.qubits();
  Extraction ex = extract(rho, cls, tol);
  CanonicalForm cf;
  cf.tag = cls.tag;
  cf.n = n;
  cf.twin_generator = twin_generator(cls.tag, n, ex.coefficients, tol.num);
  if (convention_sign(cls.tag, n, ex.coefficients, tol.num) < 0) {
    ex.coefficients = apply_twin_rule(cls.tag, n, ex.coefficients, tol.num);
    ex.aligner = cf.twin_generator * ex.aligner;
  }
  if (cls.tag == ClassTag::Dicke) {
    if (const auto pos = dicke_half_pair(n, ex.coefficients, tol.num);
        pos && ex.coefficients[*pos] < 0) {
      LocalUnitary flip = LocalUnitary::identity(n);
      flip[n - 1] = Unitary2{Complex(0.0, 1.0), Complex(0.0, 0.0)};  // i sigma_z
      ex.coefficients[*pos] = -ex.coefficients[*pos];
      ex.aligner = flip * ex.aligner;
    }
  }
  cf.coefficients = std::move(ex.coefficients);
  cf.aligner = ex.aligner;
  cf.twin = twin_coefficients(cls.tag, n, cf.coefficients, tol);

  switch (cls.tag) {
    case ClassTag::FullLG:
    case ClassTag::Werner:
    case ClassTag::Product:
      for (std::size_t k = 0; k < cf.coefficients.size(); ++k) {
        cf.labels.push_back("c" + std::to_string(k));
      }
      break;
    case ClassTag::GHZ:
      for (std::size_t k = 0; k <= n; ++k) cf.labels.push_back("d" + std::to_string(k));
      cf.labels.push_back("gamma");
      break;
    case ClassTag::Dicke:
      for (const auto& [r, s] : dicke_indices(n)) {
        cf.labels.push_back("b(" + std::to_string(r) + "," + std::to_string(s) + ")");
      }
      break;
    case ClassTag::Zero:
      break;
  }

  cf.residual = max_abs_diff(representative(cf), conjugate(cf.aligner, rho, tol));
  if (cf.residual > tol.num) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", cf.residual);
    throw Error(ErrorKind::BasisExpansionResidual,
                std::string(to_string(cls.tag)) + " representative differs from the aligned state by " +
                    buf);
  }
  return cf;
}

}  // namespace

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::FullLG: return "FullLG";
    case ClassTag::Werner: return "Werner";
    case ClassTag::Product: return "Product";
    case ClassTag::GHZ: return "GHZ";
    case ClassTag::Dicke: return "Dicke";
    case ClassTag::Zero: return "Zero";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::Inequivalent: return "Inequivalent";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(DiagAntidiagReport::Form f) {
  switch (f) {
    case DiagAntidiagReport::Form::Diagonal: return "diagonal";
    case DiagAntidiagReport::Form::Antidiagonal: return "antidiagonal";
    case DiagAntidiagReport::Form::Generic: return "generic";
  }
  return "?";
}

StabilizerClass classify(const PauliOperator& rho, const Tolerances& tol) {
  if (!is_symmetric(rho, tol)) {
    throw Error(ErrorKind::NotSymmetric, "state is not permutation invariant");
  }
  StabilizerClass c;
  c.n = rho.qubits();
  c.basis = stabilizer_basis(rho, tol);
  c.projection_dims = projection_dims(c.basis, tol);
  c.tag = tag_from_dims(c.n, c.basis, c.projection_dims);
  c.aligner = class_aligner(rho, c.tag, c.basis);
  return c;
}

ClassTag stabilizer_tag(const PauliOperator& rho, const Tolerances& tol) {
  const AlgebraBasis k = stabilizer_basis(rho, tol);
  return tag_from_dims(rho.qubits(), k, projection_dims(k, tol));
}

CanonicalForm canonical_form(const PauliOperator& rho, const Tolerances& tol) {
  const StabilizerClass cls = classify(rho, tol);
  if (cls.tag == ClassTag::Zero) {
    throw Error(ErrorKind::ZeroClassUnsupported, "state has a zero stabilizer");
  }
  return canonical_from_class(rho, cls, tol);
}

PauliOperator representative(ClassTag tag, std::size_t n, const std::vector<double>& c) {
  auto expect = [&](std::size_t size) {
    if (c.size() != size) {
      throw Error(ErrorKind::DimensionMismatch,
                  std::string(to_string(tag)) + " representative needs " + std::to_string(size) +
                      " coefficients");
    }
  };
  switch (tag) {
    case ClassTag::FullLG:
      expect(1);
      return PauliOperator::identity(n, c[0]);
    case ClassTag::Werner:
      expect(n / 2 + 1);
      return werner_family(n, c);
    case ClassTag::Product:
      expect(n + 1);
      return product_family(n, c);
    case ClassTag::GHZ: {
      expect(n + 2);
      PauliOperator out = ghz_corner(n, c[n + 1]);
      for (std::size_t k = 0; k <= n; ++k) {
        if (c[k] != 0.0) out += c[k] * dicke_rho(n, k);
      }
      return out;
    }
    case ClassTag::Dicke: {
      const auto idx = dicke_indices(n);
      expect(idx.size());
      std::map<std::pair<int, int>, double> b;
      for (std::size_t i = 0; i < idx.size(); ++i) b[idx[i]] = c[i];
      return dicke_family(n, b);
    }
    case ClassTag::Zero:
      break;
  }
  throw Error(ErrorKind::ZeroClassUnsupported, "no representative for the zero class");
}

std::optional<std::vector<double>> twin_coefficients(ClassTag tag, std::size_t n,
                                                     const std::vector<double>& c,
                                                     const Tolerances& tol) {
  if (tag == ClassTag::FullLG || tag == ClassTag::Werner || tag == ClassTag::Zero) {
    return std::nullopt;
  }
  std::vector<double> t = apply_twin_rule(tag, n, c, tol.num);
  if (max_diff(t, c) <= tol.num) return std::nullopt;
  return t;
}

Equivalence lu_equivalent(const PauliOperator& rho_a, const PauliOperator& rho_b,
                          const Tolerances& tol) {
  if (rho_a.qubits() != rho_b.qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "states have different qubit counts");
  }
  Equivalence eq;
  const StabilizerClass ca = classify(rho_a, tol);
  const StabilizerClass cb = classify(rho_b, tol);
  eq.tag_a = ca.tag;
  eq.tag_b = cb.tag;
  if (ca.tag != cb.tag) {
    eq.verdict = Verdict::Inequivalent;
    eq.note = "stabilizer classes differ";
    return eq;
  }
  if (ca.tag == ClassTag::Zero) {
    eq.verdict = Verdict::Unknown;
    eq.note = "zero stabilizer: no complete invariants";
    return eq;
  }
  const CanonicalForm fa = canonical_from_class(rho_a, ca, tol);
  const CanonicalForm fb = canonical_from_class(rho_b, cb, tol);

  LocalUnitary witness;
  if (max_diff(fa.coefficients, fb.coefficients) <= tol.num) {
    witness = fb.aligner.adjoint() * fa.aligner;
  } else if (fa.twin && max_diff(*fa.twin, fb.coefficients) <= tol.num) {
    witness = fb.aligner.adjoint() * fa.twin_generator * fa.aligner;
    eq.used_twin = true;
  } else {
    eq.verdict = Verdict::Inequivalent;
    eq.note = "canonical coefficients differ";
    return eq;
  }
  witness = witness.sign_normalized();
  eq.witness_residual = max_abs_diff(conjugate(witness, rho_a, tol), rho_b);
  if (eq.witness_residual > 10.0 * tol.num) {
    eq.verdict = Verdict::Unknown;
    eq.note = "canonical forms match but the assembled witness failed verification";
    return eq;
  }
  eq.verdict = Verdict::Equivalent;
  eq.witness = witness;
  return eq;
}

DiagAntidiagReport check_diag_antidiag(const LocalUnitary& g, ClassTag tag, const Tolerances& tol) {
  DiagAntidiagReport r;
  r.applicable = tag == ClassTag::Product || tag == ClassTag::GHZ || tag == ClassTag::Dicke;
  bool all = true;
  for (const Unitary2& f : g.factors()) {
    DiagAntidiagReport::Factor entry;
    if (std::abs(f.b) <= tol.unit) {
      entry = {DiagAntidiagReport::Form::Diagonal, 1};
    } else if (std::abs(f.a) <= tol.unit) {
      entry = {DiagAntidiagReport::Form::Antidiagonal, -1};
    } else {
      all = false;
    }
    r.factors.push_back(entry);
  }
  r.normalizes = r.applicable && all;
  return r;
}

}  // namespace symlu
