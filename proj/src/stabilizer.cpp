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

#include "symlu/stabilizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "symlu/error.hpp"

namespace symlu {

namespace {

constexpr double kHalf = 0.5;

// Reduced row echelon form of the rows of `m`, then Gram-Schmidt, each row
// scaled to Euclidean norm 1/2. The echelon step makes the result
// independent of the arbitrary orthonormal basis an SVD hands back.
Eigen::MatrixXd canonical_rows(Eigen::MatrixXd m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    m.col(c).segment(r, rows - r).cwiseAbs().maxCoeff(&pivot);
    pivot += r;
    if (std::abs(m(pivot, c)) < 1e-9) continue;
    m.row(r).swap(m.row(pivot));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != r) m.row(i) -= m(i, c) * m.row(r);
    }
    ++r;
  }
  Eigen::MatrixXd out = m.topRows(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) out.row(i) -= out.row(i).dot(out.row(j)) * out.row(j);
    out.row(i).normalize();
  }
  return kHalf * out;
}

std::vector<LocalAlgebraElement> rows_to_elements(const Eigen::MatrixXd& rows) {
  std::vector<LocalAlgebraElement> out;
  out.reserve(static_cast<std::size_t>(rows.rows()));
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    out.push_back(LocalAlgebraElement::from_coordinates(rows.row(i).transpose()));
  }
  return out;
}

// Right singular vectors spanning the numerical row space of m, with the
// absolute threshold `cut`.
Eigen::MatrixXd row_space(const Eigen::MatrixXd& m, double cut) {
  if (m.size() == 0) return Eigen::MatrixXd(m.cols(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().leftCols(rank);
}

struct Preimage {
  int symbol = 0;
  double coeff = 0.0;
};

// inverse[g][j]: the symbol p with [E_g, sigma_p] = coeff * sigma_j.
std::array<std::array<Preimage, 4>, 3> inverse_bracket_table() {
  std::array<std::array<Preimage, 4>, 3> inv{};
  for (int g = 0; g < 3; ++g) {
    for (int p = 1; p <= 3; ++p) {
      const BracketTerm t = single_qubit_bracket(g, p);
      if (t.coeff != 0.0) inv[g][t.symbol] = {p, t.coeff};
    }
  }
  return inv;
}

// Upper-triangular factor R of the ad matrix, accumulated over row chunks so
// that the full (rows x 3n) matrix is never stored.
class StreamingQr {
 public:
  explicit StreamingQr(Eigen::Index cols) : cols_(cols), r_(Eigen::MatrixXd::Zero(0, cols)) {}

  void add(const Eigen::MatrixXd& rows) {
    Eigen::MatrixXd stacked(r_.rows() + rows.rows(), cols_);
    stacked << r_, rows;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(stacked);
    const Eigen::Index keep = std::min(stacked.rows(), cols_);
    r_ = qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>();
  }

  const Eigen::MatrixXd& r() const { return r_; }

 private:
  Eigen::Index cols_;
  Eigen::MatrixXd r_;
};

}  // namespace

Eigen::MatrixXd AlgebraBasis::coordinates() const {
  Eigen::MatrixXd m(3 * n, elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j) {
    m.col(static_cast<Eigen::Index>(j)) = elements[j].coordinates();
  }
  return m;
}

AlgebraBasis AlgebraBasis::from_span(std::size_t n,
                                     const std::vector<LocalAlgebraElement>& spanning,
                                     const Tolerances& tol) {
  AlgebraBasis out;
  out.n = n;
  if (spanning.empty()) return out;
  Eigen::MatrixXd m(spanning.size(), 3 * n);
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].qubits() != n) {
      throw Error(ErrorKind::DimensionMismatch, "spanning element has wrong qubit count");
    }
    m.row(static_cast<Eigen::Index>(i)) = spanning[i].coordinates().transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  const Eigen::MatrixXd basis = row_space(m, std::max(tol.rank * smax, 1e-300));
  out.elements = rows_to_elements(canonical_rows(basis.transpose()));
  return out;
}

AlgebraBasis stabilizer_basis(const PauliOperator& rho, const Tolerances& tol) {
  const std::size_t n = rho.qubits();
  if (n > kMaxStabilizerQubits) {
    throw Error(ErrorKind::ResourceLimit,
                "stabilizer computation limited to " + std::to_string(kMaxStabilizerQubits) +
                    " qubits");
  }
  const auto cols = static_cast<Eigen::Index>(3 * n);

  // Row keys of the ad matrix: every key one local bracket away from a term.
  std::vector<std::uint64_t> keys;
  for (const auto& [packed, s] : rho.terms()) {
    if (s == 0.0) continue;
    const PauliIndex idx(n, packed);
    for (std::size_t k = 0; k < n; ++k) {
      const int j = idx[k];
      if (j == 0) continue;
      for (int g = 0; g < 3; ++g) {
        const BracketTerm t = single_qubit_bracket(g, j);
        if (t.coeff != 0.0) keys.push_back(idx.with(k, t.symbol).packed());
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  static const auto inv = inverse_bracket_table();
  StreamingQr qr(cols);
  constexpr std::size_t kChunk = 2048;
  for (std::size_t start = 0; start < keys.size(); start += kChunk) {
    const std::size_t len = std::min(kChunk, keys.size() - start);
    Eigen::MatrixXd chunk = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(len), cols);
    for (std::size_t r = 0; r < len; ++r) {
      const PauliIndex out(n, keys[start + r]);
      for (std::size_t k = 0; k < n; ++k) {
        const int j = out[k];
        for (int g = 0; g < 3; ++g) {
          const Preimage& p = inv[g][j];
          if (p.coeff == 0.0) continue;
          const double s = rho.coeff(out.with(k, p.symbol));
          chunk(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(3 * k + g)) = p.coeff * s;
        }
      }
    }
    qr.add(chunk);
  }

  Eigen::MatrixXd r = qr.r();
  if (r.rows() < cols) {
    Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(cols, cols);
    padded.topRows(r.rows()) = r;
    r = padded;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;

  AlgebraBasis out;
  out.n = n;
  Eigen::Index rank = 0;
  if (smax > 0.0) {
    const double cut = tol.rank * smax;
    while (rank < s.size() && s(rank) >= cut) ++rank;
    if (rank > 0 && rank < s.size() && s(rank) > 0.0 && s(rank - 1) / s(rank) < tol.gap) {
      throw Error(ErrorKind::IllConditioned,
                  "singular value gap " + std::to_string(s(rank - 1) / s(rank)) +
                      " at the rank threshold is below " + std::to_string(tol.gap));
    }
  }
  if (rank == cols) return out;
  const Eigen::MatrixXd null = svd.matrixV().rightCols(cols - rank);
  out.elements = rows_to_elements(canonical_rows(null.transpose()));
  for (const auto& m : out.elements) {
    out.residual = std::max(out.residual, ad_action(m, rho).max_abs());
  }
  return out;
}

int projection_dim(const AlgebraBasis& k, std::size_t qubit, const Tolerances& tol) {
  if (qubit >= k.n) throw Error(ErrorKind::ParamOutOfRange, "qubit index out of range");
  if (k.dim() == 0) return 0;
  Eigen::MatrixXd parts(3, k.dim());
  double scale = 0.0;
  for (std::size_t j = 0; j < k.dim(); ++j) {
    const Su2Element& p = k.elements[j][qubit];
    parts.col(static_cast<Eigen::Index>(j)) << p.a, p.b, p.c;
    scale = std::max(scale, k.elements[j].coordinates().norm());
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(parts);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol.rank * scale) ++rank;
  }
  if (rank == 2) {
    throw Error(ErrorKind::Rank2Anomaly,
                "qubit " + std::to_string(qubit) + " has a two-dimensional projection");
  }
  return rank;
}

std::vector<int> projection_dims(const AlgebraBasis& k, const Tolerances& tol) {
  std::vector<int> dims;
  dims.reserve(k.n);
  for (std::size_t i = 0; i < k.n; ++i) dims.push_back(projection_dim(k, i, tol));
  return dims;
}

std::size_t weight(const LocalAlgebraElement& m, const Tolerances& tol) {
  std::size_t w = 0;
  for (const auto& p : m.parts()) {
    if (p.hs_norm() > tol.sparse) ++w;
  }
  return w;
}

double closure_residual(const AlgebraBasis& k) {
  if (k.dim() < 2) return 0.0;
  const Eigen::MatrixXd q = 2.0 * k.coordinates();  // orthonormal columns
  double worst = 0.0;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    for (std::size_t j = i + 1; j < k.dim(); ++j) {
      const Eigen::VectorXd b = bracket(k.elements[i], k.elements[j]).coordinates();
      worst = std::max(worst, (b - q * (q.transpose() * b)).norm());
    }
  }
  return worst;
}

Unitary2 rotation_to(const Eigen::Vector3d& from, const Eigen::Vector3d& to,
                     const Eigen::Vector3d& fallback_axis) {
  const Eigen::Vector3d f = from.normalized();
  const Eigen::Vector3d t = to.normalized();
  Eigen::Vector3d axis = f.cross(t);
  const double sin_angle = axis.norm();
  const double cos_angle = std::clamp(f.dot(t), -1.0, 1.0);
  if (sin_angle < 1e-14) {
    if (cos_angle > 0) return Unitary2::identity();
    axis = fallback_axis.normalized();
  } else {
    axis /= sin_angle;
  }
  const double angle = std::atan2(sin_angle, cos_angle);
  // A rotation by `angle` about `axis` is exp(-i angle/2 axis.sigma).
  return exp_su2(Su2Element::from_sigma_vector(-axis), 0.5 * angle);
}

BlockDecomposition decompose_algebra(const AlgebraBasis& k, const Tolerances& tol) {
  const std::size_t n = k.n;
  BlockDecomposition out;
  out.n = n;
  out.aligner = LocalUnitary::identity(n);
  const auto d = static_cast<Eigen::Index>(k.dim());
  if (d == 0) {
    for (std::size_t i = 0; i < n; ++i) out.r_qubits.push_back(i);
    return out;
  }

  const double resid = closure_residual(k);
  if (resid > tol.num) {
    throw Error(ErrorKind::NotClosed,
                "bracket leaves the span by " + std::to_string(resid));
  }

  // Adjoint matrices in the orthonormal basis Q = 2 * coordinates.
  const Eigen::MatrixXd q = 2.0 * k.coordinates();
  std::vector<Eigen::MatrixXd> ad(static_cast<std::size_t>(d), Eigen::MatrixXd::Zero(d, d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const LocalAlgebraElement b = bracket(LocalAlgebraElement::from_coordinates(q.col(i)),
                                            LocalAlgebraElement::from_coordinates(q.col(j)));
      ad[static_cast<std::size_t>(i)].col(j) = q.transpose() * b.coordinates();
    }
  }
  Eigen::MatrixXd killing(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      killing(i, j) = (ad[static_cast<std::size_t>(i)] * ad[static_cast<std::size_t>(j)]).trace();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(killing);
  std::vector<Eigen::Index> center_idx;
  std::vector<Eigen::Index> semisimple_idx;
  for (Eigen::Index i = 0; i < d; ++i) {
    (std::abs(eig.eigenvalues()(i)) <= tol.rank ? center_idx : semisimple_idx).push_back(i);
  }
  Eigen::MatrixXd center(q.rows(), static_cast<Eigen::Index>(center_idx.size()));
  for (std::size_t i = 0; i < center_idx.size(); ++i) {
    center.col(static_cast<Eigen::Index>(i)) = q * eig.eigenvectors().col(center_idx[i]);
  }
  Eigen::MatrixXd semi(q.rows(), static_cast<Eigen::Index>(semisimple_idx.size()));
  for (std::size_t i = 0; i < semisimple_idx.size(); ++i) {
    semi.col(static_cast<Eigen::Index>(i)) = q * eig.eigenvectors().col(semisimple_idx[i]);
  }

  // Per qubit: the row space of the semisimple parts identifies the ideal
  // acting there; the center parts give the abelian directions.
  const double cut = tol.rank;
  std::vector<Eigen::MatrixXd> ideal_space(n);
  std::vector<Eigen::MatrixXd> center_dir(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<Eigen::Index>(3 * i);
    ideal_space[i] = row_space(semi.middleRows(row, 3), cut);
    center_dir[i] = row_space(center.middleRows(row, 3).transpose(), cut);
    const Eigen::Index ps = ideal_space[i].cols();
    const Eigen::Index pc = center_dir[i].cols();
    if ((ps != 0 && ps != 3) || pc > 1 || (ps != 0 && pc != 0)) {
      throw Error(ps == 2 ? ErrorKind::Rank2Anomaly : ErrorKind::NotClosed,
                  "qubit " + std::to_string(i) +
                      " does not split into a block or an abelian direction");
    }
  }

  std::vector<std::vector<std::size_t>> clusters;
  std::vector<Eigen::MatrixXd> cluster_proj;
  for (std::size_t i = 0; i < n; ++i) {
    if (ideal_space[i].cols() == 0) {
      (center_dir[i].cols() == 1 ? out.s_qubits : out.r_qubits).push_back(i);
      continue;
    }
    const Eigen::MatrixXd proj = ideal_space[i] * ideal_space[i].transpose();
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size() && !placed; ++c) {
      const double diff = (proj - cluster_proj[c]).cwiseAbs().maxCoeff();
      if (diff < 1e-6) {
        clusters[c].push_back(i);
        placed = true;
      } else if ((proj * cluster_proj[c]).cwiseAbs().maxCoeff() > 1e-6) {
        throw Error(ErrorKind::NotClosed, "semisimple part is not a sum of su(2) blocks");
      }
    }
    if (!placed) {
      clusters.push_back({i});
      cluster_proj.push_back(proj);
    }
  }
  if (static_cast<Eigen::Index>(3 * clusters.size()) != semi.cols()) {
    throw Error(ErrorKind::NotClosed, "semisimple dimension does not match block count");
  }

  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const std::size_t i = clusters[c].front();
    const Eigen::MatrixXd ideal = semi * ideal_space[i];  // 3n x 3
    std::array<LocalAlgebraElement, 3> e;
    for (int j = 0; j < 3; ++j) e[j] = LocalAlgebraElement::from_coordinates(ideal.col(j));

    // P: the element with the largest i-th part; U': the one whose i-th part
    // is most orthogonal to P_i.
    int ip = 0;
    for (int j = 1; j < 3; ++j) {
      if (e[j][i].hs_norm() > e[ip][i].hs_norm()) ip = j;
    }
    const LocalAlgebraElement v = (1.0 / e[ip][i].hs_norm()) * e[ip];
    int iu = -1;
    double best = 2.0;
    for (int j = 0; j < 3; ++j) {
      if (j == ip || e[j][i].hs_norm() == 0.0) continue;
      const double cosine = std::abs(hs_inner(e[j][i], v[i])) / e[j][i].hs_norm();
      if (cosine < best) {
        best = cosine;
        iu = j;
      }
    }
    const LocalAlgebraElement uw = bracket(e[iu], v);
    const LocalAlgebraElement w = (1.0 / uw[i].hs_norm()) * uw;
    const LocalAlgebraElement u = bracket(v, w);
    out.blocks.push_back({clusters[c], u, v, w});

    for (std::size_t b : clusters[c]) {
      const Unitary2 h =
          rotation_to(u[b].sigma_vector(), Su2Element::A().sigma_vector(), Eigen::Vector3d::UnitX());
      const Unitary2 phase = rotation_to(conjugate(h, v[b]).sigma_vector(),
                                         Su2Element::B().sigma_vector(), Eigen::Vector3d::UnitZ());
      out.aligner[b] = phase * h;
    }
  }

  if (!out.s_qubits.empty()) {
    std::vector<LocalAlgebraElement> cbasis;
    for (Eigen::Index j = 0; j < center.cols(); ++j) {
      cbasis.push_back(LocalAlgebraElement::from_coordinates(center.col(j)));
    }
    out.s_basis = AlgebraBasis::from_span(n, cbasis, tol).elements;
    for (std::size_t s : out.s_qubits) {
      const Eigen::Vector3d dir = center_dir[s].col(0);  // (a, b, c)
      const Su2Element m{dir(0), dir(1), dir(2)};
      out.aligner[s] =
          rotation_to(m.sigma_vector(), Su2Element::A().sigma_vector(), Eigen::Vector3d::UnitX());
    }
  }
  return out;
}

BlockRelationReport verify_block_relations(const BlockDecomposition& d, const Tolerances& tol) {
  BlockRelationReport report;
  auto diff = [](const LocalAlgebraElement& x, const LocalAlgebraElement& y) {
    return (x - y).hs_norm();
  };
  for (const Block& blk : d.blocks) {
    BlockRelationReport::Entry e;
    e.uv_w = diff(bracket(blk.u, blk.v), blk.w);
    e.vw_u = diff(bracket(blk.v, blk.w), blk.u);
    e.wu_v = diff(bracket(blk.w, blk.u), blk.v);
    const Su2Element standard[3] = {0.5 * Su2Element::A(), 0.5 * Su2Element::B(),
                                    0.5 * Su2Element::C()};
    for (std::size_t b : blk.qubits) {
      const Su2Element t[3] = {blk.u[b], blk.v[b], blk.w[b]};
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
          const double target = x == y ? 1.0 : 0.0;
          e.orthonormality = std::max(e.orthonormality, std::abs(hs_inner(t[x], t[y]) - target));
        }
        if (b < d.aligner.qubits()) {
          e.alignment = std::max(e.alignment, (conjugate(d.aligner[b], t[x]) - standard[x]).hs_norm());
        }
      }
    }
    report.ok = report.ok && e.uv_w < tol.num && e.vw_u < tol.num && e.wu_v < tol.num &&
                e.orthonormality < tol.orth && e.alignment < tol.num;
    report.blocks.push_back(e);
  }
  return report;
}

}  // namespace symlu
