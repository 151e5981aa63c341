// Copyright 2026 The ipskit Authors
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

#include "ipskit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ipskit {

std::vector<Operator> OperatorSpace::basis() const {
  std::vector<Operator> out;
  for (Eigen::Index i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

OperatorSpace make_space(int dim, const std::vector<Operator>& ops, double rel_tol) {
  Operator cols(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != dim || ops[i].cols() != dim) throw InputError("operator space: wrong dimension");
    cols.col(static_cast<Eigen::Index>(i)) = vec(ops[i]);
  }
  return space_from_columns(dim, cols, rel_tol);
}

OperatorSpace space_from_columns(int dim, const Operator& cols, double rel_tol) {
  return OperatorSpace{dim, orthonormal_columns(cols, rel_tol)};
}

double gram_residual(const OperatorSpace& s) {
  return max_abs(s.columns.adjoint() * s.columns - identity(s.size()));
}

double containment_residual(const OperatorSpace& a, const OperatorSpace& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    worst = std::max(worst, projection_residual(b.columns, a.columns.col(i)));
  return worst;
}

double subspace_distance(const OperatorSpace& a, const OperatorSpace& b) {
  if (a.size() != b.size()) return 1.0;
  return std::max(containment_residual(a, b), containment_residual(b, a));
}

SpectralData spectral_data(const Superoperator& s) {
  SpectralData out;
  Eigen::ComplexSchur<Operator> schur(s.matrix);
  out.schur_t = schur.matrixT();
  out.schur_u = schur.matrixU();
  Eigen::ComplexEigenSolver<Operator> right(s.matrix);
  Eigen::ComplexEigenSolver<Operator> left(Operator(s.matrix.adjoint()));
  out.eigenvalues = right.eigenvalues();
  out.right_vectors = right.eigenvectors();
  const Eigen::Index n = out.eigenvalues.size();
  out.left_vectors = Operator(n, n);
  std::vector<bool> used(n, false);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double dj = std::abs(std::conj(left.eigenvalues()(j)) - out.eigenvalues(k));
      if (dj < dist) {
        dist = dj;
        best = j;
      }
    }
    used[best] = true;
    out.left_vectors.col(k) = left.eigenvectors().col(best);
  }
  return out;
}

double spectral_radius(const Superoperator& s) {
  Eigen::ComplexEigenSolver<Operator> es(s.matrix, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

// Swap diagonal entries k and k+1 of an upper-triangular T with a
// unitary rotation, updating U so that U T U^dagger is unchanged.
void swap_adjacent(Operator& t, Operator& u, Eigen::Index k) {
  const Complex t11 = t(k, k);
  const Complex t22 = t(k + 1, k + 1);
  const Complex t12 = t(k, k + 1);
  Complex x1 = t12;
  Complex x2 = t22 - t11;
  const double nrm = std::hypot(std::abs(x1), std::abs(x2));
  if (nrm == 0.0) return;
  x1 /= nrm;
  x2 /= nrm;
  Eigen::Matrix2cd g;
  g << x1, -std::conj(x2), x2, std::conj(x1);
  const Eigen::Index n = t.rows();
  Operator rows = t.middleRows(k, 2);
  t.middleRows(k, 2) = g.adjoint() * rows;
  Operator cols = t.middleCols(k, 2);
  t.middleCols(k, 2) = cols * g;
  Operator uc = u.middleCols(k, 2);
  u.middleCols(k, 2) = uc * g;
  t(k + 1, k) = 0.0;
  (void)n;
}

int square_dim(const Superoperator& s) {
  if (s.dim_in != s.dim_out) throw InputError("spectral analysis needs a square channel");
  return s.dim_in;
}

}  // namespace

Eigen::Index reorder_schur(Operator& t, Operator& u, const std::function<bool(Complex)>& select) {
  const Eigen::Index n = t.rows();
  Eigen::Index placed = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!select(t(k, k))) continue;
    for (Eigen::Index j = k - 1; j >= placed; --j) swap_adjacent(t, u, j);
    ++placed;
  }
  return placed;
}

InvariantPair fixed_spaces(const Superoperator& s, const ToleranceConfig& tol) {
  const int d = square_dim(s);
  const Eigen::Index n = s.matrix.rows();
  NullSpaces ns = null_spaces(s.matrix - Operator::Identity(n, n), tol.rank);
  InvariantPair out;
  out.right = OperatorSpace{d, ns.right};
  out.left = OperatorSpace{d, ns.left};
  out.eigenvalues = Vector::Ones(ns.right.cols());
  out.gap = ns.gap;
  if (ns.right.cols() == 0) throw NumericalError("no fixed point found", {{"gap", ns.gap}});
  return out;
}

OperatorSpace fixed_space(const QuantumChannel& ch, const ToleranceConfig& tol) {
  return fixed_spaces(to_superoperator(ch), tol).right;
}

OperatorSpace fixed_space_adjoint(const QuantumChannel& ch, const ToleranceConfig& tol) {
  return fixed_spaces(to_superoperator(ch), tol).left;
}

InvariantPair rotating_spaces(const Superoperator& s, const ToleranceConfig& tol) {
  const int d = square_dim(s);
  const double ptol = tol.peripheral;
  auto peripheral = [ptol](Complex z) { return std::abs(std::abs(z) - 1.0) < ptol; };
  auto interior = [&peripheral](Complex z) { return !peripheral(z); };
  Eigen::ComplexSchur<Operator> schur(s.matrix);
  if (schur.info() != Eigen::Success) throw NumericalError("Schur decomposition failed");
  const Eigen::Index n = s.matrix.rows();

  Operator t = schur.matrixT();
  Operator u = schur.matrixU();
  const Eigen::Index m = reorder_schur(t, u, peripheral);
  InvariantPair out;
  out.right = OperatorSpace{d, u.leftCols(m)};
  out.eigenvalues = t.diagonal().head(m);

  Operator t2 = schur.matrixT();
  Operator u2 = schur.matrixU();
  const Eigen::Index r = reorder_schur(t2, u2, interior);
  out.left = OperatorSpace{d, u2.rightCols(n - r)};

  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex z = schur.matrixT()(i, i);
    if (!peripheral(z)) gap = std::min(gap, std::abs(std::abs(z) - 1.0) / ptol);
  }
  out.gap = gap;
  if (r + m != n) throw NumericalError("peripheral split inconsistent");
  if (gap < 10.0)
    throw NumericalError("peripheral spectrum is not separated from the interior", {{"gap", gap}});
  return out;
}

OperatorSpace rotating_space(const QuantumChannel& ch, const ToleranceConfig& tol) {
  return rotating_spaces(to_superoperator(ch), tol).right;
}

OperatorSpace rotating_space_adjoint(const QuantumChannel& ch, const ToleranceConfig& tol) {
  return rotating_spaces(to_superoperator(ch), tol).left;
}

Operator SpectralProjector::apply(const Operator& x) const {
  return unvec(right * (left_dual.adjoint() * vec(x)), dim, dim);
}

SpectralProjector projector_from_pair(const InvariantPair& pair, const ToleranceConfig& tol) {
  (void)tol;
  SpectralProjector p;
  p.dim = pair.right.dim;
  const Operator& r = pair.right.columns;
  const Operator& w = pair.left.columns;
  if (r.cols() != w.cols()) throw NumericalError("left and right invariant spaces differ in dimension");
  Operator g = w.adjoint() * r;
  Eigen::JacobiSVD<Operator> svd(g);
  const auto& sv = svd.singularValues();
  if (sv.size() > 0 && sv(sv.size() - 1) < 1e-10 * sv(0))
    throw NumericalError("eigenvalue pairing is numerically singular",
                         {{"pairing_condition", sv(0) / std::max(sv(sv.size() - 1), 1e-300)}});
  p.right = r;
  p.left_dual = w * g.inverse().adjoint();
  return p;
}

SpectralProjector asymptotic_projector(const Superoperator& s, const ToleranceConfig& tol) {
  return projector_from_pair(fixed_spaces(s, tol), tol);
}

SpectralProjector asymptotic_projector(const QuantumChannel& ch, const ToleranceConfig& tol) {
  return asymptotic_projector(to_superoperator(ch), tol);
}

SpectralProjector peripheral_projector(const Superoperator& s, const ToleranceConfig& tol) {
  return projector_from_pair(rotating_spaces(s, tol), tol);
}

SpectralProjector peripheral_projector(const QuantumChannel& ch, const ToleranceConfig& tol) {
  return peripheral_projector(to_superoperator(ch), tol);
}

SemisimplicityReport peripheral_semisimplicity(const Superoperator& s, const ToleranceConfig& tol) {
  square_dim(s);
  SemisimplicityReport rep;
  Eigen::ComplexEigenSolver<Operator> es(s.matrix, false);
  std::vector<std::vector<Complex>> groups;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Complex z = es.eigenvalues()(i);
    if (std::abs(std::abs(z) - 1.0) >= tol.peripheral) continue;
    bool joined = false;
    for (auto& g : groups) {
      if (std::abs(g.front() - z) < tol.peripheral) {
        g.push_back(z);
        joined = true;
        break;
      }
    }
    if (!joined) groups.push_back({z});
  }
  const Eigen::Index n = s.matrix.rows();
  for (const auto& g : groups) {
    Complex mean = 0.0;
    for (auto z : g) mean += z;
    mean /= static_cast<double>(g.size());
    Eigen::BDCSVD<Operator> svd(s.matrix - mean * Operator::Identity(n, n));
    const auto& sv = svd.singularValues();
    const double cut = 1e-7 * std::max(1.0, sv(0));
    int geo = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) < cut) ++geo;
    rep.cluster_values.push_back(mean);
    rep.algebraic.push_back(static_cast<int>(g.size()));
    rep.geometric.push_back(geo);
    if (geo != static_cast<int>(g.size())) ++rep.defective_clusters;
  }
  rep.clusters = static_cast<int>(groups.size());
  return rep;
}

}  // namespace ipskit
