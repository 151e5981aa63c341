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

#include "ipskit/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ipskit {

Vector vec(const Operator& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Operator unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw InputError("unvec: size mismatch");
  return Eigen::Map<const Operator>(v.data(), rows, cols);
}

Operator unvec(const Vector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  return unvec(v, d, d);
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Operator identity(Eigen::Index d) { return Operator::Identity(d, d); }

Operator basis_projector(Eigen::Index d, const std::vector<int>& indices) {
  Operator p = Operator::Zero(d, d);
  for (int i : indices) p(i, i) = 1.0;
  return p;
}

Operator ket_bra(Eigen::Index d, int i, int j) {
  Operator x = Operator::Zero(d, d);
  x(i, j) = 1.0;
  return x;
}

double max_abs(const Operator& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& x, double tol) {
  return x.rows() == x.cols() && max_abs(x - x.adjoint()) <= tol;
}

bool is_projector(const Operator& p, double tol) {
  if (p.rows() != p.cols()) return false;
  return max_abs(p - p.adjoint()) <= tol && max_abs(p * p - p) <= tol;
}

Operator hermitian_part(const Operator& x) { return 0.5 * (x + x.adjoint()); }

NullSpaces null_spaces(const Operator& m, double rel_tol) {
  NullSpaces out;
  const Eigen::Index n = m.rows();
  Eigen::BDCSVD<Operator> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  out.singular_values = s;
  const double smax = s.size() ? s(0) : 0.0;
  const double cut = rel_tol * std::max(1.0, smax);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  out.right = svd.matrixV().rightCols(m.cols() - rank);
  out.left = svd.matrixU().rightCols(n - rank);
  double smallest_kept = rank > 0 ? s(rank - 1) : std::max(1.0, smax);
  out.gap = smallest_kept / cut;
  return out;
}

Operator orthonormal_columns(const Operator& cols, double rel_tol) {
  if (cols.cols() == 0) return Operator(cols.rows(), 0);
  Eigen::BDCSVD<Operator> svd(cols, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return Operator(cols.rows(), 0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > rel_tol * s(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

Operator projector_range(const Operator& p, double tol) {
  const Eigen::Index n = p.rows();
  const double tr = p.trace().real();
  const auto r = static_cast<Eigen::Index>(std::llround(tr));
  if (std::abs(tr - static_cast<double>(r)) > 0.01 || r < 0 || r > n)
    throw InputError("projector trace is not an integer rank");
  Operator work = p;
  Operator q(n, r);
  std::vector<bool> used(n, false);
  for (Eigen::Index k = 0; k < r; ++k) {
    Eigen::Index best = -1;
    double best_norm = -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double nj = work.col(j).norm();
      if (nj > best_norm + 1e-12) {
        best_norm = nj;
        best = j;
      }
    }
    if (best < 0 || best_norm < tol) throw InputError("projector range is rank deficient");
    used[best] = true;
    Vector v = work.col(best) / best_norm;
    q.col(k) = v;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[j]) continue;
      work.col(j) -= v * v.dot(work.col(j));
    }
  }
  return q;
}

Operator support_basis(const Operator& h, double rel_tol) {
  const Eigen::Index n = h.rows();
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(h));
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = ev.size() ? std::max(ev.maxCoeff(), 0.0) : 0.0;
  if (top == 0.0) return Operator(n, 0);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = n - 1; i >= 0; --i)
    if (ev(i) > rel_tol * top) keep.push_back(i);
  if (static_cast<Eigen::Index>(keep.size()) == n) return identity(n);
  Operator q(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) q.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  return q;
}

Operator pinv_sqrt(const Operator& h, double rel_cutoff) {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(h));
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = ev.size() ? ev.maxCoeff() : 0.0;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (top > 0.0 && ev(i) > rel_cutoff * top) inv(i) = 1.0 / std::sqrt(ev(i));
  return es.eigenvectors() * inv.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Operator sqrtm_psd(const Operator& h) {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(h));
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Operator trace_out_first(const Operator& x, Eigen::Index da, Eigen::Index db) {
  Operator out = Operator::Zero(db, db);
  for (Eigen::Index a = 0; a < da; ++a) out += x.block(a * db, a * db, db, db);
  return out;
}

Operator trace_out_second(const Operator& x, Eigen::Index da, Eigen::Index db) {
  Operator out(da, da);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index b = 0; b < da; ++b) out(a, b) = x.block(a * db, b * db, db, db).trace();
  return out;
}

Operator orthogonal_complement(const Operator& q, double tol) {
  const Eigen::Index n = q.rows();
  if (q.cols() == n) return Operator(n, 0);
  Operator p = identity(n) - q * q.adjoint();
  return projector_range(hermitian_part(p), tol);
}

double projection_residual(const Operator& u, const Vector& v) {
  if (u.cols() == 0) return v.norm();
  return (v - u * (u.adjoint() * v)).norm();
}

double standard_normal(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

Operator gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Operator g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  return g;
}

Operator random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Operator g = gaussian_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Operator> qr(g);
  Operator q = qr.householderQ() * Operator::Identity(rows, cols);
  Operator r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex dj = r(j, j);
    if (std::abs(dj) > 0.0) q.col(j) *= dj / std::abs(dj);
  }
  return q;
}

Operator random_unitary(Eigen::Index d, Rng& rng) { return random_isometry(d, d, rng); }

Operator random_hermitian(Eigen::Index d, Rng& rng) {
  return hermitian_part(gaussian_matrix(d, d, rng));
}

Operator random_density(Eigen::Index d, Rng& rng, Eigen::Index rank) {
  if (rank < 0) rank = d;
  Operator g = gaussian_matrix(d, rank, rng);
  Operator rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Vector random_state_vector(Eigen::Index d, Rng& rng) {
  Operator g = gaussian_matrix(d, 1, rng);
  return g.col(0) / g.col(0).norm();
}

}  // namespace ipskit
