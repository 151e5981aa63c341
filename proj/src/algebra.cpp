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

#include "ipskit/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ipskit {

IpsShape shape_of(const AlgebraDecomposition& d) {
  IpsShape s;
  for (const auto& sec : d.sectors) {
    s.dims.push_back(sec.d);
    s.cofactor_dims.push_back(sec.n);
  }
  return s;
}

IpsShape make_shape(std::vector<int> dims, std::vector<int> cofactors) {
  return IpsShape{std::move(dims), std::move(cofactors)};
}

AlgebraCheck is_algebra(const OperatorSpace& s, double tol) {
  AlgebraCheck out;
  const auto basis = s.basis();
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    worst = std::max(worst, projection_residual(s.columns, vec(Operator(basis[i].adjoint()))));
    for (std::size_t j = 0; j < basis.size(); ++j)
      worst = std::max(worst, projection_residual(s.columns, vec(Operator(basis[i] * basis[j]))));
  }
  out.worst_residual = worst;
  out.is_algebra = s.size() > 0 && worst < tol;
  return out;
}

namespace {

// Null space of X -> [X, g] for all g, on C^s.
Operator commutant_columns(const std::vector<Operator>& gens, Eigen::Index s, double rel_tol) {
  const Eigen::Index n = s * s;
  Operator gram = Operator::Zero(n, n);
  Operator id = identity(s);
  for (const auto& g : gens) {
    Operator k = kron(id, g) - kron(g.transpose(), id);
    gram.noalias() += k.adjoint() * k;
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(gram);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.size() ? ev.maxCoeff() : 0.0);
  Eigen::Index m = 0;
  while (m < ev.size() && ev(m) < rel_tol * scale) ++m;
  return es.eigenvectors().leftCols(m);
}

Operator random_element(const std::vector<Operator>& basis, Rng& rng, bool hermitian) {
  Operator x = Operator::Zero(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) {
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    x += Complex(re, im) * b;
  }
  if (hermitian) x = hermitian_part(x);
  const double nrm = x.norm();
  return nrm > 0.0 ? Operator(x / nrm) : x;
}

struct Cluster {
  std::vector<Eigen::Index> members;
};

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXd& ev, double rel_gap) {
  std::vector<Cluster> out;
  if (ev.size() == 0) return out;
  const double scale = ev.cwiseAbs().maxCoeff();
  const double gap = rel_gap * std::max(scale, 1e-300);
  out.push_back({{0}});
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    if (ev(i) - ev(i - 1) <= gap)
      out.back().members.push_back(i);
    else
      out.push_back({{i}});
  }
  return out;
}

Operator gather(const Operator& vecs, const std::vector<Eigen::Index>& idx) {
  Operator out(vecs.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = vecs.col(idx[i]);
  return out;
}

std::vector<Operator> restrict_all(const std::vector<Operator>& basis, const Operator& v) {
  std::vector<Operator> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(v.adjoint() * b * v);
  return out;
}

// One decomposition attempt on an algebra whose unit is the identity on C^s.
std::vector<Sector> decompose_unital(const std::vector<Operator>& basis, Eigen::Index s, Rng& rng,
                                     const ToleranceConfig& tol) {
  OperatorSpace alg = make_space(static_cast<int>(s), basis, 1e-8);
  if (alg.size() == 1) {
    Sector only;
    only.d = 1;
    only.n = static_cast<int>(s);
    only.isometry = identity(s);
    return {only};
  }
  std::vector<Operator> gens = {random_element(basis, rng, true), random_element(basis, rng, true)};
  Operator comm = commutant_columns(gens, s, 1e-11);

  Operator overlap = alg.columns.adjoint() * comm;
  Operator zcols(s * s, 0);
  if (overlap.size() > 0) {
    Eigen::JacobiSVD<Operator> svd(overlap, Eigen::ComputeThinU);
    Eigen::Index kz = 0;
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > 1.0 - 1e-6) ++kz;
      else if (sv(i) > 1e-6) throw NumericalError("center is ill-conditioned", {{"principal_cosine", sv(i)}});
    }
    zcols = alg.columns * svd.matrixU().leftCols(kz);
  }
  const Eigen::Index dim_center = zcols.cols();
  if (dim_center == 0) throw NumericalError("empty center");

  std::vector<Operator> zbasis;
  for (Eigen::Index i = 0; i < dim_center; ++i) zbasis.push_back(unvec(zcols.col(i), s, s));
  Operator z = random_element(zbasis, rng, true);
  Eigen::SelfAdjointEigenSolver<Operator> zes(z);
  auto clusters = cluster_eigenvalues(zes.eigenvalues(), tol.cluster);
  if (static_cast<Eigen::Index>(clusters.size()) != dim_center)
    throw NumericalError("central element eigenvalue clusters do not match center dimension",
                         {{"clusters", static_cast<double>(clusters.size())},
                          {"center_dim", static_cast<double>(dim_center)}});

  std::vector<Sector> sectors;
  for (const auto& cl : clusters) {
    Operator ek = gather(zes.eigenvectors(), cl.members);
    const Eigen::Index r = ek.cols();
    std::vector<Operator> rb = restrict_all(basis, ek);
    OperatorSpace rs = make_space(static_cast<int>(r), rb, 1e-8);
    const double root = std::sqrt(static_cast<double>(rs.size()));
    const int d = static_cast<int>(std::lround(root));
    if (std::abs(root - d) > tol.integer_guard || d * d != rs.size() || d == 0)
      throw NumericalError("sector algebra dimension is not a square",
                           {{"sector_algebra_dim", static_cast<double>(rs.size())}});
    if (r % d != 0)
      throw NumericalError("sector rank is not a multiple of the factor dimension",
                           {{"sector_rank", static_cast<double>(r)}, {"d", static_cast<double>(d)}});
    const int n = static_cast<int>(r / d);
    Sector sec;
    sec.d = d;
    sec.n = n;
    if (d == 1) {
      sec.isometry = ek;
      sectors.push_back(sec);
      continue;
    }
    std::vector<Operator> rbasis = rs.basis();
    Operator h = random_element(rbasis, rng, true);
    Eigen::SelfAdjointEigenSolver<Operator> hes(h);
    auto hcl = cluster_eigenvalues(hes.eigenvalues(), tol.cluster);
    bool shape_ok = static_cast<int>(hcl.size()) == d;
    for (const auto& c : hcl) shape_ok = shape_ok && static_cast<int>(c.members.size()) == n;
    if (!shape_ok) throw NumericalError("sector element spectrum does not split into equal blocks");
    std::vector<Operator> blocks;
    for (const auto& c : hcl) blocks.push_back(gather(hes.eigenvectors(), c.members));
    Operator y = random_element(rbasis, rng, false);
    Operator iso(r, r);
    iso.leftCols(n) = blocks[0];
    for (int a = 1; a < d; ++a) {
      Operator m = blocks[a].adjoint() * y * blocks[0];
      Eigen::JacobiSVD<Operator> msvd(m);
      const auto& sv = msvd.singularValues();
      const double smax = sv(0);
      const double smin = sv(sv.size() - 1);
      if (smax < 1e-6 || (smax - smin) > 1e-6 * smax)
        throw NumericalError("sector pairing is not a scaled unitary",
                             {{"pairing_spread", smax > 0 ? (smax - smin) / smax : 1.0}});
      iso.middleCols(static_cast<Eigen::Index>(a) * n, n) = blocks[a] * (m / smax);
    }
    // Re-orthonormalize against round-off while keeping the block layout.
    Eigen::HouseholderQR<Operator> qr(iso);
    Operator qq = qr.householderQ() * Operator::Identity(r, r);
    Operator rr = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < r; ++j) {
      const Complex dj = rr(j, j);
      if (std::abs(dj) > 0.0) qq.col(j) *= dj / std::abs(dj);
    }
    sec.isometry = ek * qq;
    sectors.push_back(sec);
  }
  return sectors;
}

}  // namespace

OperatorSpace commutant(const OperatorSpace& s, const Operator& p, double rel_tol) {
  if (!is_projector(p, 1e-10)) throw InputError("commutant: ambient must be an orthogonal projector");
  Operator q = projector_range(p, 1e-6);
  std::vector<Operator> gens;
  for (const auto& b : s.basis()) {
    if (max_abs(b - p * b * p) > 1e-9) throw InputError("commutant: element not supported on range(P)");
    gens.push_back(q.adjoint() * b * q);
  }
  const Eigen::Index r = q.cols();
  Operator cols = commutant_columns(gens, r, rel_tol);
  std::vector<Operator> lifted;
  for (Eigen::Index i = 0; i < cols.cols(); ++i) lifted.push_back(q * unvec(cols.col(i), r, r) * q.adjoint());
  return make_space(s.dim, lifted);
}

OperatorSpace center(const OperatorSpace& s, double rel_tol) {
  Operator h = Operator::Zero(s.dim, s.dim);
  for (const auto& b : s.basis()) h += b * b.adjoint() + b.adjoint() * b;
  Operator q = support_basis(h, 1e-9);
  Operator p = q * q.adjoint();
  OperatorSpace comm = commutant(s, p, rel_tol);
  Operator overlap = s.columns.adjoint() * comm.columns;
  Eigen::JacobiSVD<Operator> svd(overlap, Eigen::ComputeThinU);
  Eigen::Index k = 0;
  while (k < svd.singularValues().size() && svd.singularValues()(k) > 0.5) ++k;
  return OperatorSpace{s.dim, s.columns * svd.matrixU().leftCols(k)};
}

double DecompositionReport::max_residual() const {
  return std::max({reconstruction, isometry, orthogonality, support});
}

DecompositionReport verify_decomposition(const OperatorSpace& a, const AlgebraDecomposition& d) {
  DecompositionReport rep;
  const Eigen::Index amb = d.ambient_dim;
  Eigen::Index total = 0;
  int alg_dim = 0;
  for (const auto& s : d.sectors) {
    total += s.isometry.cols();
    alg_dim += s.d * s.d;
  }
  Operator all(amb, total);
  Eigen::Index off = 0;
  bool shapes_ok = true;
  for (const auto& s : d.sectors) {
    shapes_ok = shapes_ok && s.isometry.rows() == amb && s.isometry.cols() == s.d * s.n;
    if (s.isometry.rows() == amb) all.middleCols(off, s.isometry.cols()) = s.isometry;
    off += s.isometry.cols();
  }
  if (!shapes_ok) return rep;
  rep.isometry = max_abs(all.adjoint() * all - identity(total));
  for (std::size_t k = 0; k < d.sectors.size(); ++k)
    for (std::size_t l = k + 1; l < d.sectors.size(); ++l)
      rep.orthogonality = std::max(rep.orthogonality,
                                   max_abs(d.sectors[k].isometry.adjoint() * d.sectors[l].isometry));
  const double supp_rank = d.support_projector.trace().real();
  rep.support = max_abs(all * all.adjoint() - d.support_projector);
  rep.dimensions_ok = alg_dim == a.size() && std::abs(supp_rank - static_cast<double>(total)) < 1e-6;

  Operator units(amb * amb, alg_dim);
  Eigen::Index col = 0;
  for (const auto& s : d.sectors) {
    for (int i = 0; i < s.d; ++i)
      for (int j = 0; j < s.d; ++j) {
        Operator m = kron(ket_bra(s.d, i, j), identity(s.n)) / std::sqrt(static_cast<double>(s.n));
        units.col(col++) = vec(Operator(s.isometry * m * s.isometry.adjoint()));
      }
  }
  double worst = 0.0;
  for (Eigen::Index i = 0; i < units.cols(); ++i)
    worst = std::max(worst, projection_residual(a.columns, units.col(i)));
  if (units.cols() > 0)
    for (Eigen::Index i = 0; i < a.size(); ++i)
      worst = std::max(worst, projection_residual(units, a.columns.col(i)));
  rep.reconstruction = worst;
  return rep;
}

AlgebraDecomposition canonical_decompose(const OperatorSpace& a, std::uint64_t seed,
                                         const ToleranceConfig& tol) {
  if (a.size() == 0) throw InputError("canonical_decompose: empty operator space");
  const auto basis = a.basis();
  Operator h = Operator::Zero(a.dim, a.dim);
  for (const auto& b : basis) h += b * b.adjoint() + b.adjoint() * b;
  Operator q = support_basis(h, tol.support);
  const Eigen::Index s = q.cols();
  std::vector<Operator> rbasis = restrict_all(basis, q);
  OperatorSpace rs = make_space(static_cast<int>(s), rbasis, 1e-8);
  if (rs.size() != a.size())
    throw NumericalError("algebra is not supported on its own support",
                         {{"restricted_dim", static_cast<double>(rs.size())}});
  std::vector<Operator> rsb = rs.basis();

  Rng rng(seed);
  std::map<std::string, double> last;
  std::string last_msg = "canonical decomposition failed";
  for (int attempt = 0; attempt <= tol.max_retries; ++attempt) {
    try {
      std::vector<Sector> secs = decompose_unital(rsb, s, rng, tol);
      AlgebraDecomposition out;
      out.ambient_dim = a.dim;
      out.algebra_dim = static_cast<int>(a.size());
      out.support_projector = q * q.adjoint();
      for (auto& sec : secs) sec.isometry = q * sec.isometry;
      std::stable_sort(secs.begin(), secs.end(), [](const Sector& x, const Sector& y) {
        if (x.d != y.d) return x.d > y.d;
        return x.n > y.n;
      });
      out.sectors = std::move(secs);
      DecompositionReport rep = verify_decomposition(a, out);
      if (!rep.pass(tol.structure)) {
        last = {{"reconstruction", rep.reconstruction},
                {"isometry", rep.isometry},
                {"orthogonality", rep.orthogonality},
                {"support", rep.support},
                {"dimensions_ok", rep.dimensions_ok ? 1.0 : 0.0}};
        last_msg = "decomposition failed verification";
        continue;
      }
      return out;
    } catch (const NumericalError& e) {
      last = e.residuals();
      last_msg = e.what();
    }
  }
  throw NumericalError(last_msg, last);
}

}  // namespace ipskit
