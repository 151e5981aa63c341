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

#include "ipskit/ips.hpp"

#include <algorithm>
#include <cmath>

namespace ipskit {

std::string to_string(IpsKind kind) {
  switch (kind) {
    case IpsKind::kNoiseless: return "noiseless";
    case IpsKind::kUnitarilyNoiseless: return "unitarily-noiseless";
    case IpsKind::kUnconditional: return "unconditional";
  }
  return "unknown";
}

QuantumChannel transpose_channel(const QuantumChannel& ch, const Operator& p, const ToleranceConfig& tol) {
  validate(ch);
  if (p.rows() != ch.dim_in || !is_projector(p, tol.projector))
    throw InputError("transpose channel needs an orthogonal projector on the input space");
  Operator ep = ipskit::apply(ch, p);
  if (max_abs(ep) < 1e-14) throw NumericalError("E(P) vanishes", {{"norm_E_P", max_abs(ep)}});
  Operator n_inv = pinv_sqrt(ep, 1e-10);
  QuantumChannel out;
  out.dim_in = ch.dim_out;
  out.dim_out = ch.dim_in;
  for (const auto& k : ch.kraus) out.kraus.push_back(p * k.adjoint() * n_inv);
  Operator supp = support_basis(ep, 1e-10);
  if (supp.cols() < ch.dim_out) {
    Operator comp = orthogonal_complement(supp, 1e-6);
    Operator qp = projector_range(p, 1e-6);
    const double w = 1.0 / std::sqrt(static_cast<double>(qp.cols()));
    for (Eigen::Index l = 0; l < qp.cols(); ++l)
      for (Eigen::Index j = 0; j < comp.cols(); ++j)
        out.kraus.push_back(w * qp.col(l) * comp.col(j).adjoint());
  }
  out.trace_preserving = tp_residual(out) <= 1e-8;
  return out;
}

SupportComposite transpose_composite_on_support(const QuantumChannel& ch, const Operator& p,
                                                const ToleranceConfig& tol) {
  SupportComposite out;
  out.recovery = transpose_channel(ch, p, tol);
  out.basis = projector_range(p, 1e-6);
  const Eigen::Index r = out.basis.cols();
  out.composite.dim_in = out.composite.dim_out = static_cast<int>(r);
  std::vector<Operator> left;
  for (const auto& rj : out.recovery.kraus) left.push_back(out.basis.adjoint() * rj);
  std::vector<Operator> right;
  for (const auto& ki : ch.kraus) right.push_back(ki * out.basis);
  for (const auto& a : left)
    for (const auto& b : right) {
      Operator m = a * b;
      if (max_abs(m) > 1e-15) out.composite.kraus.push_back(m);
    }
  if (out.composite.kraus.empty()) out.composite.kraus.push_back(Operator::Zero(r, r));
  out.composite.trace_preserving = tp_residual(out.composite) <= 1e-8;
  return out;
}

namespace {

// Exact pairwise closure for small spaces, random products otherwise.
double sampled_closure(const OperatorSpace& alg, std::uint64_t seed) {
  if (alg.size() <= 64) return is_algebra(alg, 1.0).worst_residual;
  Rng rng(seed + 17);
  std::vector<Operator> samples;
  for (int i = 0; i < 4; ++i) {
    Vector c = gaussian_matrix(alg.size(), 1, rng).col(0);
    samples.push_back(unvec(alg.columns * c, alg.dim, alg.dim));
  }
  double worst = 0.0;
  for (const auto& a : samples) {
    const double na = a.norm();
    worst = std::max(worst, projection_residual(alg.columns, vec(Operator(a.adjoint()))) / na);
    for (const auto& b : samples)
      worst = std::max(worst, projection_residual(alg.columns, vec(Operator(a * b))) / (na * b.norm()));
  }
  return worst;
}

}  // namespace

FixedPointStructure analyze_invariant_pair(const InvariantPair& pair, const SpectralProjector& proj,
                                           IpsKind kind, std::uint64_t seed, const ToleranceConfig& tol) {
  FixedPointStructure st;
  st.kind = kind;
  st.seed = seed;
  st.dim = pair.right.dim;
  st.invariant_dim = static_cast<int>(pair.right.size());
  const int d = st.dim;

  Operator h = Operator::Zero(d, d);
  for (const auto& x : pair.right.basis()) h += x * x.adjoint() + x.adjoint() * x;
  st.support_basis = support_basis(h, tol.support);
  st.support_projector = st.support_basis * st.support_basis.adjoint();
  const Eigen::Index s = st.support_basis.cols();

  std::vector<Operator> projected;
  for (const auto& y : pair.left.basis()) projected.push_back(st.support_basis.adjoint() * y * st.support_basis);
  OperatorSpace alg = make_space(static_cast<int>(s), projected, 1e-8);
  st.residuals["projected_dim_mismatch"] = std::abs(static_cast<double>(alg.size() - pair.left.size()));
  st.residuals["algebra_closure"] = sampled_closure(alg, seed);

  AlgebraDecomposition local = canonical_decompose(alg, seed, tol);
  st.residuals["decomposition"] = verify_decomposition(alg, local).max_residual();
  st.algebra.ambient_dim = d;
  st.algebra.algebra_dim = local.algebra_dim;
  st.algebra.support_projector = st.support_basis * local.support_projector * st.support_basis.adjoint();
  for (const auto& sec : local.sectors) {
    Sector lifted = sec;
    lifted.isometry = st.support_basis * sec.isometry;
    st.algebra.sectors.push_back(lifted);
  }

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  double consistency = 0.0;
  double form = 0.0;
  double trace_err = 0.0;
  double min_eig = 0.0;
  for (const auto& sec : st.algebra.sectors) {
    Operator taus[2];
    for (int t = 0; t < 2; ++t) {
      Vector psi = random_state_vector(sec.d, rng);
      Operator pure = psi * psi.adjoint();
      Operator rho = sec.isometry * kron(pure, identity(sec.n) / static_cast<double>(sec.n)) *
                     sec.isometry.adjoint();
      Operator y = sec.isometry.adjoint() * proj.apply(rho) * sec.isometry;
      Operator tau = hermitian_part(trace_out_first(y, sec.d, sec.n));
      form = std::max(form, max_abs(y - kron(pure, tau)));
      taus[t] = tau;
    }
    consistency = std::max(consistency, max_abs(taus[0] - taus[1]));
    trace_err = std::max(trace_err, std::abs(taus[0].trace().real() - 1.0));
    Eigen::SelfAdjointEigenSolver<Operator> es(taus[0], Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
    st.distortion_states.push_back(taus[0]);
  }
  st.residuals["distortion_consistency"] = consistency;
  st.residuals["distortion_form"] = form;
  st.residuals["distortion_trace"] = trace_err;
  st.residuals["distortion_negativity"] = -min_eig;

  Operator x = Operator::Zero(d, d);
  for (std::size_t k = 0; k < st.algebra.sectors.size(); ++k) {
    const auto& sec = st.algebra.sectors[k];
    Operator m = gaussian_matrix(sec.d, sec.d, rng);
    x += sec.isometry * kron(m, st.distortion_states[k]) * sec.isometry.adjoint();
  }
  st.residuals["invariance"] = max_abs(proj.apply(x) - x) / std::max(1.0, max_abs(x));
  int sum_sq = 0;
  for (const auto& sec : st.algebra.sectors) sum_sq += sec.d * sec.d;
  st.residuals["dimension_match"] = std::abs(static_cast<double>(sum_sq - st.invariant_dim));
  if (std::isfinite(pair.gap)) st.residuals["spectral_separation"] = pair.gap;
  return st;
}

FixedPointStructure noiseless_ips(const QuantumChannel& ch, std::uint64_t seed, const ToleranceConfig& tol) {
  Superoperator s = to_superoperator(ch);
  InvariantPair pair = fixed_spaces(s, tol);
  return analyze_invariant_pair(pair, projector_from_pair(pair, tol), IpsKind::kNoiseless, seed, tol);
}

FixedPointStructure unitarily_noiseless_ips(const QuantumChannel& ch, std::uint64_t seed,
                                            const ToleranceConfig& tol) {
  Superoperator s = to_superoperator(ch);
  InvariantPair pair = rotating_spaces(s, tol);
  return analyze_invariant_pair(pair, projector_from_pair(pair, tol), IpsKind::kUnitarilyNoiseless, seed,
                                tol);
}

FixedPointStructure unconditional_ips(const QuantumChannel& ch, std::uint64_t seed, const ToleranceConfig& tol) {
  QuantumChannel hat = transpose_channel(ch, identity(ch.dim_in), tol);
  Superoperator s = compose(to_superoperator(hat), to_superoperator(ch));
  InvariantPair pair = fixed_spaces(s, tol);
  return analyze_invariant_pair(pair, projector_from_pair(pair, tol), IpsKind::kUnconditional, seed, tol);
}

FixedPointStructure unitarily_correctable_ips_unital(const QuantumChannel& ch, std::uint64_t seed,
                                                     const ToleranceConfig& tol) {
  CptpReport rep = is_cptp(ch, tol.equality);
  if (ch.dim_in != ch.dim_out || !rep.unital || !rep.cptp())
    throw InputError("channel is not unital CPTP; use unconditional_ips instead");
  Superoperator l = to_superoperator(ch);
  Superoperator s = compose(adjoint(l), l);
  InvariantPair pair = fixed_spaces(s, tol);
  FixedPointStructure out =
      analyze_invariant_pair(pair, projector_from_pair(pair, tol), IpsKind::kUnconditional, seed, tol);
  FixedPointStructure check = unconditional_ips(ch, seed, tol);
  if (!(check.shape() == out.shape()))
    throw NumericalError("unital shortcut disagrees with the transpose-channel pipeline");
  return out;
}

TriangularReport triangular_kraus_check(const QuantumChannel& ch, const FixedPointStructure& s, double tol) {
  TriangularReport rep;
  const Operator comp = identity(s.dim) - s.support_projector;
  for (const auto& k : ch.kraus) {
    rep.leak = std::max(rep.leak, max_abs(comp * k * s.support_projector));
    for (std::size_t a = 0; a < s.algebra.sectors.size(); ++a) {
      const auto& va = s.algebra.sectors[a];
      for (std::size_t b = 0; b < s.algebra.sectors.size(); ++b) {
        const auto& vb = s.algebra.sectors[b];
        Operator blk = va.isometry.adjoint() * k * vb.isometry;
        if (a != b) {
          rep.off_sector = std::max(rep.off_sector, max_abs(blk));
        } else {
          Operator kk = trace_out_first(blk, va.d, va.n) / static_cast<double>(va.d);
          rep.cofactor_form = std::max(rep.cofactor_form, max_abs(blk - kron(identity(va.d), kk)));
        }
      }
    }
  }
  rep.ok = rep.leak < tol && rep.off_sector < tol && rep.cofactor_form < tol;
  return rep;
}

FixedStructureReport fixed_point_structure(const QuantumChannel& ch, std::uint64_t seed,
                                           const ToleranceConfig& tol) {
  FixedStructureReport out;
  out.structure = noiseless_ips(ch, seed, tol);
  out.triangular = triangular_kraus_check(ch, out.structure, tol.structure);
  out.structure.residuals["triangular_leak"] = out.triangular.leak;
  out.structure.residuals["triangular_off_sector"] = out.triangular.off_sector;
  out.structure.residuals["triangular_cofactor_form"] = out.triangular.cofactor_form;
  return out;
}

InitializationFreeReport initialization_free_check(const QuantumChannel& ch, const FixedPointStructure& s,
                                                   int sector, double tol) {
  if (sector < 0 || sector >= static_cast<int>(s.algebra.sectors.size()))
    throw InputError("sector index out of range");
  const auto& v = s.algebra.sectors[static_cast<std::size_t>(sector)].isometry;
  const Operator pk = v * v.adjoint();
  const Operator comp = identity(s.dim) - s.support_projector;
  InitializationFreeReport rep;
  for (const auto& k : ch.kraus) {
    const double r = (pk * k * comp).norm();
    rep.per_kraus.push_back(r);
    rep.worst = std::max(rep.worst, r);
  }
  rep.initialization_free = rep.worst < tol;
  return rep;
}

}  // namespace ipskit
