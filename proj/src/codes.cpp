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

#include "ipskit/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ipskit {

void validate(const Code& code, double tol) {
  if (code.states.empty()) throw InputError("code needs at least one state");
  const auto d = code.states.front().rows();
  for (const auto& rho : code.states) {
    if (rho.rows() != d || rho.cols() != d) throw InputError("code states must share a square dimension");
    if (!is_hermitian(rho, tol)) throw InputError("code state is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > tol) throw InputError("code state does not have unit trace");
    Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(rho), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) throw InputError("code state is not positive semidefinite");
  }
}

Code make_code(std::vector<Operator> states) {
  Code c{std::move(states)};
  validate(c);
  return c;
}

Code code_from_vectors(const std::vector<Vector>& kets) {
  std::vector<Operator> states;
  for (const auto& k : kets) {
    Vector v = k / k.norm();
    states.push_back(v * v.adjoint());
  }
  return make_code(std::move(states));
}

double trace_norm(const Operator& a) {
  if (a.rows() != a.cols()) throw InputError("trace norm needs a square operator");
  if (a.size() == 0) return 0.0;
  if (max_abs(a - a.adjoint()) <= 1e-13 * std::max(1.0, max_abs(a))) {
    Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(a), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Operator> svd(a);
  return svd.singularValues().sum();
}

double helstrom_probability(const Operator& rho, const Operator& sigma, double p) {
  if (p < 0.0 || p > 1.0) throw InputError("prior must lie in [0, 1]");
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) throw InputError("state dimensions differ");
  return 0.5 * (1.0 + trace_norm(p * rho - (1.0 - p) * sigma));
}

bool is_fixed(const Code& code, const QuantumChannel& ch, double tol) {
  validate(code);
  if (ch.dim_in != ch.dim_out || ch.dim_in != code.dim()) return false;
  for (const auto& rho : code.states)
    if (trace_norm(ipskit::apply(ch, rho) - rho) >= tol) return false;
  return true;
}

namespace {

const std::vector<double>& p_grid() {
  static const std::vector<double> grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  return grid;
}

struct Pool {
  std::vector<Mixture> mixtures;
  std::vector<Operator> states;
};

Pool build_pool(const Code& code, bool with_mixtures) {
  Pool pool;
  const std::size_t n = code.states.size();
  auto add = [&](std::vector<double> w) {
    Operator rho = Operator::Zero(code.dim(), code.dim());
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] != 0.0) rho += w[i] * code.states[i];
    pool.mixtures.push_back({std::move(w)});
    pool.states.push_back(rho);
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> w(n, 0.0);
    w[i] = 1.0;
    add(w);
  }
  if (!with_mixtures) return pool;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (double a : {0.25, 0.5, 0.75}) {
        std::vector<double> w(n, 0.0);
        w[i] = a;
        w[j] = 1.0 - a;
        add(w);
      }
  if (n > 6) return pool;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (int big = 0; big < 3; ++big) {
          std::vector<double> w(n, 0.0);
          w[i] = w[j] = w[k] = 0.25;
          w[big == 0 ? i : (big == 1 ? j : k)] = 0.5;
          add(w);
        }
  return pool;
}

PreservationReport compare(const Code& code, const Superoperator& map, bool with_mixtures,
                           const std::vector<double>& grid, double tol) {
  if (map.dim_in != code.dim()) throw InputError("code dimension does not match channel input");
  Pool pool = build_pool(code, with_mixtures);
  std::vector<Operator> images;
  images.reserve(pool.states.size());
  for (const auto& rho : pool.states) images.push_back(ipskit::apply(map, rho));
  PreservationReport rep;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pool.states.size(); ++i)
    for (std::size_t j = i + 1; j < pool.states.size(); ++j)
      for (double p : grid) {
        const double before = trace_norm(p * pool.states[i] - (1.0 - p) * pool.states[j]);
        const double after = trace_norm(p * images[i] - (1.0 - p) * images[j]);
        ++rep.pairs_checked;
        const double drop = before - after;
        if (drop > worst) {
          worst = drop;
          rep.first = pool.mixtures[i];
          rep.second = pool.mixtures[j];
          rep.p = p;
          rep.distance_before = before;
          rep.distance_after = after;
        }
      }
  rep.sampling_passed = rep.pairs_checked == 0 || worst <= tol;
  rep.verdict = rep.sampling_passed;
  return rep;
}

}  // namespace

PreservationReport sampled_preservation(const Code& code, const Superoperator& map, const ToleranceConfig& tol) {
  return compare(code, map, true, p_grid(), tol.preservation);
}

PreservationReport is_preserved(const Code& code, const QuantumChannel& ch, const ToleranceConfig& tol) {
  validate(code);
  PreservationReport rep = sampled_preservation(code, to_superoperator(ch), tol);
  CorrectabilityReport corr = is_correctable_via_transpose(code, ch, tol);
  rep.structural_passed = corr.verdict;
  rep.verdict = rep.sampling_passed && rep.structural_passed;
  return rep;
}

NoiselessReport is_noiseless(const Code& code, const QuantumChannel& ch, const ToleranceConfig& tol) {
  validate(code);
  if (ch.dim_in != ch.dim_out) throw InputError("noiselessness needs a square channel");
  Superoperator e = to_superoperator(ch);
  const Eigen::Index n = e.matrix.rows();
  std::vector<std::pair<std::string, Superoperator>> maps;
  maps.emplace_back("asymptotic", asymptotic_projector(e, tol).superoperator());
  maps.emplace_back("channel", e);
  maps.emplace_back("lazy", Superoperator{e.dim_in, e.dim_out, 0.5 * (Operator::Identity(n, n) + e.matrix)});
  maps.emplace_back("square", compose(e, e));
  NoiselessReport out;
  out.verdict = true;
  double worst_drop = -std::numeric_limits<double>::infinity();
  for (const auto& [name, m] : maps) {
    PreservationReport r = sampled_preservation(code, m, tol);
    const double drop = r.distance_before - r.distance_after;
    if (!r.sampling_passed && out.verdict) {
      out.verdict = false;
      out.failing_map = name;
      out.worst = r;
      worst_drop = drop;
    } else if (out.verdict && drop > worst_drop) {
      out.worst = r;
      worst_drop = drop;
    }
  }
  return out;
}

CorrectabilityReport is_correctable_via_transpose(const Code& code, const QuantumChannel& ch,
                                                  const ToleranceConfig& tol) {
  validate(code);
  if (code.dim() != ch.dim_in) throw InputError("code dimension does not match channel input");
  CorrectabilityReport rep;
  rep.support = code_support(code, tol.support);
  SupportComposite sc = transpose_composite_on_support(ch, rep.support, tol);
  rep.recovery = sc.recovery;
  std::vector<Operator> local;
  for (const auto& rho : code.states) local.push_back(sc.basis.adjoint() * rho * sc.basis);
  Code restricted{local};
  const Eigen::Index r = sc.basis.cols();
  rep.unitality_residual = max_abs(ipskit::apply(sc.composite, identity(r)) - identity(r));
  rep.noiseless = is_noiseless(restricted, sc.composite, tol);
  rep.verdict = rep.noiseless.verdict;
  return rep;
}

bool pairwise_unweighted_check(const Code& code, const QuantumChannel& ch, double tol) {
  validate(code);
  return compare(code, to_superoperator(ch), false, {0.5}, tol).sampling_passed;
}

bool mixture_unweighted_check(const Code& code, const QuantumChannel& ch, double tol) {
  validate(code);
  return compare(code, to_superoperator(ch), true, {0.5}, tol).sampling_passed;
}

bool pairwise_weighted_check(const Code& code, const QuantumChannel& ch, double tol) {
  validate(code);
  return compare(code, to_superoperator(ch), false, p_grid(), tol).sampling_passed;
}

FixingRecovery build_fixing_recovery(const Code& code, const QuantumChannel& ch, std::uint64_t seed,
                                     const ToleranceConfig& tol) {
  CorrectabilityReport corr = is_correctable_via_transpose(code, ch, tol);
  if (!corr.verdict) throw InputError("code is not correctable by the transpose channel");
  SupportComposite sc = transpose_composite_on_support(ch, corr.support, tol);
  const Operator& q = sc.basis;
  const Eigen::Index r = q.cols();
  FixedPointStructure st = noiseless_ips(sc.composite, seed, tol);

  FixingRecovery out;
  out.shape = st.shape();
  std::vector<Operator> gauge_kraus;
  Operator covered = Operator::Zero(r, r);
  for (const auto& sec : st.algebra.sectors) {
    Operator acc = Operator::Zero(sec.n, sec.n);
    for (const auto& rho : code.states) {
      Operator local = q.adjoint() * rho * q;
      acc += trace_out_first(sec.isometry.adjoint() * local * sec.isometry, sec.d, sec.n);
    }
    acc = hermitian_part(acc);
    const double w = acc.trace().real();
    Operator mu = w > 1e-12 ? Operator(acc / w) : Operator(identity(sec.n) / static_cast<double>(sec.n));
    out.gauge_states.push_back(mu);
    Eigen::SelfAdjointEigenSolver<Operator> es(mu);
    for (Eigen::Index j = 0; j < sec.n; ++j) {
      const double lam = es.eigenvalues()(j);
      if (lam <= 1e-14) continue;
      for (int b = 0; b < sec.n; ++b) {
        Operator inner = std::sqrt(lam) * es.eigenvectors().col(j) * Operator::Identity(sec.n, sec.n).row(b);
        gauge_kraus.push_back(sec.isometry * kron(identity(sec.d), inner) * sec.isometry.adjoint());
      }
    }
    covered += sec.isometry * sec.isometry.adjoint();
  }
  Operator rest = identity(r) - covered;
  if (max_abs(rest) > 1e-9) gauge_kraus.push_back(rest);

  out.recovery.dim_in = ch.dim_out;
  out.recovery.dim_out = ch.dim_in;
  for (const auto& t : gauge_kraus)
    for (const auto& rj : sc.recovery.kraus) {
      Operator k = q * t * q.adjoint() * rj;
      if (max_abs(k) > 1e-15) out.recovery.kraus.push_back(k);
    }
  out.recovery.trace_preserving = tp_residual(out.recovery) <= 1e-8;
  out.recovery = compress_kraus(out.recovery);

  for (const auto& rho : code.states) {
    Operator img = ipskit::apply(ch, rho);
    out.worst_residual = std::max(out.worst_residual, trace_norm(ipskit::apply(out.recovery, img) - rho));
    if (ch.dim_in == ch.dim_out) out.unrecovered_residual = std::max(out.unrecovered_residual, trace_norm(img - rho));
  }
  return out;
}

Operator code_support(const Code& code, double rel_tol) {
  validate(code);
  Operator sum = Operator::Zero(code.dim(), code.dim());
  for (const auto& rho : code.states) sum += rho;
  Operator q = support_basis(sum, rel_tol);
  return q * q.adjoint();
}

}  // namespace ipskit
