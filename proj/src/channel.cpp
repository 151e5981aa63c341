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

#include "ipskit/channel.hpp"

#include <cmath>
#include <string>

namespace ipskit {

double tp_residual(const QuantumChannel& ch) {
  Operator s = Operator::Zero(ch.dim_in, ch.dim_in);
  for (const auto& k : ch.kraus) s += k.adjoint() * k;
  return max_abs(s - identity(ch.dim_in));
}

QuantumChannel make_channel(std::vector<Operator> kraus, double tol) {
  if (kraus.empty()) throw InputError("channel needs at least one Kraus operator");
  QuantumChannel ch;
  ch.dim_out = static_cast<int>(kraus.front().rows());
  ch.dim_in = static_cast<int>(kraus.front().cols());
  ch.kraus = std::move(kraus);
  validate(ch);
  ch.trace_preserving = tp_residual(ch) <= tol;
  return ch;
}

QuantumChannel identity_channel(int d) { return make_channel({identity(d)}); }

QuantumChannel unitary_channel(const Operator& u) { return make_channel({u}); }

void validate(const QuantumChannel& ch) {
  if (ch.dim_in <= 0 || ch.dim_out <= 0) throw InputError("channel dimensions must be positive");
  if (ch.kraus.empty()) throw InputError("channel needs at least one Kraus operator");
  for (const auto& k : ch.kraus)
    if (k.rows() != ch.dim_out || k.cols() != ch.dim_in)
      throw InputError("Kraus operator has wrong shape");
}

void validate(const StochasticChannel& sc, double tol) {
  if (sc.n_in <= 0 || sc.n_out <= 0) throw InputError("stochastic dimensions must be positive");
  if (sc.matrix.rows() != sc.n_out || sc.matrix.cols() != sc.n_in)
    throw InputError("stochastic matrix has wrong shape");
  for (Eigen::Index j = 0; j < sc.matrix.cols(); ++j) {
    if (sc.matrix.col(j).minCoeff() < 0.0)
      throw InputError("stochastic matrix has a negative entry in column " + std::to_string(j));
    if (std::abs(sc.matrix.col(j).sum() - 1.0) > tol)
      throw InputError("stochastic column " + std::to_string(j) + " does not sum to 1");
  }
}

Superoperator to_superoperator(const QuantumChannel& ch) {
  Superoperator s;
  s.dim_in = ch.dim_in;
  s.dim_out = ch.dim_out;
  s.matrix = Operator::Zero(static_cast<Eigen::Index>(ch.dim_out) * ch.dim_out,
                            static_cast<Eigen::Index>(ch.dim_in) * ch.dim_in);
  for (const auto& k : ch.kraus) s.matrix += kron(k.conjugate(), k);
  return s;
}

Operator apply(const QuantumChannel& ch, const Operator& x) {
  if (x.rows() != ch.dim_in || x.cols() != ch.dim_in)
    throw InputError("operator dimension does not match channel input");
  Operator out = Operator::Zero(ch.dim_out, ch.dim_out);
  for (const auto& k : ch.kraus) out += k * x * k.adjoint();
  return out;
}

Operator apply(const Superoperator& s, const Operator& x) {
  if (x.rows() != s.dim_in || x.cols() != s.dim_in)
    throw InputError("operator dimension does not match superoperator input");
  return unvec(s.matrix * vec(x), s.dim_out, s.dim_out);
}

QuantumChannel adjoint(const QuantumChannel& ch) {
  QuantumChannel out;
  out.dim_in = ch.dim_out;
  out.dim_out = ch.dim_in;
  for (const auto& k : ch.kraus) out.kraus.push_back(k.adjoint());
  out.trace_preserving = tp_residual(out) <= 1e-9;
  return out;
}

Superoperator adjoint(const Superoperator& s) {
  return Superoperator{s.dim_out, s.dim_in, s.matrix.adjoint()};
}

QuantumChannel compose(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim_in != b.dim_out) throw InputError("compose: dimension mismatch");
  QuantumChannel out;
  out.dim_in = b.dim_in;
  out.dim_out = a.dim_out;
  out.kraus.reserve(a.kraus.size() * b.kraus.size());
  for (const auto& ka : a.kraus)
    for (const auto& kb : b.kraus) out.kraus.push_back(ka * kb);
  out.trace_preserving = a.trace_preserving && b.trace_preserving;
  return out;
}

Superoperator compose(const Superoperator& a, const Superoperator& b) {
  if (a.dim_in != b.dim_out) throw InputError("compose: dimension mismatch");
  return Superoperator{b.dim_in, a.dim_out, a.matrix * b.matrix};
}

Operator choi_matrix(const QuantumChannel& ch) {
  const Eigen::Index n = static_cast<Eigen::Index>(ch.dim_in) * ch.dim_out;
  Operator c = Operator::Zero(n, n);
  for (const auto& k : ch.kraus) {
    Vector v = vec(k);
    c += v * v.adjoint();
  }
  return c;
}

CptpReport is_cptp(const QuantumChannel& ch, double tol) {
  validate(ch);
  CptpReport r;
  r.tp_residual = tp_residual(ch);
  Eigen::SelfAdjointEigenSolver<Operator> es(choi_matrix(ch), Eigen::EigenvaluesOnly);
  r.choi_min_eigenvalue = es.eigenvalues().minCoeff();
  r.trace_preserving = r.tp_residual <= tol;
  r.completely_positive = r.choi_min_eigenvalue >= -tol;
  if (ch.dim_in == ch.dim_out) {
    r.unital_residual = max_abs(ipskit::apply(ch, identity(ch.dim_in)) - identity(ch.dim_out));
    r.unital = r.unital_residual <= tol;
  } else {
    r.unital_residual = max_abs(ipskit::apply(ch, identity(ch.dim_in)));
    r.unital = false;
  }
  return r;
}

bool is_unital(const QuantumChannel& ch, double tol) { return is_cptp(ch, tol).unital; }

QuantumChannel restrict_to_basis(const QuantumChannel& ch, const Operator& q, double tol) {
  if (ch.dim_in != ch.dim_out) throw InputError("restriction needs a square channel");
  if (q.rows() != ch.dim_in) throw InputError("restriction basis has wrong dimension");
  QuantumChannel out;
  out.dim_in = out.dim_out = static_cast<int>(q.cols());
  for (const auto& k : ch.kraus) out.kraus.push_back(q.adjoint() * k * q);
  out.trace_preserving = tp_residual(out) <= tol;
  return out;
}

QuantumChannel restrict_to_subspace(const QuantumChannel& ch, const Operator& p, double tol) {
  if (p.rows() != ch.dim_in || !is_projector(p, tol))
    throw InputError("restriction requires an orthogonal projector");
  return restrict_to_basis(ch, projector_range(p, 1e-6));
}

QuantumChannel compress_kraus(const QuantumChannel& ch, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Operator> es(choi_matrix(ch));
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  QuantumChannel out;
  out.dim_in = ch.dim_in;
  out.dim_out = ch.dim_out;
  out.trace_preserving = ch.trace_preserving;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    if (ev(i) <= rel_tol * top) continue;
    out.kraus.push_back(std::sqrt(ev(i)) * unvec(es.eigenvectors().col(i), ch.dim_out, ch.dim_in));
  }
  if (out.kraus.empty()) out.kraus.push_back(Operator::Zero(ch.dim_out, ch.dim_in));
  return out;
}

QuantumChannel embed_classical(const StochasticChannel& sc) {
  validate(sc);
  QuantumChannel out;
  out.dim_in = sc.n_in;
  out.dim_out = sc.n_out;
  for (int i = 0; i < sc.n_in; ++i)
    for (int k = 0; k < sc.n_out; ++k) {
      const double w = sc.matrix(k, i);
      if (w <= 0.0) continue;
      Operator kr = Operator::Zero(sc.n_out, sc.n_in);
      kr(k, i) = std::sqrt(w);
      out.kraus.push_back(kr);
    }
  out.trace_preserving = tp_residual(out) <= 1e-9;
  return out;
}

StochasticChannel stochastic_from_columns(const std::vector<std::vector<double>>& columns) {
  if (columns.empty()) throw InputError("stochastic map needs at least one column");
  StochasticChannel sc;
  sc.n_in = static_cast<int>(columns.size());
  sc.n_out = static_cast<int>(columns.front().size());
  sc.matrix = RealMatrix::Zero(sc.n_out, sc.n_in);
  for (int j = 0; j < sc.n_in; ++j) {
    if (static_cast<int>(columns[j].size()) != sc.n_out) throw InputError("ragged stochastic columns");
    for (int i = 0; i < sc.n_out; ++i) sc.matrix(i, j) = columns[j][i];
  }
  validate(sc);
  return sc;
}

}  // namespace ipskit
