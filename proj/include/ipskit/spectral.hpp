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

#pragma once

#include <functional>
#include <vector>

#include "ipskit/channel.hpp"

namespace ipskit {

// Subspace of B(C^dim); columns are orthonormal vectorized operators.
struct OperatorSpace {
  int dim = 0;
  Operator columns;

  Eigen::Index size() const { return columns.cols(); }
  Operator element(Eigen::Index i) const { return unvec(columns.col(i), dim, dim); }
  std::vector<Operator> basis() const;
};

OperatorSpace make_space(int dim, const std::vector<Operator>& ops, double rel_tol = 1e-10);
OperatorSpace space_from_columns(int dim, const Operator& cols, double rel_tol = 1e-10);
double gram_residual(const OperatorSpace& s);
// max over basis of the distance from span(b), and vice versa.
double containment_residual(const OperatorSpace& a, const OperatorSpace& b);
double subspace_distance(const OperatorSpace& a, const OperatorSpace& b);

struct SpectralData {
  Vector eigenvalues;
  Operator right_vectors;
  Operator left_vectors;  // column k pairs with eigenvalue k: v^dagger L = lambda v^dagger
  Operator schur_t;
  Operator schur_u;
};

SpectralData spectral_data(const Superoperator& s);
double spectral_radius(const Superoperator& s);

// Reorders a complex Schur form in place so that selected diagonal
// entries come first. Returns the number selected.
Eigen::Index reorder_schur(Operator& t, Operator& u, const std::function<bool(Complex)>& select);

struct InvariantPair {
  OperatorSpace right;
  OperatorSpace left;
  Vector eigenvalues;   // the selected part of the spectrum
  double gap = 0.0;     // separation from the rest, in units of the test tolerance
};

InvariantPair fixed_spaces(const Superoperator& s, const ToleranceConfig& tol = {});
OperatorSpace fixed_space(const QuantumChannel& ch, const ToleranceConfig& tol = {});
OperatorSpace fixed_space_adjoint(const QuantumChannel& ch, const ToleranceConfig& tol = {});

InvariantPair rotating_spaces(const Superoperator& s, const ToleranceConfig& tol = {});
OperatorSpace rotating_space(const QuantumChannel& ch, const ToleranceConfig& tol = {});
OperatorSpace rotating_space_adjoint(const QuantumChannel& ch, const ToleranceConfig& tol = {});

// P = right * left_dual^dagger with left_dual^dagger right = 1.
struct SpectralProjector {
  int dim = 0;
  Operator right;
  Operator left_dual;

  Operator matrix() const { return right * left_dual.adjoint(); }
  Operator apply(const Operator& x) const;
  Superoperator superoperator() const { return Superoperator{dim, dim, matrix()}; }
};

SpectralProjector projector_from_pair(const InvariantPair& pair, const ToleranceConfig& tol = {});
SpectralProjector asymptotic_projector(const QuantumChannel& ch, const ToleranceConfig& tol = {});
SpectralProjector asymptotic_projector(const Superoperator& s, const ToleranceConfig& tol = {});
SpectralProjector peripheral_projector(const QuantumChannel& ch, const ToleranceConfig& tol = {});
SpectralProjector peripheral_projector(const Superoperator& s, const ToleranceConfig& tol = {});

struct SemisimplicityReport {
  int clusters = 0;
  int defective_clusters = 0;
  std::vector<Complex> cluster_values;
  std::vector<int> algebraic;
  std::vector<int> geometric;
  bool semisimple() const { return defective_clusters == 0; }
};

SemisimplicityReport peripheral_semisimplicity(const Superoperator& s, const ToleranceConfig& tol = {});

}  // namespace ipskit
