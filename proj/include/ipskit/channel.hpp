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

#include <vector>

#include "ipskit/linalg.hpp"

namespace ipskit {

// Kraus-list map B(C^dim_in) -> B(C^dim_out). Restrictions and adjoints
// share this type; trace_preserving records whether sum K^dagger K = 1
// held when the map was built.
struct QuantumChannel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<Operator> kraus;
  bool trace_preserving = true;
};

// d_out^2 x d_in^2 matrix acting on column-stacked operators.
struct Superoperator {
  int dim_in = 0;
  int dim_out = 0;
  Operator matrix;
};

// Column-stochastic: matrix(out, in).
struct StochasticChannel {
  int n_in = 0;
  int n_out = 0;
  RealMatrix matrix;
};

struct CptpReport {
  double tp_residual = 0.0;
  double choi_min_eigenvalue = 0.0;
  double unital_residual = 0.0;
  bool trace_preserving = false;
  bool completely_positive = false;
  bool unital = false;
  bool cptp() const { return trace_preserving && completely_positive; }
};

double tp_residual(const QuantumChannel& ch);
QuantumChannel make_channel(std::vector<Operator> kraus, double tol = 1e-9);
QuantumChannel identity_channel(int d);
QuantumChannel unitary_channel(const Operator& u);
void validate(const QuantumChannel& ch);
void validate(const StochasticChannel& sc, double tol = 1e-12);

Superoperator to_superoperator(const QuantumChannel& ch);
Operator apply(const QuantumChannel& ch, const Operator& x);
Operator apply(const Superoperator& s, const Operator& x);
QuantumChannel adjoint(const QuantumChannel& ch);
Superoperator adjoint(const Superoperator& s);
QuantumChannel compose(const QuantumChannel& a, const QuantumChannel& b);
Superoperator compose(const Superoperator& a, const Superoperator& b);
Operator choi_matrix(const QuantumChannel& ch);

CptpReport is_cptp(const QuantumChannel& ch, double tol = 1e-9);
bool is_unital(const QuantumChannel& ch, double tol = 1e-9);

// Kraus {Q^dagger K Q} with Q an orthonormal basis of range(P).
QuantumChannel restrict_to_subspace(const QuantumChannel& ch, const Operator& p,
                                    double tol = 1e-10);
// Same, with the basis supplied.
QuantumChannel restrict_to_basis(const QuantumChannel& ch, const Operator& q,
                                 double tol = 1e-9);

// Minimal Kraus set from the Choi matrix.
QuantumChannel compress_kraus(const QuantumChannel& ch, double rel_tol = 1e-12);

QuantumChannel embed_classical(const StochasticChannel& sc);
StochasticChannel stochastic_from_columns(const std::vector<std::vector<double>>& columns);

}  // namespace ipskit
