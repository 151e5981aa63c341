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

#include <cstdint>
#include <vector>

#include "ipskit/spectral.hpp"

namespace ipskit {

struct Sector {
  int d = 0;  // information-carrying factor
  int n = 0;  // cofactor
  Operator isometry;  // ambient x (d * n), column a * n + b <-> |a> kron |b>
};

struct AlgebraDecomposition {
  int ambient_dim = 0;
  int algebra_dim = 0;
  std::vector<Sector> sectors;
  Operator support_projector;
};

struct IpsShape {
  std::vector<int> dims;
  std::vector<int> cofactor_dims;
  bool operator==(const IpsShape&) const = default;
};

IpsShape shape_of(const AlgebraDecomposition& d);
IpsShape make_shape(std::vector<int> dims, std::vector<int> cofactors);

struct AlgebraCheck {
  bool is_algebra = false;
  double worst_residual = 0.0;
};

AlgebraCheck is_algebra(const OperatorSpace& s, double tol = 1e-8);

// Null space of X -> [X, B_i] on range(P), lifted back to the ambient space.
OperatorSpace commutant(const OperatorSpace& s, const Operator& p, double rel_tol = 1e-10);
OperatorSpace center(const OperatorSpace& s, double rel_tol = 1e-10);

struct DecompositionReport {
  double reconstruction = 0.0;
  double isometry = 0.0;
  double orthogonality = 0.0;
  double support = 0.0;
  bool dimensions_ok = false;
  double max_residual() const;
  bool pass(double tol) const { return dimensions_ok && max_residual() < tol; }
};

DecompositionReport verify_decomposition(const OperatorSpace& a, const AlgebraDecomposition& d);

AlgebraDecomposition canonical_decompose(const OperatorSpace& a, std::uint64_t seed = 0,
                                         const ToleranceConfig& tol = {});

}  // namespace ipskit
