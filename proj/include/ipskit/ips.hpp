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
#include <map>
#include <string>
#include <vector>

#include "ipskit/algebra.hpp"

namespace ipskit {

enum class IpsKind { kNoiseless, kUnitarilyNoiseless, kUnconditional };

std::string to_string(IpsKind kind);

struct FixedPointStructure {
  IpsKind kind = IpsKind::kNoiseless;
  int dim = 0;
  int invariant_dim = 0;            // dim Fix (or Rot) of the analyzed map
  Operator support_basis;           // orthonormal basis of P0
  Operator support_projector;       // P0
  AlgebraDecomposition algebra;     // of P0 Fix(E^dagger) P0, ambient coordinates
  std::vector<Operator> distortion_states;  // tau_k on each cofactor
  std::map<std::string, double> residuals;
  std::uint64_t seed = 0;

  IpsShape shape() const { return shape_of(algebra); }
  int support_rank() const { return static_cast<int>(support_basis.cols()); }
};

// Pi o E^dagger o N with N = E(P)^{-1/2} (.) E(P)^{-1/2}. Outside the
// support of E(P) the map is completed by sending everything to P / rank P,
// so the result is always trace preserving.
QuantumChannel transpose_channel(const QuantumChannel& ch, const Operator& p,
                                 const ToleranceConfig& tol = {});

// Transpose composite E_hat_P o E written in an orthonormal basis of range(P).
struct SupportComposite {
  Operator basis;           // columns span range(P)
  QuantumChannel recovery;  // E_hat_P, ambient dimensions
  QuantumChannel composite; // on range(P)
};

SupportComposite transpose_composite_on_support(const QuantumChannel& ch, const Operator& p,
                                                const ToleranceConfig& tol = {});

// Pipeline on a superoperator given its invariant pair and projector.
FixedPointStructure analyze_invariant_pair(const InvariantPair& pair, const SpectralProjector& proj,
                                           IpsKind kind, std::uint64_t seed,
                                           const ToleranceConfig& tol = {});

FixedPointStructure noiseless_ips(const QuantumChannel& ch, std::uint64_t seed = 0,
                                  const ToleranceConfig& tol = {});
FixedPointStructure unitarily_noiseless_ips(const QuantumChannel& ch, std::uint64_t seed = 0,
                                            const ToleranceConfig& tol = {});
FixedPointStructure unconditional_ips(const QuantumChannel& ch, std::uint64_t seed = 0,
                                      const ToleranceConfig& tol = {});
FixedPointStructure unitarily_correctable_ips_unital(const QuantumChannel& ch, std::uint64_t seed = 0,
                                                     const ToleranceConfig& tol = {});

struct TriangularReport {
  double leak = 0.0;          // ||(1 - P0) K P0||
  double off_sector = 0.0;    // ||V_k^dagger K V_l||, k != l
  double cofactor_form = 0.0; // ||V_k^dagger K V_k - 1 kron K_k||
  bool ok = false;
};

struct FixedStructureReport {
  FixedPointStructure structure;
  TriangularReport triangular;
};

FixedStructureReport fixed_point_structure(const QuantumChannel& ch, std::uint64_t seed = 0,
                                           const ToleranceConfig& tol = {});
TriangularReport triangular_kraus_check(const QuantumChannel& ch, const FixedPointStructure& s,
                                        double tol = 1e-8);

struct InitializationFreeReport {
  bool initialization_free = false;
  std::vector<double> per_kraus;
  double worst = 0.0;
};

InitializationFreeReport initialization_free_check(const QuantumChannel& ch, const FixedPointStructure& s,
                                                   int sector, double tol = 1e-9);

}  // namespace ipskit
