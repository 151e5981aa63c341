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

#include <string>
#include <vector>

#include "ipskit/ips.hpp"

namespace ipskit {

struct Code {
  std::vector<Operator> states;
  int dim() const { return states.empty() ? 0 : static_cast<int>(states.front().rows()); }
};

void validate(const Code& code, double tol = 1e-9);
Code make_code(std::vector<Operator> states);
Code code_from_vectors(const std::vector<Vector>& kets);

double trace_norm(const Operator& a);
double helstrom_probability(const Operator& rho, const Operator& sigma, double p);

// A point in the sampled convex hull: weights over the listed states.
struct Mixture {
  std::vector<double> weights;
};

struct PreservationReport {
  bool verdict = false;
  bool sampling_passed = false;
  bool structural_passed = false;
  Mixture first;
  Mixture second;
  double p = 0.5;
  double distance_before = 0.0;
  double distance_after = 0.0;
  int pairs_checked = 0;
};

struct NoiselessReport {
  bool verdict = false;
  std::string failing_map;  // empty when the verdict holds
  PreservationReport worst;
};

struct CorrectabilityReport {
  bool verdict = false;
  Operator support;
  QuantumChannel recovery;
  NoiselessReport noiseless;
  double unitality_residual = 0.0;
};

bool is_fixed(const Code& code, const QuantumChannel& ch, double tol = 1e-9);

// Weighted trace-norm comparison of a code under a linear map, over the
// listed states, pair and triple mixtures, and the p grid.
PreservationReport sampled_preservation(const Code& code, const Superoperator& map,
                                        const ToleranceConfig& tol = {});

PreservationReport is_preserved(const Code& code, const QuantumChannel& ch, const ToleranceConfig& tol = {});
NoiselessReport is_noiseless(const Code& code, const QuantumChannel& ch, const ToleranceConfig& tol = {});
CorrectabilityReport is_correctable_via_transpose(const Code& code, const QuantumChannel& ch,
                                                  const ToleranceConfig& tol = {});

// Deliberately weak checks: pairs at p = 1/2 only, over listed states
// (pairwise) or also over sampled mixtures.
bool pairwise_unweighted_check(const Code& code, const QuantumChannel& ch, double tol = 1e-8);
bool mixture_unweighted_check(const Code& code, const QuantumChannel& ch, double tol = 1e-8);
bool pairwise_weighted_check(const Code& code, const QuantumChannel& ch, double tol = 1e-8);

struct FixingRecovery {
  QuantumChannel recovery;
  std::vector<Operator> gauge_states;  // mu_k per sector of E_hat_P o E
  IpsShape shape;
  double worst_residual = 0.0;         // max ||R(E(rho)) - rho||_1 over code states
  double unrecovered_residual = 0.0;   // max ||E(rho) - rho||_1
};

FixingRecovery build_fixing_recovery(const Code& code, const QuantumChannel& ch, std::uint64_t seed = 0,
                                     const ToleranceConfig& tol = {});

Operator code_support(const Code& code, double rel_tol = 1e-9);

}  // namespace ipskit
