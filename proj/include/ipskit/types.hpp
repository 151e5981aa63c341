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

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ipskit {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

// Every structural decision in the library is a rank or equality test
// against one of these thresholds.
struct ToleranceConfig {
  double equality = 1e-9;      // absolute, unit-normalized data
  double rank = 1e-10;         // relative to largest singular value
  double support = 1e-9;       // relative eigenvalue cutoff for supports
  double projector = 1e-10;    // P^2 = P = P^dagger check
  double peripheral = 1e-8;    // ||lambda| - 1| test
  double cluster = 1e-7;       // eigenvalue gap, relative to spread
  double structure = 1e-8;     // algebra / decomposition residuals
  double preservation = 1e-8;  // weighted trace-norm comparisons
  double integer_guard = 0.01;
  int max_retries = 3;
};

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what,
                          std::map<std::string, double> residuals = {})
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::map<std::string, double>& residuals() const { return residuals_; }

 private:
  std::map<std::string, double> residuals_;
};

}  // namespace ipskit
