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
#include <random>
#include <vector>

#include "ipskit/types.hpp"

namespace ipskit {

// Column stacking: vec(X)[i + j * rows] = X(i, j), so that
// vec(A X B) = (B^T kron A) vec(X). All conversions go through here.
Vector vec(const Operator& x);
Operator unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);
Operator unvec(const Vector& v);  // square

Operator kron(const Operator& a, const Operator& b);
Operator identity(Eigen::Index d);
Operator basis_projector(Eigen::Index d, const std::vector<int>& indices);
Operator ket_bra(Eigen::Index d, int i, int j);

double max_abs(const Operator& x);
bool is_hermitian(const Operator& x, double tol);
bool is_projector(const Operator& p, double tol);
Operator hermitian_part(const Operator& x);

struct NullSpaces {
  Operator right;  // orthonormal columns spanning ker(M)
  Operator left;   // orthonormal columns spanning ker(M^dagger)
  Eigen::VectorXd singular_values;
  double gap = 0.0;  // smallest retained singular value / cutoff
};

// Right and left null spaces of a square matrix from one SVD. Singular
// values below rel_tol * max(1, s_max) are treated as zero.
NullSpaces null_spaces(const Operator& m, double rel_tol);

// Orthonormal basis of the column span, rank cut at rel_tol * s_max.
Operator orthonormal_columns(const Operator& cols, double rel_tol);

// Orthonormal basis of range(P) for an orthogonal projector, by modified
// Gram-Schmidt on the columns of P. P = 1 returns exactly 1.
Operator projector_range(const Operator& p, double tol);

// Eigenvectors of a Hermitian PSD operator with eigenvalue above
// rel_tol * lambda_max.
Operator support_basis(const Operator& h, double rel_tol);

// H^{-1/2} on the support of H (eigenvalues above rel_cutoff * max).
Operator pinv_sqrt(const Operator& h, double rel_cutoff);
Operator sqrtm_psd(const Operator& h);

// Partial traces on C^da kron C^db.
Operator trace_out_first(const Operator& x, Eigen::Index da, Eigen::Index db);
Operator trace_out_second(const Operator& x, Eigen::Index da, Eigen::Index db);

// Orthogonal complement of orthonormal columns inside C^n.
Operator orthogonal_complement(const Operator& q, double tol);

// Distance of v from span(U) where U has orthonormal columns.
double projection_residual(const Operator& u, const Vector& v);

using Rng = std::mt19937_64;
double standard_normal(Rng& rng);
Operator gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);
Operator random_unitary(Eigen::Index d, Rng& rng);
Operator random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng);
Operator random_hermitian(Eigen::Index d, Rng& rng);
Operator random_density(Eigen::Index d, Rng& rng, Eigen::Index rank = -1);
Vector random_state_vector(Eigen::Index d, Rng& rng);

}  // namespace ipskit
