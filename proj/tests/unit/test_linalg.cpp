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

#include <cmath>

#include "test_support.hpp"

namespace ipskit {
namespace {

using testing::near;

TEST(Linalg, VecStacksColumns) {
  Operator x(2, 2);
  x << 1.0, 2.0, 3.0, 4.0;
  Vector v = vec(x);
  EXPECT_EQ(v(0), Complex(1.0));
  EXPECT_EQ(v(1), Complex(3.0));
  EXPECT_EQ(v(2), Complex(2.0));
  EXPECT_EQ(v(3), Complex(4.0));
  EXPECT_TRUE(near(unvec(v), x, 0.0));
}

TEST(Linalg, VecIdentityForProducts) {
  Rng rng(7);
  Operator a = gaussian_matrix(3, 2, rng), x = gaussian_matrix(2, 4, rng), b = gaussian_matrix(4, 3, rng);
  Operator lhs = vec(Operator(a * x * b));
  Operator rhs = kron(b.transpose(), a) * vec(x);
  EXPECT_TRUE(near(lhs, rhs, 1e-12));
}

TEST(Linalg, KronEntries) {
  Rng rng(3);
  Operator a = gaussian_matrix(2, 3, rng), b = gaussian_matrix(3, 2, rng);
  Operator k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) EXPECT_EQ(k(i * 3 + r, j * 2 + c), a(i, j) * b(r, c));
}

TEST(Linalg, PartialTraces) {
  Rng rng(11);
  Operator a = random_density(2, rng), b = random_density(3, rng);
  Operator ab = kron(a, b);
  EXPECT_TRUE(near(trace_out_first(ab, 2, 3), b, 1e-12));
  EXPECT_TRUE(near(trace_out_second(ab, 2, 3), a, 1e-12));
}

TEST(Linalg, NullSpacesMatchLuKernel) {
  Rng rng(5);
  Operator m = gaussian_matrix(6, 3, rng) * gaussian_matrix(3, 5, rng);
  NullSpaces ns = null_spaces(m, 1e-10);
  EXPECT_EQ(ns.right.cols(), testing::kernel_dim(m));
  EXPECT_EQ(ns.left.cols(), testing::kernel_dim(m.adjoint()));
  EXPECT_LT(max_abs(m * ns.right), 1e-10);
  EXPECT_LT(max_abs(m.adjoint() * ns.left), 1e-10);
  EXPECT_GT(ns.gap, 1e3);
}

TEST(Linalg, ProjectorRangeAndSupport) {
  Operator p = basis_projector(4, {1, 3});
  Operator q = projector_range(p, 1e-9);
  ASSERT_EQ(q.cols(), 2);
  EXPECT_TRUE(near(Operator(q * q.adjoint()), p, 1e-12));
  EXPECT_TRUE(near(projector_range(identity(3), 1e-9), identity(3), 0.0));

  Operator h = Operator::Zero(3, 3);
  h(0, 0) = 2.0;
  h(2, 2) = 1e-14;
  EXPECT_EQ(support_basis(h, 1e-9).cols(), 1);
  EXPECT_TRUE(is_projector(p, 1e-12));
  EXPECT_FALSE(is_projector(Operator(2.0 * p), 1e-6));
}

TEST(Linalg, PinvSqrtOnSupport) {
  Operator h = Operator::Zero(3, 3);
  h(0, 0) = 4.0;
  h(1, 1) = 0.25;
  Operator r = pinv_sqrt(h, 1e-10);
  EXPECT_NEAR(r(0, 0).real(), 0.5, 1e-14);
  EXPECT_NEAR(r(1, 1).real(), 2.0, 1e-14);
  EXPECT_EQ(r(2, 2), Complex(0.0));
  Rng rng(2);
  Operator rho = random_density(3, rng);
  Operator s = sqrtm_psd(rho);
  EXPECT_TRUE(near(Operator(s * s), rho, 1e-12));
}

TEST(Linalg, RandomGeneratorsAreWellFormed) {
  Rng rng(99);
  Operator v = random_isometry(5, 3, rng);
  EXPECT_TRUE(near(Operator(v.adjoint() * v), identity(3), 1e-12));
  Operator u = random_unitary(4, rng);
  EXPECT_TRUE(near(Operator(u * u.adjoint()), identity(4), 1e-12));
  Operator rho = random_density(4, rng, 2);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  Eigen::SelfAdjointEigenSolver<Operator> es(rho);
  EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
  EXPECT_LT(es.eigenvalues()(1), 1e-12);
  EXPECT_TRUE(is_hermitian(random_hermitian(3, rng), 1e-14));
}

TEST(Linalg, SeededRandomnessRepeats) {
  Rng a(42), b(42);
  EXPECT_EQ(gaussian_matrix(3, 3, a), gaussian_matrix(3, 3, b));
}

TEST(Linalg, OrthogonalComplement) {
  Operator q = projector_range(basis_projector(3, {0}), 1e-9);
  Operator c = orthogonal_complement(q, 1e-9);
  ASSERT_EQ(c.cols(), 2);
  EXPECT_LT(max_abs(q.adjoint() * c), 1e-12);
  EXPECT_NEAR(projection_residual(q, Vector(ket_bra(3, 0, 0).col(0))), 0.0, 1e-12);
}

}  // namespace
}  // namespace ipskit
