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

#include "test_support.hpp"

namespace ipskit {
namespace {

std::vector<Operator> matrix_units(int d) {
  std::vector<Operator> out;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.push_back(ket_bra(d, i, j));
  return out;
}

OperatorSpace full_algebra(int d) { return make_space(d, matrix_units(d)); }

OperatorSpace diagonal_algebra(int d) {
  std::vector<Operator> ops;
  for (int i = 0; i < d; ++i) ops.push_back(ket_bra(d, i, i));
  return make_space(d, ops);
}

OperatorSpace m2_kron_one() {
  std::vector<Operator> ops;
  for (const auto& m : matrix_units(2)) ops.push_back(kron(m, identity(2)));
  return make_space(4, ops);
}

OperatorSpace m2_plus_m1() {
  std::vector<Operator> ops;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ops.push_back(ket_bra(3, i, j));
  ops.push_back(ket_bra(3, 2, 2));
  return make_space(3, ops);
}

// Conjugation by a fixed random unitary so no test depends on the computational basis.
OperatorSpace rotate(const OperatorSpace& s, std::uint64_t seed) {
  Rng rng(seed);
  Operator u = random_unitary(s.dim, rng);
  std::vector<Operator> ops;
  for (const auto& b : s.basis()) ops.push_back(u * b * u.adjoint());
  return make_space(s.dim, ops);
}

TEST(IsAlgebra, Examples) {
  EXPECT_TRUE(is_algebra(make_space(2, {identity(2), pauli(3)})).is_algebra);
  AlgebraCheck xy = is_algebra(make_space(2, {pauli(1), pauli(2)}));
  EXPECT_FALSE(xy.is_algebra);
  EXPECT_GT(xy.worst_residual, 0.1);
  EXPECT_TRUE(is_algebra(full_algebra(3)).is_algebra);
}

TEST(Commutant, Examples) {
  EXPECT_EQ(commutant(make_space(3, {identity(3)}), identity(3)).size(), 9);
  OperatorSpace c = commutant(full_algebra(3), identity(3));
  ASSERT_EQ(c.size(), 1);
  EXPECT_LT(subspace_distance(c, make_space(3, {identity(3)})), 1e-10);

  std::vector<Operator> diag_gens;
  for (int i = 0; i < 3; ++i) diag_gens.push_back(ket_bra(3, i, i));
  Operator stacked(0, 9);
  for (const auto& g : diag_gens) {
    Operator k = kron(identity(3), g) - kron(g.transpose(), identity(3));
    Operator next(stacked.rows() + 9, 9);
    next << stacked, k;
    stacked = next;
  }
  const int oracle = testing::kernel_dim(stacked);
  EXPECT_EQ(oracle, 3);
  OperatorSpace cd = commutant(diagonal_algebra(3), identity(3));
  EXPECT_EQ(cd.size(), oracle);
  EXPECT_LT(subspace_distance(cd, diagonal_algebra(3)), 1e-10);
}

TEST(Commutant, RespectsAmbientProjector) {
  Operator p = basis_projector(3, {0, 1});
  OperatorSpace c = commutant(make_space(3, {p}), p);
  EXPECT_EQ(c.size(), 4);
  EXPECT_THROW(commutant(make_space(3, {identity(3)}), p), InputError);
}

TEST(Center, OfM2PlusM1) {
  OperatorSpace z = center(m2_plus_m1());
  ASSERT_EQ(z.size(), 2);
  EXPECT_LT(subspace_distance(z, make_space(3, {basis_projector(3, {0, 1}), ket_bra(3, 2, 2)})), 1e-9);
}

TEST(Decompose, UnitSpan) {
  AlgebraDecomposition d = canonical_decompose(make_space(3, {identity(3)}));
  EXPECT_EQ(shape_of(d), make_shape({1}, {3}));
}

TEST(Decompose, FullAlgebra) {
  EXPECT_EQ(shape_of(canonical_decompose(rotate(full_algebra(3), 1))), make_shape({3}, {1}));
}

TEST(Decompose, DiagonalAlgebra) {
  EXPECT_EQ(shape_of(canonical_decompose(rotate(diagonal_algebra(3), 2))), make_shape({1, 1, 1}, {1, 1, 1}));
}

TEST(Decompose, M2KronOne) {
  AlgebraDecomposition d = canonical_decompose(rotate(m2_kron_one(), 3));
  EXPECT_EQ(shape_of(d), make_shape({2}, {2}));
  EXPECT_TRUE(verify_decomposition(rotate(m2_kron_one(), 3), d).pass(1e-8));
}

TEST(Decompose, M2PlusM1) {
  OperatorSpace a = rotate(m2_plus_m1(), 4);
  AlgebraDecomposition d = canonical_decompose(a);
  EXPECT_EQ(shape_of(d), make_shape({2, 1}, {1, 1}));
  DecompositionReport rep = verify_decomposition(a, d);
  EXPECT_LT(rep.max_residual(), 1e-8);
  // Brute-force reconstruction check: the rebuilt span equals the input.
  std::vector<Operator> rebuilt;
  for (const auto& s : d.sectors)
    for (const auto& m : matrix_units(s.d)) rebuilt.push_back(s.isometry * kron(m, identity(s.n)) * s.isometry.adjoint());
  EXPECT_LT(subspace_distance(make_space(3, rebuilt), a), 1e-8);
}

TEST(Decompose, ProperSupport) {
  std::vector<Operator> ops;
  for (const auto& m : matrix_units(2)) ops.push_back(kron(m, ket_bra(2, 0, 0) + ket_bra(2, 1, 1)));
  Operator embed = Operator::Zero(5, 4);
  embed.topRows(4) = identity(4);
  std::vector<Operator> lifted;
  for (const auto& o : ops) lifted.push_back(embed * o * embed.adjoint());
  OperatorSpace a = make_space(5, lifted);
  AlgebraDecomposition d = canonical_decompose(a);
  EXPECT_EQ(shape_of(d), make_shape({2}, {2}));
  EXPECT_NEAR(d.support_projector.trace().real(), 4.0, 1e-12);
}

TEST(Decompose, MixedSectorsSortedByDThenN) {
  std::vector<Operator> ops;
  const int dim = 2 * 1 + 1 * 2 + 2 * 2;
  auto block = [&](int off, int d, int n) {
    for (const auto& m : matrix_units(d)) {
      Operator x = Operator::Zero(dim, dim);
      x.block(off, off, d * n, d * n) = kron(m, identity(n));
      ops.push_back(x);
    }
  };
  block(0, 2, 1);
  block(2, 1, 2);
  block(4, 2, 2);
  OperatorSpace a = rotate(make_space(dim, ops), 5);
  EXPECT_EQ(shape_of(canonical_decompose(a)), make_shape({2, 2, 1}, {2, 1, 2}));
}

TEST(Decompose, CorruptedIsometryFailsVerification) {
  OperatorSpace a = rotate(m2_plus_m1(), 6);
  AlgebraDecomposition d = canonical_decompose(a);
  d.sectors[0].isometry(0, 0) += 0.3;
  EXPECT_GT(verify_decomposition(a, d).max_residual(), 1e-3);
}

TEST(Decompose, NonAlgebraIsRejected) {
  EXPECT_THROW(canonical_decompose(make_space(2, {identity(2), pauli(1), pauli(2)})), NumericalError);
}

TEST(Decompose, DimensionBookkeeping) {
  OperatorSpace a = rotate(m2_plus_m1(), 7);
  AlgebraDecomposition d = canonical_decompose(a, 11);
  int total = 0;
  for (const auto& s : d.sectors) total += s.d * s.d;
  EXPECT_EQ(total, a.size());
}

}  // namespace
}  // namespace ipskit
