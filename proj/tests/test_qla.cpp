// Copyright 2026 The tscramble Authors
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

#include "tscramble/kernels.hpp"
#include "tscramble/qla.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace tscramble;
using tscramble::oracle::pauli;

namespace {

ComplexMatrix bell_projector() {
  ComplexMatrix v = ComplexMatrix::Zero(4, 1);
  v(0, 0) = v(3, 0) = 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

}  // namespace

TEST(QubitRegister, RejectsDuplicates) {
  EXPECT_THROW(QubitRegister({1, 2, 1}), std::invalid_argument);
  QubitRegister r{3, 1, 2};
  EXPECT_EQ(r.position(1), 1u);
  EXPECT_THROW((void)r.position(7), std::invalid_argument);
  EXPECT_EQ(r.restrict_to(QubitRegister{2, 3}), (QubitRegister{3, 2}));
  EXPECT_EQ(r.without(QubitRegister{1}), (QubitRegister{3, 2}));
}

TEST(Kron, IdentityAndDiagonalCases) {
  EXPECT_LT(max_abs(kron(identity(2), identity(2)) - identity(4)), 1e-15);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  EXPECT_LT(max_abs(kron(pauli('Z'), pauli('Z')) - expected), 1e-15);
}

TEST(Kron, MatchesIndexFormula) {
  EXPECT_LT(max_abs(kron(pauli('X'), pauli('Y')) - oracle::kron_oracle(pauli('X'), pauli('Y'))),
            1e-15);
  std::mt19937_64 rng(3);
  const ComplexMatrix a = oracle::random_gaussian(2, 3, rng);
  const ComplexMatrix b = oracle::random_gaussian(3, 2, rng);
  EXPECT_LT(max_abs(kron(a, b) - oracle::kron_oracle(a, b)), 1e-14);
}

TEST(PartialTrace, ProductState) {
  std::mt19937_64 rng(5);
  const ComplexMatrix ra = oracle::random_density(2, rng);
  const ComplexMatrix rb = oracle::random_density(4, rng);
  DensityMatrix rho(kron(ra, rb), QubitRegister{1, 2, 3});
  EXPECT_LT(max_abs(partial_trace(rho, QubitRegister{1}).matrix() - ra), 1e-14);
  EXPECT_LT(max_abs(partial_trace(rho, QubitRegister{2, 3}).matrix() - rb), 1e-14);
}

TEST(PartialTrace, BellMarginal) {
  DensityMatrix bell(bell_projector(), QubitRegister{1, 2});
  EXPECT_LT(max_abs(partial_trace(bell, QubitRegister{1}).matrix() - 0.5 * identity(2)), 1e-15);
}

TEST(PartialTrace, MatchesIndexSumOracle) {
  std::mt19937_64 rng(11);
  const ComplexMatrix m = oracle::random_density(8, rng);
  DensityMatrix rho(m, QubitRegister{1, 2, 3});
  const ComplexMatrix got = partial_trace(rho, QubitRegister{1, 3}).matrix();
  EXPECT_LT(max_abs(got - oracle::partial_trace_oracle(m, 3, {0, 2})), 1e-14);
  // keep order follows the register, not the argument
  EXPECT_EQ(partial_trace(rho, QubitRegister{3, 1}).qubits(), (QubitRegister{1, 3}));
  EXPECT_THROW((void)partial_trace(rho, QubitRegister{4}), std::invalid_argument);
}

TEST(PartialTrace, SerialAndParallelKernelsAgree) {
  std::mt19937_64 rng(13);
  const ComplexMatrix m = oracle::random_gaussian(256, 256, rng);
  const std::vector<std::size_t> keep_pos{1, 4, 6, 7};
  const std::vector<std::size_t> trace_pos{0, 2, 3, 5};
  const auto koff = kernels::subsystem_offsets(keep_pos, 8);
  const auto toff = kernels::subsystem_offsets(trace_pos, 8);
  ComplexMatrix serial, parallel;
  kernels::partial_trace_serial(m, koff, toff, serial);
  kernels::partial_trace_parallel(m, koff, toff, parallel);
  EXPECT_EQ(max_abs(serial - parallel), 0.0);
  EXPECT_LT(max_abs(serial - oracle::partial_trace_oracle(m, 8, {1, 4, 6, 7})), 1e-12);
}

TEST(PartialTrace, TraceAndPositivityPreserved) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    DensityMatrix rho(oracle::random_density(16, rng), QubitRegister{1, 2, 3, 4});
    const DensityMatrix red = partial_trace(rho, QubitRegister{2, 4});
    EXPECT_NEAR(red.trace(), 1.0, 1e-12);
    EXPECT_NO_THROW(red.validate_spectrum(1e-12));
  }
}

TEST(PartialTranspose, InvolutionAndProductCase) {
  std::mt19937_64 rng(19);
  const QubitRegister full{1, 2};
  const ComplexMatrix ra = oracle::random_density(2, rng);
  const ComplexMatrix rb = oracle::random_density(2, rng);
  const ComplexMatrix pt = partial_transpose(kron(ra, rb), QubitRegister{1}, full);
  EXPECT_LT(max_abs(pt - kron(ra.transpose(), rb)), 1e-15);
  const ComplexMatrix m = oracle::random_gaussian(8, 8, rng);
  const QubitRegister three{1, 2, 3};
  EXPECT_EQ(max_abs(partial_transpose(partial_transpose(m, QubitRegister{1, 3}, three),
                                      QubitRegister{1, 3}, three) -
                    m),
            0.0);
  EXPECT_THROW((void)partial_transpose(m, QubitRegister{1}, full), std::invalid_argument);
}

TEST(PartialTranspose, IdentityChoiGivesHalfSwap) {
  // Direct 4x4 computation: (|00>+|11>)(<00|+<11|)/2 with the first factor
  // transposed is (|00><00| + |01><10| + |10><01| + |11><11|)/2.
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  const ComplexMatrix pt = partial_transpose(bell_projector(), QubitRegister{1}, QubitRegister{1, 2});
  EXPECT_LT(max_abs(pt - 0.5 * swap), 1e-15);
}

TEST(HermitianEig, PauliSpectra) {
  const auto z = hermitian_eig(pauli('Z'));
  EXPECT_NEAR(z.values[0], -1.0, 1e-15);
  EXPECT_NEAR(z.values[1], 1.0, 1e-15);
  const auto x = hermitian_eig(pauli('X'));
  EXPECT_NEAR(x.values[0], -1.0, 1e-15);
  EXPECT_NEAR(x.values[1], 1.0, 1e-15);
  // |-> and |+> up to phase
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(x.vectors(0, 0)), s, 1e-14);
  EXPECT_NEAR(std::abs(x.vectors(0, 0) + x.vectors(1, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(x.vectors(0, 1) - x.vectors(1, 1)), 0.0, 1e-14);
}

TEST(HermitianEig, ReconstructionUpTo512) {
  std::mt19937_64 rng(23);
  for (std::size_t dim : {8u, 64u, 512u}) {
    const ComplexMatrix h = oracle::random_hermitian(dim, rng);
    const auto e = hermitian_eig(h);
    const ComplexMatrix rec = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE(max_abs(rec - h), 1e-9 * max_abs(h)) << dim;
    EXPECT_TRUE(is_unitary(e.vectors, 1e-10));
    for (Eigen::Index i = 1; i < e.values.size(); ++i) EXPECT_LE(e.values[i - 1], e.values[i]);
  }
}

TEST(HermitianEig, RejectsNonHermitian) {
  ComplexMatrix m = pauli('Z');
  m(0, 1) = 0.1;
  EXPECT_THROW((void)hermitian_eig(m), std::invalid_argument);
}

TEST(Evolve, ZeroTimeAndClosedForm) {
  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  DensityMatrix rho(plus, QubitRegister{1});
  EXPECT_EQ(max_abs(evolve(rho, pauli('Z'), 0.0).matrix() - plus), 0.0);
  // e^{-i Z pi/2}|+> = -i|0>/sqrt2 + i|1>/sqrt2 ~ |->
  const ComplexMatrix out = evolve(rho, pauli('Z'), std::numbers::pi / 2).matrix();
  ComplexMatrix minus(2, 2);
  minus << 0.5, -0.5, -0.5, 0.5;
  EXPECT_LT(max_abs(out - minus), 1e-15);
  EXPECT_THROW((void)evolve(rho, identity(4), 1.0), std::invalid_argument);
}

TEST(Evolve, SpectrumPreserved) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> tdist(0.0, 10.0);
  for (int trial = 0; trial < 10; ++trial) {
    DensityMatrix rho(oracle::random_density(8, rng), QubitRegister{1, 2, 3});
    const ComplexMatrix h = oracle::random_hermitian(8, rng);
    const DensityMatrix out = evolve(rho, h, tdist(rng));
    EXPECT_LT((hermitian_eigenvalues(out.matrix()) - hermitian_eigenvalues(rho.matrix()))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-9);
  }
}

TEST(ConjugateLocal, MatchesLiftedOperator) {
  std::mt19937_64 rng(31);
  const QubitRegister full{1, 2, 3, 4};
  const ComplexMatrix u = oracle::random_unitary(16, rng);
  const ComplexMatrix op = oracle::random_gaussian(4, 4, rng);
  const QubitRegister targets{3, 1};
  const ComplexMatrix lifted = embed(op, targets, full);
  EXPECT_LT(max_abs(conjugate_local(u, op, targets, full) - u * lifted * u.adjoint()), 1e-12);
  // embed follows target order: X on q3 then Z on q1
  EXPECT_LT(max_abs(embed(kron(pauli('X'), pauli('Z')), targets, full) -
                    oracle::pauli_word("ZIXI")),
            1e-15);
}

TEST(Entropy, Values) {
  DensityMatrix mixed(0.5 * identity(2), QubitRegister{1});
  EXPECT_NEAR(von_neumann_entropy(mixed), 1.0, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(mixed, EntropyUnit::Nats), std::log(2.0), 1e-14);
  DensityMatrix pure(bell_projector(), QubitRegister{1, 2});
  EXPECT_NEAR(von_neumann_entropy(pure), 0.0, 1e-12);
  DensityMatrix mm(0.25 * identity(4), QubitRegister{1, 2});
  EXPECT_NEAR(von_neumann_entropy(mm), 2.0, 1e-14);
}

TEST(MutualInformation, ReferenceStates) {
  std::mt19937_64 rng(37);
  DensityMatrix product(kron(oracle::random_density(2, rng), oracle::random_density(2, rng)),
                        QubitRegister{1, 2});
  EXPECT_NEAR(mutual_information(product, QubitRegister{1}, QubitRegister{2}), 0.0, 1e-10);
  DensityMatrix bell(bell_projector(), QubitRegister{1, 2});
  EXPECT_NEAR(mutual_information(bell, QubitRegister{1}, QubitRegister{2}), 2.0, 1e-12);
  ComplexMatrix cc = ComplexMatrix::Zero(4, 4);
  cc(0, 0) = cc(3, 3) = 0.5;
  DensityMatrix classical(cc, QubitRegister{1, 2});
  // S(A) = S(B) = 1, S(AB) = 1
  EXPECT_NEAR(mutual_information(classical, QubitRegister{1}, QubitRegister{2}), 1.0, 1e-12);
  EXPECT_THROW((void)mutual_information(bell, QubitRegister{1}, QubitRegister{1, 2}),
               std::invalid_argument);
}

TEST(MutualInformation, SymmetricAndNonnegative) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    DensityMatrix rho(oracle::random_density(16, rng), QubitRegister{1, 2, 3, 4});
    const double ab = mutual_information(rho, QubitRegister{1, 4}, QubitRegister{2});
    const double ba = mutual_information(rho, QubitRegister{2}, QubitRegister{1, 4});
    EXPECT_NEAR(ab, ba, 1e-12);
    EXPECT_GE(ab, -1e-9);
  }
}

TEST(DensityMatrix, Validation) {
  EXPECT_THROW(DensityMatrix(identity(2), QubitRegister{1}), std::domain_error);
  EXPECT_THROW(DensityMatrix(0.5 * identity(2), QubitRegister{1, 2}), std::invalid_argument);
  EXPECT_NO_THROW(DensityMatrix(0.25 * identity(2), QubitRegister{1}, Normalization::Unnormalized));
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  DensityMatrix bad(neg, QubitRegister{1});
  EXPECT_THROW(bad.validate_spectrum(), std::domain_error);
}
