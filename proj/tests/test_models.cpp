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


#include "tscramble/models.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace tscramble;
using tscramble::oracle::pauli_word;

TEST(PauliString, Matrices) {
  EXPECT_LT(max_abs(pauli_matrix(PauliString("I")) - identity(2)), 1e-15);
  ComplexMatrix zz = ComplexMatrix::Zero(4, 4);
  zz.diagonal() << 1, -1, -1, 1;
  EXPECT_LT(max_abs(pauli_matrix(PauliString("ZZ")) - zz), 1e-15);
  EXPECT_LT(max_abs(pauli_matrix(PauliString("XY")) - pauli_word("XY")), 1e-15);
  EXPECT_LT(max_abs(pauli_matrix(PauliString("YIZX", Complex(0.5, -2.0))) -
                    Complex(0.5, -2.0) * pauli_word("YIZX")),
            1e-15);
  EXPECT_THROW(PauliString("XQ"), std::invalid_argument);
}

TEST(PauliString, ProductMatchesMatrixProduct) {
  const std::string letters = "IXYZ";
  for (char a : letters)
    for (char b : letters)
      for (char c : letters)
        for (char d : letters) {
          const PauliString p(std::string{a, b}, Complex(0.3, 0.7));
          const PauliString q(std::string{c, d}, -1.5);
          EXPECT_LT(max_abs(pauli_matrix(p * q) - pauli_matrix(p) * pauli_matrix(q)), 1e-14);
        }
}

TEST(Ising, SingleTermAndHandBuiltSum) {
  EXPECT_LT(max_abs(build_ising(2, 0.0, 0.0) + pauli_word("ZZ")), 1e-15);
  // n = 3, g = 1, h = 0: -ZZI - IZZ - XII - IXI - IIX
  const ComplexMatrix expected = -pauli_word("ZZI") - pauli_word("IZZ") - pauli_word("XII") -
                                 pauli_word("IXI") - pauli_word("IIX");
  EXPECT_LT(max_abs(build_ising(3, 1.0, 0.0) - expected), 1e-15);
  const ComplexMatrix h7 = build_ising(7, 1.0, 0.5);
  EXPECT_EQ(h7.rows(), 128);
  EXPECT_TRUE(is_hermitian(h7, 1e-12));
  EXPECT_THROW((void)build_ising(1, 1.0, 0.0), std::invalid_argument);
}

TEST(Majorana, EdgeCasesAndRange) {
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(max_abs(jordan_wigner_majorana(1, 2).matrix - s * pauli_word("ZI")), 1e-15);
  EXPECT_LT(max_abs(jordan_wigner_majorana(2, 2).matrix - s * pauli_word("YI")), 1e-15);
  EXPECT_LT(max_abs(jordan_wigner_majorana(5, 3).matrix - s * pauli_word("XXZ")), 1e-15);
  EXPECT_LT(max_abs(jordan_wigner_majorana(6, 3).matrix - s * pauli_word("XXY")), 1e-15);
  EXPECT_THROW((void)jordan_wigner_majorana(0, 3), std::out_of_range);
  EXPECT_THROW((void)jordan_wigner_majorana(7, 3), std::out_of_range);
}

TEST(Majorana, Anticommutators) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t d = std::size_t{1} << n;
    for (std::size_t i = 1; i <= 2 * n; ++i) {
      const ComplexMatrix a = jordan_wigner_majorana(i, n).matrix;
      EXPECT_TRUE(is_hermitian(a, 0.0));
      for (std::size_t j = 1; j <= 2 * n; ++j) {
        const ComplexMatrix b = jordan_wigner_majorana(j, n).matrix;
        const ComplexMatrix anti = a * b + b * a;
        const ComplexMatrix expected = (i == j ? 1.0 : 0.0) * identity(d);
        EXPECT_LT(max_abs(anti - expected), 1e-15) << i << "," << j;
      }
    }
  }
}

TEST(Syk, DeterministicAndHermitian) {
  const ComplexMatrix a = build_syk(4, 1.0, 42);
  const ComplexMatrix b = build_syk(4, 1.0, 42);
  EXPECT_EQ(max_abs(a - b), 0.0);
  EXPECT_TRUE(is_hermitian(a, 1e-12));
  EXPECT_GT(max_abs(a - build_syk(4, 1.0, 43)), 1e-3);
}

TEST(Syk, MatchesDirectMajoranaSum) {
  const std::size_t n = 3;
  const auto j = sample_syk_couplings(n, 1.3, 9);
  std::vector<ComplexMatrix> chi;
  for (std::size_t i = 1; i <= 2 * n; ++i) chi.push_back(jordan_wigner_majorana(i, n).matrix);
  ComplexMatrix h = ComplexMatrix::Zero(8, 8);
  std::size_t c = 0;
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t b = a + 1; b < 2 * n; ++b)
      for (std::size_t e = b + 1; e < 2 * n; ++e)
        for (std::size_t f = e + 1; f < 2 * n; ++f) h += j[c++] * chi[a] * chi[b] * chi[e] * chi[f];
  EXPECT_EQ(c, j.size());
  EXPECT_LT(max_abs(build_syk(n, 1.3, 9) - h), 1e-14);
}

TEST(Syk, CouplingVarianceMonteCarlo) {
  // n_qubits = 4 -> 70 couplings per draw; 150 draws gives 10500 samples
  const double target = syk_coupling_variance(4, 1.0);
  EXPECT_NEAR(target, 6.0 / (7.0 * 6.0 * 5.0), 1e-15);
  double sum = 0.0, sum2 = 0.0;
  std::size_t count = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    for (double x : sample_syk_couplings(4, 1.0, seed)) {
      sum += x;
      sum2 += x * x;
      ++count;
    }
  }
  const double mean = sum / static_cast<double>(count);
  const double var = sum2 / static_cast<double>(count) - mean * mean;
  EXPECT_NEAR(var / target, 1.0, 0.05);
}

TEST(Clifford, ScramblerIsUnitary) {
  EXPECT_TRUE(is_unitary(clifford_scrambler_unitary(), 1e-12));
}

TEST(Clifford, OperatorGrowthTable) {
  const ComplexMatrix u = clifford_scrambler_unitary();
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"XII", "XYY"}, {"YII", "YZZ"}, {"ZII", "ZXX"}, {"IXI", "YXY"}, {"IYI", "ZYZ"},
      {"IZI", "XZX"}, {"IIX", "YYX"}, {"IIY", "ZZY"}, {"IIZ", "XXZ"}};
  for (const auto& [in, out] : rows) {
    const ComplexMatrix lhs = u * pauli_word(in) * u.adjoint();
    EXPECT_LT(max_abs(lhs + pauli_word(out)), 1e-10) << in << " -> -" << out;
  }
}

TEST(Clifford, ScanCircuitEndpoints) {
  EXPECT_LT(max_abs(clifford_scan_unitary(0.0) - identity(8)), 1e-15);
  for (double th : {0.1, 0.7, 2.0}) EXPECT_TRUE(is_unitary(clifford_scan_unitary(th), 1e-12));
  // theta -> theta + pi multiplies by Z⊗Z⊗Z (a local Pauli frame) and a phase
  const ComplexMatrix a = pauli_word("ZZZ") * clifford_scan_unitary(0.4);
  const ComplexMatrix b = clifford_scan_unitary(0.4 + std::numbers::pi);
  const Complex ph = (a.adjoint() * b).trace() / 8.0;
  EXPECT_NEAR(std::abs(ph), 1.0, 1e-12);
  EXPECT_LT(max_abs(b - ph * a), 1e-12);
}

TEST(SwapNetwork, Basics) {
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  EXPECT_EQ(max_abs(swap_network({{1, 2}}, 2) - swap), 0.0);
  const ComplexMatrix s = swap_network({{1, 3}, {2, 4}}, 5);
  EXPECT_EQ(max_abs(s * s - identity(32)), 0.0);
  EXPECT_THROW((void)swap_network({{1, 2}, {2, 3}}, 3), std::invalid_argument);
  EXPECT_THROW((void)swap_network({{1, 4}}, 3), std::invalid_argument);
  // SWAP(1,3) maps X1 to X3
  const ComplexMatrix s13 = swap_network({{1, 3}}, 3);
  EXPECT_LT(max_abs(s13 * pauli_word("XIZ") * s13.adjoint() - pauli_word("ZIX")), 1e-15);
}

TEST(Haar, UnitaryAndTraceMoment) {
  std::mt19937_64 rng(2024);
  double sum = 0.0;
  const int samples = 10000;
  for (int k = 0; k < samples; ++k) {
    const ComplexMatrix u = haar_unitary(2, rng);
    sum += std::norm(u.trace());
  }
  // E|tr U|^2 = 1 for Haar U(d)
  EXPECT_NEAR(sum / samples, 1.0, 0.05);
  EXPECT_TRUE(is_unitary(haar_unitary(64, rng), 1e-12));
}

TEST(Haar, LocalUnitaryIsProduct) {
  const PartitionSpec p = PartitionSpec::contiguous(4, 2);
  const ComplexMatrix u = random_local_unitary(p, 7);
  EXPECT_TRUE(is_unitary(u, 1e-10));
  // a product operator maps I_C ⊗ X_D-type words into the D algebra
  const ComplexMatrix moved = u * pauli_word("IIXZ") * u.adjoint();
  const QubitRegister full{1, 2, 3, 4};
  const ComplexMatrix red = partial_trace(moved, full, QubitRegister{3, 4}) / 4.0;
  EXPECT_LT(max_abs(embed(red, QubitRegister{3, 4}, full) - moved), 1e-12);
  EXPECT_EQ(max_abs(u - random_local_unitary(p, 7)), 0.0);
}
