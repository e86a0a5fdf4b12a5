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


#pragma once

// Operators for the model studies: Pauli words, spin-chain and SYK
// Hamiltonians, the three-qubit Clifford scrambler and random unitaries.

#include "tscramble/partition.hpp"
#include "tscramble/qla.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tscramble {

/// Word over {I, X, Y, Z} times a complex coefficient. Character k acts on
/// qubit k+1 (leftmost factor first).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::string word, Complex coefficient = 1.0);

  /// Identity word on n qubits.
  static PauliString identity(std::size_t n);
  /// Single letter `op` on 1-based qubit `qubit` of an n-qubit register.
  static PauliString single(char op, std::size_t qubit, std::size_t n);

  const std::string& word() const { return word_; }
  Complex coefficient() const { return coefficient_; }
  std::size_t size() const { return word_.size(); }

  PauliString operator*(const PauliString& rhs) const;
  PauliString scaled(Complex factor) const;

  /// Bit mask of qubits flipped (X or Y), most significant bit = qubit 1.
  std::uint64_t flip_mask() const;
  /// Amplitude picked up by basis state |j> (excluding the coefficient).
  Complex phase(std::uint64_t j) const;

 private:
  std::string word_;
  Complex coefficient_{1.0, 0.0};
};

ComplexMatrix pauli_matrix(const PauliString& p);
/// Adds p's matrix into `out` without forming it densely first.
void accumulate(const PauliString& p, ComplexMatrix& out);

enum class HamiltonianKind { IsingChain, SYK, Custom };

struct HamiltonianSpec {
  HamiltonianKind kind = HamiltonianKind::IsingChain;
  std::size_t n_qubits = 7;
  double g = 1.0;
  double h = 0.5;
  double J = 1.0;
  std::uint64_t seed = 1;

  void validate() const;
};

/// -sum Z_i Z_{i+1} - h sum Z_i - g sum X_i, open chain.
ComplexMatrix build_ising(std::size_t n, double g, double h);

struct MajoranaOperator {
  std::size_t index = 0;
  ComplexMatrix matrix;
};

/// chi_{2i-1} = X..X Z_i / sqrt2, chi_{2i} = X..X Y_i / sqrt2, 1-based index.
PauliString majorana_string(std::size_t index, std::size_t n_qubits);
MajoranaOperator jordan_wigner_majorana(std::size_t index, std::size_t n_qubits);

/// 3! J^2 / ((N-1)(N-2)(N-3)), N = 2 n_qubits.
double syk_coupling_variance(std::size_t n_qubits, double J);

/// One coupling per i<j<k<l in lexicographic order, drawn from one
/// mt19937_64 stream seeded with `seed`.
std::vector<double> sample_syk_couplings(std::size_t n_qubits, double J, std::uint64_t seed);

ComplexMatrix build_syk(std::size_t n_qubits, double J, std::uint64_t seed);

/// Ising or SYK according to spec.kind; Custom has no Hamiltonian and throws.
ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec);

/// The fixed 8x8 three-qubit Clifford scrambler.
ComplexMatrix clifford_scrambler_unitary();

/// U_s P U_s^dag = sign * Q for the nine single-qubit Paulis P.
struct OperatorGrowthRow {
  std::string input;
  std::string output;
  int sign = 1;
};
const std::vector<OperatorGrowthRow>& clifford_operator_growth();
/// Largest entrywise deviation from the table above.
double operator_growth_residual(const ComplexMatrix& scrambler);

/// exp(-i theta/2 X_a X_b) on qubits a, b of an n-qubit register.
ComplexMatrix xx_gate(double theta, std::size_t a, std::size_t b, std::size_t n);
/// exp(-i theta/2 Z).
ComplexMatrix rz_gate(double theta);

/// Three-qubit circuit L R L with L = XX12 XX13 XX23 (all at angle theta)
/// and R = Rz(theta) on every qubit. theta = 0 is the identity and
/// theta = pi/2 is maximally scrambling.
ComplexMatrix clifford_scan_unitary(double theta);

/// Haar-random unitary: QR of a complex Gaussian matrix, phases of R's
/// diagonal moved into Q.
ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64& rng);

/// Haar-random U_C ⊗ U_D for the partition's output regions.
ComplexMatrix random_local_unitary(const PartitionSpec& partition, std::uint64_t seed);

/// Independent Haar-random single-qubit unitaries on every qubit. Local
/// with respect to every partition, so safe to interleave with SWAPs.
ComplexMatrix random_single_qubit_layer(std::size_t n_qubits, std::uint64_t seed);

/// Product of SWAPs on disjoint 1-based qubit pairs. Throws on overlap.
ComplexMatrix swap_network(const std::vector<std::pair<int, int>>& pairs, std::size_t n_qubits);

}  // namespace tscramble
