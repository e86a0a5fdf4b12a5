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

// Channel-side objects: Choi states, pseudo-density matrices and the
// tripartite mutual information.

#include "tscramble/assemblage.hpp"
#include "tscramble/partition.hpp"
#include "tscramble/qla.hpp"

#include <cstdint>

namespace tscramble {

/// Register layout: the reference labels (-k for each referenced k, in the
/// order given) followed by the system outputs 1..n.
struct ChoiState {
  DensityMatrix state;
  QubitRegister input_region;
  ComplexMatrix channel;
};

/// Each referenced system qubit is maximally entangled with its reference,
/// every other input starts maximally mixed, then U acts on the system.
ChoiState build_choi(const ComplexMatrix& unitary, std::size_t n_qubits,
                     const QubitRegister& referenced);
/// Single reference on q1, the default for -I3.
ChoiState build_choi(const ComplexMatrix& unitary, std::size_t n_qubits);

/// Hermitian, unit trace, possibly indefinite. Same layout as ChoiState.
struct PseudoDensityMatrix {
  ComplexMatrix matrix;
  QubitRegister qubits;
  QubitRegister input_region;
};

/// Correlator route: measure the Pauli word sigma_i on the referenced inputs
/// of a maximally mixed register, evolve, measure sigma_j on all outputs, and
/// assemble sum_ij E[ab] sigma_i ⊗ sigma_j / 2^(|in| + n). Cost grows as
/// 4^(|in| + n), so n_qubits + |in| is capped at 8.
PseudoDensityMatrix build_pdm(const ComplexMatrix& unitary, std::size_t n_qubits,
                              const QubitRegister& referenced);
/// All inputs referenced.
PseudoDensityMatrix build_pdm(const ComplexMatrix& unitary, std::size_t n_qubits);

/// Partial-transpose route: the Choi matrix transposed on its input side.
PseudoDensityMatrix pdm_from_choi(const ChoiState& choi);

/// sigma_{a|x} = tr_in[(E_{a|x} ⊗ 1) R] with E acting on the first input
/// label. Non-projective measurement sets are rejected.
Assemblage assemblage_from_pdm(const PseudoDensityMatrix& pdm, const MeasurementSet& meas);

struct TmiResult {
  double minus_i3 = 0.0;
  double i_a_cd = 0.0;
  double i_a_c = 0.0;
  double i_a_d = 0.0;
};

/// I(A:CD) - I(A:C) - I(A:D) on the Choi state. Each mutual information in
/// [-1e-9, 0) is clamped to 0 before differencing.
TmiResult tripartite_mutual_information(const ChoiState& choi, const PartitionSpec& part,
                                        EntropyUnit unit = EntropyUnit::Bits);

struct HaarBaseline {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  std::vector<double> samples;
};

/// Mean -I3 over Haar-random unitaries. Sample k draws from its own stream
/// seeded by (seed, k), so the result does not depend on thread count.
HaarBaseline haar_scrambled_baseline(std::size_t n_qubits, const PartitionSpec& part,
                                     std::size_t n_samples, std::uint64_t seed,
                                     EntropyUnit unit = EntropyUnit::Bits);

}  // namespace tscramble
