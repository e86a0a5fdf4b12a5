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

// Temporal-steering assemblages of the extended scenario, the temporal
// steerable weight and the -T3 witness.

#include "tscramble/assemblage.hpp"
#include "tscramble/partition.hpp"
#include "tscramble/sdp.hpp"

#include <optional>

namespace tscramble {

/// sigma_{a|x}(t) = p(a|x) U rho_{a|x}(0) U^dag with q1 prepared in the
/// post-measurement state of E_{a|x} and all other qubits maximally mixed,
/// i.e. U (E_{a|x} ⊗ 1) U^dag / 2^n. Register 1..n.
Assemblage encode_and_evolve(const MeasurementSet& meas, const ComplexMatrix& unitary,
                             std::size_t n_qubits);

/// Memberwise partial trace onto `region` (factor order of the register).
/// An empty region gives the scalar assemblage p(a|x).
Assemblage reduce_assemblage(const Assemblage& asmb, const QubitRegister& region);

/// U sigma_{a|x} U^dag for every member.
Assemblage conjugate(const Assemblage& asmb, const ComplexMatrix& unitary);

/// Hidden states of an explicit local-hidden-state model: sigma_{a|x} =
/// sum_lambda D_lambda(a|x) sigma_lambda with every sigma_lambda ⪰ 0.
struct LhsModel {
  std::vector<DeterministicStrategy> strategies;
  std::vector<ComplexMatrix> hidden_states;
  int iterations = 0;
  double min_eigenvalue = 0.0;
};

/// Search for an exact LHS model of a two-outcome assemblage. Hidden states
/// are parameterized by their Walsh coefficients over strategies; the
/// constant and first-order coefficients are fixed by the assemblage, the
/// higher ones are found by alternating projections between that affine set
/// and the PSD cone. Returns nullopt when the assemblage is not two-outcome
/// or no model is found within `max_iter` rounds. A returned model is exact:
/// the marginals are reproduced identically and every hidden state has a
/// nonnegative spectrum.
std::optional<LhsModel> explicit_lhs_model(const Assemblage& asmb, int max_iter = 300);

/// Residual of an LHS model: max |sigma_ax - sum D sigma_lambda| and the
/// smallest hidden-state eigenvalue.
struct LhsCheck {
  double reconstruction_error = 0.0;
  double min_eigenvalue = 0.0;
};
LhsCheck check_lhs_model(const Assemblage& asmb, const LhsModel& model);

struct TswOptions {
  SdpOptions sdp;
  bool lhs_fast_path = true;
  int lhs_max_iter = 300;
};

enum class TswMethod { ExplicitLhs, Sdp, Trivial };
const char* to_string(TswMethod method);

struct TswResult {
  double value = 0.0;
  TswMethod method = TswMethod::Sdp;
  std::optional<SdpSolution> solution;
};

/// 1 - mu*. An assemblage with an explicit LHS model has weight exactly 0;
/// otherwise the steering-weight SDP decides. Throws SolverError when the
/// SDP does not reach Optimal.
TswResult temporal_steerable_weight_details(const Assemblage& asmb, const TswOptions& options = {});
double temporal_steerable_weight(const Assemblage& asmb, const TswOptions& options = {});

/// Weight of an assemblage that comes with its own LHS model: 0 once the
/// model reproduces every member within `tol` with hidden states ⪰ -tol.
/// Throws std::invalid_argument if the model does not check out.
double temporal_steerable_weight(const Assemblage& asmb, const LhsModel& model, double tol = 1e-9);

/// TSW of the t = 0 assemblage on the encoded qubit alone, {E_{a|x} / 2}.
/// Equals TSW of the full-register assemblage at every t (unitary
/// invariance, and tensoring with a fixed state changes nothing).
double tsw_total_analytic(const MeasurementSet& meas, const TswOptions& options = {});

struct WitnessRecord {
  double t = 0.0;
  double tsw_tot = 0.0;
  double tsw_c = 0.0;
  double tsw_d = 0.0;
  double minus_t3 = 0.0;
  TswMethod method_c = TswMethod::Trivial;
  TswMethod method_d = TswMethod::Trivial;
};

enum class TotalWeightMode { Analytic, FullRegister };

/// TSW[tot] - TSW[C] - TSW[D] for U applied to the encoded register.
WitnessRecord minus_T3(const MeasurementSet& meas, const ComplexMatrix& unitary,
                       const PartitionSpec& part, const TswOptions& options = {},
                       TotalWeightMode mode = TotalWeightMode::Analytic);

/// Same, from an already-evolved full assemblage and a known TSW[tot].
WitnessRecord witness_from_assemblage(const Assemblage& total, double tsw_tot,
                                      const PartitionSpec& part, const TswOptions& options = {});

/// |TSW(asmb) - TSW(U asmb U^dag)|.
double tsw_unitary_invariance_check(const Assemblage& asmb, const ComplexMatrix& unitary,
                                    const TswOptions& options = {});

}  // namespace tscramble
