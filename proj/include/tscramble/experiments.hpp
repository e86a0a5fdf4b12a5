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

// Experiment runners: time scans, the Clifford angle scan, backflow
// integrals, size sweeps and the invariant suite behind `verify`.

#include "tscramble/channels.hpp"
#include "tscramble/kernels.hpp"
#include "tscramble/models.hpp"
#include "tscramble/steering.hpp"

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace tscramble {

enum class ModelKind { Ising, Syk, Clifford, CustomUnitary };
const char* to_string(ModelKind kind);
/// "ising", "syk", "clifford", "custom-unitary-file" (or "custom").
ModelKind parse_model_kind(const std::string& name);

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 40.0;
  std::size_t n_points = 200;

  /// Throws std::invalid_argument unless n_points >= 2 and t_end > t_start >= 0.
  void validate() const;
  std::vector<double> points() const;
  double spacing() const { return (t_end - t_start) / static_cast<double>(n_points - 1); }
};

/// 200 points over [0, 40/g] for spin chains, [0, 148/J] for SYK and
/// [0, pi] for the Clifford circuit (time is the angle).
TimeGrid default_time_grid(ModelKind kind, const HamiltonianSpec& spec);

struct ExperimentConfig {
  ModelKind model = ModelKind::Ising;
  HamiltonianSpec hamiltonian;  // n_qubits, g, h, J, seed
  ComplexMatrix custom_unitary;  // one time step; U(t) = U^t
  std::size_t n_c = 2;
  TimeGrid grid;
  std::string measurement_axes = "xyz";
  EntropyUnit unit = EntropyUnit::Bits;
  TswOptions tsw;

  std::size_t n_qubits() const;
  PartitionSpec partition() const { return PartitionSpec::contiguous(n_qubits(), n_c); }
  void validate() const;
};

/// U(t) for the configured model. Hamiltonian models diagonalize once.
class Evolution {
 public:
  explicit Evolution(const ExperimentConfig& config);
  ComplexMatrix unitary(double t) const { return fn_(t); }
  std::size_t n_qubits() const { return n_qubits_; }

 private:
  std::function<ComplexMatrix(double)> fn_;
  std::size_t n_qubits_ = 0;
};

/// U^t for a unitary through its eigenphases (principal branch).
std::function<ComplexMatrix(double)> unitary_power_family(const ComplexMatrix& u);

struct ScramblingRow {
  double t = 0.0;
  double minus_i3 = 0.0;
  double minus_t3 = 0.0;
  double i_ac = 0.0;
  double i_ad = 0.0;
  double tsw_c = 0.0;
  double tsw_d = 0.0;
  double tsw_tot = 0.0;
  std::string status = "ok";  // otherwise the solver failure; TSW columns are NaN

  bool ok() const { return status == "ok"; }
};

struct ScramblingReport {
  std::vector<ScramblingRow> rows;

  /// Rows sorted by t and -T3 = TSW_tot - TSW_C - TSW_D within 1e-9 on
  /// every successful row. Throws std::logic_error.
  void validate() const;
  /// Rows where TSW(region) > 1e-4 while I(A:region) <= 1e-6.
  std::size_t hierarchy_violations() const;
  std::size_t failed_rows() const;
};

/// One row: Choi-side and steering-side quantities for a fixed U.
ScramblingRow evaluate_unitary(const ComplexMatrix& unitary, double t, const PartitionSpec& part,
                               const MeasurementSet& meas, double tsw_tot, EntropyUnit unit,
                               const TswOptions& tsw);

ScramblingReport run_scan(const ExperimentConfig& config,
                          kernels::Execution exec = kernels::Execution::Parallel);

/// The three-qubit angle family with C = {q1}, D = {q2, q3}; t holds theta.
ScramblingReport run_clifford_scan(const std::vector<double>& thetas, EntropyUnit unit = EntropyUnit::Bits,
                                   const TswOptions& tsw = {},
                                   kernels::Execution exec = kernels::Execution::Parallel);

std::vector<double> uniform_grid(double start, double end, std::size_t n_points);

enum class BackflowQuantity { I3, T3 };
const char* to_string(BackflowQuantity q);

struct BackflowResult {
  BackflowQuantity quantity = BackflowQuantity::I3;
  double t_end = 0.0;
  double value = 0.0;
  double grid_spacing = 0.0;
};

/// Sum of positive increments of Q (I3 = -(-I3), T3 = -(-T3)) over the
/// grid points in [t_0, T]. Throws std::out_of_range if T lies outside the
/// report and std::domain_error if a row in range failed.
BackflowResult backflow_integral(const ScramblingReport& report, BackflowQuantity q, double T);

enum class PartitionRule { Fixed, Caption };

/// Caption rule: n_c = 1, 2, 3, 4 for 3, 4, 5, 8 qubits (n / 2 otherwise).
std::size_t caption_region_size(std::size_t n_qubits);

struct SweepOptions {
  ModelKind model = ModelKind::Ising;
  HamiltonianSpec hamiltonian;
  std::vector<std::size_t> sizes = {3, 4, 5, 8};
  PartitionRule rule = PartitionRule::Fixed;
  std::size_t n_c = 2;
  std::size_t n_points = 200;
  double t_end = std::numeric_limits<double>::quiet_NaN();  // NaN: model default
  EntropyUnit unit = EntropyUnit::Bits;
  TswOptions tsw;
};

struct SweepRow {
  std::size_t n_qubits = 0;
  std::size_t n_c = 0;
  BackflowResult i3;
  BackflowResult t3;
  ScramblingReport report;
};

std::vector<SweepRow> size_sweep(const SweepOptions& options,
                                 kernels::Execution exec = kernels::Execution::Parallel);

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  using PdmBuilder = std::function<PseudoDensityMatrix(const ComplexMatrix&, std::size_t)>;
  PdmBuilder pdm_builder;  // empty: build_pdm over all inputs
  double sdp_tol = 0.0;    // > 0 overrides the solver's gap and feasibility tolerances
  std::uint64_t seed = 1;
};

/// Invariant suite. Every check runs even if an earlier one fails.
std::vector<VerifyCheck> verify(const VerifyOptions& options = {});

/// Apply a user-facing SDP tolerance: gap and feasibility both set to tol.
TswOptions tsw_options_with_tolerance(double tol);

}  // namespace tscramble
