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

// Steerable-weight semidefinite program and the primal-dual interior-point
// solver behind it.

#include "tscramble/qla.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tscramble {

// ---------------------------------------------------------------------------
// Generic Hermitian LMI solver
//
//   maximize    sum_j <B_j, Y_j>
//   subject to  S_k = C_k - sum_j c_kj Y_j ⪰ 0        for every block k
//
// with Hermitian d x d unknowns Y_j. Its conic dual is
//
//   minimize    sum_k <C_k, X_k>
//   subject to  sum_k c_kj X_k = B_j,   X_k ⪰ 0.
//
// Hermitian matrices are mapped to R^{d^2} through an orthonormal real
// basis (diagonal units, symmetric and antisymmetric off-diagonal pairs), so
// the Newton system is real symmetric positive definite.

struct LmiBlock {
  ComplexMatrix constant;                             // C_k
  std::vector<std::pair<std::size_t, double>> terms;  // (j, c_kj), c_kj != 0
};

struct LmiProblem {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> objective;  // B_j
  std::vector<LmiBlock> blocks;

  std::size_t n_vars() const { return objective.size(); }
  void validate() const;
};

enum class SdpStatus { Optimal, MaxIter, Infeasible, NumericalError };
const char* to_string(SdpStatus status);

struct SdpOptions {
  double gap_tol = 1e-7;     // absolute duality gap, in the caller's units
  double feas_tol = 1e-8;    // relative primal and dual infeasibility
  int max_iter = 200;
  double step_fraction = 0.98;
  // The Newton system is dense with (#variables * d^2)^2 entries; larger
  // problems are refused with NumericalError instead of exhausting memory.
  double max_schur_bytes = 2.0 * 1024 * 1024 * 1024;
  bool verbose = false;
};

struct SdpStats {
  int iterations = 0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  double gap = 0.0;
  double seconds = 0.0;
};

struct LmiSolution {
  std::vector<ComplexMatrix> y;  // Y_j
  std::vector<ComplexMatrix> x;  // X_k
  std::vector<ComplexMatrix> s;  // S_k
  double dual_objective = 0.0;    // sum <B_j, Y_j>
  double primal_objective = 0.0;  // sum <C_k, X_k>
  SdpStatus status = SdpStatus::NumericalError;
  SdpStats stats;
  std::string message;
};

/// Infeasible-start primal-dual path following with the HKM search
/// direction and Mehrotra predictor-corrector steps. `options.gap_tol` is
/// compared against |primal - dual| after dividing by `objective_scale`.
LmiSolution solve_lmi(const LmiProblem& problem, const SdpOptions& options = {},
                      double objective_scale = 1.0);

namespace svec {
/// Orthonormal real coordinates of a Hermitian matrix (length d^2).
RealVector pack(const ComplexMatrix& h);
ComplexMatrix unpack(const RealVector& v, std::size_t d);
}  // namespace svec

// ---------------------------------------------------------------------------
// Steering weight

struct DeterministicStrategy {
  std::size_t index = 0;
  std::vector<std::size_t> outcome;  // outcome[x] = a(x)
};

/// All o^m strategies; lambda's base-o digits, most significant first, give
/// (a(x_1), ..., a(x_m)). Throws std::overflow_error above 10^6 strategies.
std::vector<DeterministicStrategy> enumerate_strategies(std::size_t n_settings,
                                                        std::size_t n_outcomes);

struct SteeringWeightProblem {
  std::vector<std::vector<ComplexMatrix>> members;  // members[x][a]
  std::vector<DeterministicStrategy> strategies;

  static SteeringWeightProblem from_members(std::vector<std::vector<ComplexMatrix>> members);
  std::size_t n_settings() const { return members.size(); }
  std::size_t n_outcomes() const { return members.front().size(); }
  std::size_t dim() const { return static_cast<std::size_t>(members.front().front().rows()); }
  /// Shapes, Hermiticity and member positivity within -1e-9.
  void validate() const;
};

struct SdpSolution {
  double mu_star = 0.0;     // sum_lambda tr sigma_lambda
  double dual_bound = 0.0;  // sum_ax tr(F_ax sigma_ax), an upper bound on mu*
  std::vector<ComplexMatrix> hidden_states;                  // one per strategy
  std::vector<std::vector<ComplexMatrix>> dual_certificate;  // F[x][a]
  SdpStatus status = SdpStatus::NumericalError;
  double gap = 0.0;
  SdpStats stats;
  std::size_t dropped_members = 0;  // members with trace below 1e-12
  std::string message;

  double steerable_weight() const { return 1.0 - mu_star; }
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, SdpStatus status, SdpSolution partial)
      : std::runtime_error(what), status_(status), partial_(std::move(partial)) {}
  SdpStatus status() const { return status_; }
  const SdpSolution& partial() const { return partial_; }

 private:
  SdpStatus status_;
  SdpSolution partial_;
};

/// maximize sum tr sigma_lambda s.t. sigma_ax - sum_lambda D_lambda(a|x)
/// sigma_lambda ⪰ 0, sigma_lambda ⪰ 0. Members of trace below 1e-12 are
/// removed together with every strategy that outputs them.
SdpSolution solve_steering_weight(const SteeringWeightProblem& problem,
                                  const SdpOptions& options = {});

/// Dual feasibility of F (F_ax ⪰ 0 and sum_x F_{lambda(x)|x} ⪰ 1 for every
/// strategy, both to -tol) and |sum tr(F sigma) - mu*| <= tol. On failure
/// the reason is written to `diagnostics` when given.
bool verify_certificate(const SteeringWeightProblem& problem, const SdpSolution& solution,
                        std::string* diagnostics = nullptr, double tol = 1e-6);

}  // namespace tscramble
