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


#include "tscramble/steering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tscramble {

Assemblage encode_and_evolve(const MeasurementSet& meas, const ComplexMatrix& unitary,
                             std::size_t n_qubits) {
  if (meas.dim() != 2) throw std::invalid_argument("encode_and_evolve: measurements must act on one qubit");
  if (n_qubits == 0) throw std::invalid_argument("encode_and_evolve: empty register");
  const auto full = QubitRegister::range(1, static_cast<int>(n_qubits));
  if (static_cast<std::size_t>(unitary.rows()) != full.dim() || unitary.cols() != unitary.rows())
    throw std::invalid_argument("encode_and_evolve: unitary dimension does not match the register");
  const double norm = 1.0 / static_cast<double>(full.dim());
  std::vector<std::vector<ComplexMatrix>> members(meas.n_settings());
  for (std::size_t x = 0; x < meas.n_settings(); ++x) {
    for (std::size_t a = 0; a < meas.n_outcomes(); ++a) {
      ComplexMatrix m = conjugate_local(unitary, meas.projector(x, a), QubitRegister{1}, full) * norm;
      members[x].push_back(0.5 * (m + m.adjoint()));
    }
  }
  return Assemblage(std::move(members), full);
}

Assemblage reduce_assemblage(const Assemblage& asmb, const QubitRegister& region) {
  if (!asmb.qubits().contains_all(region))
    throw std::invalid_argument("reduce_assemblage: region is not part of the register");
  const QubitRegister kept = asmb.qubits().restrict_to(region);
  std::vector<std::vector<ComplexMatrix>> members(asmb.n_settings());
  for (std::size_t x = 0; x < asmb.n_settings(); ++x) {
    for (std::size_t a = 0; a < asmb.n_outcomes(); ++a) {
      if (kept.empty()) {
        members[x].push_back(ComplexMatrix::Constant(1, 1, Complex(asmb.probability(x, a), 0.0)));
      } else {
        members[x].push_back(partial_trace(asmb.member(x, a), asmb.qubits(), kept));
      }
    }
  }
  return Assemblage(std::move(members), kept);
}

Assemblage conjugate(const Assemblage& asmb, const ComplexMatrix& unitary) {
  if (static_cast<std::size_t>(unitary.rows()) != asmb.dim())
    throw std::invalid_argument("conjugate: unitary dimension does not match the assemblage");
  return asmb.transformed([&](const ComplexMatrix& m) {
    ComplexMatrix r = unitary * m * unitary.adjoint();
    return ComplexMatrix(0.5 * (r + r.adjoint()));
  });
}

namespace {

int parity(std::size_t v) { return std::popcount(v) & 1; }

// chi_S(lambda) for outcome bits packed with setting x at bit x.
double character(std::size_t subset, std::size_t lambda_bits) {
  return parity(subset & lambda_bits) ? -1.0 : 1.0;
}

}  // namespace

std::optional<LhsModel> explicit_lhs_model(const Assemblage& asmb, int max_iter) {
  if (asmb.n_outcomes() != 2) return std::nullopt;
  const std::size_t m = asmb.n_settings();
  if (m > 12) return std::nullopt;
  const std::size_t n_lambda = std::size_t{1} << m;
  const auto d = static_cast<Eigen::Index>(asmb.dim());

  // Strategy order follows enumerate_strategies; bit x of lambda_bits[l] is a(x).
  auto strategies = enumerate_strategies(m, 2);
  std::vector<std::size_t> lambda_bits(n_lambda, 0);
  for (std::size_t l = 0; l < n_lambda; ++l)
    for (std::size_t x = 0; x < m; ++x) lambda_bits[l] |= strategies[l].outcome[x] << x;

  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (std::size_t x = 0; x < m; ++x) rho += asmb.marginal(x);
  rho /= static_cast<double>(m);
  for (std::size_t x = 0; x < m; ++x)
    if (max_abs(asmb.marginal(x) - rho) > 1e-9) return std::nullopt;

  const double scale = 1.0 / static_cast<double>(n_lambda);
  std::vector<ComplexMatrix> fixed(m);
  for (std::size_t x = 0; x < m; ++x) fixed[x] = (asmb.member(x, 0) - asmb.member(x, 1)) * scale;
  const ComplexMatrix fixed0 = rho * scale;

  // Walsh coefficients W_S for every subset S; |S| <= 1 pinned.
  std::vector<ComplexMatrix> walsh(n_lambda, ComplexMatrix::Zero(d, d));
  std::vector<ComplexMatrix> hidden(n_lambda);
  auto synthesize = [&] {
    walsh[0] = fixed0;
    for (std::size_t x = 0; x < m; ++x) walsh[std::size_t{1} << x] = fixed[x];
    for (std::size_t l = 0; l < n_lambda; ++l) {
      hidden[l].setZero(d, d);
      for (std::size_t s = 0; s < n_lambda; ++s) hidden[l] += character(s, lambda_bits[l]) * walsh[s];
    }
  };
  auto analyze = [&] {
    for (std::size_t s = 0; s < n_lambda; ++s) {
      walsh[s].setZero(d, d);
      for (std::size_t l = 0; l < n_lambda; ++l) walsh[s] += character(s, lambda_bits[l]) * hidden[l];
      walsh[s] *= scale;
    }
  };

  const double floor = 1e-9 * std::max(rho.trace().real(), 1e-300) / static_cast<double>(d);
  double previous_violation = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int it = 0; it <= max_iter; ++it) {
    synthesize();
    double min_eig = std::numeric_limits<double>::infinity();
    double violation = 0.0;
    std::vector<EigenDecomposition> eigs(n_lambda);
    for (std::size_t l = 0; l < n_lambda; ++l) {
      hidden[l] = 0.5 * (hidden[l] + hidden[l].adjoint());
      eigs[l] = hermitian_eig(hidden[l]);
      min_eig = std::min(min_eig, eigs[l].values(0));
      for (Eigen::Index i = 0; i < d; ++i) violation += std::max(0.0, -eigs[l].values(i));
    }
    if (min_eig >= 0.0) {
      LhsModel model;
      model.strategies = std::move(strategies);
      model.hidden_states = std::move(hidden);
      model.iterations = it;
      model.min_eigenvalue = min_eig;
      return model;
    }
    // Give up once the PSD violation stops shrinking.
    stalled = (violation > 0.999 * previous_violation) ? stalled + 1 : 0;
    if (stalled >= 25) break;
    previous_violation = violation;

    for (std::size_t l = 0; l < n_lambda; ++l) {
      RealVector v = eigs[l].values.cwiseMax(floor);
      hidden[l] = eigs[l].vectors * v.cast<Complex>().asDiagonal() * eigs[l].vectors.adjoint();
    }
    analyze();
  }
  return std::nullopt;
}

LhsCheck check_lhs_model(const Assemblage& asmb, const LhsModel& model) {
  LhsCheck out;
  out.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& h : model.hidden_states)
    out.min_eigenvalue = std::min(out.min_eigenvalue, hermitian_eigenvalues(h)(0));
  for (std::size_t x = 0; x < asmb.n_settings(); ++x) {
    for (std::size_t a = 0; a < asmb.n_outcomes(); ++a) {
      ComplexMatrix acc = ComplexMatrix::Zero(asmb.member(x, a).rows(), asmb.member(x, a).cols());
      for (std::size_t l = 0; l < model.strategies.size(); ++l)
        if (model.strategies[l].outcome[x] == a) acc += model.hidden_states[l];
      out.reconstruction_error = std::max(out.reconstruction_error, max_abs(acc - asmb.member(x, a)));
    }
  }
  return out;
}

const char* to_string(TswMethod method) {
  switch (method) {
    case TswMethod::ExplicitLhs: return "lhs";
    case TswMethod::Sdp: return "sdp";
    case TswMethod::Trivial: return "trivial";
  }
  return "?";
}

TswResult temporal_steerable_weight_details(const Assemblage& asmb, const TswOptions& options) {
  TswResult out;
  // One-dimensional members are classical probabilities, always LHS.
  if (asmb.dim() == 1 || asmb.n_settings() == 1) {
    out.method = TswMethod::Trivial;
    out.value = 0.0;
    return out;
  }
  if (options.lhs_fast_path && explicit_lhs_model(asmb, options.lhs_max_iter)) {
    out.method = TswMethod::ExplicitLhs;
    out.value = 0.0;
    return out;
  }
  std::vector<std::vector<ComplexMatrix>> members(asmb.n_settings());
  for (std::size_t x = 0; x < asmb.n_settings(); ++x)
    for (std::size_t a = 0; a < asmb.n_outcomes(); ++a) members[x].push_back(asmb.member(x, a));
  const auto problem = SteeringWeightProblem::from_members(std::move(members));
  SdpSolution sol = solve_steering_weight(problem, options.sdp);
  if (sol.status != SdpStatus::Optimal) {
    std::string what = std::string("steerable weight: solver status ") + to_string(sol.status);
    if (!sol.message.empty()) what += " (" + sol.message + ")";
    throw SolverError(what, sol.status, std::move(sol));
  }
  out.method = TswMethod::Sdp;
  out.value = std::clamp(sol.steerable_weight(), 0.0, 1.0);
  out.solution = std::move(sol);
  return out;
}

double temporal_steerable_weight(const Assemblage& asmb, const TswOptions& options) {
  return temporal_steerable_weight_details(asmb, options).value;
}

double temporal_steerable_weight(const Assemblage& asmb, const LhsModel& model, double tol) {
  if (model.strategies.size() != model.hidden_states.size())
    throw std::invalid_argument("LHS model: one hidden state per strategy required");
  for (const auto& s : model.strategies)
    if (s.outcome.size() != asmb.n_settings())
      throw std::invalid_argument("LHS model: strategy does not match the settings");
  for (const auto& h : model.hidden_states)
    if (static_cast<std::size_t>(h.rows()) != asmb.dim() || h.cols() != h.rows())
      throw std::invalid_argument("LHS model: hidden state dimension mismatch");
  const LhsCheck check = check_lhs_model(asmb, model);
  if (check.reconstruction_error > tol || check.min_eigenvalue < -tol)
    throw std::invalid_argument("LHS model does not reproduce the assemblage");
  return 0.0;
}

double tsw_total_analytic(const MeasurementSet& meas, const TswOptions& options) {
  std::vector<std::vector<ComplexMatrix>> members(meas.n_settings());
  for (std::size_t x = 0; x < meas.n_settings(); ++x)
    for (std::size_t a = 0; a < meas.n_outcomes(); ++a) members[x].push_back(0.5 * meas.projector(x, a));
  return temporal_steerable_weight(Assemblage(std::move(members), QubitRegister{1}), options);
}

WitnessRecord witness_from_assemblage(const Assemblage& total, double tsw_tot,
                                      const PartitionSpec& part, const TswOptions& options) {
  part.validate();
  WitnessRecord rec;
  rec.tsw_tot = tsw_tot;
  const auto c = temporal_steerable_weight_details(reduce_assemblage(total, part.region_c), options);
  const auto d = temporal_steerable_weight_details(reduce_assemblage(total, part.region_d), options);
  rec.tsw_c = c.value;
  rec.tsw_d = d.value;
  rec.method_c = c.method;
  rec.method_d = d.method;
  rec.minus_t3 = rec.tsw_tot - rec.tsw_c - rec.tsw_d;
  return rec;
}

WitnessRecord minus_T3(const MeasurementSet& meas, const ComplexMatrix& unitary,
                       const PartitionSpec& part, const TswOptions& options,
                       TotalWeightMode mode) {
  part.validate();
  const Assemblage total = encode_and_evolve(meas, unitary, part.n_qubits);
  const double tot = (mode == TotalWeightMode::Analytic) ? tsw_total_analytic(meas, options)
                                                         : temporal_steerable_weight(total, options);
  return witness_from_assemblage(total, tot, part, options);
}

double tsw_unitary_invariance_check(const Assemblage& asmb, const ComplexMatrix& unitary,
                                    const TswOptions& options) {
  TswOptions sdp_only = options;
  sdp_only.lhs_fast_path = false;
  const double before = temporal_steerable_weight(asmb, sdp_only);
  const double after = temporal_steerable_weight(conjugate(asmb, unitary), sdp_only);
  return std::abs(before - after);
}

}  // namespace tscramble
