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


#include "tscramble/experiments.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tscramble {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::size_t log2_size(std::size_t v) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < v) ++n;
  return n;
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Ising: return "ising";
    case ModelKind::Syk: return "syk";
    case ModelKind::Clifford: return "clifford";
    case ModelKind::CustomUnitary: return "custom-unitary-file";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "ising") return ModelKind::Ising;
  if (name == "syk") return ModelKind::Syk;
  if (name == "clifford") return ModelKind::Clifford;
  if (name == "custom-unitary-file" || name == "custom") return ModelKind::CustomUnitary;
  throw std::invalid_argument("unknown model '" + name + "'");
}

void TimeGrid::validate() const {
  if (n_points < 2) throw std::invalid_argument("time grid: need at least 2 points");
  if (!(t_start >= 0.0) || !(t_end > t_start) || !std::isfinite(t_end))
    throw std::invalid_argument("time grid: need t_end > t_start >= 0");
}

std::vector<double> TimeGrid::points() const {
  validate();
  return uniform_grid(t_start, t_end, n_points);
}

std::vector<double> uniform_grid(double start, double end, std::size_t n_points) {
  if (n_points == 0) throw std::invalid_argument("uniform_grid: empty grid");
  if (n_points == 1) return {start};
  std::vector<double> out(n_points);
  const double step = (end - start) / static_cast<double>(n_points - 1);
  for (std::size_t k = 0; k < n_points; ++k) out[k] = start + step * static_cast<double>(k);
  out.back() = end;
  return out;
}

TimeGrid default_time_grid(ModelKind kind, const HamiltonianSpec& spec) {
  TimeGrid g;
  switch (kind) {
    case ModelKind::Ising: g.t_end = 40.0 / spec.g; break;
    case ModelKind::Syk: g.t_end = 148.0 / spec.J; break;
    case ModelKind::Clifford: g.t_end = std::numbers::pi; g.n_points = 25; break;
    case ModelKind::CustomUnitary: g.t_end = 40.0; break;
  }
  return g;
}

std::size_t ExperimentConfig::n_qubits() const {
  switch (model) {
    case ModelKind::Clifford: return 3;
    case ModelKind::CustomUnitary:
      return custom_unitary.size() == 0 ? 0 : log2_size(static_cast<std::size_t>(custom_unitary.rows()));
    default: return hamiltonian.n_qubits;
  }
}

void ExperimentConfig::validate() const {
  grid.validate();
  switch (model) {
    case ModelKind::Ising:
    case ModelKind::Syk: {
      HamiltonianSpec spec = hamiltonian;
      spec.kind = model == ModelKind::Ising ? HamiltonianKind::IsingChain : HamiltonianKind::SYK;
      spec.validate();
      break;
    }
    case ModelKind::Clifford: break;
    case ModelKind::CustomUnitary: {
      const auto dim = static_cast<std::size_t>(custom_unitary.rows());
      if (dim < 2 || custom_unitary.cols() != custom_unitary.rows() || !is_power_of_two(dim))
        throw std::invalid_argument("custom unitary: dimension must be 2^n with n >= 1");
      if (!is_unitary(custom_unitary, 1e-8)) throw std::invalid_argument("custom unitary: matrix is not unitary");
      break;
    }
  }
  if (n_c > n_qubits()) throw std::invalid_argument("partition: n_c exceeds the number of qubits");
  partition().validate();
  (void)MeasurementSet::pauli(measurement_axes);
}

std::function<ComplexMatrix(double)> unitary_power_family(const ComplexMatrix& u) {
  if (!is_unitary(u, 1e-8)) throw std::invalid_argument("unitary_power_family: matrix is not unitary");
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  const ComplexMatrix& tri = schur.matrixT();
  const ComplexMatrix q = schur.matrixU();
  const auto d = tri.rows();
  RealVector phases(d);
  for (Eigen::Index i = 0; i < d; ++i) phases(i) = std::arg(tri(i, i));
  return [q, phases](double t) {
    Eigen::VectorXcd diag(phases.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) diag(i) = std::polar(1.0, t * phases(i));
    return ComplexMatrix(q * diag.asDiagonal() * q.adjoint());
  };
}

Evolution::Evolution(const ExperimentConfig& config) {
  config.validate();
  n_qubits_ = config.n_qubits();
  switch (config.model) {
    case ModelKind::Ising:
    case ModelKind::Syk: {
      HamiltonianSpec spec = config.hamiltonian;
      spec.kind = config.model == ModelKind::Ising ? HamiltonianKind::IsingChain : HamiltonianKind::SYK;
      auto prop = std::make_shared<Propagator>(build_hamiltonian(spec));
      fn_ = [prop](double t) { return prop->unitary(t); };
      break;
    }
    case ModelKind::Clifford:
      fn_ = [](double theta) { return clifford_scan_unitary(theta); };
      break;
    case ModelKind::CustomUnitary:
      fn_ = unitary_power_family(config.custom_unitary);
      break;
  }
}

void ScramblingReport::validate() const {
  for (std::size_t k = 1; k < rows.size(); ++k)
    if (!(rows[k].t > rows[k - 1].t)) throw std::logic_error("report rows are not sorted by t");
  for (const auto& r : rows) {
    if (!r.ok()) continue;
    if (std::abs(r.minus_t3 - (r.tsw_tot - r.tsw_c - r.tsw_d)) > 1e-9)
      throw std::logic_error("report row breaks -T3 = TSW_tot - TSW_C - TSW_D");
  }
}

std::size_t ScramblingReport::hierarchy_violations() const {
  std::size_t bad = 0;
  for (const auto& r : rows) {
    if (!r.ok()) continue;
    if ((r.tsw_c > 1e-4 && !(r.i_ac > 1e-6)) || (r.tsw_d > 1e-4 && !(r.i_ad > 1e-6))) ++bad;
  }
  return bad;
}

std::size_t ScramblingReport::failed_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok(); }));
}

ScramblingRow evaluate_unitary(const ComplexMatrix& unitary, double t, const PartitionSpec& part,
                               const MeasurementSet& meas, double tsw_tot, EntropyUnit unit,
                               const TswOptions& tsw) {
  ScramblingRow row;
  row.t = t;
  const std::size_t n = part.n_qubits;
  const TmiResult tmi = tripartite_mutual_information(build_choi(unitary, n), part, unit);
  row.minus_i3 = tmi.minus_i3;
  row.i_ac = tmi.i_a_c;
  row.i_ad = tmi.i_a_d;
  row.tsw_tot = tsw_tot;
  try {
    const WitnessRecord rec =
        witness_from_assemblage(encode_and_evolve(meas, unitary, n), tsw_tot, part, tsw);
    row.tsw_c = rec.tsw_c;
    row.tsw_d = rec.tsw_d;
    row.minus_t3 = rec.minus_t3;
  } catch (const SolverError& e) {
    row.status = std::string("sdp-") + to_string(e.status());
    row.tsw_c = row.tsw_d = row.minus_t3 = kNaN;
  }
  return row;
}

ScramblingReport run_scan(const ExperimentConfig& config, kernels::Execution exec) {
  const Evolution evolution(config);
  const PartitionSpec part = config.partition();
  const MeasurementSet meas = MeasurementSet::pauli(config.measurement_axes);
  const double tot = tsw_total_analytic(meas, config.tsw);
  const std::vector<double> times = config.grid.points();
  ScramblingReport report;
  report.rows.resize(times.size());
  kernels::for_each_index(times.size(), exec, [&](std::size_t i) {
    report.rows[i] = evaluate_unitary(evolution.unitary(times[i]), times[i], part, meas, tot,
                                      config.unit, config.tsw);
  });
  return report;
}

ScramblingReport run_clifford_scan(const std::vector<double>& thetas, EntropyUnit unit,
                                   const TswOptions& tsw, kernels::Execution exec) {
  if (thetas.empty()) throw std::invalid_argument("run_clifford_scan: empty angle grid");
  std::vector<double> sorted = thetas;
  std::sort(sorted.begin(), sorted.end());
  const PartitionSpec part = PartitionSpec::contiguous(3, 1);
  const MeasurementSet meas = MeasurementSet::pauli("xyz");
  const double tot = tsw_total_analytic(meas, tsw);
  ScramblingReport report;
  report.rows.resize(sorted.size());
  kernels::for_each_index(sorted.size(), exec, [&](std::size_t i) {
    report.rows[i] = evaluate_unitary(clifford_scan_unitary(sorted[i]), sorted[i], part, meas, tot, unit, tsw);
  });
  return report;
}

const char* to_string(BackflowQuantity q) { return q == BackflowQuantity::I3 ? "I3" : "T3"; }

BackflowResult backflow_integral(const ScramblingReport& report, BackflowQuantity q, double T) {
  if (report.rows.size() < 2) throw std::out_of_range("backflow: report needs at least two rows");
  const double t0 = report.rows.front().t;
  const double t1 = report.rows.back().t;
  const double slack = 1e-9 * std::max(1.0, std::abs(T));
  if (T < t0 - slack || T > t1 + slack) {
    std::ostringstream msg;
    msg << "backflow: T = " << T << " outside the report range [" << t0 << ", " << t1 << "]";
    throw std::out_of_range(msg.str());
  }
  auto value_of = [q](const ScramblingRow& r) { return q == BackflowQuantity::I3 ? -r.minus_i3 : -r.minus_t3; };
  BackflowResult out;
  out.quantity = q;
  out.t_end = T;
  out.grid_spacing = report.rows[1].t - report.rows[0].t;
  for (std::size_t k = 1; k < report.rows.size() && report.rows[k].t <= T + slack; ++k) {
    const auto& prev = report.rows[k - 1];
    const auto& cur = report.rows[k];
    if (q == BackflowQuantity::T3 && (!prev.ok() || !cur.ok())) {
      std::ostringstream msg;
      msg << "backflow: row at t = " << (prev.ok() ? cur.t : prev.t) << " failed ("
          << (prev.ok() ? cur.status : prev.status) << ")";
      throw std::domain_error(msg.str());
    }
    out.value += std::max(value_of(cur) - value_of(prev), 0.0);
  }
  return out;
}

std::size_t caption_region_size(std::size_t n_qubits) {
  switch (n_qubits) {
    case 3: return 1;
    case 4: return 2;
    case 5: return 3;
    case 8: return 4;
    default: return n_qubits / 2;
  }
}

std::vector<SweepRow> size_sweep(const SweepOptions& options, kernels::Execution exec) {
  if (options.model != ModelKind::Ising && options.model != ModelKind::Syk)
    throw std::invalid_argument("size_sweep: only Hamiltonian models can be swept");
  if (options.sizes.empty()) throw std::invalid_argument("size_sweep: no sizes");
  std::vector<SweepRow> out;
  for (std::size_t n : options.sizes) {
    ExperimentConfig config;
    config.model = options.model;
    config.hamiltonian = options.hamiltonian;
    config.hamiltonian.n_qubits = n;
    config.n_c = options.rule == PartitionRule::Caption ? caption_region_size(n) : options.n_c;
    if (config.n_c >= n) {
      throw std::invalid_argument("size_sweep: n_c = " + std::to_string(config.n_c) +
                                  " leaves no region D at n = " + std::to_string(n));
    }
    config.grid = default_time_grid(options.model, config.hamiltonian);
    config.grid.n_points = options.n_points;
    if (!std::isnan(options.t_end)) config.grid.t_end = options.t_end;
    config.unit = options.unit;
    config.tsw = options.tsw;
    SweepRow row;
    row.n_qubits = n;
    row.n_c = config.n_c;
    row.report = run_scan(config, exec);
    row.i3 = backflow_integral(row.report, BackflowQuantity::I3, config.grid.t_end);
    row.t3 = backflow_integral(row.report, BackflowQuantity::T3, config.grid.t_end);
    out.push_back(std::move(row));
  }
  return out;
}

TswOptions tsw_options_with_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("SDP tolerance must be positive");
  TswOptions o;
  o.sdp.gap_tol = tol;
  o.sdp.feas_tol = tol;
  return o;
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct CheckBuilder {
  std::vector<VerifyCheck>& out;

  // Runs fn, which returns the measured deviation; passes when <= tol.
  template <class Fn>
  void run(const std::string& name, double tol, Fn&& fn) {
    VerifyCheck c;
    c.name = name;
    c.tolerance = tol;
    try {
      c.value = fn(c.detail);
      c.passed = c.value <= tol;
    } catch (const std::exception& e) {
      c.value = kNaN;
      c.passed = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
};

ComplexMatrix random_swap_layers(std::size_t n, int depth, std::mt19937_64& rng) {
  ComplexMatrix u = identity(std::size_t{1} << n);
  for (int layer = 0; layer < depth; ++layer) {
    std::vector<int> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = static_cast<int>(i + 1);
    std::shuffle(q.begin(), q.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    const std::size_t n_pairs = 1 + rng() % (n / 2);
    for (std::size_t p = 0; p < n_pairs; ++p) pairs.emplace_back(q[2 * p], q[2 * p + 1]);
    u = swap_network(pairs, n) * u;
  }
  return u;
}

}  // namespace

std::vector<VerifyCheck> verify(const VerifyOptions& options) {
  std::vector<VerifyCheck> out;
  CheckBuilder check{out};
  const TswOptions tsw = options.sdp_tol > 0.0 ? tsw_options_with_tolerance(options.sdp_tol) : TswOptions{};
  const MeasurementSet meas = MeasurementSet::pauli("xyz");
  const auto pdm = options.pdm_builder
                       ? options.pdm_builder
                       : VerifyOptions::PdmBuilder([](const ComplexMatrix& u, std::size_t n) { return build_pdm(u, n); });
  std::mt19937_64 rng(options.seed);

  check.run("pdm equals partially transposed Choi", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    int cases = 0;
    for (std::size_t n : {1u, 1u, 2u, 2u, 2u, 3u, 3u}) {
      const ComplexMatrix u = haar_unitary(std::size_t{1} << n, rng);
      const ComplexMatrix a = pdm(u, n).matrix;
      const ComplexMatrix b = pdm_from_choi(build_choi(u, n, QubitRegister::range(1, static_cast<int>(n)))).matrix;
      if (a.rows() != b.rows()) return std::numeric_limits<double>::infinity();
      worst = std::max(worst, max_abs(a - b));
      ++cases;
    }
    detail = std::to_string(cases) + " random unitaries, n <= 3";
    return worst;
  });

  check.run("pdm assemblage equals evolved assemblage", 1e-10, [&](std::string& detail) {
    const ComplexMatrix u = haar_unitary(8, rng);
    const Assemblage direct = encode_and_evolve(meas, u, 3);
    const Assemblage via = assemblage_from_pdm(pdm(u, 3), meas);
    double worst = 0.0;
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t a = 0; a < 2; ++a) worst = std::max(worst, max_abs(direct.member(x, a) - via.member(x, a)));
    detail = "n = 3";
    return worst;
  });

  const PartitionSpec part4 = PartitionSpec::contiguous(4, 2);
  std::vector<ComplexMatrix> non_scrambling;

  check.run("-T3 = 0 for local products U_C (x) U_D", 2e-6, [&](std::string& detail) {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const ComplexMatrix u = random_local_unitary(part4, rng());
      non_scrambling.push_back(u);
      worst = std::max(worst, std::abs(minus_T3(meas, u, part4, tsw).minus_t3));
    }
    detail = "10 seeds, n = 4, n_c = 2";
    return worst;
  });

  check.run("-T3 = 0 for SWAP networks", 2e-6, [&](std::string& detail) {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const std::size_t n = 4 + static_cast<std::size_t>(k % 2);
      const ComplexMatrix u = random_swap_layers(n, 1 + k % 5, rng);
      if (n == 4) non_scrambling.push_back(u);
      worst = std::max(worst, std::abs(minus_T3(meas, u, PartitionSpec::contiguous(n, 2), tsw).minus_t3));
    }
    detail = "10 networks, depth <= 5, n = 4, 5";
    return worst;
  });

  check.run("-T3 = 0 for local layers composed with SWAPs", 2e-6, [&](std::string& detail) {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      ComplexMatrix u = identity(16);
      for (int layer = 0; layer < 5; ++layer)
        u = (layer % 2 == 0 ? random_single_qubit_layer(4, rng()) : random_swap_layers(4, 1, rng)) * u;
      non_scrambling.push_back(u);
      worst = std::max(worst, std::abs(minus_T3(meas, u, part4, tsw).minus_t3));
    }
    detail = "5 circuits, depth 5, n = 4";
    return worst;
  });

  check.run("-I3 = 0 for non-scrambling unitaries", 1e-9, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& u : non_scrambling)
      worst = std::max(worst, std::abs(tripartite_mutual_information(build_choi(u, 4), part4).minus_i3));
    detail = std::to_string(non_scrambling.size()) + " unitaries";
    return worst;
  });

  check.run("-I3 symmetric under C <-> D", 1e-9, [&](std::string& detail) {
    PartitionSpec swapped = part4;
    std::swap(swapped.region_c, swapped.region_d);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const ChoiState choi = build_choi(haar_unitary(16, rng), 4);
      worst = std::max(worst, std::abs(tripartite_mutual_information(choi, part4).minus_i3 -
                                       tripartite_mutual_information(choi, swapped).minus_i3));
    }
    detail = "3 Haar unitaries, n = 4";
    return worst;
  });

  check.run("TSW of the t = 0 Pauli assemblage is 1", 1e-6, [&](std::string&) {
    return std::abs(tsw_total_analytic(meas, tsw) - 1.0);
  });

  check.run("TSW invariant under global unitaries", 2e-6, [&](std::string& detail) {
    const Assemblage two = encode_and_evolve(meas, identity(4), 2);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) worst = std::max(worst, tsw_unitary_invariance_check(two, haar_unitary(4, rng), tsw));
    detail = "3 Haar unitaries on 2 qubits";
    return worst;
  });

  check.run("TSW of region D is 0 at t = 0", 1e-6, [&](std::string&) {
    const Assemblage total = encode_and_evolve(meas, identity(16), 4);
    return temporal_steerable_weight(reduce_assemblage(total, part4.region_d), tsw);
  });

  check.run("scan rows: witness identity and hierarchy", 0.0, [&](std::string& detail) {
    double bad = 0.0;
    for (double h : {0.0, 0.5}) {
      ExperimentConfig config;
      config.hamiltonian.n_qubits = 5;
      config.hamiltonian.h = h;
      config.grid = {0.0, 10.0, 21};
      config.tsw = tsw;
      const ScramblingReport report = run_scan(config);
      report.validate();
      bad += static_cast<double>(report.hierarchy_violations() + report.failed_rows());
    }
    detail = "Ising n = 5, h = 0 and 0.5, 21 points; counts violations and failed rows";
    return bad;
  });

  check.run("operator growth of the Clifford scrambler", 1e-10, [&](std::string&) {
    return operator_growth_residual(clifford_scrambler_unitary());
  });

  check.run("Clifford scan anchors and period", 1e-6, [&](std::string& detail) {
    const PartitionSpec part3 = PartitionSpec::contiguous(3, 1);
    auto mi3 = [&](double th) {
      return tripartite_mutual_information(build_choi(clifford_scan_unitary(th), 3), part3).minus_i3;
    };
    double worst = std::abs(mi3(0.0));
    worst = std::max(worst, std::abs(mi3(std::numbers::pi / 2) - 2.0));
    for (double th : {0.3, 1.1, 2.0}) worst = std::max(worst, std::abs(mi3(th) - mi3(th + std::numbers::pi)));
    detail = "-I3(0) = 0, -I3(pi/2) = 2 bits, pi-periodic";
    return worst;
  });

  check.run("backflow stable under 2x grid refinement", 0.05, [&](std::string& detail) {
    double worst = 0.0;
    for (BackflowQuantity q : {BackflowQuantity::I3, BackflowQuantity::T3}) {
      double v[2];
      for (int refine = 0; refine < 2; ++refine) {
        ExperimentConfig config;
        config.hamiltonian.n_qubits = 4;
        config.hamiltonian.h = 0.0;
        config.grid = {0.0, 40.0, refine == 0 ? std::size_t{200} : std::size_t{399}};
        config.tsw = tsw;
        v[refine] = backflow_integral(run_scan(config), q, 40.0).value;
      }
      const double scale = std::max({std::abs(v[0]), std::abs(v[1]), 1e-3});
      worst = std::max(worst, std::abs(v[0] - v[1]) / scale);
    }
    detail = "integrable chain n = 4, I3 and T3, relative change";
    return worst;
  });

  return out;
}

}  // namespace tscramble
