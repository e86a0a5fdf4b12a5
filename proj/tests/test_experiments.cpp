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
#include "tscramble/io.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

using namespace tscramble;

namespace {

ScramblingReport series(const std::vector<double>& minus_i3) {
  ScramblingReport r;
  for (std::size_t k = 0; k < minus_i3.size(); ++k) {
    ScramblingRow row;
    row.t = 0.5 * static_cast<double>(k);
    row.minus_i3 = minus_i3[k];
    r.rows.push_back(row);
  }
  return r;
}

const VerifyCheck& find(const std::vector<VerifyCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

}  // namespace

TEST(Backflow, MonotoneSeriesHaveNoBackflow) {
  // -I3 rising means I3 falling: nothing positive to sum.
  EXPECT_DOUBLE_EQ(backflow_integral(series({0, 0.5, 1, 1.5, 2}), BackflowQuantity::I3, 2.0).value, 0.0);
  // -I3 falling means I3 rising by the total drop.
  EXPECT_NEAR(backflow_integral(series({2, 1.5, 1, 0.2}), BackflowQuantity::I3, 1.5).value, 1.8, 1e-15);
}

TEST(Backflow, SumsOnlyUpwardStepsBeforeT) {
  const auto r = series({0, 1, 0.4, 0.9, 0.1, 0.6});
  // I3 = 0, -1, -0.4, -0.9, -0.1, -0.6: upward steps 0.6 (k=2) and 0.8 (k=4).
  EXPECT_NEAR(backflow_integral(r, BackflowQuantity::I3, 2.5).value, 1.4, 1e-15);
  EXPECT_NEAR(backflow_integral(r, BackflowQuantity::I3, 1.0).value, 0.6, 1e-15);
  EXPECT_DOUBLE_EQ(backflow_integral(r, BackflowQuantity::I3, 1.0).grid_spacing, 0.5);
}

TEST(Backflow, RejectsBadRangesAndFailedRows) {
  auto r = series({0, 1, 0.5});
  EXPECT_THROW(backflow_integral(r, BackflowQuantity::I3, 3.0), std::out_of_range);
  EXPECT_THROW(backflow_integral(series({1}), BackflowQuantity::I3, 0.0), std::out_of_range);
  r.rows[1].status = "sdp-max-iterations";
  EXPECT_THROW(backflow_integral(r, BackflowQuantity::T3, 1.0), std::domain_error);
  EXPECT_NO_THROW(backflow_integral(r, BackflowQuantity::I3, 1.0));
}

TEST(Scan, IdentityUnitaryGivesFullCSteeringAndNoScrambling) {
  ExperimentConfig c;
  c.model = ModelKind::CustomUnitary;
  c.custom_unitary = ComplexMatrix::Identity(8, 8);
  c.n_c = 1;
  c.grid = {0.0, 2.0, 3};
  const auto report = run_scan(c);
  ASSERT_EQ(report.rows.size(), 3u);
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.status, "ok");
    EXPECT_NEAR(row.tsw_c, 1.0, 1e-6);
    EXPECT_NEAR(row.tsw_d, 0.0, 1e-12);
    EXPECT_NEAR(row.minus_t3, 0.0, 1e-6);
    EXPECT_NEAR(row.minus_i3, 0.0, 1e-12);
    EXPECT_NEAR(row.i_ad, 0.0, 1e-12);
    EXPECT_NEAR(row.i_ac, 2.0, 1e-12);  // 2 bits between one qubit and its reference
  }
}

TEST(Scan, UnitaryPowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(9);
  const ComplexMatrix u = oracle::haar_gram_schmidt(8, rng);
  const auto family = unitary_power_family(u);
  EXPECT_LT(max_abs(family(0.0) - ComplexMatrix::Identity(8, 8)), 1e-12);
  EXPECT_LT(max_abs(family(1.0) - u), 1e-12);
  EXPECT_LT(max_abs(family(3.0) - u * u * u), 1e-11);
  const ComplexMatrix half = family(0.5);
  EXPECT_LT(max_abs(half * half - u), 1e-11);
}

TEST(Scan, SerialAndParallelAgreeExactly) {
  ExperimentConfig c;
  c.hamiltonian.n_qubits = 4;
  c.grid = {0.0, 5.0, 8};
  std::ostringstream a, b;
  io::write_report_csv(a, run_scan(c, kernels::Execution::Serial));
  io::write_report_csv(b, run_scan(c, kernels::Execution::Parallel));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Scan, ConfigValidation) {
  ExperimentConfig c;
  c.n_c = 8;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.n_c = 2;
  c.grid.n_points = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.grid.n_points = 10;
  c.model = ModelKind::CustomUnitary;
  EXPECT_THROW(c.validate(), std::invalid_argument);  // no unitary given
}

TEST(Verify, AllChecksPassByDefault) {
  const auto checks = verify();
  EXPECT_EQ(checks.size(), 14u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

// A PDM builder with one flipped sign must be caught by the Choi check.
TEST(Verify, DetectsSignErrorInPdmBuilder) {
  VerifyOptions opt;
  opt.pdm_builder = [](const ComplexMatrix& u, std::size_t n) {
    PseudoDensityMatrix p = build_pdm(u, n);
    const auto d = p.matrix.rows();
    p.matrix(0, d - 1) = -p.matrix(0, d - 1);
    p.matrix(d - 1, 0) = -p.matrix(d - 1, 0);
    return p;
  };
  const auto checks = verify(opt);
  EXPECT_FALSE(find(checks, "pdm equals partially transposed Choi").passed);
  EXPECT_TRUE(find(checks, "operator growth of the Clifford scrambler").passed);
}

TEST(Verify, LooseSolverToleranceFailsTheLocalProductCheck) {
  VerifyOptions opt;
  opt.sdp_tol = 1e-3;
  const auto checks = verify(opt);
  EXPECT_FALSE(find(checks, "-T3 = 0 for local products U_C (x) U_D").passed);
}

TEST(Io, ReportCsvRoundTrip) {
  ScramblingReport r;
  for (int k = 0; k < 4; ++k) {
    ScramblingRow row;
    row.t = 0.1 * k;
    row.minus_i3 = std::numbers::pi / (k + 1);
    row.minus_t3 = 1e-13 * k;
    row.i_ac = 2.0;
    row.i_ad = std::sqrt(2.0) * k;
    row.tsw_c = 0.25;
    row.tsw_d = 0.5;
    row.tsw_tot = 0.75 + 1e-13 * k;
    r.rows.push_back(row);
  }
  r.rows[2].status = "sdp-infeasible, \"dual\"";
  r.rows[2].tsw_c = r.rows[2].tsw_d = r.rows[2].tsw_tot = r.rows[2].minus_t3 =
      std::numeric_limits<double>::quiet_NaN();
  std::stringstream ss;
  io::write_report_csv(ss, r);
  const std::string header = io::kScanHeader;
  EXPECT_EQ(ss.str().substr(0, header.size()), header);
  const auto back = io::read_report_csv(ss);
  ASSERT_EQ(back.rows.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(back.rows[k].minus_i3, r.rows[k].minus_i3, 1e-11);
    EXPECT_NEAR(back.rows[k].i_ad, r.rows[k].i_ad, 1e-11);
    EXPECT_EQ(back.rows[k].status, r.rows[k].status);
  }
  EXPECT_TRUE(std::isnan(back.rows[2].tsw_c));
}

TEST(Io, ParsesUnitaryText) {
  std::istringstream in(
      "# Hadamard\n"
      "0.7071067811865476, 0.7071067811865476\n"
      "\n"
      "0.7071067811865476 -0.7071067811865476+0j\n");
  const ComplexMatrix h = io::parse_unitary(in);
  EXPECT_NEAR(h(1, 1).real(), -std::sqrt(0.5), 1e-15);

  std::istringstream phase("1 0\n0 0+1j\n");
  EXPECT_NEAR(io::parse_unitary(phase)(1, 1).imag(), 1.0, 1e-15);

  std::istringstream not_unitary("1 1\n0 1\n");
  EXPECT_THROW(io::parse_unitary(not_unitary), std::invalid_argument);
  std::istringstream ragged("1 0\n0\n");
  EXPECT_THROW(io::parse_unitary(ragged), std::invalid_argument);
  std::istringstream three("1 0 0\n0 1 0\n0 0 1\n");
  EXPECT_THROW(io::parse_unitary(three), std::invalid_argument);
  std::istringstream junk("1 zz\n0 1\n");
  EXPECT_THROW(io::parse_unitary(junk), std::runtime_error);
}

TEST(Io, JsonConfig) {
  ExperimentConfig c;
  io::OutputPaths out;
  io::apply_config_json(R"({"model": {"kind": "syk", "n": 5, "seed": 3},
                            "partition": {"nc": 1},
                            "time_grid": {"n_points": 40},
                            "unit": "nats", "outputs": {"csv": "a.csv"}})",
                        c, out);
  EXPECT_EQ(c.model, ModelKind::Syk);
  EXPECT_EQ(c.n_qubits(), 5u);
  EXPECT_EQ(c.hamiltonian.seed, 3u);
  EXPECT_EQ(c.n_c, 1u);
  EXPECT_EQ(c.grid.n_points, 40u);
  EXPECT_EQ(c.unit, EntropyUnit::Nats);
  EXPECT_EQ(out.csv, "a.csv");

  EXPECT_THROW(io::apply_config_json(R"({"model": {"kind": "ising", "gg": 1}})", c, out), std::invalid_argument);
  EXPECT_THROW(io::apply_config_json(R"({"colour": "red"})", c, out), std::invalid_argument);
  EXPECT_ANY_THROW(io::apply_config_json("{not json", c, out));
}
