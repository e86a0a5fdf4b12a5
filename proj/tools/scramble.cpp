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


// Command-line front end: scan, clifford, backflow, sweep, verify and
// haar-baseline.

#include "tscramble/experiments.hpp"
#include "tscramble/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

using namespace tscramble;

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct ModelFlags {
  std::string model = "ising";
  std::size_t n = 7;
  double g = 1.0, h = 0.5, J = 1.0;
  std::uint64_t seed = 1;
  std::size_t nc = 2;
  double tstart = 0.0;
  double tmax = kUnset;
  std::size_t points = 200;
  std::string unitary, config, unit = "bits", axes = "xyz";
  double sdp_tol = 0.0;
  bool serial = false;

  // Options whose presence on the command line overrides the config file.
  std::map<std::string, CLI::Option*> opts;
};

void add_model_flags(CLI::App* sub, ModelFlags& f) {
  f.opts["model"] = sub->add_option("--model", f.model,
                                    "ising | syk | clifford | custom-unitary-file (or a path to a unitary file)");
  f.opts["n"] = sub->add_option("--n", f.n, "number of qubits")->check(CLI::Range(2, 12));
  f.opts["g"] = sub->add_option("--g", f.g, "transverse field");
  f.opts["h"] = sub->add_option("--h", f.h, "longitudinal field");
  f.opts["J"] = sub->add_option("--J", f.J, "SYK coupling scale");
  f.opts["seed"] = sub->add_option("--seed", f.seed, "SYK coupling seed");
  f.opts["nc"] = sub->add_option("--nc", f.nc, "qubits in region C = {q1..q_nc}");
  f.opts["tstart"] = sub->add_option("--tstart", f.tstart, "first grid time");
  f.opts["tmax"] = sub->add_option("--tmax", f.tmax, "last grid time (default 40/g, 148/J or pi)");
  f.opts["points"] = sub->add_option("--points", f.points, "grid points")->check(CLI::PositiveNumber);
  f.opts["unitary"] = sub->add_option("--unitary", f.unitary, "unitary file for the custom model");
  f.opts["unit"] = sub->add_option("--unit", f.unit, "entropy unit: bits | nats");
  f.opts["axes"] = sub->add_option("--axes", f.axes, "Pauli measurement settings, e.g. xyz or xz");
  f.opts["sdp-tol"] = sub->add_option("--sdp-tol", f.sdp_tol, "SDP gap and feasibility tolerance");
  sub->add_option("--config", f.config, "JSON config file; explicit flags override it")->check(CLI::ExistingFile);
  sub->add_flag("--serial", f.serial, "evaluate grid points on one thread");
}

bool given(const ModelFlags& f, const std::string& name) { return f.opts.at(name)->count() > 0; }

ExperimentConfig build_config(const ModelFlags& f, io::OutputPaths& outs) {
  ExperimentConfig c;
  const bool from_file = !f.config.empty();
  if (from_file) io::load_config_file(f.config, c, outs);
  auto use = [&](const std::string& name) { return !from_file || given(f, name); };

  if (use("model")) {
    if (f.model != "ising" && f.model != "syk" && f.model != "clifford" && f.model != "custom" &&
        f.model != "custom-unitary-file" && std::filesystem::is_regular_file(f.model)) {
      c.model = ModelKind::CustomUnitary;
      c.custom_unitary = io::load_unitary_file(f.model);
    } else {
      c.model = parse_model_kind(f.model);
    }
  }
  if (use("unitary") && !f.unitary.empty()) c.custom_unitary = io::load_unitary_file(f.unitary);
  if (c.model == ModelKind::CustomUnitary && c.custom_unitary.size() == 0)
    throw std::invalid_argument("the custom model needs --unitary <file>");
  if (use("n")) c.hamiltonian.n_qubits = f.n;
  if (use("g")) c.hamiltonian.g = f.g;
  if (use("h")) c.hamiltonian.h = f.h;
  if (use("J")) c.hamiltonian.J = f.J;
  if (use("seed")) c.hamiltonian.seed = f.seed;
  if (use("nc")) c.n_c = f.nc;
  if (c.model == ModelKind::Clifford && !given(f, "nc") && !from_file) c.n_c = 1;

  const TimeGrid defaults = default_time_grid(c.model, c.hamiltonian);
  if (!from_file) c.grid = defaults;
  if (given(f, "tstart")) c.grid.t_start = f.tstart;
  if (given(f, "tmax")) c.grid.t_end = f.tmax;
  if (given(f, "points")) c.grid.n_points = f.points;
  if (use("unit")) c.unit = io::parse_entropy_unit(f.unit);
  if (use("axes")) c.measurement_axes = f.axes;
  if (given(f, "sdp-tol")) c.tsw = tsw_options_with_tolerance(f.sdp_tol);
  c.validate();
  return c;
}

kernels::Execution exec_of(bool serial) { return serial ? kernels::Execution::Serial : kernels::Execution::Parallel; }

// Writes via `fn` to `path`, or to stdout when path is empty or "-".
template <class Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  fn(out);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void report_failures(const ScramblingReport& report) {
  if (const auto bad = report.failed_rows())
    std::cerr << "warning: " << bad << " row(s) with solver failures, see the status column\n";
  if (const auto bad = report.hierarchy_violations())
    std::cerr << "warning: " << bad << " row(s) with TSW > 1e-4 but vanishing mutual information\n";
}

std::string title_of(const ExperimentConfig& c) {
  std::ostringstream s;
  s << to_string(c.model) << ", n = " << c.n_qubits() << ", " << c.partition().describe();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scrambling diagnostics: tripartite mutual information and the temporal-steering witness"};
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  app.require_subcommand(1);

  // scan
  ModelFlags scan_flags;
  std::string scan_out, scan_svg;
  auto* scan = app.add_subcommand("scan", "time scan of -I3, -T3 and their constituents");
  add_model_flags(scan, scan_flags);
  auto* scan_out_opt = scan->add_option("--out", scan_out, "CSV path (default stdout)");
  auto* scan_svg_opt = scan->add_option("--svg", scan_svg, "SVG plot path");

  // clifford
  std::size_t cl_points = 25;
  double cl_max = std::numbers::pi;
  std::string cl_out, cl_svg, cl_unit = "bits";
  double cl_tol = 0.0;
  auto* clifford = app.add_subcommand("clifford", "angle scan of the three-qubit Clifford circuit");
  clifford->add_option("--points", cl_points, "angles on [0, theta-max]")->check(CLI::Range(1, 100000));
  clifford->add_option("--theta-max,--tmax", cl_max, "largest angle");
  clifford->add_option("--unit", cl_unit, "entropy unit: bits | nats");
  clifford->add_option("--sdp-tol", cl_tol, "SDP gap and feasibility tolerance");
  clifford->add_option("--out", cl_out, "CSV path (default stdout)");
  clifford->add_option("--svg", cl_svg, "SVG plot path");

  // backflow
  ModelFlags bf_flags;
  std::string bf_in, bf_out, bf_quantity = "both";
  double bf_T = kUnset;
  auto* backflow = app.add_subcommand("backflow", "total information backflow of a scan");
  add_model_flags(backflow, bf_flags);
  backflow->add_option("--in", bf_in, "read an existing scan CSV instead of running the scan")
      ->check(CLI::ExistingFile);
  backflow->add_option("--T", bf_T, "integration end (default: last grid time)");
  backflow->add_option("--quantity", bf_quantity, "I3 | T3 | both")->check(CLI::IsMember({"I3", "T3", "both"}));
  backflow->add_option("--out", bf_out, "CSV path (default stdout)");

  // sweep
  SweepOptions sw;
  std::string sw_model = "ising", sw_rule = "fixed", sw_unit = "bits", sw_out, sw_scan_prefix;
  double sw_tol = 0.0;
  bool sw_serial = false;
  auto* sweep = app.add_subcommand("sweep", "backflow table over system sizes");
  sweep->add_option("--model", sw_model, "ising | syk")->check(CLI::IsMember({"ising", "syk"}));
  sweep->add_option("--sizes", sw.sizes, "qubit counts")->delimiter(',');
  sweep->add_option("--nc", sw.n_c, "region C size for the fixed rule");
  sweep->add_option("--partition-rule", sw_rule, "fixed (n_c from --nc) | caption (1, 2, 3, 4 for 3, 4, 5, 8)")
      ->check(CLI::IsMember({"fixed", "caption"}));
  sweep->add_option("--g", sw.hamiltonian.g, "transverse field");
  sweep->add_option("--h", sw.hamiltonian.h, "longitudinal field");
  sweep->add_option("--J", sw.hamiltonian.J, "SYK coupling scale");
  sweep->add_option("--seed", sw.hamiltonian.seed, "SYK coupling seed");
  sweep->add_option("--points", sw.n_points, "grid points per size")->check(CLI::Range(2, 1000000));
  sweep->add_option("--tmax", sw.t_end, "integration end (default 40/g or 148/J)");
  sweep->add_option("--unit", sw_unit, "entropy unit: bits | nats");
  sweep->add_option("--sdp-tol", sw_tol, "SDP gap and feasibility tolerance");
  sweep->add_option("--out", sw_out, "CSV path (default stdout)");
  sweep->add_option("--scan-prefix", sw_scan_prefix, "also write <prefix><n>.csv per size");
  sweep->add_flag("--serial", sw_serial, "evaluate grid points on one thread");

  // verify
  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite; nonzero exit on failure");
  verify_cmd->add_option("--seed", vopt.seed, "seed for the random unitaries");
  verify_cmd->add_option("--sdp-tol", vopt.sdp_tol, "SDP gap and feasibility tolerance");

  // haar-baseline
  std::size_t hb_n = 7, hb_nc = 3, hb_samples = 200;
  std::uint64_t hb_seed = 1;
  std::string hb_unit = "bits";
  auto* haar = app.add_subcommand("haar-baseline", "Monte-Carlo mean of -I3 over Haar-random unitaries");
  haar->add_option("--n", hb_n, "number of qubits")->check(CLI::Range(2, 10));
  haar->add_option("--nc", hb_nc, "qubits in region C");
  haar->add_option("--samples", hb_samples, "number of Haar samples")->check(CLI::PositiveNumber);
  haar->add_option("--seed", hb_seed, "sampling seed");
  haar->add_option("--unit", hb_unit, "entropy unit: bits | nats");

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan->parsed()) {
      io::OutputPaths outs;
      const ExperimentConfig config = build_config(scan_flags, outs);
      if (scan_out_opt->count()) outs.csv = scan_out;
      if (scan_svg_opt->count()) outs.svg = scan_svg;
      const ScramblingReport report = run_scan(config, exec_of(scan_flags.serial));
      report.validate();
      emit(outs.csv, [&](std::ostream& os) { io::write_report_csv(os, report); });
      if (!outs.svg.empty()) emit(outs.svg, [&](std::ostream& os) { io::write_report_svg(os, report, title_of(config)); });
      report_failures(report);
    } else if (clifford->parsed()) {
      const TswOptions tsw = cl_tol > 0.0 ? tsw_options_with_tolerance(cl_tol) : TswOptions{};
      const ScramblingReport report =
          run_clifford_scan(uniform_grid(0.0, cl_max, cl_points), io::parse_entropy_unit(cl_unit), tsw);
      emit(cl_out, [&](std::ostream& os) { io::write_report_csv(os, report); });
      if (!cl_svg.empty())
        emit(cl_svg, [&](std::ostream& os) { io::write_report_svg(os, report, "Clifford circuit, C = {q1}, D = {q2, q3}"); });
      report_failures(report);
    } else if (backflow->parsed()) {
      ScramblingReport report;
      if (!bf_in.empty()) {
        std::ifstream in(bf_in);
        report = io::read_report_csv(in);
      } else {
        io::OutputPaths outs;
        report = run_scan(build_config(bf_flags, outs), exec_of(bf_flags.serial));
      }
      if (report.rows.empty()) throw std::runtime_error("empty scan");
      const double T = std::isnan(bf_T) ? report.rows.back().t : bf_T;
      emit(bf_out, [&](std::ostream& os) {
        os << "quantity,T,dt,backflow\r\n";
        for (BackflowQuantity q : {BackflowQuantity::I3, BackflowQuantity::T3}) {
          if (bf_quantity != "both" && bf_quantity != to_string(q)) continue;
          const BackflowResult r = backflow_integral(report, q, T);
          os << to_string(q) << ',' << io::format_number(r.t_end) << ',' << io::format_number(r.grid_spacing) << ','
             << io::format_number(r.value) << "\r\n";
        }
      });
    } else if (sweep->parsed()) {
      sw.model = parse_model_kind(sw_model);
      sw.rule = sw_rule == "caption" ? PartitionRule::Caption : PartitionRule::Fixed;
      sw.unit = io::parse_entropy_unit(sw_unit);
      if (sw_tol > 0.0) sw.tsw = tsw_options_with_tolerance(sw_tol);
      const auto rows = size_sweep(sw, exec_of(sw_serial));
      emit(sw_out, [&](std::ostream& os) { io::write_sweep_csv(os, rows); });
      if (!sw_scan_prefix.empty())
        for (const auto& r : rows)
          emit(sw_scan_prefix + std::to_string(r.n_qubits) + ".csv",
               [&](std::ostream& os) { io::write_report_csv(os, r.report); });
      for (const auto& r : rows) report_failures(r.report);
    } else if (verify_cmd->parsed()) {
      const auto checks = verify(vopt);
      io::write_verify_table(std::cout, checks);
      std::size_t failed = 0;
      for (const auto& c : checks) failed += c.passed ? 0 : 1;
      std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
      return failed == 0 ? 0 : 1;
    } else if (haar->parsed()) {
      if (hb_nc > hb_n) throw std::invalid_argument("--nc exceeds --n");
      const auto base = haar_scrambled_baseline(hb_n, PartitionSpec::contiguous(hb_n, hb_nc), hb_samples, hb_seed,
                                                io::parse_entropy_unit(hb_unit));
      std::cout << "n,nc,samples,mean_minusI3,stderr\r\n"
                << hb_n << ',' << hb_nc << ',' << base.samples.size() << ',' << io::format_number(base.mean) << ','
                << io::format_number(base.stderr_of_mean) << "\r\n";
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
