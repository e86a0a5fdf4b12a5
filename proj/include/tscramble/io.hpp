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

// CSV and SVG output, the JSON experiment config and the plain-text
// unitary format.

#include "tscramble/experiments.hpp"

#include <iosfwd>
#include <string>

namespace tscramble::io {

inline constexpr const char* kScanHeader = "t,minusI3,minusT3,IAC,IAD,TSWC,TSWD,TSWtot,status";

/// 12 significant digits, '.' decimal separator, independent of locale.
std::string format_number(double v);

void write_report_csv(std::ostream& os, const ScramblingReport& report);
/// Inverse of write_report_csv. Throws std::runtime_error on malformed input.
ScramblingReport read_report_csv(std::istream& is);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_verify_table(std::ostream& os, const std::vector<VerifyCheck>& checks);

/// Self-contained line plot of -I3 and -T3 against t.
void write_report_svg(std::ostream& os, const ScramblingReport& report, const std::string& title);

/// One matrix row per line, whitespace- or comma-separated entries such as
/// 0.5, -1e-3j, 0.7071+0.7071j. Blank lines and lines starting with '#' are
/// skipped. Throws std::runtime_error on a parse error and
/// std::invalid_argument unless the matrix is a 2^n x 2^n unitary (1e-8).
ComplexMatrix parse_unitary(std::istream& is);
ComplexMatrix load_unitary_file(const std::string& path);

struct OutputPaths {
  std::string csv;
  std::string svg;
};

/// Nested JSON config:
///   { "model": {"kind": "ising", "n": 7, "g": 1, "h": 0.5, "J": 1,
///               "seed": 1, "unitary_file": "u.txt"},
///     "partition": {"nc": 2},
///     "time_grid": {"t_start": 0, "t_end": 40, "n_points": 200},
///     "measurements": "xyz", "unit": "bits", "sdp_tol": 1e-7,
///     "outputs": {"csv": "scan.csv", "svg": "scan.svg"} }
/// Every key is optional; missing keys keep the values already in `config`.
/// Unknown keys are an error. A time_grid without t_end gets the model
/// default.
void apply_config_json(const std::string& text, ExperimentConfig& config, OutputPaths& outputs);
void load_config_file(const std::string& path, ExperimentConfig& config, OutputPaths& outputs);

EntropyUnit parse_entropy_unit(const std::string& name);

}  // namespace tscramble::io
