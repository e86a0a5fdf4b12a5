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


#include "tscramble/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tscramble::io {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, const std::string& what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (s.empty() || end != begin + s.size()) throw std::runtime_error("cannot parse " + what + " '" + s + "'");
  return v;
}

}  // namespace

void write_report_csv(std::ostream& os, const ScramblingReport& report) {
  os << kScanHeader << "\r\n";
  for (const auto& r : report.rows) {
    os << format_number(r.t) << ',' << format_number(r.minus_i3) << ',' << format_number(r.minus_t3) << ','
       << format_number(r.i_ac) << ',' << format_number(r.i_ad) << ',' << format_number(r.tsw_c) << ','
       << format_number(r.tsw_d) << ',' << format_number(r.tsw_tot) << ',' << csv_field(r.status) << "\r\n";
  }
}

ScramblingReport read_report_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("scan CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kScanHeader) throw std::runtime_error("scan CSV: unexpected header '" + line + "'");
  ScramblingReport report;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9) throw std::runtime_error("scan CSV: line " + std::to_string(line_no) + " has " + std::to_string(f.size()) + " fields");
    ScramblingRow r;
    const std::string where = "field on line " + std::to_string(line_no);
    r.t = parse_double(f[0], where);
    r.minus_i3 = parse_double(f[1], where);
    r.minus_t3 = parse_double(f[2], where);
    r.i_ac = parse_double(f[3], where);
    r.i_ad = parse_double(f[4], where);
    r.tsw_c = parse_double(f[5], where);
    r.tsw_d = parse_double(f[6], where);
    r.tsw_tot = parse_double(f[7], where);
    r.status = f[8];
    report.rows.push_back(std::move(r));
  }
  return report;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "n,nc,T,dt,backflowI3,backflowT3,failed_rows\r\n";
  for (const auto& r : rows) {
    os << r.n_qubits << ',' << r.n_c << ',' << format_number(r.i3.t_end) << ','
       << format_number(r.i3.grid_spacing) << ',' << format_number(r.i3.value) << ','
       << format_number(r.t3.value) << ',' << r.report.failed_rows() << "\r\n";
  }
}

void write_verify_table(std::ostream& os, const std::vector<VerifyCheck>& checks) {
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  value        tolerance  detail\n";
  for (const auto& c : checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << (c.passed ? "PASS  " : "FAIL  ")
       << "  " << std::setw(11) << format_number(c.value) << "  " << std::setw(9) << format_number(c.tolerance)
       << "  " << c.detail << '\n';
  }
}

void write_report_svg(std::ostream& os, const ScramblingReport& report, const std::string& title) {
  const double w = 800, h = 420, left = 60, right = 20, top = 40, bottom = 50;
  double t0 = 0, t1 = 1, y0 = 0, y1 = 0;
  if (!report.rows.empty()) {
    t0 = report.rows.front().t;
    t1 = report.rows.back().t;
    if (t1 <= t0) t1 = t0 + 1;
  }
  for (const auto& r : report.rows)
    for (double v : {r.minus_i3, r.minus_t3})
      if (std::isfinite(v)) {
        y0 = std::min(y0, v);
        y1 = std::max(y1, v);
      }
  if (y1 - y0 < 1e-12) y1 = y0 + 1;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double t) { return left + (t - t0) / (t1 - t0) * (w - left - right); };
  auto py = [&](double v) { return top + (y1 - v) / (y1 - y0) * (h - top - bottom); };
  auto escape = [](const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '<') o += "&lt;";
      else if (c == '>') o += "&gt;";
      else if (c == '&') o += "&amp;";
      else o += c;
    }
    return o;
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title) << "</text>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\"" << h - bottom
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << h - bottom
     << "\" stroke=\"black\"/>\n";
  if (y0 < 0 && y1 > 0)
    os << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\"" << w - right << "\" y2=\"" << py(0)
       << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double t = t0 + (t1 - t0) * k / 4.0;
    const double v = y0 + (y1 - y0) * k / 4.0;
    os << "<text x=\"" << px(t) << "\" y=\"" << h - bottom + 16 << "\" text-anchor=\"middle\">" << format_number(std::round(t * 1000) / 1000) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\">" << format_number(std::round(v * 1000) / 1000) << "</text>\n";
  }
  os << "<text x=\"" << (left + w - right) / 2 << "\" y=\"" << h - 12 << "\" text-anchor=\"middle\">t</text>\n";

  const struct {
    const char* name;
    const char* color;
    double ScramblingRow::*field;
  } series[] = {{"-I3", "#1f77b4", &ScramblingRow::minus_i3}, {"-T3", "#d62728", &ScramblingRow::minus_t3}};
  int idx = 0;
  for (const auto& s : series) {
    std::ostringstream pts;
    auto flush = [&] {
      if (!pts.str().empty())
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
      pts.str("");
    };
    for (const auto& r : report.rows) {
      const double v = r.*(s.field);
      if (!std::isfinite(v)) {
        flush();
        continue;
      }
      pts << px(r.t) << ',' << py(v) << ' ';
    }
    flush();
    const double ly = top + 8 + 16 * idx++;
    os << "<line x1=\"" << w - right - 80 << "\" y1=\"" << ly << "\" x2=\"" << w - right - 60 << "\" y2=\"" << ly
       << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << w - right - 54 << "\" y=\"" << ly + 4 << "\">" << s.name << "</text>\n";
  }
  os << "</svg>\n";
}

namespace {

Complex parse_complex(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '('), s.end());
  s.erase(std::remove(s.begin(), s.end(), ')'), s.end());
  if (s.empty()) throw std::runtime_error("empty matrix entry");
  const char last = s.back();
  if (last != 'j' && last != 'i' && last != 'J' && last != 'I') return {parse_double(s, "matrix entry"), 0.0};
  s.pop_back();
  // Split at the last sign that does not belong to an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t, "imaginary part");
  };
  if (split == std::string::npos) return {0.0, imag_of(s)};
  return {parse_double(s.substr(0, split), "real part"), imag_of(s.substr(split))};
}

}  // namespace

ComplexMatrix parse_unitary(std::istream& is) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::string tok;
    std::vector<Complex> row;
    while (ls >> tok) {
      if (row.empty() && tok[0] == '#') break;
      try {
        row.push_back(parse_complex(tok));
      } catch (const std::runtime_error& e) {
        throw std::runtime_error("unitary file line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t d = rows.size();
  if (d < 2 || (d & (d - 1)) != 0)
    throw std::invalid_argument("unitary file: dimension " + std::to_string(d) + " is not 2^n with n >= 1");
  ComplexMatrix u(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d)
      throw std::invalid_argument("unitary file: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " + std::to_string(d));
    for (std::size_t j = 0; j < d; ++j) u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  if (!is_unitary(u, 1e-8)) throw std::invalid_argument("unitary file: matrix is not unitary within 1e-8");
  return u;
}

ComplexMatrix load_unitary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open unitary file '" + path + "'");
  return parse_unitary(in);
}

EntropyUnit parse_entropy_unit(const std::string& name) {
  if (name == "bits" || name == "bit" || name == "log2") return EntropyUnit::Bits;
  if (name == "nats" || name == "nat" || name == "ln") return EntropyUnit::Nats;
  throw std::invalid_argument("unknown entropy unit '" + name + "' (bits or nats)");
}

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
      throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
  }
}

template <class T>
void take(const json& obj, const char* key, T& dst) {
  if (obj.contains(key)) dst = obj.at(key).get<T>();
}

}  // namespace

void apply_config_json(const std::string& text, ExperimentConfig& config, OutputPaths& outputs) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!root.is_object()) throw std::invalid_argument("config: top level must be an object");
  reject_unknown(root, {"model", "partition", "time_grid", "measurements", "unit", "sdp_tol", "outputs"}, "config");
  try {
    bool have_t_end = false;
    if (root.contains("model")) {
      const json& m = root.at("model");
      reject_unknown(m, {"kind", "n", "g", "h", "J", "seed", "unitary_file"}, "model");
      if (m.contains("kind")) config.model = parse_model_kind(m.at("kind").get<std::string>());
      take(m, "n", config.hamiltonian.n_qubits);
      take(m, "g", config.hamiltonian.g);
      take(m, "h", config.hamiltonian.h);
      take(m, "J", config.hamiltonian.J);
      take(m, "seed", config.hamiltonian.seed);
      if (m.contains("unitary_file")) config.custom_unitary = load_unitary_file(m.at("unitary_file").get<std::string>());
    }
    if (root.contains("partition")) {
      reject_unknown(root.at("partition"), {"nc"}, "partition");
      take(root.at("partition"), "nc", config.n_c);
    }
    if (root.contains("time_grid")) {
      const json& g = root.at("time_grid");
      reject_unknown(g, {"t_start", "t_end", "n_points"}, "time_grid");
      take(g, "t_start", config.grid.t_start);
      take(g, "n_points", config.grid.n_points);
      have_t_end = g.contains("t_end");
      take(g, "t_end", config.grid.t_end);
    }
    if (!have_t_end) config.grid.t_end = default_time_grid(config.model, config.hamiltonian).t_end;
    take(root, "measurements", config.measurement_axes);
    if (root.contains("unit")) config.unit = parse_entropy_unit(root.at("unit").get<std::string>());
    if (root.contains("sdp_tol")) {
      const double tol = root.at("sdp_tol").get<double>();
      config.tsw.sdp.gap_tol = tol;
      config.tsw.sdp.feas_tol = tol;
    }
    if (root.contains("outputs")) {
      reject_unknown(root.at("outputs"), {"csv", "svg"}, "outputs");
      take(root.at("outputs"), "csv", outputs.csv);
      take(root.at("outputs"), "svg", outputs.svg);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

void load_config_file(const std::string& path, ExperimentConfig& config, OutputPaths& outputs) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_json(ss.str(), config, outputs);
}

}  // namespace tscramble::io
