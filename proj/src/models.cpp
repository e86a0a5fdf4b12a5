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


#include "tscramble/models.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tscramble {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_letter(char c) {
  if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
    throw std::invalid_argument(std::string("PauliString: bad letter '") + c + "'");
  }
}

// a * b for single letters: returns the letter and sets the phase.
char multiply_letters(char a, char b, Complex& phase) {
  if (a == 'I') return b;
  if (b == 'I') return a;
  if (a == b) return 'I';
  // cyclic X -> Y -> Z gives +i
  const std::string cyc = "XYZ";
  const auto ia = cyc.find(a);
  const auto ib = cyc.find(b);
  const auto ic = 3 - ia - ib;
  phase *= ((ia + 1) % 3 == ib) ? kI : -kI;
  return cyc[ic];
}

}  // namespace

PauliString::PauliString(std::string word, Complex coefficient)
    : word_(std::move(word)), coefficient_(coefficient) {
  if (word_.empty() || word_.size() > 62) {
    throw std::invalid_argument("PauliString: word length must be in [1, 62]");
  }
  for (char c : word_) check_letter(c);
  if (!std::isfinite(coefficient_.real()) || !std::isfinite(coefficient_.imag())) {
    throw std::invalid_argument("PauliString: non-finite coefficient");
  }
}

PauliString PauliString::identity(std::size_t n) { return PauliString(std::string(n, 'I')); }

PauliString PauliString::single(char op, std::size_t qubit, std::size_t n) {
  if (qubit < 1 || qubit > n) throw std::invalid_argument("PauliString::single: bad qubit");
  std::string w(n, 'I');
  w[qubit - 1] = op;
  return PauliString(std::move(w));
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (rhs.size() != size()) throw std::invalid_argument("PauliString: length mismatch");
  Complex phase = coefficient_ * rhs.coefficient_;
  std::string w(size(), 'I');
  for (std::size_t k = 0; k < size(); ++k) w[k] = multiply_letters(word_[k], rhs.word_[k], phase);
  return PauliString(std::move(w), phase);
}

PauliString PauliString::scaled(Complex factor) const {
  return PauliString(word_, coefficient_ * factor);
}

std::uint64_t PauliString::flip_mask() const {
  std::uint64_t mask = 0;
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) {
    if (word_[k] == 'X' || word_[k] == 'Y') mask |= std::uint64_t{1} << (n - 1 - k);
  }
  return mask;
}

Complex PauliString::phase(std::uint64_t j) const {
  Complex ph{1.0, 0.0};
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) {
    const bool bit = (j >> (n - 1 - k)) & 1U;
    if (word_[k] == 'Z' && bit) ph = -ph;
    if (word_[k] == 'Y') ph *= bit ? -kI : kI;  // Y|0> = i|1>, Y|1> = -i|0>
  }
  return ph;
}

void accumulate(const PauliString& p, ComplexMatrix& out) {
  const auto dim = std::uint64_t{1} << p.size();
  if (out.rows() != static_cast<Eigen::Index>(dim) || out.cols() != out.rows()) {
    throw std::invalid_argument("accumulate: output dimension mismatch");
  }
  const std::uint64_t mask = p.flip_mask();
  for (std::uint64_t j = 0; j < dim; ++j) {
    out(static_cast<Eigen::Index>(j ^ mask), static_cast<Eigen::Index>(j)) +=
        p.coefficient() * p.phase(j);
  }
}

ComplexMatrix pauli_matrix(const PauliString& p) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << p.size());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  accumulate(p, out);
  return out;
}

void HamiltonianSpec::validate() const {
  if (n_qubits < 2) throw std::invalid_argument("HamiltonianSpec: n_qubits must be >= 2");
  if (n_qubits > 12) throw std::invalid_argument("HamiltonianSpec: n_qubits too large for dense storage");
  if (!std::isfinite(g) || !std::isfinite(h) || !std::isfinite(J)) {
    throw std::invalid_argument("HamiltonianSpec: non-finite parameter");
  }
}

ComplexMatrix build_ising(std::size_t n, double g, double h) {
  if (n < 2) throw std::invalid_argument("build_ising: n must be >= 2");
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 1; i < n; ++i) {
    accumulate((PauliString::single('Z', i, n) * PauliString::single('Z', i + 1, n)).scaled(-1.0),
               out);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (h != 0.0) accumulate(PauliString::single('Z', i, n).scaled(-h), out);
    if (g != 0.0) accumulate(PauliString::single('X', i, n).scaled(-g), out);
  }
  return out;
}

PauliString majorana_string(std::size_t index, std::size_t n_qubits) {
  if (index < 1 || index > 2 * n_qubits) {
    throw std::out_of_range("majorana: index " + std::to_string(index) + " outside 1.." +
                            std::to_string(2 * n_qubits));
  }
  const std::size_t site = (index + 1) / 2;
  std::string w(n_qubits, 'I');
  for (std::size_t k = 0; k + 1 < site; ++k) w[k] = 'X';
  w[site - 1] = (index % 2 == 1) ? 'Z' : 'Y';
  return PauliString(std::move(w), 1.0 / std::sqrt(2.0));
}

MajoranaOperator jordan_wigner_majorana(std::size_t index, std::size_t n_qubits) {
  return {index, pauli_matrix(majorana_string(index, n_qubits))};
}

double syk_coupling_variance(std::size_t n_qubits, double J) {
  const double n = 2.0 * static_cast<double>(n_qubits);
  return 6.0 * J * J / ((n - 1.0) * (n - 2.0) * (n - 3.0));
}

std::vector<double> sample_syk_couplings(std::size_t n_qubits, double J, std::uint64_t seed) {
  if (n_qubits < 2) throw std::invalid_argument("sample_syk_couplings: n_qubits must be >= 2");
  const std::size_t n = 2 * n_qubits;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, std::sqrt(syk_coupling_variance(n_qubits, J)));
  std::vector<double> out;
  out.reserve(n * (n - 1) * (n - 2) * (n - 3) / 24);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) out.push_back(dist(rng));
  return out;
}

ComplexMatrix build_syk(std::size_t n_qubits, double J, std::uint64_t seed) {
  const std::vector<double> couplings = sample_syk_couplings(n_qubits, J, seed);
  const std::size_t n = 2 * n_qubits;
  std::vector<PauliString> chi;
  for (std::size_t i = 1; i <= n; ++i) chi.push_back(majorana_string(i, n_qubits));
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const PauliString ij = chi[i] * chi[j];
      for (std::size_t k = j + 1; k < n; ++k) {
        const PauliString ijk = ij * chi[k];
        for (std::size_t l = k + 1; l < n; ++l) {
          accumulate((ijk * chi[l]).scaled(couplings[c++]), out);
        }
      }
    }
  return out;
}

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case HamiltonianKind::IsingChain: return build_ising(spec.n_qubits, spec.g, spec.h);
    case HamiltonianKind::SYK: return build_syk(spec.n_qubits, spec.J, spec.seed);
    case HamiltonianKind::Custom: break;
  }
  throw std::invalid_argument("build_hamiltonian: custom models carry a unitary, not a Hamiltonian");
}

ComplexMatrix clifford_scrambler_unitary() {
  static const double entries[8][8] = {
      {-1, 0, 0, -1, 0, -1, -1, 0}, {0, 1, -1, 0, -1, 0, 0, 1},
      {0, -1, 1, 0, -1, 0, 0, 1},   {1, 0, 0, 1, 0, -1, -1, 0},
      {0, -1, -1, 0, 1, 0, 0, 1},   {1, 0, 0, -1, 0, 1, -1, 0},
      {1, 0, 0, -1, 0, -1, 1, 0},   {0, -1, -1, 0, -1, 0, 0, -1}};
  ComplexMatrix u(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) u(i, j) = Complex(0.0, 0.5) * entries[i][j];
  return u;
}

const std::vector<OperatorGrowthRow>& clifford_operator_growth() {
  static const std::vector<OperatorGrowthRow> rows = {
      {"XII", "XYY", -1}, {"YII", "YZZ", -1}, {"ZII", "ZXX", -1},
      {"IXI", "YXY", -1}, {"IYI", "ZYZ", -1}, {"IZI", "XZX", -1},
      {"IIX", "YYX", -1}, {"IIY", "ZZY", -1}, {"IIZ", "XXZ", -1}};
  return rows;
}

double operator_growth_residual(const ComplexMatrix& scrambler) {
  double worst = 0.0;
  for (const auto& row : clifford_operator_growth()) {
    const ComplexMatrix in = pauli_matrix(PauliString(row.input));
    const ComplexMatrix out = pauli_matrix(PauliString(row.output));
    worst = std::max(worst, max_abs(scrambler * in * scrambler.adjoint() - row.sign * out));
  }
  return worst;
}

ComplexMatrix xx_gate(double theta, std::size_t a, std::size_t b, std::size_t n) {
  const PauliString xx = PauliString::single('X', a, n) * PauliString::single('X', b, n);
  // (XX)^2 = 1, so exp(-i theta/2 XX) = cos(theta/2) 1 - i sin(theta/2) XX
  ComplexMatrix out = std::cos(theta / 2) * identity(std::size_t{1} << n);
  accumulate(xx.scaled(Complex(0.0, -std::sin(theta / 2))), out);
  return out;
}

ComplexMatrix rz_gate(double theta) {
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  out(0, 0) = std::exp(Complex(0.0, -theta / 2));
  out(1, 1) = std::exp(Complex(0.0, theta / 2));
  return out;
}

ComplexMatrix clifford_scan_unitary(double theta) {
  const ComplexMatrix layer = xx_gate(theta, 1, 2, 3) * xx_gate(theta, 1, 3, 3) * xx_gate(theta, 2, 3, 3);
  const ComplexMatrix rz = rz_gate(theta);
  const ComplexMatrix rot = kron(kron(rz, rz), rz);
  return layer * rot * layer;
}

ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64& rng) {
  if (dim == 0) throw std::invalid_argument("haar_unitary: zero dimension");
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix z(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double mag = std::abs(r(k, k));
    const Complex ph = mag > 0.0 ? r(k, k) / mag : Complex(1.0, 0.0);
    q.col(k) *= ph;
  }
  return q;
}

ComplexMatrix random_local_unitary(const PartitionSpec& partition, std::uint64_t seed) {
  partition.validate();
  std::mt19937_64 rng(seed);
  const QubitRegister full = partition.outputs();
  ComplexMatrix u = identity(full.dim());
  for (const QubitRegister* region : {&partition.region_c, &partition.region_d}) {
    if (region->empty()) continue;
    u = embed(haar_unitary(region->dim(), rng), *region, full) * u;
  }
  return u;
}

ComplexMatrix random_single_qubit_layer(std::size_t n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 12) throw std::invalid_argument("random_single_qubit_layer: bad size");
  std::mt19937_64 rng(seed);
  ComplexMatrix u = ComplexMatrix::Ones(1, 1);
  for (std::size_t k = 0; k < n_qubits; ++k) u = kron(u, haar_unitary(2, rng));
  return u;
}

ComplexMatrix swap_network(const std::vector<std::pair<int, int>>& pairs, std::size_t n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("swap_network: bad register size");
  std::vector<bool> used(n_qubits + 1, false);
  for (const auto& [a, b] : pairs) {
    for (int q : {a, b}) {
      if (q < 1 || q > static_cast<int>(n_qubits)) {
        throw std::invalid_argument("swap_network: qubit out of range");
      }
      if (used[static_cast<std::size_t>(q)]) {
        throw std::invalid_argument("swap_network: overlapping pairs");
      }
      used[static_cast<std::size_t>(q)] = true;
    }
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  auto bit_of = [n_qubits](int q) { return std::size_t{1} << (n_qubits - static_cast<std::size_t>(q)); };
  ComplexMatrix p = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    std::size_t i = j;
    for (const auto& [a, b] : pairs) {
      const bool ba = j & bit_of(a);
      const bool bb = j & bit_of(b);
      if (ba != bb) i ^= bit_of(a) | bit_of(b);
    }
    p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return p;
}

}  // namespace tscramble
