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


#include "tscramble/channels.hpp"

#include "tscramble/kernels.hpp"
#include "tscramble/models.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tscramble {

namespace {

void check_unitary_dim(const ComplexMatrix& u, std::size_t n_qubits, const char* what) {
  if (n_qubits < 1 || n_qubits > 12 || u.rows() != u.cols() ||
      u.rows() != static_cast<Eigen::Index>(std::size_t{1} << n_qubits)) {
    throw std::invalid_argument(std::string(what) + ": unitary dimension does not match " +
                                std::to_string(n_qubits) + " qubits");
  }
}

QubitRegister reference_register(const QubitRegister& referenced, std::size_t n_qubits) {
  std::vector<int> labels;
  for (int k : referenced.labels()) {
    if (k < 1 || k > static_cast<int>(n_qubits)) {
      throw std::invalid_argument("referenced qubit " + std::to_string(k) + " is not a system qubit");
    }
    labels.push_back(reference_label(k));
  }
  return QubitRegister(std::move(labels));
}

// all 4^n words over IXYZ in lexicographic order
std::vector<std::string> all_words(std::size_t n) {
  std::vector<std::string> words{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    next.reserve(words.size() * 4);
    for (const auto& w : words)
      for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(w + c);
    words = std::move(next);
  }
  return words;
}

// tr(P M) using the signed-permutation form of P
Complex pauli_trace(const PauliString& p, const ComplexMatrix& m) {
  const std::uint64_t mask = p.flip_mask();
  Complex acc{0.0, 0.0};
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(m.rows()); ++k) {
    acc += p.phase(k) * m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k ^ mask));
  }
  return acc * p.coefficient();
}

double clamp_small_negative(double v) { return (v < 0.0 && v >= -1e-9) ? 0.0 : v; }

}  // namespace

ChoiState build_choi(const ComplexMatrix& unitary, std::size_t n_qubits,
                     const QubitRegister& referenced) {
  check_unitary_dim(unitary, n_qubits, "build_choi");
  if (referenced.empty()) throw std::invalid_argument("build_choi: no referenced qubits");
  const QubitRegister refs = reference_register(referenced, n_qubits);
  const QubitRegister system = QubitRegister::range(1, static_cast<int>(n_qubits));

  std::vector<std::size_t> pos;
  for (int k : referenced.labels()) pos.push_back(system.position(k));
  const auto in_off = kernels::subsystem_offsets(pos, n_qubits);
  const auto rest_off = kernels::subsystem_offsets(
      [&] {
        std::vector<std::size_t> r;
        const QubitRegister rest = system.without(referenced);
        for (int k : rest.labels()) r.push_back(system.position(k));
        return r;
      }(),
      n_qubits);

  const Eigen::Index d = unitary.rows();
  const auto dr = static_cast<Eigen::Index>(rest_off.size());
  const auto di = static_cast<Eigen::Index>(in_off.size());
  // column blocks U_i: columns of U whose referenced bits spell i
  std::vector<ComplexMatrix> blocks(static_cast<std::size_t>(di), ComplexMatrix(d, dr));
  for (Eigen::Index i = 0; i < di; ++i)
    for (Eigen::Index r = 0; r < dr; ++r)
      blocks[static_cast<std::size_t>(i)].col(r) = unitary.col(
          static_cast<Eigen::Index>(in_off[static_cast<std::size_t>(i)] + rest_off[static_cast<std::size_t>(r)]));

  const double norm = 1.0 / static_cast<double>(std::size_t{1} << n_qubits);
  ComplexMatrix rho(di * d, di * d);
  for (Eigen::Index j = 0; j < di; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const ComplexMatrix g =
          norm * blocks[static_cast<std::size_t>(i)] * blocks[static_cast<std::size_t>(j)].adjoint();
      rho.block(i * d, j * d, d, d) = g;
      if (i != j) rho.block(j * d, i * d, d, d) = g.adjoint();
    }
  }
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return {DensityMatrix(std::move(rho), refs.concat(system)), refs, unitary};
}

ChoiState build_choi(const ComplexMatrix& unitary, std::size_t n_qubits) {
  return build_choi(unitary, n_qubits, QubitRegister{1});
}

PseudoDensityMatrix build_pdm(const ComplexMatrix& unitary, std::size_t n_qubits,
                              const QubitRegister& referenced) {
  check_unitary_dim(unitary, n_qubits, "build_pdm");
  if (referenced.empty()) throw std::invalid_argument("build_pdm: no referenced qubits");
  if (referenced.size() + n_qubits > 8) {
    throw std::invalid_argument("build_pdm: correlator route limited to 8 qubits in total");
  }
  const QubitRegister refs = reference_register(referenced, n_qubits);
  const std::size_t r = referenced.size();
  const std::size_t d = std::size_t{1} << n_qubits;
  const ComplexMatrix rho0 = identity(d) / static_cast<double>(d);
  const auto in_words = all_words(r);
  const auto out_words = all_words(n_qubits);

  const std::size_t total = r + n_qubits;
  const auto dim_total = static_cast<Eigen::Index>(std::size_t{1} << total);
  ComplexMatrix pdm = ComplexMatrix::Zero(dim_total, dim_total);
  const double norm = 1.0 / static_cast<double>(std::size_t{1} << total);

  for (const auto& wi : in_words) {
    // lift the input word onto the referenced system qubits
    std::string sys(n_qubits, 'I');
    for (std::size_t k = 0; k < r; ++k) sys[static_cast<std::size_t>(referenced[k] - 1)] = wi[k];
    const ComplexMatrix p_in = pauli_matrix(PauliString(sys));

    // M = sum_a a p(a) U rho_a U^dag over the first measurement's outcomes
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    if (sys == std::string(n_qubits, 'I')) {
      m = unitary * rho0 * unitary.adjoint();
    } else {
      for (double a : {1.0, -1.0}) {
        const ComplexMatrix proj = 0.5 * (identity(d) + a * p_in);
        const double p = (proj * rho0).trace().real();
        const ComplexMatrix post = proj * rho0 * proj / p;
        m += a * p * (unitary * post * unitary.adjoint());
      }
    }
    for (const auto& wj : out_words) {
      // E[ab] = sum_a a p(a) <sigma_j>_{U rho_a U^dag}
      const double c = pauli_trace(PauliString(wj), m).real();
      if (c == 0.0) continue;
      accumulate(PauliString(wi + wj, c * norm), pdm);
    }
  }
  const QubitRegister system = QubitRegister::range(1, static_cast<int>(n_qubits));
  return {std::move(pdm), refs.concat(system), refs};
}

PseudoDensityMatrix build_pdm(const ComplexMatrix& unitary, std::size_t n_qubits) {
  return build_pdm(unitary, n_qubits, QubitRegister::range(1, static_cast<int>(n_qubits)));
}

PseudoDensityMatrix pdm_from_choi(const ChoiState& choi) {
  return {partial_transpose(choi.state.matrix(), choi.input_region, choi.state.qubits()),
          choi.state.qubits(), choi.input_region};
}

Assemblage assemblage_from_pdm(const PseudoDensityMatrix& pdm, const MeasurementSet& meas) {
  meas.validate();
  if (meas.dim() != 2) {
    throw std::invalid_argument("assemblage_from_pdm: measurements must act on one qubit");
  }
  const QubitRegister encoded{pdm.input_region[0]};
  const QubitRegister outputs = pdm.qubits.without(pdm.input_region);
  std::vector<std::vector<ComplexMatrix>> members(meas.n_settings());
  for (std::size_t x = 0; x < meas.n_settings(); ++x) {
    for (std::size_t a = 0; a < meas.n_outcomes(); ++a) {
      const ComplexMatrix lifted = embed(meas.projector(x, a), encoded, pdm.qubits);
      ComplexMatrix s = partial_trace(lifted * pdm.matrix, pdm.qubits, outputs);
      members[x].push_back(0.5 * (s + s.adjoint()));
    }
  }
  return Assemblage(std::move(members), outputs);
}

TmiResult tripartite_mutual_information(const ChoiState& choi, const PartitionSpec& part,
                                        EntropyUnit unit) {
  part.validate();
  const QubitRegister& reg = choi.state.qubits();
  if (!reg.contains_all(part.region_a) || !reg.contains_all(part.region_c) ||
      !reg.contains_all(part.region_d)) {
    throw std::invalid_argument("tripartite_mutual_information: partition " + part.describe() +
                                " does not fit the Choi register");
  }
  const QubitRegister& a = part.region_a;
  const QubitRegister& c = part.region_c;
  const QubitRegister& d = part.region_d;
  const DensityMatrix acd = partial_trace(choi.state, a.concat(c).concat(d));
  auto s = [&](const QubitRegister& keep) {
    if (keep.empty()) return 0.0;
    return von_neumann_entropy(partial_trace(acd, keep), unit);
  };
  const double s_a = s(a);
  const double s_c = s(c);
  const double s_d = s(d);
  const double s_cd = s(c.concat(d));
  const double s_ac = s(a.concat(c));
  const double s_ad = s(a.concat(d));
  const double s_acd = von_neumann_entropy(acd, unit);

  TmiResult out;
  out.i_a_cd = clamp_small_negative(s_a + s_cd - s_acd);
  out.i_a_c = clamp_small_negative(s_a + s_c - s_ac);
  out.i_a_d = clamp_small_negative(s_a + s_d - s_ad);
  out.minus_i3 = out.i_a_cd - out.i_a_c - out.i_a_d;
  return out;
}

HaarBaseline haar_scrambled_baseline(std::size_t n_qubits, const PartitionSpec& part,
                                     std::size_t n_samples, std::uint64_t seed, EntropyUnit unit) {
  if (n_samples < 1) throw std::invalid_argument("haar_scrambled_baseline: need at least one sample");
  part.validate();
  if (part.n_qubits != n_qubits) {
    throw std::invalid_argument("haar_scrambled_baseline: partition size mismatch");
  }
  HaarBaseline out;
  out.samples.assign(n_samples, 0.0);
  kernels::for_each_index(n_samples, kernels::Execution::Parallel, [&](std::size_t k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    const ComplexMatrix u = haar_unitary(std::size_t{1} << n_qubits, rng);
    const QubitRegister referenced{-part.region_a[0]};
    out.samples[k] = tripartite_mutual_information(build_choi(u, n_qubits, referenced), part, unit).minus_i3;
  });
  double sum = 0.0;
  for (double v : out.samples) sum += v;
  out.mean = sum / static_cast<double>(n_samples);
  double var = 0.0;
  for (double v : out.samples) var += (v - out.mean) * (v - out.mean);
  if (n_samples > 1) {
    var /= static_cast<double>(n_samples - 1);
    out.stderr_of_mean = std::sqrt(var / static_cast<double>(n_samples));
  }
  return out;
}

}  // namespace tscramble
