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

// Independent reference implementations used as test oracles. None of these
// call into the library except for the plain matrix type.

#include "tscramble/qla.hpp"

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace tscramble::oracle {

inline ComplexMatrix pauli(char c) {
  ComplexMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

// (a ⊗ b)[iP + k, jQ + l] = a[i, j] b[k, l]
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto p = b.rows();
  const auto q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < p; ++k)
        for (Eigen::Index l = 0; l < q; ++l) out(i * p + k, j * q + l) = a(i, j) * b(k, l);
  return out;
}

inline ComplexMatrix pauli_word(const std::string& word) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (char c : word) out = kron_oracle(out, pauli(c));
  return out;
}

// Brute force: sum over every traced bit pattern, qubit positions counted
// from the most significant bit. keep_pos must be ascending.
inline ComplexMatrix partial_trace_oracle(const ComplexMatrix& m, int n,
                                          const std::vector<int>& keep_pos) {
  std::vector<int> trace_pos;
  for (int q = 0; q < n; ++q) {
    bool kept = false;
    for (int k : keep_pos) kept = kept || k == q;
    if (!kept) trace_pos.push_back(q);
  }
  const int nk = static_cast<int>(keep_pos.size());
  const int nt = static_cast<int>(trace_pos.size());
  auto compose = [&](int kbits, int tbits) {
    int idx = 0;
    for (int b = 0; b < nk; ++b)
      if ((kbits >> (nk - 1 - b)) & 1) idx |= 1 << (n - 1 - keep_pos[static_cast<std::size_t>(b)]);
    for (int b = 0; b < nt; ++b)
      if ((tbits >> (nt - 1 - b)) & 1) idx |= 1 << (n - 1 - trace_pos[static_cast<std::size_t>(b)]);
    return idx;
  };
  ComplexMatrix out = ComplexMatrix::Zero(1 << nk, 1 << nk);
  for (int i = 0; i < (1 << nk); ++i)
    for (int j = 0; j < (1 << nk); ++j)
      for (int t = 0; t < (1 << nt); ++t) out(i, j) += m(compose(i, t), compose(j, t));
  return out;
}

inline ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

// Unitary from the Cayley transform of a random Hermitian matrix; kept
// separate from the library's QR-based Haar sampler on purpose.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  const ComplexMatrix h = random_hermitian(dim, rng);
  const auto d = static_cast<Eigen::Index>(dim);
  const ComplexMatrix i_h = Complex(0.0, 1.0) * h;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return (id + i_h).inverse() * (id - i_h);
}

// Haar unitary by modified Gram-Schmidt on the columns of a complex Ginibre
// matrix (R then has a positive diagonal, so no phase correction is needed).
inline ComplexMatrix haar_gram_schmidt(std::size_t dim, std::mt19937_64& rng) {
  ComplexMatrix q = random_gaussian(dim, dim, rng);
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (Eigen::Index k = 0; k < j; ++k) q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
    q.col(j) /= q.col(j).norm();
  }
  return q;
}

// Basis permutation exchanging qubits a and b (1-based, most significant
// first) of an n-qubit register.
inline ComplexMatrix swap_oracle(int a, int b, int n) {
  const int dim = 1 << n;
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const int ba = (i >> (n - a)) & 1;
    const int bb = (i >> (n - b)) & 1;
    int j = i & ~(1 << (n - a)) & ~(1 << (n - b));
    j |= ba << (n - b);
    j |= bb << (n - a);
    p(j, i) = 1.0;
  }
  return p;
}

// Choi state of U with every input referenced, transposed on the reference
// half: sum_ij |j><i| ⊗ U|i><j|U^dag / d, references first.
inline ComplexMatrix choi_transposed_oracle(const ComplexMatrix& u) {
  const auto d = u.rows();
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      out.block(j * d, i * d, d, d) = u.col(i) * u.col(j).adjoint() / static_cast<double>(d);
  return out;
}

// Qubit assemblage from random projective measurements on the first half of
// a random two-qubit state mixed with white noise.
inline std::vector<std::vector<ComplexMatrix>> random_qubit_assemblage(std::size_t settings,
                                                                       std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss;
  const double p = unif(rng);
  const ComplexMatrix rho = p * random_density(4, rng) + (1.0 - p) * ComplexMatrix::Identity(4, 4) / 4.0;
  std::vector<std::vector<ComplexMatrix>> out;
  for (std::size_t x = 0; x < settings; ++x) {
    double n[3] = {gauss(rng), gauss(rng), gauss(rng)};
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    const ComplexMatrix obs = (n[0] * pauli('X') + n[1] * pauli('Y') + n[2] * pauli('Z')) / len;
    std::vector<ComplexMatrix> row;
    for (double s : {1.0, -1.0}) {
      const ComplexMatrix e = (ComplexMatrix::Identity(2, 2) + s * obs) / 2.0;
      row.push_back(partial_trace_oracle(kron_oracle(e, ComplexMatrix::Identity(2, 2)) * rho, 2, {1}));
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace tscramble::oracle
