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

#include "tscramble/qla.hpp"

#include "tscramble/kernels.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tscramble {

namespace {

bool is_power_of_two_dim(Eigen::Index n, std::size_t qubits) {
  return qubits < 63 && n == static_cast<Eigen::Index>(std::size_t{1} << qubits);
}

std::vector<std::size_t> positions_in(const QubitRegister& full,
                                      const QubitRegister& sub) {
  std::vector<std::size_t> pos;
  pos.reserve(sub.size());
  for (int label : sub.labels()) pos.push_back(full.position(label));
  return pos;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// QubitRegister

QubitRegister::QubitRegister(std::vector<int> labels) : labels_(std::move(labels)) {
  std::unordered_set<int> seen;
  for (int l : labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("QubitRegister: duplicate label " + std::to_string(l));
    }
  }
}

QubitRegister::QubitRegister(std::initializer_list<int> labels)
    : QubitRegister(std::vector<int>(labels)) {}

QubitRegister QubitRegister::range(int first, int count) {
  if (count < 0) throw std::invalid_argument("QubitRegister::range: negative count");
  std::vector<int> labels(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) labels[static_cast<std::size_t>(i)] = first + i;
  return QubitRegister(std::move(labels));
}

bool QubitRegister::contains(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

bool QubitRegister::contains_all(const QubitRegister& other) const {
  return std::all_of(other.labels_.begin(), other.labels_.end(),
                     [this](int l) { return contains(l); });
}

bool QubitRegister::disjoint(const QubitRegister& other) const {
  return std::none_of(other.labels_.begin(), other.labels_.end(),
                      [this](int l) { return contains(l); });
}

std::size_t QubitRegister::position(int label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::invalid_argument("QubitRegister: unknown label " + std::to_string(label));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

QubitRegister QubitRegister::concat(const QubitRegister& other) const {
  std::vector<int> labels = labels_;
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return QubitRegister(std::move(labels));
}

QubitRegister QubitRegister::restrict_to(const QubitRegister& subset) const {
  std::vector<int> labels;
  for (int l : labels_) {
    if (subset.contains(l)) labels.push_back(l);
  }
  return QubitRegister(std::move(labels));
}

QubitRegister QubitRegister::without(const QubitRegister& other) const {
  std::vector<int> labels;
  for (int l : labels_) {
    if (!other.contains(l)) labels.push_back(l);
  }
  return QubitRegister(std::move(labels));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix matrix, QubitRegister qubits,
                             Normalization normalization)
    : matrix_(std::move(matrix)), qubits_(std::move(qubits)),
      normalization_(normalization) {
  require_square(matrix_, "DensityMatrix");
  if (!is_power_of_two_dim(matrix_.rows(), qubits_.size())) {
    throw std::invalid_argument("DensityMatrix: dimension " +
                                std::to_string(matrix_.rows()) + " does not match " +
                                std::to_string(qubits_.size()) + " qubits");
  }
  if (!is_hermitian(matrix_, 1e-10)) {
    throw std::domain_error("DensityMatrix: matrix is not Hermitian");
  }
  const double tr = trace();
  if (normalization_ == Normalization::Unit) {
    if (std::abs(tr - 1.0) > 1e-10) {
      throw std::domain_error("DensityMatrix: trace " + std::to_string(tr) + " != 1");
    }
  } else if (tr < -1e-12 || tr > 1.0 + 1e-9) {
    throw std::domain_error("DensityMatrix: unnormalized trace " + std::to_string(tr) +
                            " outside [0, 1]");
  }
}

void DensityMatrix::validate_spectrum(double tol) const {
  const RealVector ev = hermitian_eigenvalues(matrix_);
  if (ev.size() > 0 && ev.minCoeff() < -tol) {
    throw std::domain_error("DensityMatrix: negative eigenvalue " +
                            std::to_string(ev.minCoeff()));
  }
}

// ---------------------------------------------------------------------------
// Basic operations

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols())) <= tol;
}

ComplexMatrix identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return ComplexMatrix::Identity(d, d);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const QubitRegister& targets,
                    const QubitRegister& full) {
  require_square(op, "embed");
  if (!is_power_of_two_dim(op.rows(), targets.size())) {
    throw std::invalid_argument("embed: operator dimension does not match targets");
  }
  const auto tpos = positions_in(full, targets);
  const auto rpos = positions_in(full, full.without(targets));
  const auto toff = kernels::subsystem_offsets(tpos, full.size());
  const auto roff = kernels::subsystem_offsets(rpos, full.size());
  const auto d = static_cast<Eigen::Index>(full.dim());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const std::size_t r : roff) {
    for (std::size_t b = 0; b < toff.size(); ++b) {
      for (std::size_t a = 0; a < toff.size(); ++a) {
        out(static_cast<Eigen::Index>(toff[a] + r), static_cast<Eigen::Index>(toff[b] + r)) =
            op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const QubitRegister& full,
                            const QubitRegister& keep) {
  require_square(m, "partial_trace");
  if (!is_power_of_two_dim(m.rows(), full.size())) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  if (!full.contains_all(keep)) {
    throw std::invalid_argument("partial_trace: keep is not a subset of the register");
  }
  const QubitRegister ordered = full.restrict_to(keep);
  const auto koff = kernels::subsystem_offsets(positions_in(full, ordered), full.size());
  const auto toff =
      kernels::subsystem_offsets(positions_in(full, full.without(keep)), full.size());
  ComplexMatrix out;
  kernels::partial_trace(m, koff, toff, out);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitRegister& keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.qubits(), keep);
  // restore exact Hermiticity lost to summation order
  reduced = (0.5 * (reduced + reduced.adjoint())).eval();
  return DensityMatrix(std::move(reduced), rho.qubits().restrict_to(keep),
                       rho.normalization());
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const QubitRegister& subsystem,
                                const QubitRegister& full) {
  require_square(rho, "partial_transpose");
  if (!is_power_of_two_dim(rho.rows(), full.size())) {
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  }
  if (!full.contains_all(subsystem)) {
    throw std::invalid_argument("partial_transpose: subsystem not in register");
  }
  std::size_t mask = 0;
  for (int l : subsystem.labels()) mask |= std::size_t{1} << (full.size() - 1 - full.position(l));
  const auto d = static_cast<std::size_t>(rho.rows());
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t ii = (i & ~mask) | (j & mask);
      const std::size_t jj = (j & ~mask) | (i & mask);
      out(static_cast<Eigen::Index>(ii), static_cast<Eigen::Index>(jj)) =
          rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectra and time evolution

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_eig");
  if (!is_hermitian(m, 1e-8 * std::max(1.0, max_abs(m)))) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  if (!is_hermitian(m, 1e-8 * std::max(1.0, max_abs(m)))) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

Propagator::Propagator(const ComplexMatrix& hamiltonian) : eig_(hermitian_eig(hamiltonian)) {}

ComplexMatrix Propagator::unitary(double t) const {
  const Eigen::VectorXcd phases =
      (eig_.values.cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
  return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& unitary) {
  if (unitary.rows() != rho.matrix().rows() || unitary.cols() != rho.matrix().cols()) {
    throw std::invalid_argument("conjugate: dimension mismatch");
  }
  ComplexMatrix out = unitary * rho.matrix() * unitary.adjoint();
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out), rho.qubits(), rho.normalization());
}

DensityMatrix evolve(const DensityMatrix& rho, const Propagator& propagator, double t) {
  if (propagator.dim() != rho.dim()) {
    throw std::invalid_argument("evolve: Hamiltonian dimension does not match state");
  }
  if (t == 0.0) return rho;
  return conjugate(rho, propagator.unitary(t));
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& hamiltonian, double t) {
  if (hamiltonian.rows() != rho.matrix().rows() || hamiltonian.cols() != rho.matrix().cols()) {
    throw std::invalid_argument("evolve: Hamiltonian dimension does not match state");
  }
  return evolve(rho, Propagator(hamiltonian), t);
}

ComplexMatrix conjugate_local(const ComplexMatrix& unitary, const ComplexMatrix& op,
                              const QubitRegister& targets, const QubitRegister& full) {
  require_square(unitary, "conjugate_local");
  require_square(op, "conjugate_local");
  if (!is_power_of_two_dim(unitary.rows(), full.size()) ||
      !is_power_of_two_dim(op.rows(), targets.size())) {
    throw std::invalid_argument("conjugate_local: dimension mismatch");
  }
  const auto toff = kernels::subsystem_offsets(positions_in(full, targets), full.size());
  const auto roff =
      kernels::subsystem_offsets(positions_in(full, full.without(targets)), full.size());
  const auto dt = static_cast<Eigen::Index>(toff.size());
  const auto dr = static_cast<Eigen::Index>(roff.size());
  const Eigen::Index d = unitary.rows();

  // blocks[a] = columns of U whose target bits spell a
  std::vector<ComplexMatrix> blocks(static_cast<std::size_t>(dt), ComplexMatrix(d, dr));
  for (Eigen::Index a = 0; a < dt; ++a) {
    for (Eigen::Index r = 0; r < dr; ++r) {
      blocks[static_cast<std::size_t>(a)].col(r) =
          unitary.col(static_cast<Eigen::Index>(toff[static_cast<std::size_t>(a)] +
                                                roff[static_cast<std::size_t>(r)]));
    }
  }
  // sum_ab op_ab U_a U_b^dag = sum_a U_a (sum_b conj(op_ab) U_b)^dag
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  ComplexMatrix w(d, dr);
  for (Eigen::Index a = 0; a < dt; ++a) {
    w.setZero();
    for (Eigen::Index b = 0; b < dt; ++b) {
      const Complex c = std::conj(op(a, b));
      if (c != Complex(0.0, 0.0)) w += c * blocks[static_cast<std::size_t>(b)];
    }
    out.noalias() += blocks[static_cast<std::size_t>(a)] * w.adjoint();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Entropies

double entropy_of_spectrum(const RealVector& eigenvalues, EntropyUnit unit) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double p = eigenvalues[i];
    if (p > kEntropyCutoff) s -= p * std::log(p);
  }
  return unit == EntropyUnit::Bits ? s / std::log(2.0) : s;
}

double von_neumann_entropy(const DensityMatrix& rho, EntropyUnit unit) {
  return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()), unit);
}

double mutual_information(const DensityMatrix& rho, const QubitRegister& region_a,
                          const QubitRegister& region_b, EntropyUnit unit) {
  if (!region_a.disjoint(region_b)) {
    throw std::invalid_argument("mutual_information: regions overlap");
  }
  if (!rho.qubits().contains_all(region_a) || !rho.qubits().contains_all(region_b)) {
    throw std::invalid_argument("mutual_information: region not in register");
  }
  const DensityMatrix ab = partial_trace(rho, region_a.concat(region_b));
  const double s_a = von_neumann_entropy(partial_trace(ab, region_a), unit);
  const double s_b = von_neumann_entropy(partial_trace(ab, region_b), unit);
  const double s_ab = von_neumann_entropy(ab, unit);
  return s_a + s_b - s_ab;
}

}  // namespace tscramble
