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

// Dense complex linear algebra and quantum-state primitives.
//
// Tensor-factor convention used everywhere in the library: the first label of
// a QubitRegister is the leftmost Kronecker factor, i.e. the most significant
// bit of a basis-state index.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tscramble {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Ordered list of distinct qubit labels. System qubits are labeled 1..N;
/// the reference (purifying) partner of system qubit k is labeled -k.
class QubitRegister {
 public:
  QubitRegister() = default;
  explicit QubitRegister(std::vector<int> labels);
  QubitRegister(std::initializer_list<int> labels);

  /// Labels first, first+1, ..., first+count-1.
  static QubitRegister range(int first, int count);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::size_t dim() const { return std::size_t{1} << labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int operator[](std::size_t i) const { return labels_[i]; }

  bool contains(int label) const;
  bool contains_all(const QubitRegister& other) const;
  bool disjoint(const QubitRegister& other) const;
  /// Position of `label`; throws std::invalid_argument if absent.
  std::size_t position(int label) const;

  QubitRegister concat(const QubitRegister& other) const;
  /// Labels of *this that are also in `subset`, in the order of *this.
  QubitRegister restrict_to(const QubitRegister& subset) const;
  /// Labels of *this that are not in `other`, in the order of *this.
  QubitRegister without(const QubitRegister& other) const;

  bool operator==(const QubitRegister&) const = default;

 private:
  std::vector<int> labels_;
};

inline int reference_label(int system_label) { return -system_label; }

enum class Normalization { Unit, Unnormalized };

/// Hermitian, PSD matrix over a labeled register. Unit-normalized states
/// have trace 1; unnormalized members (assemblage entries) have trace in
/// [0, 1]. The constructor checks dimension, Hermiticity and trace; the
/// spectrum check is separate because it costs a diagonalization.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, QubitRegister qubits,
                Normalization normalization = Normalization::Unit);

  const ComplexMatrix& matrix() const { return matrix_; }
  const QubitRegister& qubits() const { return qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  double trace() const { return matrix_.trace().real(); }
  bool normalized() const { return normalization_ == Normalization::Unit; }
  Normalization normalization() const { return normalization_; }

  /// Throws std::domain_error if an eigenvalue is below -tol.
  void validate_spectrum(double tol = 1e-10) const;

 private:
  ComplexMatrix matrix_;
  QubitRegister qubits_;
  Normalization normalization_;
};

double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& u, double tol);
ComplexMatrix identity(std::size_t dim);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

/// Lifts `op`, acting on `targets` (in the given order), to the full
/// register `full`; identity on every other qubit.
ComplexMatrix embed(const ComplexMatrix& op, const QubitRegister& targets,
                    const QubitRegister& full);

/// Reduced operator on `keep` (factor order of `full` restricted to `keep`).
ComplexMatrix partial_trace(const ComplexMatrix& m, const QubitRegister& full,
                            const QubitRegister& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitRegister& keep);

/// Transpose of the tensor factors in `subsystem` only.
ComplexMatrix partial_transpose(const ComplexMatrix& rho,
                                const QubitRegister& subsystem,
                                const QubitRegister& full);

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

EigenDecomposition hermitian_eig(const ComplexMatrix& m);
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// exp(-iHt) from one cached eigendecomposition of H.
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix& hamiltonian);

  ComplexMatrix unitary(double t) const;
  std::size_t dim() const { return static_cast<std::size_t>(eig_.vectors.rows()); }
  const EigenDecomposition& spectrum() const { return eig_; }

 private:
  EigenDecomposition eig_;
};

DensityMatrix evolve(const DensityMatrix& rho, const Propagator& propagator,
                     double t);
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& hamiltonian,
                     double t);
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& unitary);

/// U (op_targets ⊗ 1) U† without forming the lifted operator: only the
/// column blocks of U selected by the target bits are multiplied.
ComplexMatrix conjugate_local(const ComplexMatrix& unitary,
                              const ComplexMatrix& op,
                              const QubitRegister& targets,
                              const QubitRegister& full);

enum class EntropyUnit { Bits, Nats };

inline constexpr double kEntropyCutoff = 1e-12;

double entropy_of_spectrum(const RealVector& eigenvalues,
                           EntropyUnit unit = EntropyUnit::Bits);
double von_neumann_entropy(const DensityMatrix& rho,
                           EntropyUnit unit = EntropyUnit::Bits);
/// S(A) + S(B) - S(AB). Throws std::invalid_argument on overlapping regions.
double mutual_information(const DensityMatrix& rho, const QubitRegister& region_a,
                          const QubitRegister& region_b,
                          EntropyUnit unit = EntropyUnit::Bits);

}  // namespace tscramble
