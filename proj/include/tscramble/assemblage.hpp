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

#include "tscramble/qla.hpp"

#include <string>
#include <vector>

namespace tscramble {

/// Projective measurements on the encoded qubit. projectors[x][a] = E_{a|x}.
/// Every setting has the same number of outcomes.
class MeasurementSet {
 public:
  MeasurementSet(std::vector<std::string> names, std::vector<std::vector<ComplexMatrix>> projectors);

  /// One setting per letter of `axes` (any of x, y, z); outcome 0 is the +1
  /// eigenspace, outcome 1 the -1 eigenspace.
  static MeasurementSet pauli(const std::string& axes = "xyz");

  std::size_t n_settings() const { return projectors_.size(); }
  std::size_t n_outcomes() const { return projectors_.front().size(); }
  std::size_t dim() const { return static_cast<std::size_t>(projectors_.front().front().rows()); }
  const std::string& name(std::size_t x) const { return names_[x]; }
  const ComplexMatrix& projector(std::size_t x, std::size_t a) const { return projectors_[x][a]; }

  /// Throws std::invalid_argument unless every E is a Hermitian projector
  /// and each setting resolves the identity.
  void validate(double tol = 1e-10) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<ComplexMatrix>> projectors_;
};

/// Unnormalized conditional states sigma_{a|x} over a common register.
class Assemblage {
 public:
  Assemblage(std::vector<std::vector<ComplexMatrix>> members, QubitRegister qubits);

  std::size_t n_settings() const { return members_.size(); }
  std::size_t n_outcomes() const { return members_.front().size(); }
  std::size_t dim() const { return static_cast<std::size_t>(members_.front().front().rows()); }
  const QubitRegister& qubits() const { return qubits_; }

  const ComplexMatrix& member(std::size_t x, std::size_t a) const { return members_[x][a]; }
  DensityMatrix member_state(std::size_t x, std::size_t a) const;
  double probability(std::size_t x, std::size_t a) const { return members_[x][a].trace().real(); }
  /// sum_a sigma_{a|x}
  ComplexMatrix marginal(std::size_t x) const;

  /// Normalization per setting, no-signaling across settings and member
  /// positivity, all at `tol`. Throws std::domain_error naming the failure.
  void validate(double tol = 1e-9) const;

  /// Apply f to every member; the register is kept.
  template <class F>
  Assemblage transformed(F&& f) const {
    std::vector<std::vector<ComplexMatrix>> out(members_.size());
    for (std::size_t x = 0; x < members_.size(); ++x)
      for (const auto& m : members_[x]) out[x].push_back(f(m));
    return Assemblage(std::move(out), qubits_);
  }

 private:
  std::vector<std::vector<ComplexMatrix>> members_;
  QubitRegister qubits_;
};

}  // namespace tscramble
