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


#include "tscramble/assemblage.hpp"

#include <stdexcept>
#include <string>

namespace tscramble {

MeasurementSet::MeasurementSet(std::vector<std::string> names,
                               std::vector<std::vector<ComplexMatrix>> projectors)
    : names_(std::move(names)), projectors_(std::move(projectors)) {
  if (projectors_.empty() || projectors_.front().empty()) {
    throw std::invalid_argument("MeasurementSet: no settings or outcomes");
  }
  if (names_.size() != projectors_.size()) {
    throw std::invalid_argument("MeasurementSet: one name per setting required");
  }
  const std::size_t o = projectors_.front().size();
  const Eigen::Index d = projectors_.front().front().rows();
  for (const auto& setting : projectors_) {
    if (setting.size() != o) {
      throw std::invalid_argument("MeasurementSet: settings differ in outcome count");
    }
    for (const auto& e : setting) {
      if (e.rows() != d || e.cols() != d) {
        throw std::invalid_argument("MeasurementSet: projector dimensions differ");
      }
    }
  }
}

MeasurementSet MeasurementSet::pauli(const std::string& axes) {
  std::vector<std::string> names;
  std::vector<std::vector<ComplexMatrix>> proj;
  const Complex i(0.0, 1.0);
  for (char c : axes) {
    ComplexMatrix s(2, 2);
    switch (c) {
      case 'x': s << 0, 1, 1, 0; break;
      case 'y': s << 0, -i, i, 0; break;
      case 'z': s << 1, 0, 0, -1; break;
      default: throw std::invalid_argument(std::string("MeasurementSet::pauli: unknown axis '") + c + "'");
    }
    names.emplace_back(1, c);
    proj.push_back({0.5 * (identity(2) + s), 0.5 * (identity(2) - s)});
  }
  MeasurementSet out(std::move(names), std::move(proj));
  out.validate();
  return out;
}

void MeasurementSet::validate(double tol) const {
  for (std::size_t x = 0; x < projectors_.size(); ++x) {
    ComplexMatrix sum = ComplexMatrix::Zero(projectors_[x].front().rows(), projectors_[x].front().cols());
    for (const auto& e : projectors_[x]) {
      if (!is_hermitian(e, tol)) {
        throw std::invalid_argument("MeasurementSet: non-Hermitian element in setting " + names_[x]);
      }
      if (max_abs(e * e - e) > tol) {
        throw std::invalid_argument("MeasurementSet: non-projective element in setting " + names_[x]);
      }
      sum += e;
    }
    if (max_abs(sum - identity(static_cast<std::size_t>(sum.rows()))) > tol) {
      throw std::invalid_argument("MeasurementSet: setting " + names_[x] + " does not sum to identity");
    }
  }
}

Assemblage::Assemblage(std::vector<std::vector<ComplexMatrix>> members, QubitRegister qubits)
    : members_(std::move(members)), qubits_(std::move(qubits)) {
  if (members_.empty() || members_.front().empty()) {
    throw std::invalid_argument("Assemblage: empty");
  }
  const std::size_t o = members_.front().size();
  const auto d = static_cast<Eigen::Index>(qubits_.dim());
  for (const auto& setting : members_) {
    if (setting.size() != o) throw std::invalid_argument("Assemblage: ragged outcome lists");
    for (const auto& m : setting) {
      if (m.rows() != d || m.cols() != d) {
        throw std::invalid_argument("Assemblage: member dimension does not match register");
      }
    }
  }
}

DensityMatrix Assemblage::member_state(std::size_t x, std::size_t a) const {
  return DensityMatrix(members_[x][a], qubits_, Normalization::Unnormalized);
}

ComplexMatrix Assemblage::marginal(std::size_t x) const {
  ComplexMatrix sum = ComplexMatrix::Zero(members_[x].front().rows(), members_[x].front().cols());
  for (const auto& m : members_[x]) sum += m;
  return sum;
}

void Assemblage::validate(double tol) const {
  const ComplexMatrix ref = marginal(0);
  for (std::size_t x = 0; x < members_.size(); ++x) {
    const ComplexMatrix mx = marginal(x);
    if (std::abs(mx.trace().real() - 1.0) > tol) {
      throw std::domain_error("Assemblage: setting " + std::to_string(x) + " is not normalized");
    }
    if (max_abs(mx - ref) > tol) {
      throw std::domain_error("Assemblage: marginal of setting " + std::to_string(x) +
                              " differs from setting 0");
    }
    for (std::size_t a = 0; a < members_[x].size(); ++a) {
      const ComplexMatrix& m = members_[x][a];
      if (!is_hermitian(m, tol)) {
        throw std::domain_error("Assemblage: member (" + std::to_string(x) + "," +
                                std::to_string(a) + ") is not Hermitian");
      }
      const RealVector ev = hermitian_eigenvalues(0.5 * (m + m.adjoint()));
      if (ev.minCoeff() < -tol) {
        throw std::domain_error("Assemblage: member (" + std::to_string(x) + "," +
                                std::to_string(a) + ") is not PSD");
      }
    }
  }
}

}  // namespace tscramble
