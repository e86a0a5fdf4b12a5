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

namespace tscramble {

/// Input region A (the reference copy of q1) and the output split into C and
/// D. System qubits are 1..n_qubits.
struct PartitionSpec {
  std::size_t n_qubits = 0;
  QubitRegister region_a;
  QubitRegister region_c;
  QubitRegister region_d;

  std::size_t n_c() const { return region_c.size(); }
  std::size_t n_d() const { return region_d.size(); }

  /// C = {1..n_c}, D = {n_c+1..n}, A = {reference of q1}.
  static PartitionSpec contiguous(std::size_t n_qubits, std::size_t n_c);

  /// Throws std::invalid_argument unless C and D are disjoint, cover 1..n
  /// and A is the reference of a system qubit.
  void validate() const;

  QubitRegister outputs() const { return QubitRegister::range(1, static_cast<int>(n_qubits)); }
  std::string describe() const;
};

}  // namespace tscramble
