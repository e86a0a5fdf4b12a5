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


#include "tscramble/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace tscramble {

PartitionSpec PartitionSpec::contiguous(std::size_t n_qubits, std::size_t n_c) {
  if (n_qubits < 1 || n_c > n_qubits) {
    throw std::invalid_argument("PartitionSpec: need 0 <= n_c <= n_qubits");
  }
  PartitionSpec p;
  p.n_qubits = n_qubits;
  p.region_a = QubitRegister{reference_label(1)};
  p.region_c = QubitRegister::range(1, static_cast<int>(n_c));
  p.region_d = QubitRegister::range(static_cast<int>(n_c) + 1, static_cast<int>(n_qubits - n_c));
  p.validate();
  return p;
}

void PartitionSpec::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("PartitionSpec: no system qubits");
  if (!region_c.disjoint(region_d)) {
    throw std::invalid_argument("PartitionSpec: regions C and D overlap");
  }
  if (region_c.size() + region_d.size() != n_qubits) {
    throw std::invalid_argument("PartitionSpec: C and D must cover every output qubit");
  }
  const QubitRegister out = outputs();
  if (!out.contains_all(region_c) || !out.contains_all(region_d)) {
    throw std::invalid_argument("PartitionSpec: region label outside 1..n");
  }
  if (region_a.empty()) throw std::invalid_argument("PartitionSpec: empty input region");
  for (int l : region_a.labels()) {
    if (l >= 0 || -l > static_cast<int>(n_qubits)) {
      throw std::invalid_argument("PartitionSpec: input region must hold reference labels");
    }
  }
}

std::string PartitionSpec::describe() const {
  std::ostringstream os;
  auto list = [&os](const QubitRegister& r) {
    os << '{';
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '}';
  };
  os << "A=";
  list(region_a);
  os << " C=";
  list(region_c);
  os << " D=";
  list(region_d);
  return os.str();
}

}  // namespace tscramble
