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

#include "tscramble/kernels.hpp"

#include <omp.h>

namespace tscramble::kernels {

std::vector<std::size_t> subsystem_offsets(std::span<const std::size_t> positions,
                                           std::size_t n_qubits) {
  const std::size_t k = positions.size();
  std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
  for (std::size_t idx = 0; idx < offsets.size(); ++idx) {
    std::size_t full = 0;
    for (std::size_t b = 0; b < k; ++b) {
      // bit b of idx counted from the most significant end of the subsystem
      const std::size_t bit = (idx >> (k - 1 - b)) & 1U;
      full |= bit << (n_qubits - 1 - positions[b]);
    }
    offsets[idx] = full;
  }
  return offsets;
}

void partial_trace_serial(const ComplexMatrix& in,
                          std::span<const std::size_t> keep_offsets,
                          std::span<const std::size_t> trace_offsets,
                          ComplexMatrix& out) {
  const auto dk = static_cast<Eigen::Index>(keep_offsets.size());
  out.setZero(dk, dk);
  for (Eigen::Index j = 0; j < dk; ++j) {
    for (Eigen::Index i = 0; i < dk; ++i) {
      Complex acc{0.0, 0.0};
      for (const std::size_t t : trace_offsets) {
        acc += in(static_cast<Eigen::Index>(keep_offsets[i] + t),
                  static_cast<Eigen::Index>(keep_offsets[j] + t));
      }
      out(i, j) = acc;
    }
  }
}

void partial_trace_parallel(const ComplexMatrix& in,
                            std::span<const std::size_t> keep_offsets,
                            std::span<const std::size_t> trace_offsets,
                            ComplexMatrix& out) {
  const auto dk = static_cast<Eigen::Index>(keep_offsets.size());
  out.setZero(dk, dk);
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < dk; ++j) {
    for (Eigen::Index i = 0; i < dk; ++i) {
      Complex acc{0.0, 0.0};
      for (const std::size_t t : trace_offsets) {
        acc += in(static_cast<Eigen::Index>(keep_offsets[i] + t),
                  static_cast<Eigen::Index>(keep_offsets[j] + t));
      }
      out(i, j) = acc;
    }
  }
}

void partial_trace(const ComplexMatrix& in,
                   std::span<const std::size_t> keep_offsets,
                   std::span<const std::size_t> trace_offsets, ComplexMatrix& out,
                   Execution exec) {
  constexpr std::size_t kParallelThreshold = 1U << 14;
  const std::size_t work =
      keep_offsets.size() * keep_offsets.size() * trace_offsets.size();
  if (exec == Execution::Parallel && work >= kParallelThreshold &&
      !omp_in_parallel()) {
    partial_trace_parallel(in, keep_offsets, trace_offsets, out);
  } else {
    partial_trace_serial(in, keep_offsets, trace_offsets, out);
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace tscramble::kernels
