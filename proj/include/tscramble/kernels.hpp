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

// Data-parallel kernels. Every OpenMP kernel has a serial twin with the same
// signature; the serial versions are the reference the tests compare against
// and the benchmark target times both.

#include "tscramble/qla.hpp"

#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <vector>

namespace tscramble::kernels {

enum class Execution { Serial, Parallel };

/// Basis-index offsets of the subsystem sitting at `positions` inside an
/// n-qubit register (position 0 = most significant bit). Entry k is the
/// full-register index whose subsystem bits spell k and whose other bits are 0.
std::vector<std::size_t> subsystem_offsets(std::span<const std::size_t> positions,
                                           std::size_t n_qubits);

/// out(i, j) = sum_t in(keep[i] + trace[t], keep[j] + trace[t]).
void partial_trace_serial(const ComplexMatrix& in,
                          std::span<const std::size_t> keep_offsets,
                          std::span<const std::size_t> trace_offsets,
                          ComplexMatrix& out);
void partial_trace_parallel(const ComplexMatrix& in,
                            std::span<const std::size_t> keep_offsets,
                            std::span<const std::size_t> trace_offsets,
                            ComplexMatrix& out);

/// Dispatches on `exec`. Small inputs always take the serial path.
void partial_trace(const ComplexMatrix& in,
                   std::span<const std::size_t> keep_offsets,
                   std::span<const std::size_t> trace_offsets, ComplexMatrix& out,
                   Execution exec = Execution::Parallel);

/// Calls fn(i) for i in [0, count). In parallel mode iterations are spread
/// over OpenMP threads; the first exception thrown by any iteration is
/// rethrown after the loop. fn must only write to storage owned by index i.
template <class Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
  if (exec == Execution::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

int max_threads();

}  // namespace tscramble::kernels
