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


// Serial kernels against their OpenMP twins, and interior-point cost of the
// steering-weight SDP as the steered dimension grows.

#include "tscramble/experiments.hpp"
#include "tscramble/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tscramble;

namespace {

void BM_PartialTrace(benchmark::State& state) {
  const auto exec = static_cast<kernels::Execution>(state.range(0));
  const std::size_t n = 10;
  std::mt19937_64 rng(1);
  const ComplexMatrix rho = haar_unitary(std::size_t{1} << n, rng);
  const std::vector<std::size_t> keep_pos = {0, 2, 4, 6, 8};
  const std::vector<std::size_t> trace_pos = {1, 3, 5, 7, 9};
  const auto keep = kernels::subsystem_offsets(keep_pos, n);
  const auto trace = kernels::subsystem_offsets(trace_pos, n);
  ComplexMatrix out;
  for (auto _ : state) {
    kernels::partial_trace(rho, keep, trace, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetLabel(exec == kernels::Execution::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_PartialTrace)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Scan(benchmark::State& state) {
  const auto exec = static_cast<kernels::Execution>(state.range(0));
  ExperimentConfig c;
  c.hamiltonian.n_qubits = 5;
  c.grid = {0.0, 20.0, 24};
  for (auto _ : state) benchmark::DoNotOptimize(run_scan(c, exec).rows.data());
  state.SetLabel(exec == kernels::Execution::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Region D = last k qubits of a (k+1)-qubit register after a Haar unitary.
Assemblage steered_region(std::size_t k) {
  std::mt19937_64 rng(7);
  const std::size_t n = k + 1;
  const Assemblage full = encode_and_evolve(MeasurementSet::pauli("xyz"), haar_unitary(std::size_t{1} << n, rng), n);
  return reduce_assemblage(full, QubitRegister::range(2, static_cast<int>(k)));
}

void BM_SteeringSdp(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Assemblage asmb = steered_region(k);
  TswOptions opt;
  opt.lhs_fast_path = false;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(temporal_steerable_weight_details(asmb, opt).value);
    } catch (const SolverError& e) {
      state.SkipWithError(e.what());
      break;
    }
  }
  state.counters["d"] = static_cast<double>(std::size_t{1} << k);
}
BENCHMARK(BM_SteeringSdp)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
// d = 32 takes tens of seconds; d = 64 is refused by the memory guard.
BENCHMARK(BM_SteeringSdp)->Arg(5)->Arg(6)->Iterations(1)->Unit(benchmark::kSecond);

// The late-time chaotic D region at n = 8, which the LHS path settles.
void BM_LhsFastPath64(benchmark::State& state) {
  ExperimentConfig c;
  c.hamiltonian.n_qubits = 8;
  const Assemblage full = encode_and_evolve(MeasurementSet::pauli("xyz"), Evolution(c).unitary(30.0), 8);
  const Assemblage d = reduce_assemblage(full, c.partition().region_d);
  for (auto _ : state) benchmark::DoNotOptimize(temporal_steerable_weight_details(d).value);
}
BENCHMARK(BM_LhsFastPath64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
