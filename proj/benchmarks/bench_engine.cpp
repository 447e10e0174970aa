// Copyright 2026 The ENDOS Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>

#include "endos/compiler.hpp"
#include "endos/scheduler.hpp"

using namespace endos;

namespace {

void BM_SelectivePulse(benchmark::State &state) {
    MachineConfig cfg;
    const auto n = std::size_t(state.range(0));
    RegisterLayout layout(n, 0, TipPosition::at(0));
    PureState psi = PureState::ground(layout);
    const Pulse pulse{Channel::ElectronRF, cnot_frequencies(cfg).f_ec, std::numbers::pi, 0, 1e-7,
                      PulseMode::LogicalX};
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_selective_pulse(psi, pulse, layout, cfg));
    }
    state.SetComplexityN(std::int64_t(psi.dimension()));
}
BENCHMARK(BM_SelectivePulse)->DenseRange(2, 10, 2)->Complexity();

void BM_CnotExecution(benchmark::State &state) {
    MachineConfig cfg;
    const auto n = std::size_t(state.range(0));
    RegisterLayout layout(n);
    const PulseProgram program = compile_cnot(0, n - 1, layout, cfg);
    const PureState ground = PureState::ground(layout);
    for (auto _ : state) {
        benchmark::DoNotOptimize(execute(program, ground, layout, cfg, std::uint64_t{1}));
    }
}
BENCHMARK(BM_CnotExecution)->DenseRange(2, 8, 2);

void BM_Compile(benchmark::State &state) {
    MachineConfig cfg;
    RegisterLayout layout(16);
    Circuit c;
    for (std::size_t i = 0; i < 200; ++i) c.gates.push_back(gate::Cnot{i % 16, (i + 3) % 16});
    for (auto _ : state) benchmark::DoNotOptimize(compile_circuit(c, layout, cfg));
}
BENCHMARK(BM_Compile);

void BM_Schedule(benchmark::State &state) {
    MachineConfig cfg;
    RegisterLayout layout(16);
    Circuit c;
    for (std::size_t i = 0; i < 200; ++i) c.gates.push_back(gate::Cnot{i % 16, (i + 5) % 16});
    for (auto _ : state) benchmark::DoNotOptimize(schedule_multi_tip(c, std::size_t(state.range(0)), layout, cfg));
}
BENCHMARK(BM_Schedule)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
