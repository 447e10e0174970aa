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

#include "endos/timing.hpp"

#include <cmath>
#include <stdexcept>

namespace endos {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double instruction_duration(const Instruction &instruction, const RegisterLayout &layout, const MachineConfig &cfg) {
    return std::visit(overloaded{
                          [&](const instr::MoveTip &m) {
                              return double(layout.hop_distance(layout.tip(), m.to)) * cfg.tip_move_time;
                          },
                          [](const instr::ApplyPulse &p) { return p.pulse.duration; },
                          [](const instr::ConditionalPulse &p) { return p.pulse.duration; },
                          [&](const instr::MeasureViaCurrent &) { return cfg.measurement_dwell; },
                          [](const instr::Barrier &) { return 0.0; },
                      },
                      instruction);
}

TimingReport timing_report(const PulseProgram &program, const RegisterLayout &layout, const MachineConfig &cfg) {
    TimingReport report;
    RegisterLayout current = layout;
    report.per_instruction.reserve(program.size());
    for (const auto &ins : program.instructions) {
        const double d = instruction_duration(ins, current, cfg);
        report.per_instruction.push_back(d);
        report.total_wall_time += d;
        std::visit(overloaded{
                       [&](const instr::MoveTip &m) {
                           report.moves += d;
                           current.move_tip(m.to);
                       },
                       [&](const instr::ApplyPulse &p) {
                           (p.pulse.channel == Channel::ElectronRF ? report.electron_pulses : report.nuclear_pulses) +=
                               d;
                       },
                       [&](const instr::ConditionalPulse &p) {
                           (p.pulse.channel == Channel::ElectronRF ? report.electron_pulses : report.nuclear_pulses) +=
                               d;
                       },
                       [&](const instr::MeasureViaCurrent &) { report.measurements += d; },
                       [](const instr::Barrier &) {},
                   },
                   ins);
    }

    double cnot_time = 0;
    std::size_t cnots = 0;
    for (const auto &span : program.spans) {
        if (span.kind != GateKind::Cnot) continue;
        for (std::size_t i = span.first; i < span.last; ++i) cnot_time += report.per_instruction[i];
        ++cnots;
    }
    if (cnots > 0) {
        report.mean_cnot_time = cnot_time / double(cnots);
        report.gate_capacity = decoherence_budget(cfg, *report.mean_cnot_time);
    }
    report.feasible = report.total_wall_time <= cfg.T2;
    return report;
}

std::uint64_t decoherence_budget(const MachineConfig &cfg, double mean_gate_time) {
    if (!(mean_gate_time > 0)) throw std::invalid_argument("mean gate time must be positive");
    const double ratio = cfg.T2 / mean_gate_time;
    // Ratios such as 10 s / 100 us land a rounding error away from an integer.
    const double nearest = std::nearbyint(ratio);
    if (std::fabs(ratio - nearest) <= 1e-9 * ratio) return static_cast<std::uint64_t>(nearest);
    return static_cast<std::uint64_t>(std::floor(ratio));
}

}  // namespace endos
