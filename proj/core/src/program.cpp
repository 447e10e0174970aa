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

#include "endos/program.hpp"

#include <cstdio>
#include <ostream>

#include "endos/errors.hpp"

namespace endos {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string pulse_fields(const Pulse &p) {
    char buf[160];
    std::snprintf(buf, sizeof buf, " %.17g %.17g %.17g", p.frequency, p.angle, p.phase);
    return std::string(channel_name(p.channel)) + buf;
}

bool tip_addressed(Channel c) { return c != Channel::TipCarbonNuclearRF; }

}  // namespace

std::size_t PulseProgram::pulse_count() const {
    std::size_t n = 0;
    for (const auto &i : instructions) {
        if (std::holds_alternative<instr::ApplyPulse>(i) || std::holds_alternative<instr::ConditionalPulse>(i)) ++n;
    }
    return n;
}

std::size_t PulseProgram::move_count() const {
    std::size_t n = 0;
    for (const auto &i : instructions) n += std::holds_alternative<instr::MoveTip>(i);
    return n;
}

void PulseProgram::append(const PulseProgram &other, std::optional<std::size_t> gate_index) {
    const std::size_t offset = instructions.size();
    instructions.insert(instructions.end(), other.instructions.begin(), other.instructions.end());
    for (GateSpan span : other.spans) {
        span.first += offset;
        span.last += offset;
        if (gate_index) span.gate_index = *gate_index;
        spans.push_back(span);
    }
}

void validate_program(const PulseProgram &program, const RegisterLayout &layout) {
    TipPosition tip = layout.tip();
    bool measured = false;
    auto fail = [](std::size_t i, const std::string &what) {
        throw IllFormedProgram("instruction " + std::to_string(i) + ": " + what);
    };
    auto check_pulse_site = [&](std::size_t i, const Pulse &pulse, const std::optional<std::size_t> &target) {
        if (!tip_addressed(pulse.channel)) return;
        if (tip.is_parked()) fail(i, std::string(channel_name(pulse.channel)) + " pulse issued with the tip parked");
        if (target && !tip.is_at(*target)) {
            fail(i, "pulse meant for qubit " + std::to_string(*target) + " but the tip is over qubit " +
                        tip.to_string());
        }
    };
    for (std::size_t i = 0; i < program.instructions.size(); ++i) {
        std::visit(overloaded{
                       [&](const instr::MoveTip &m) {
                           if (!m.to.is_parked() && !layout.valid_qubit(m.to.qubit())) {
                               fail(i, "MoveTip to missing qubit " + m.to.to_string());
                           }
                           tip = m.to;
                       },
                       [&](const instr::ApplyPulse &p) { check_pulse_site(i, p.pulse, p.target); },
                       [&](const instr::ConditionalPulse &p) {
                           if (!measured) fail(i, "conditional pulse before any measurement");
                           check_pulse_site(i, p.pulse, p.target);
                       },
                       [&](const instr::MeasureViaCurrent &m) {
                           if (!layout.valid_qubit(m.qubit)) fail(i, "measurement of missing qubit");
                           if (!tip.is_at(m.qubit)) {
                               fail(i, "measurement of qubit " + std::to_string(m.qubit) + " with the tip at " +
                                           tip.to_string());
                           }
                           measured = true;
                       },
                       [](const instr::Barrier &) {},
                   },
                   program.instructions[i]);
    }
}

std::string instruction_to_string(const Instruction &instruction) {
    return std::visit(overloaded{
                          [](const instr::MoveTip &m) { return "MOVE " + m.to.to_string(); },
                          [](const instr::ApplyPulse &p) { return "PULSE " + pulse_fields(p.pulse); },
                          [](const instr::ConditionalPulse &p) { return "CONDPULSE " + pulse_fields(p.pulse); },
                          [](const instr::MeasureViaCurrent &m) { return "MEASURE " + std::to_string(m.qubit); },
                          [](const instr::Barrier &) { return std::string("BARRIER"); },
                      },
                      instruction);
}

std::vector<std::string> program_listing(const PulseProgram &program) {
    std::vector<std::string> out;
    out.reserve(program.size());
    for (const auto &i : program.instructions) out.push_back(instruction_to_string(i));
    return out;
}

void write_program(std::ostream &out, const PulseProgram &program) {
    for (const auto &line : program_listing(program)) out << line << '\n';
}

}  // namespace endos
