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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "endos/register_layout.hpp"
#include "endos/state.hpp"

namespace endos {

namespace instr {
struct MoveTip {
    TipPosition to;
    bool operator==(const MoveTip &) const = default;
};
struct ApplyPulse {
    Pulse pulse;
    /// Qubit the pulse is meant for; checked against the tip position.
    std::optional<std::size_t> target;
    bool operator==(const ApplyPulse &) const = default;
};
struct MeasureViaCurrent {
    std::size_t qubit = 0;
    bool operator==(const MeasureViaCurrent &) const = default;
};
/// Applied only if the most recent MeasureViaCurrent read the 31P bit as 1.
struct ConditionalPulse {
    Pulse pulse;
    std::optional<std::size_t> target;
    bool operator==(const ConditionalPulse &) const = default;
};
struct Barrier {
    bool operator==(const Barrier &) const = default;
};
}  // namespace instr

using Instruction =
    std::variant<instr::MoveTip, instr::ApplyPulse, instr::MeasureViaCurrent, instr::ConditionalPulse, instr::Barrier>;

enum class GateKind { Init, Rotation, Cnot, Measure };

/// Marks which instructions came from which source gate.
struct GateSpan {
    GateKind kind;
    std::size_t gate_index = 0;
    std::size_t first = 0;
    std::size_t last = 0;  // exclusive
    bool operator==(const GateSpan &) const = default;
};

struct PulseProgram {
    std::vector<Instruction> instructions;
    std::vector<GateSpan> spans;

    bool empty() const { return instructions.empty(); }
    std::size_t size() const { return instructions.size(); }
    std::size_t pulse_count() const;
    std::size_t move_count() const;

    /// Appends `other`, shifting its spans; `gate_index` overrides span indices when given.
    void append(const PulseProgram &other, std::optional<std::size_t> gate_index = std::nullopt);

    bool operator==(const PulseProgram &) const = default;
};

/// Throws IllFormedProgram if a tip-addressed pulse or a measurement is issued
/// with the tip parked or over a different qubit than intended, a MoveTip
/// targets a missing qubit, or a ConditionalPulse precedes every measurement.
void validate_program(const PulseProgram &program, const RegisterLayout &layout);

/// `MOVE q|PARK`, `PULSE <channel> <freq_hz> <angle_rad> <phase_rad>`,
/// `CONDPULSE ...`, `MEASURE q`, `BARRIER`, one instruction per line.
std::string instruction_to_string(const Instruction &instruction);
void write_program(std::ostream &out, const PulseProgram &program);
std::vector<std::string> program_listing(const PulseProgram &program);

}  // namespace endos
