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
#include <cstdint>
#include <optional>
#include <vector>

#include "endos/machine_config.hpp"
#include "endos/program.hpp"
#include "endos/register_layout.hpp"

namespace endos {

struct TimingReport {
    std::vector<double> per_instruction;  // s
    double moves = 0;
    double nuclear_pulses = 0;
    double electron_pulses = 0;
    double measurements = 0;
    /// Sum of per_instruction, accumulated in instruction order.
    double total_wall_time = 0;
    std::optional<double> mean_cnot_time;
    /// floor(T2 / mean CNOT time), when the program contains a CNOT.
    std::optional<std::uint64_t> gate_capacity;
    /// total_wall_time <= T2.
    bool feasible = true;
};

/// Wall time of one instruction with the tip where `layout` says it is.
/// Conditional pulses are charged whether or not they fire.
double instruction_duration(const Instruction &instruction, const RegisterLayout &layout, const MachineConfig &cfg);

TimingReport timing_report(const PulseProgram &program, const RegisterLayout &layout, const MachineConfig &cfg);

/// floor(T2 / mean_gate_time). Throws std::invalid_argument if mean_gate_time <= 0.
std::uint64_t decoherence_budget(const MachineConfig &cfg, double mean_gate_time);

}  // namespace endos
