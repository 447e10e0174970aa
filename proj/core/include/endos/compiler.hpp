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
#include <vector>

#include "endos/circuit.hpp"
#include "endos/machine_config.hpp"
#include "endos/program.hpp"
#include "endos/readout.hpp"
#include "endos/register_layout.hpp"
#include "endos/rng.hpp"
#include "endos/state.hpp"
#include "endos/timing.hpp"

namespace endos {

/// The five distinct lines of the CNOT protocol, derived from the engine's
/// transition frequencies for the intended conditional flips.
struct CnotFrequencies {
    double f_ec;   // control electron flips iff control nucleus |1>, tip 13C |0>
    double f_a;    // tip 13C flips iff the electron under the tip is |1>
    double f_et1;  // target electron flips iff tip 13C |1>, target nucleus |1>
    double f_et0;  // target electron flips iff tip 13C |1>, target nucleus |0>
    double f_p;    // target nucleus flips iff target electron |1>
};

CnotFrequencies cnot_frequencies(const MachineConfig &cfg);

/// Nuclear line of a qubit under the tip with its electron and the tip in |0>.
double addressed_nuclear_frequency(const MachineConfig &cfg);

PulseProgram compile_rotation(std::size_t qubit, double angle, double phase, const RegisterLayout &layout,
                              const MachineConfig &cfg);
PulseProgram compile_cnot(std::size_t control, std::size_t target, const RegisterLayout &layout,
                          const MachineConfig &cfg);
PulseProgram compile_init(const RegisterLayout &layout, const MachineConfig &cfg);
PulseProgram compile_measure(std::size_t qubit, const RegisterLayout &layout, const MachineConfig &cfg);

/// One gate's instructions; Init expands to the whole-register sequence.
PulseProgram compile_gate(const Gate &g, const RegisterLayout &layout, const MachineConfig &cfg);

/// Every gate in order, followed by a final MoveTip(PARK) when the tip was used.
PulseProgram compile_circuit(const Circuit &circuit, const RegisterLayout &layout, const MachineConfig &cfg);

struct PulseEvent {
    std::size_t instruction = 0;
    PulseOutcome outcome;
    bool conditional = false;
    bool fired = true;
};

struct ExecutionResult {
    PureState state;
    RegisterLayout layout;  // tip position after the last instruction
    std::vector<MeasurementRecord> measurements;
    std::vector<PulseEvent> pulses;
    TimingReport timing;
    std::size_t conditional_fired = 0;

    /// Instruction indices of pulses whose frequency matched no transition.
    std::vector<std::size_t> off_resonant_instructions() const;
};

ExecutionResult execute(const PulseProgram &program, PureState initial, const RegisterLayout &layout,
                        const MachineConfig &cfg, Rng &rng);
ExecutionResult execute(const PulseProgram &program, PureState initial, const RegisterLayout &layout,
                        const MachineConfig &cfg, std::uint64_t seed);

}  // namespace endos
