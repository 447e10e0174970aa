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
#include <string>
#include <vector>

#include "endos/circuit.hpp"
#include "endos/machine_config.hpp"
#include "endos/register_layout.hpp"

namespace endos {

/// A schedulable unit. Circuit gates map one-to-one except Init, which
/// splits into one measure-and-flip task per qubit.
struct ScheduledTask {
    std::size_t gate_index = 0;
    std::string label;
    std::vector<std::size_t> qubits;
    std::size_t tip = 0;
    double start = 0;  // tip leaves its previous position
    double end = 0;    // last instruction of the task finishes
};

struct TipAssignment {
    std::size_t tips = 1;
    std::vector<ScheduledTask> tasks;          // in circuit order
    std::vector<std::vector<std::size_t>> timeline;  // task indices per tip, in time order
    std::vector<double> tip_finish;            // after the final return to park
    double makespan = 0;
};

/// Greedy list scheduling over the gate dependency order: each task, in
/// circuit order, goes to the tip that reaches its first qubit earliest
/// (ties to the lower tip id). Every tip starts and ends parked.
TipAssignment schedule_multi_tip(const Circuit &circuit, std::size_t tips, const RegisterLayout &layout,
                                 const MachineConfig &cfg);

/// Table with columns `tip start_s end_s gate`.
void write_timeline(std::ostream &out, const TipAssignment &assignment);

}  // namespace endos
