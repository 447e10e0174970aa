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

#include "endos/scheduler.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "endos/compiler.hpp"
#include "endos/timing.hpp"

namespace endos {

namespace {

struct Task {
    std::size_t gate_index;
    std::string label;
    std::vector<std::size_t> qubits;
    std::vector<Instruction> instructions;  // starts with the MoveTip onto the first qubit
};

std::vector<Task> expand_tasks(const Circuit &circuit, const RegisterLayout &layout, const MachineConfig &cfg) {
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate &g = circuit.gates[i];
        PulseProgram block = compile_gate(g, layout, cfg);
        if (std::holds_alternative<gate::Init>(g)) {
            // Three instructions per qubit: move, measure, conditional flip.
            for (std::size_t q = 0; q < layout.num_qubits(); ++q) {
                auto first = block.instructions.begin() + std::ptrdiff_t(3 * q);
                tasks.push_back({i, "INIT " + std::to_string(q), {q}, {first, first + 3}});
            }
        } else {
            tasks.push_back({i, gate_to_string(g), gate_qubits(g, layout.num_qubits()), block.instructions});
        }
    }
    return tasks;
}

struct Played {
    double end;
    TipPosition final_tip;
};

// Runs the task's instructions from `start` with the tip at `from`, adding
// durations one at a time in program order.
Played play(const Task &task, double start, TipPosition from, const RegisterLayout &layout,
            const MachineConfig &cfg) {
    RegisterLayout at = layout.with_tip(from);
    double t = start;
    for (const auto &ins : task.instructions) {
        t += instruction_duration(ins, at, cfg);
        if (const auto *m = std::get_if<instr::MoveTip>(&ins)) at.move_tip(m->to);
    }
    return {t, at.tip()};
}

}  // namespace

TipAssignment schedule_multi_tip(const Circuit &circuit, std::size_t tips, const RegisterLayout &layout,
                                 const MachineConfig &cfg) {
    if (tips == 0) throw std::invalid_argument("at least one tip is required");
    check_circuit(circuit, layout.num_qubits());
    const std::vector<Task> tasks = expand_tasks(circuit, layout, cfg);

    TipAssignment out;
    out.tips = tips;
    out.timeline.assign(tips, {});
    std::vector<double> tip_free(tips, 0.0);
    std::vector<TipPosition> tip_at(tips, TipPosition::parked());
    std::vector<double> qubit_ready(layout.num_qubits(), 0.0);

    for (const Task &task : tasks) {
        double ready = 0;
        for (std::size_t q : task.qubits) ready = std::max(ready, qubit_ready[q]);

        std::size_t best = 0;
        double best_arrival = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < tips; ++j) {
            const double start = std::max(tip_free[j], ready);
            const double arrival =
                start + instruction_duration(task.instructions.front(), layout.with_tip(tip_at[j]), cfg);
            if (arrival < best_arrival) {
                best_arrival = arrival;
                best = j;
            }
        }

        const double start = std::max(tip_free[best], ready);
        const Played played = play(task, start, tip_at[best], layout, cfg);
        tip_free[best] = played.end;
        tip_at[best] = played.final_tip;
        for (std::size_t q : task.qubits) qubit_ready[q] = played.end;

        out.timeline[best].push_back(out.tasks.size());
        out.tasks.push_back({task.gate_index, task.label, task.qubits, best, start, played.end});
    }

    out.tip_finish.assign(tips, 0.0);
    for (std::size_t j = 0; j < tips; ++j) {
        if (out.timeline[j].empty()) continue;
        const instr::MoveTip park{TipPosition::parked()};
        out.tip_finish[j] = tip_free[j] + instruction_duration(park, layout.with_tip(tip_at[j]), cfg);
        out.makespan = std::max(out.makespan, out.tip_finish[j]);
    }
    return out;
}

void write_timeline(std::ostream &out, const TipAssignment &assignment) {
    out << "tip start_s end_s gate\n";
    char buf[96];
    for (std::size_t j = 0; j < assignment.timeline.size(); ++j) {
        for (std::size_t idx : assignment.timeline[j]) {
            const ScheduledTask &t = assignment.tasks[idx];
            std::snprintf(buf, sizeof buf, "%zu %.9e %.9e ", j, t.start, t.end);
            out << buf << t.label << '\n';
        }
    }
}

}  // namespace endos
