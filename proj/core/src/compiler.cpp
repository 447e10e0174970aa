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

#include "endos/compiler.hpp"

#include <numbers>
#include <stdexcept>

#include "endos/errors.hpp"
#include "endos/spin_physics.hpp"

namespace endos {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPi = std::numbers::pi;

// Line of `site` with the tip at `tip` and the listed (site, bit) spectators
// set; every other spin in |0>.
double engine_line(const RegisterLayout &layout, TipPosition tip, std::size_t site,
                   std::initializer_list<std::pair<std::size_t, bool>> spectators, const MachineConfig &cfg) {
    const RegisterLayout at = layout.with_tip(tip);
    BasisConfiguration config = BasisConfiguration::ground(at.size());
    for (auto [s, b] : spectators) config = config.with_bit(s, b);
    return transition_frequency(config, site, at, cfg);
}

Pulse electron_pi(double frequency, const MachineConfig &cfg) {
    return Pulse{Channel::ElectronRF, frequency, kPi, 0, cfg.electron_pi_duration, PulseMode::LogicalX};
}

Pulse nuclear_pi(Channel channel, double frequency, const MachineConfig &cfg) {
    return Pulse{channel, frequency, kPi, 0, cfg.nuclear_pi_duration, PulseMode::LogicalX};
}

void require_qubit(const RegisterLayout &layout, std::size_t q) {
    if (!layout.valid_qubit(q)) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside a " + std::to_string(layout.num_qubits()) +
                                "-qubit register");
    }
}

void close_span(PulseProgram &program, GateKind kind, std::size_t first) {
    program.spans.push_back(GateSpan{kind, 0, first, program.instructions.size()});
}

// Frequencies for a specific control/target pair on the given register.
CnotFrequencies cnot_lines(std::size_t control, std::size_t target, const RegisterLayout &layout,
                           const MachineConfig &cfg) {
    const TipPosition at_c = TipPosition::at(control);
    const TipPosition at_t = TipPosition::at(target);
    const std::size_t pc = layout.nucleus_site(control);
    const std::size_t ec = layout.electron_site(control);
    const std::size_t pt = layout.nucleus_site(target);
    const std::size_t et = layout.electron_site(target);
    const std::size_t a = layout.tip_site();
    CnotFrequencies f{};
    f.f_ec = engine_line(layout, at_c, ec, {{pc, true}, {a, false}}, cfg);
    f.f_a = engine_line(layout, at_c, a, {{ec, true}}, cfg);
    f.f_et1 = engine_line(layout, at_t, et, {{a, true}, {pt, true}}, cfg);
    f.f_et0 = engine_line(layout, at_t, et, {{a, true}, {pt, false}}, cfg);
    f.f_p = engine_line(layout, at_t, pt, {{et, true}}, cfg);
    return f;
}

}  // namespace

CnotFrequencies cnot_frequencies(const MachineConfig &cfg) { return cnot_lines(0, 1, RegisterLayout(2), cfg); }

double addressed_nuclear_frequency(const MachineConfig &cfg) {
    const RegisterLayout layout(1);
    return engine_line(layout, TipPosition::at(0), layout.nucleus_site(0), {}, cfg);
}

PulseProgram compile_rotation(std::size_t qubit, double angle, double phase, const RegisterLayout &layout,
                              const MachineConfig &cfg) {
    require_qubit(layout, qubit);
    const double f = engine_line(layout, TipPosition::at(qubit), layout.nucleus_site(qubit), {}, cfg);
    Pulse pulse{Channel::PhosphorusNuclearRF, f, angle, phase, cfg.nuclear_pi_duration * angle / kPi,
                PulseMode::LogicalX};
    check_pulse(pulse);
    PulseProgram program;
    program.instructions.emplace_back(instr::MoveTip{TipPosition::at(qubit)});
    program.instructions.emplace_back(instr::ApplyPulse{pulse, qubit});
    close_span(program, GateKind::Rotation, 0);
    return program;
}

PulseProgram compile_cnot(std::size_t control, std::size_t target, const RegisterLayout &layout,
                          const MachineConfig &cfg) {
    require_qubit(layout, control);
    require_qubit(layout, target);
    if (control == target) throw SameQubit("CNOT control and target are both qubit " + std::to_string(control));

    const CnotFrequencies f = cnot_lines(control, target, layout, cfg);
    const Pulse ec = electron_pi(f.f_ec, cfg);
    const Pulse a = nuclear_pi(Channel::TipCarbonNuclearRF, f.f_a, cfg);
    const Pulse et1 = electron_pi(f.f_et1, cfg);
    const Pulse et0 = electron_pi(f.f_et0, cfg);
    const Pulse p = nuclear_pi(Channel::PhosphorusNuclearRF, f.f_p, cfg);

    PulseProgram program;
    auto &ins = program.instructions;
    // Entangle: control -> its electron -> tip 13C -> target electron -> target nucleus.
    ins.emplace_back(instr::MoveTip{TipPosition::at(control)});
    ins.emplace_back(instr::ApplyPulse{ec, control});
    ins.emplace_back(instr::ApplyPulse{a, std::nullopt});
    ins.emplace_back(instr::MoveTip{TipPosition::at(target)});
    ins.emplace_back(instr::ApplyPulse{et1, target});
    ins.emplace_back(instr::ApplyPulse{et0, target});
    ins.emplace_back(instr::ApplyPulse{p, target});
    // Disentangle the ancillas in reverse.
    ins.emplace_back(instr::ApplyPulse{et1, target});
    ins.emplace_back(instr::ApplyPulse{et0, target});
    ins.emplace_back(instr::MoveTip{TipPosition::at(control)});
    ins.emplace_back(instr::ApplyPulse{a, std::nullopt});
    ins.emplace_back(instr::ApplyPulse{ec, control});
    close_span(program, GateKind::Cnot, 0);
    return program;
}

PulseProgram compile_init(const RegisterLayout &layout, const MachineConfig &cfg) {
    PulseProgram program;
    for (std::size_t q = 0; q < layout.num_qubits(); ++q) {
        const double f = engine_line(layout, TipPosition::at(q), layout.nucleus_site(q), {}, cfg);
        program.instructions.emplace_back(instr::MoveTip{TipPosition::at(q)});
        program.instructions.emplace_back(instr::MeasureViaCurrent{q});
        program.instructions.emplace_back(
            instr::ConditionalPulse{nuclear_pi(Channel::PhosphorusNuclearRF, f, cfg), q});
    }
    close_span(program, GateKind::Init, 0);
    return program;
}

PulseProgram compile_measure(std::size_t qubit, const RegisterLayout &layout, const MachineConfig &) {
    require_qubit(layout, qubit);
    PulseProgram program;
    program.instructions.emplace_back(instr::MoveTip{TipPosition::at(qubit)});
    program.instructions.emplace_back(instr::MeasureViaCurrent{qubit});
    close_span(program, GateKind::Measure, 0);
    return program;
}

PulseProgram compile_gate(const Gate &g, const RegisterLayout &layout, const MachineConfig &cfg) {
    return std::visit(overloaded{
                          [&](const gate::Init &) { return compile_init(layout, cfg); },
                          [&](const gate::Rot &r) { return compile_rotation(r.qubit, r.angle, r.phase, layout, cfg); },
                          [&](const gate::Cnot &c) { return compile_cnot(c.control, c.target, layout, cfg); },
                          [&](const gate::Measure &m) { return compile_measure(m.qubit, layout, cfg); },
                      },
                      g);
}

PulseProgram compile_circuit(const Circuit &circuit, const RegisterLayout &layout, const MachineConfig &cfg) {
    check_circuit(circuit, layout.num_qubits());
    PulseProgram program;
    TipPosition tip = layout.tip();
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        PulseProgram block = compile_gate(circuit.gates[i], layout, cfg);
        for (const auto &ins : block.instructions) {
            if (const auto *m = std::get_if<instr::MoveTip>(&ins)) tip = m->to;
        }
        program.append(block, i);
    }
    if (!tip.is_parked()) program.instructions.emplace_back(instr::MoveTip{TipPosition::parked()});
    return program;
}

std::vector<std::size_t> ExecutionResult::off_resonant_instructions() const {
    std::vector<std::size_t> out;
    for (const auto &p : pulses) {
        if (p.fired && p.outcome.no_resonant_transition()) out.push_back(p.instruction);
    }
    return out;
}

ExecutionResult execute(const PulseProgram &program, PureState initial, const RegisterLayout &layout,
                        const MachineConfig &cfg, Rng &rng) {
    if (initial.num_sites() != layout.size()) {
        throw MismatchedRegister("initial state has " + std::to_string(initial.num_sites()) +
                                 " sites, register has " + std::to_string(layout.size()));
    }
    validate_program(program, layout);

    ExecutionResult result{std::move(initial), layout, {}, {}, timing_report(program, layout, cfg), 0};
    std::optional<bool> last_p_bit;
    for (std::size_t i = 0; i < program.instructions.size(); ++i) {
        std::visit(overloaded{
                       [&](const instr::MoveTip &m) { result.layout.move_tip(m.to); },
                       [&](const instr::ApplyPulse &p) {
                           PulseOutcome o = apply_selective_pulse(result.state, p.pulse, result.layout, cfg);
                           result.pulses.push_back({i, o, false, true});
                       },
                       [&](const instr::ConditionalPulse &p) {
                           PulseEvent event{i, {}, true, *last_p_bit};
                           if (event.fired) {
                               event.outcome = apply_selective_pulse(result.state, p.pulse, result.layout, cfg);
                               ++result.conditional_fired;
                           }
                           result.pulses.push_back(event);
                       },
                       [&](const instr::MeasureViaCurrent &m) {
                           MeasurementRecord r = measure_via_current(result.state, m.qubit, result.layout, cfg, rng);
                           last_p_bit = r.inferred_p_bit;
                           result.measurements.push_back(r);
                       },
                       [](const instr::Barrier &) {},
                   },
                   program.instructions[i]);
    }
    return result;
}

ExecutionResult execute(const PulseProgram &program, PureState initial, const RegisterLayout &layout,
                        const MachineConfig &cfg, std::uint64_t seed) {
    Rng rng(seed);
    return execute(program, std::move(initial), layout, cfg, rng);
}

}  // namespace endos
