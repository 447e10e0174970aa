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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "endos/cli/run.hpp"
#include "endos/compiler.hpp"
#include "endos/errors.hpp"
#include "endos/readout.hpp"
#include "endos/scheduler.hpp"
#include "endos/spin_physics.hpp"
#include "oracles/schedule_oracle.hpp"
#include "oracles/spin_oracle.hpp"

using namespace endos;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::pair<Amplitude, Amplitude> random_qubit(std::mt19937_64 &gen) {
    std::normal_distribution<double> n;
    Amplitude a(n(gen), n(gen)), b(n(gen), n(gen));
    const double r = std::sqrt(std::norm(a) + std::norm(b));
    return {a / r, b / r};
}

std::vector<Amplitude> amplitudes(const PureState &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

PureState execute_plain(const PulseProgram &p, const PureState &in, const RegisterLayout &layout,
                        const MachineConfig &cfg) {
    return execute(p, in, layout, cfg, std::uint64_t{1}).state;
}

Verdict cnot_correctness() {
    const auto t0 = std::chrono::steady_clock::now();
    MachineConfig cfg;
    RegisterLayout layout(2);
    const PulseProgram program = compile_cnot(0, 1, layout, cfg);
    std::vector<std::vector<std::pair<Amplitude, Amplitude>>> inputs;
    for (int c = 0; c < 2; ++c) {
        for (int t = 0; t < 2; ++t) {
            inputs.push_back({{Amplitude(c == 0), Amplitude(c == 1)}, {Amplitude(t == 0), Amplitude(t == 1)}});
        }
    }
    std::mt19937_64 gen(20240601);
    for (int i = 0; i < 200; ++i) inputs.push_back({random_qubit(gen), random_qubit(gen)});

    double min_f = 1, min_pop = 1, min_purity = 1;
    for (const auto &q : inputs) {
        const PureState out = execute_plain(program, PureState::product(layout, q), layout, cfg);
        min_f = std::min(min_f, oracle::fidelity(amplitudes(out), oracle::apply_cnot(oracle::product_state(q), 0, 1)));
        const auto d = ancilla_diagnostics(out, layout);
        min_pop = std::min(min_pop, d.min_population_zero());
        min_purity = std::min(min_purity, d.purity);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Verdict v;
    v.pass = inputs.size() == 204 && min_f >= 1 - kTol && min_pop >= 1 - kTol && min_purity >= 1 - kTol && secs < 5;
    v.detail = "204 inputs, min fidelity " + fmt("%.16f", min_f) + ", min ancilla |0> " + fmt("%.16f", min_pop) +
               ", min purity " + fmt("%.16f", min_purity) + ", " + fmt("%.3f", secs) + " s";
    return v;
}

Verdict bell_state() {
    MachineConfig cfg;
    RegisterLayout layout(2);
    const double r = 1 / std::sqrt(2.0);
    const std::pair<Amplitude, Amplitude> q[] = {{r, r}, {1, 0}};
    const PureState out = execute_plain(compile_cnot(0, 1, layout, cfg), PureState::product(layout, q), layout, cfg);
    std::vector<Amplitude> bell(32);
    bell[0] = r;
    bell[(1u << layout.nucleus_site(0)) | (1u << layout.nucleus_site(1))] = r;
    const double f = oracle::fidelity(amplitudes(out), bell);
    const auto d = ancilla_diagnostics(out, layout);
    Verdict v;
    v.pass = f >= 1 - kTol && d.min_population_zero() >= 1 - kTol && d.purity >= 1 - kTol;
    v.detail = "fidelity " + fmt("%.16f", f) + ", ancilla purity " + fmt("%.16f", d.purity);
    return v;
}

Verdict distance_independence() {
    MachineConfig cfg;
    RegisterLayout layout(8);
    std::mt19937_64 gen(8);
    std::vector<std::pair<Amplitude, Amplitude>> q;
    for (int i = 0; i < 8; ++i) q.push_back(random_qubit(gen));
    const PureState in = PureState::product(layout, q);
    const auto ref = oracle::product_state(q);
    double lo = 1, hi = 0;
    std::size_t pairs = 0;
    for (std::size_t c = 0; c < 8; ++c) {
        for (std::size_t t = 0; t < 8; ++t) {
            if (c == t) continue;
            const PureState out = execute_plain(compile_cnot(c, t, layout, cfg), in, layout, cfg);
            const double f = oracle::fidelity(amplitudes(out), oracle::apply_cnot(ref, c, t));
            lo = std::min(lo, f);
            hi = std::max(hi, f);
            ++pairs;
        }
    }
    Verdict v;
    v.pass = pairs == 56 && hi - lo < kTol && lo >= 1 - kTol;
    v.detail = std::to_string(pairs) + " ordered pairs, fidelity spread " + fmt("%.3g", hi - lo) + ", min " +
               fmt("%.16f", lo);
    return v;
}

Verdict frequency_audit() {
    MachineConfig cfg;
    RegisterLayout layout(1, 1, TipPosition::at(0));
    Verdict v;
    double worst = 0;
    for (const auto &e : audit_closed_forms(cfg)) {
        if (!e.matched() || e.residual_hz > 1e-6) {
            v.pass = false;
            v.detail += e.name + " unmatched; ";
            continue;
        }
        worst = std::max(worst, e.residual_hz);
        v.detail += e.name + "->" + layout.site_name(*e.matched_site) + "[" + e.matched_config->to_string() + "] ";
    }
    v.detail += "max residual " + fmt("%.3g", worst) + " Hz";
    return v;
}

Verdict timing_reproduction() {
    MachineConfig cfg;
    RegisterLayout layout(2);
    const auto report = timing_report(compile_cnot(0, 1, layout, cfg), layout, cfg);
    const double t = report.total_wall_time;
    const std::uint64_t budget = decoherence_budget(cfg, 100e-6);
    Verdict v;
    v.pass = t >= 50e-6 && t <= 150e-6 && std::fabs(t - 75.6e-6) < 1e-12 && budget == 100000;
    v.detail = "CNOT " + fmt("%.4g", t * 1e6) + " us, budget(10 s, 100 us) = " + std::to_string(budget);
    return v;
}

Verdict initialization() {
    MachineConfig cfg;
    RegisterLayout layout(4);
    const PulseProgram init = compile_init(layout, cfg);
    std::size_t p_ground = 0, p_total = 0, e_ground = 0, e_total = 0, failures = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng stats(derive_seed(seed, 0));
        const auto all = thermal_sample(layout, cfg, stats, ThermalSpins::All);
        for (std::size_t q = 0; q < layout.num_qubits(); ++q) {
            p_ground += !all.bit(layout.nucleus_site(q));
            e_ground += !all.bit(layout.electron_site(q));
            ++p_total;
            ++e_total;
        }
        Rng rng(seed);
        const auto start = thermal_sample(layout, cfg, rng, ThermalSpins::QubitNuclei);
        const PureState out = execute(init, PureState(start), layout, cfg, rng).state;
        for (std::size_t q = 0; q < layout.num_qubits(); ++q) {
            failures += oracle::population_zero(amplitudes(out), layout.nucleus_site(q)) != 1.0;
        }
    }
    const double pf = double(p_ground) / double(p_total), ef = double(e_ground) / double(e_total);
    Verdict v;
    v.pass = pf >= 0.47 && pf <= 0.53 && ef >= 0.99 && failures == 0;
    v.detail = "31P ground " + fmt("%.4f", pf) + ", electron ground " + fmt("%.4f", ef) + ", " +
               std::to_string(failures) + " nuclei not |0> after init over 1000 seeds";
    return v;
}

Verdict readout() {
    MachineConfig cfg;
    Verdict v;
    for (int k = 0; k < 4; ++k) {
        const bool p = k >> 1, a = k & 1;
        if (classify_frequency(modulation_frequency(p, a, cfg), cfg, trace_tolerance(cfg)) != std::pair{p, a}) {
            v.pass = false;
        }
    }
    const double gap0 = modulation_frequency(false, false, cfg) - modulation_frequency(true, false, cfg);
    const double gap1 = modulation_frequency(false, true, cfg) - modulation_frequency(true, true, cfg);
    v.pass &= std::fabs(std::fabs(gap0) - 120e6) < 1e-3 && std::fabs(std::fabs(gap1) - 120e6) < 1e-3;

    int ok = 0;
    double min_cycles = std::numeric_limits<double>::infinity();
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const bool p = trial & 1, a = (trial >> 1) & 1;
        Rng rng(derive_seed(4242, trial));
        const CurrentTrace trace = synth_trace(p, a, cfg, TraceParams{}, rng);
        min_cycles = std::min(min_cycles, trace.duration * modulation_frequency(p, a, cfg) * trace.scale);
        try {
            ok += classify_frequency(detect_peak(trace), cfg, trace_tolerance(cfg)) == std::pair{p, a};
        } catch (const UnclassifiableFrequency &) {
        }
    }
    v.pass &= ok >= 99 && min_cycles >= 1000;
    v.detail = "round trip on 4 lines, p-gap " + fmt("%.6f", std::fabs(gap0) / 1e6) + " MHz, SNR 10 traces " +
               std::to_string(ok) + "/100 over >= " + fmt("%.0f", min_cycles) + " cycles";
    return v;
}

Verdict engine_invariants() {
    MachineConfig cfg;
    std::mt19937_64 gen(10000);
    std::uniform_real_distribution<double> u(0, 1);
    const auto f = cnot_frequencies(cfg);
    const double lines[] = {f.f_ec, f.f_et1, f.f_et0, f.f_a, f.f_p, addressed_nuclear_frequency(cfg)};
    const Channel channels[] = {Channel::ElectronRF, Channel::ElectronRF, Channel::ElectronRF,
                                Channel::TipCarbonNuclearRF, Channel::PhosphorusNuclearRF,
                                Channel::PhosphorusNuclearRF};
    double worst_norm = 0;
    std::size_t off_failures = 0, involution_failures = 0, off_count = 0;
    for (int i = 0; i < 10000; ++i) {
        RegisterLayout layout(2, 0, TipPosition::at(i & 1));
        std::normal_distribution<double> n;
        std::vector<Amplitude> amps(32);
        double total = 0;
        for (auto &x : amps) {
            x = {n(gen), n(gen)};
            total += std::norm(x);
        }
        for (auto &x : amps) x /= std::sqrt(total);
        PureState psi(5, amps);
        const int k = int(u(gen) * 6);
        const bool detuned = u(gen) < 0.3;
        Pulse pulse{channels[k], lines[k] + (detuned ? 1e4 + 1e6 * u(gen) : 0), 0.01 + (2 * kPi - 0.01) * u(gen),
                    2 * kPi * u(gen), 1e-6, u(gen) < 0.5 ? PulseMode::LogicalX : PulseMode::PhasedRotation};
        const PureState before = psi;
        const PulseOutcome out = apply_selective_pulse(psi, pulse, layout, cfg);
        worst_norm = std::max(worst_norm, std::fabs(psi.norm_squared() - 1));
        if (out.no_resonant_transition()) {
            ++off_count;
            off_failures += !(psi == before);
        }
        if (i % 10 == 0) {
            PureState twice = before;
            pulse.angle = kPi;
            pulse.mode = PulseMode::LogicalX;
            apply_selective_pulse(twice, pulse, layout, cfg);
            apply_selective_pulse(twice, pulse, layout, cfg);
            involution_failures += !(twice == before);
        }
    }
    Verdict v;
    v.pass = worst_norm <= kTol && off_failures == 0 && involution_failures == 0 && off_count > 0;
    v.detail = "10000 pulses, max |norm - 1| " + fmt("%.3g", worst_norm) + ", " + std::to_string(off_count) +
               " off-resonant (" + std::to_string(off_failures) + " changed the state), " +
               std::to_string(involution_failures) + "/1000 double-pi restores not bit-exact";
    return v;
}

std::vector<oracle::TaskSpec> cnot_tasks(const RegisterLayout &layout, const MachineConfig &cfg,
                                         std::initializer_list<std::pair<std::size_t, std::size_t>> cnots) {
    std::vector<oracle::TaskSpec> out;
    for (auto [c, t] : cnots) {
        const double hop = double(layout.hop_distance(TipPosition::at(c), TipPosition::at(t))) * cfg.tip_move_time;
        out.push_back({{c, t}, c, c, 2 * hop + 3 * cfg.nuclear_pi_duration + 6 * cfg.electron_pi_duration});
    }
    return out;
}

Verdict scheduler() {
    MachineConfig cfg;
    Verdict v;
    std::mt19937_64 gen(99);
    bool serial_ok = true, valid = true, monotone = true;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 7;
        RegisterLayout layout(n);
        Circuit c;
        std::uniform_int_distribution<std::size_t> q(0, n - 1);
        std::size_t tasks = 0;
        while (c.gates.size() < 20) {
            const int kind = int(gen() % 10);
            const std::size_t a = q(gen), b = q(gen);
            if (kind < 5 && a != b) {
                c.gates.push_back(gate::Cnot{a, b});
                ++tasks;
            } else if (kind >= 5 && kind < 8) {
                c.gates.push_back(gate::Rot{a, 0.5 * double(kind), 0.1});
                ++tasks;
            } else if (kind == 8) {
                c.gates.push_back(gate::Measure{a});
                ++tasks;
            } else if (kind == 9) {
                c.gates.push_back(gate::Init{});
                tasks += n;
            }
        }
        double previous = std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k <= 4; ++k) {
            const TipAssignment s = schedule_multi_tip(c, k, layout, cfg);
            valid &= oracle::validate_schedule(s, tasks).empty();
            monotone &= s.makespan <= previous;
            previous = s.makespan;
            if (k == 1) {
                serial_ok &= s.makespan == timing_report(compile_circuit(c, layout, cfg), layout, cfg).total_wall_time;
            }
        }
    }
    RegisterLayout four(4);
    const auto travel = [&](long from, long to) {
        const auto pos = [](long x) { return x < 0 ? TipPosition::parked() : TipPosition::at(std::size_t(x)); };
        return double(four.hop_distance(pos(from), pos(to))) * cfg.tip_move_time;
    };
    const double best = oracle::brute_force_makespan(cnot_tasks(four, cfg, {{0, 1}, {2, 3}}), 2, travel);
    const TipAssignment two = schedule_multi_tip(parse_circuit("CNOT 0 1\nCNOT 2 3\n"), 2, four, cfg);
    const bool optimal = std::fabs(two.makespan - best) <= 1e-15;
    v.pass = serial_ok && valid && monotone && optimal;
    v.detail = std::string("k=1 serial ") + (serial_ok ? "exact" : "MISMATCH") + ", disjoint CNOTs k=2 " +
               fmt("%.4g", two.makespan * 1e6) + " us vs optimum " + fmt("%.4g", best * 1e6) +
               " us, 100 circuits " + (valid ? "valid" : "INVALID") + (monotone ? ", monotone" : ", NOT monotone");
    return v;
}

Verdict determinism() {
    const std::filesystem::path circuits = std::filesystem::path(ENDOS_SOURCE_DIR) / "tools" / "circuits";
    cli::RunOptions o;
    o.seed = 12345;
    o.tips = 2;
    o.verify_frequencies = true;
    o.trace_snr = 10;
    const auto a = cli::run_batch(circuits.string(), o);
    const auto b = cli::run_batch(circuits.string(), o);
    Verdict v;
    v.pass = a.exit_code == cli::kOk && !a.report.empty() && a.report == b.report;
    v.detail = "batch over " + circuits.filename().string() + "/, " + std::to_string(a.report.size()) +
               " bytes, identical: " + (a.report == b.report ? "yes" : "no");
    return v;
}

}  // namespace

int main() {
    const std::pair<const char *, std::function<Verdict()>> criteria[] = {
        {"CNOT protocol correctness", cnot_correctness},
        {"entanglement linearity", bell_state},
        {"distance independence", distance_independence},
        {"formula-engine audit", frequency_audit},
        {"timing reproduction", timing_reproduction},
        {"initialization", initialization},
        {"readout round-trip", readout},
        {"engine invariants", engine_invariants},
        {"scheduler", scheduler},
        {"determinism", determinism},
    };
    int failed = 0;
    int id = 0;
    for (const auto &[name, check] : criteria) {
        ++id;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", id - failed, id);
    return failed == 0 ? 0 : 1;
}
