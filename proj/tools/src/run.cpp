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

#include "endos/cli/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "endos/circuit.hpp"
#include "endos/compiler.hpp"
#include "endos/errors.hpp"
#include "endos/machine_config.hpp"
#include "endos/readout.hpp"
#include "endos/scheduler.hpp"
#include "endos/spin_physics.hpp"

namespace endos::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr double kCheckTolerance = 1e-12;

// RNG streams split off the run seed, so optional outputs never shift the
// draws of the main simulation.
constexpr std::uint64_t kStreamTraces = 1;
constexpr std::uint64_t kStreamCnotChecks = 2;

json config_json(const MachineConfig &cfg) {
    json out = json::object();
    for (const auto &key : config_keys()) out[key] = config_value(cfg, key);
    return out;
}

json timing_json(const TimingReport &t) {
    json out;
    out["total_wall_time_s"] = t.total_wall_time;
    out["moves_s"] = t.moves;
    out["nuclear_pulses_s"] = t.nuclear_pulses;
    out["electron_pulses_s"] = t.electron_pulses;
    out["measurements_s"] = t.measurements;
    out["mean_cnot_time_s"] = t.mean_cnot_time ? json(*t.mean_cnot_time) : json(nullptr);
    out["gate_capacity"] = t.gate_capacity ? json(*t.gate_capacity) : json(nullptr);
    out["feasible"] = t.feasible;
    out["per_instruction_s"] = t.per_instruction;
    return out;
}

json schedule_json(const TipAssignment &a) {
    json tasks = json::array();
    for (const auto &t : a.tasks) {
        tasks.push_back({{"gate_index", t.gate_index},
                         {"label", t.label},
                         {"tip", t.tip},
                         {"start_s", t.start},
                         {"end_s", t.end}});
    }
    return {{"tips", a.tips}, {"makespan_s", a.makespan}, {"tip_finish_s", a.tip_finish}, {"tasks", tasks}};
}

json ancilla_json(const AncillaDiagnostics &d, const RegisterLayout &layout) {
    json pops = json::object();
    for (std::size_t i = 0; i < d.sites.size(); ++i) pops[layout.site_name(d.sites[i])] = d.population_zero[i];
    return {{"population_zero", pops}, {"purity", d.purity}};
}

json audit_json(const std::vector<FrequencyAuditEntry> &audit, bool &all_matched) {
    RegisterLayout layout(1, 1, TipPosition::at(0));
    json rows = json::array();
    all_matched = true;
    for (const auto &e : audit) {
        all_matched &= e.matched();
        json row;
        row["name"] = e.name;
        row["closed_form_hz"] = e.closed_form_hz;
        row["intended"] = {{"site", layout.site_name(e.intended_site)},
                           {"configuration", e.intended_config.to_string()},
                           {"engine_hz", e.intended_engine_hz},
                           {"matches", e.intended_matches}};
        if (e.matched()) {
            row["match"] = {{"site", layout.site_name(*e.matched_site)},
                            {"configuration", e.matched_config->to_string()},
                            {"engine_hz", e.matched_engine_hz},
                            {"residual_hz", e.residual_hz}};
        } else {
            row["match"] = nullptr;
        }
        rows.push_back(row);
    }
    return rows;
}

// Ideal CNOT on the nucleus bits of a dense register state.
PureState reference_cnot(const PureState &in, std::size_t control, std::size_t target, const RegisterLayout &layout) {
    const std::size_t c = std::size_t{1} << layout.nucleus_site(control);
    const std::size_t t = std::size_t{1} << layout.nucleus_site(target);
    std::vector<Amplitude> out(in.amplitudes().begin(), in.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if ((i & c) && !(i & t)) std::swap(out[i], out[i | t]);
    }
    return PureState(in.num_sites(), std::move(out));
}

// Runs each distinct CNOT of the circuit on a random product input and
// compares against the ideal gate.
json cnot_checks(const Circuit &circuit, const RegisterLayout &layout, const MachineConfig &cfg,
                 std::uint64_t seed, bool &all_ok) {
    json rows = json::array();
    all_ok = true;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    Rng rng(derive_seed(seed, kStreamCnotChecks));
    for (const auto &g : circuit.gates) {
        const auto *cnot = std::get_if<gate::Cnot>(&g);
        if (!cnot || !seen.insert({cnot->control, cnot->target}).second) continue;
        std::vector<std::pair<Amplitude, Amplitude>> qubits;
        for (std::size_t q = 0; q < layout.num_qubits(); ++q) {
            Amplitude a(rng.normal(), rng.normal()), b(rng.normal(), rng.normal());
            const double r = std::sqrt(std::norm(a) + std::norm(b));
            qubits.emplace_back(a / r, b / r);
        }
        const PureState input = PureState::product(layout, qubits);
        const auto result =
            execute(compile_cnot(cnot->control, cnot->target, layout, cfg), input, layout, cfg, rng);
        const double fidelity = result.state.fidelity(reference_cnot(input, cnot->control, cnot->target, layout));
        const auto anc = ancilla_diagnostics(result.state, layout);
        const bool ok = fidelity >= 1 - kCheckTolerance && anc.min_population_zero() >= 1 - kCheckTolerance &&
                        anc.purity >= 1 - kCheckTolerance;
        all_ok &= ok;
        rows.push_back({{"control", cnot->control},
                        {"target", cnot->target},
                        {"fidelity", fidelity},
                        {"ancillas", ancilla_json(anc, layout)},
                        {"pass", ok}});
    }
    return rows;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_report(const json &doc) { return doc.dump(2) + "\n"; }

}  // namespace

RunResult run(const RunOptions &options) {
    RunResult result;
    if (options.seed) {
        result.seed = *options.seed;
    } else {
        std::random_device rd;
        result.seed = (std::uint64_t(rd()) << 32) | rd();
    }

    MachineConfig cfg;
    Circuit circuit;
    std::vector<std::string> warnings;
    try {
        if (options.config_path) cfg = parse_config(read_file(*options.config_path), *options.config_path);
        warnings = validate(cfg);
        circuit = parse_circuit(read_file(options.circuit_path), options.circuit_path);
        if (options.tips && *options.tips == 0) throw Error("--tips must be at least 1");
        if (options.trace_snr && !(*options.trace_snr > 0)) throw Error("--trace-snr must be positive");
    } catch (const std::exception &e) {
        result.exit_code = kInputError;
        result.errors.push_back(e.what());
        return result;
    }

    const std::size_t qubits = options.qubits.value_or(std::max<std::size_t>(1, circuit.min_qubits()));
    if (qubits < circuit.min_qubits() || qubits == 0) {
        result.exit_code = kInputError;
        result.errors.push_back("register of " + std::to_string(qubits) + " qubits is too small for the circuit (" +
                                std::to_string(circuit.min_qubits()) + " needed)");
        return result;
    }
    if (2 * qubits + 1 > PureState::kMaxSites) {
        result.exit_code = kInputError;
        result.errors.push_back("register of " + std::to_string(qubits) + " qubits exceeds the simulator limit");
        return result;
    }

    const RegisterLayout layout(qubits);
    const PulseProgram program = compile_circuit(circuit, layout, cfg);

    Rng rng(result.seed);
    const BasisConfiguration start = thermal_sample(layout, cfg, rng, ThermalSpins::QubitNuclei);
    const ExecutionResult exec = execute(program, PureState(start), layout, cfg, rng);

    json doc;
    doc["format"] = "endos-run-report/1";
    doc["circuit"] = options.circuit_path;
    doc["config_file"] = options.config_path ? json(*options.config_path) : json(nullptr);
    doc["seed"] = result.seed;
    doc["config"] = config_json(cfg);
    doc["warnings"] = warnings;
    doc["register"] = {{"qubits", layout.num_qubits()}, {"columns", layout.columns()}, {"sites", layout.size()}};
    doc["initial_configuration"] = start.to_string();
    doc["program"] = {{"instructions", program.size()},
                      {"pulses", program.pulse_count()},
                      {"moves", program.move_count()},
                      {"listing", program_listing(program)}};

    json measurements = json::array();
    Rng trace_rng(derive_seed(result.seed, kStreamTraces));
    for (std::size_t i = 0; i < exec.measurements.size(); ++i) {
        const auto &m = exec.measurements[i];
        json row = {{"qubit", m.qubit},
                    {"bit", int(m.inferred_p_bit)},
                    {"tip_bit", int(m.inferred_a_bit)},
                    {"observed_frequency_hz", m.observed_frequency},
                    {"probability_of_outcome", m.pre_measurement_probability}};
        if (options.trace_snr) {
            TraceParams params;
            params.snr = *options.trace_snr;
            const CurrentTrace trace = synth_trace(m.inferred_p_bit, m.inferred_a_bit, cfg, params, trace_rng);
            const double peak = detect_peak(trace);
            json t = {{"snr", params.snr}, {"detected_frequency_hz", peak}};
            try {
                const auto [p, a] = classify_frequency(peak, cfg, trace_tolerance(cfg));
                t["classified_bit"] = int(p);
                t["classified_tip_bit"] = int(a);
                t["agrees"] = p == m.inferred_p_bit && a == m.inferred_a_bit;
            } catch (const UnclassifiableFrequency &) {
                t["classified_bit"] = nullptr;
                t["classified_tip_bit"] = nullptr;
                t["agrees"] = false;
            }
            if (options.trace_dir) {
                fs::create_directories(*options.trace_dir);
                const fs::path path = fs::path(*options.trace_dir) / ("trace_" + std::to_string(i) + ".txt");
                std::ofstream out(path);
                write_trace(out, trace);
                t["file"] = path.string();
            }
            row["trace"] = t;
        }
        measurements.push_back(row);
    }
    doc["measurements"] = measurements;

    json final_state;
    json marginals = json::array();
    for (std::size_t q = 0; q < layout.num_qubits(); ++q) {
        marginals.push_back(exec.state.probability_zero(layout.nucleus_site(q)));
    }
    final_state["qubit_population_zero"] = marginals;
    final_state["dump"] = options.dump_state_path ? json(*options.dump_state_path) : json(nullptr);
    if (options.dump_state_path) {
        std::ofstream out(*options.dump_state_path);
        if (!out) {
            result.exit_code = kInputError;
            result.errors.push_back("cannot write " + *options.dump_state_path);
            return result;
        }
        dump_state(out, exec.state);
    }
    doc["final_state"] = final_state;
    doc["timing"] = timing_json(exec.timing);
    if (options.tips) doc["schedule"] = schedule_json(schedule_multi_tip(circuit, *options.tips, layout, cfg));

    bool cnots_ok = true;
    bool audit_ok = true;
    json verification;
    verification["off_resonant_pulses"] = exec.off_resonant_instructions();
    verification["final_ancillas"] = ancilla_json(ancilla_diagnostics(exec.state, layout), layout);
    verification["cnot_checks"] = cnot_checks(circuit, layout, cfg, result.seed, cnots_ok);
    if (options.verify_frequencies) verification["frequency_audit"] = audit_json(audit_closed_forms(cfg), audit_ok);
    doc["verification"] = verification;

    if (!exec.off_resonant_instructions().empty()) result.errors.push_back("compiled pulse matched no transition");
    if (!cnots_ok) result.errors.push_back("CNOT check failed");
    if (!audit_ok) result.errors.push_back("closed-form frequency without an engine match");
    if (!result.errors.empty()) {
        result.exit_code = kAuditFailure;
    } else if (options.enforce_budget && !exec.timing.feasible) {
        result.exit_code = kBudgetExceeded;
        result.errors.push_back("program wall time exceeds T2");
    }
    doc["exit_code"] = result.exit_code;
    doc["errors"] = result.errors;
    result.report = format_report(doc);
    return result;
}

RunResult run_batch(const std::string &dir, const RunOptions &options) {
    RunResult result;
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto &entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".circ") files.push_back(entry.path());
    }
    if (ec) {
        result.exit_code = kInputError;
        result.errors.push_back("cannot read directory " + dir + ": " + ec.message());
        return result;
    }
    std::sort(files.begin(), files.end());

    if (options.seed) {
        result.seed = *options.seed;
    } else {
        std::random_device rd;
        result.seed = (std::uint64_t(rd()) << 32) | rd();
    }

    std::vector<std::future<RunResult>> pending;
    for (std::size_t i = 0; i < files.size(); ++i) {
        RunOptions one = options;
        one.circuit_path = files[i].string();
        one.seed = derive_seed(result.seed, i);
        if (options.dump_state_path) one.dump_state_path = *options.dump_state_path + "." + files[i].stem().string();
        if (options.trace_dir) one.trace_dir = (fs::path(*options.trace_dir) / files[i].stem()).string();
        pending.push_back(std::async(std::launch::async, [one] { return run(one); }));
    }

    json runs = json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        RunResult r = pending[i].get();
        result.exit_code = std::max(result.exit_code, r.exit_code);
        for (const auto &e : r.errors) result.errors.push_back(files[i].filename().string() + ": " + e);
        runs.push_back({{"circuit", files[i].string()},
                        {"seed", r.seed},
                        {"exit_code", r.exit_code},
                        {"report", r.report.empty() ? json(nullptr) : json::parse(r.report)}});
    }
    json doc;
    doc["format"] = "endos-batch-report/1";
    doc["directory"] = dir;
    doc["seed"] = result.seed;
    doc["runs"] = runs;
    doc["exit_code"] = result.exit_code;
    result.report = format_report(doc);
    return result;
}

}  // namespace endos::cli
