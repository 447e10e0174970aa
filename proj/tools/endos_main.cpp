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

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "endos/cli/run.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Compile and simulate circuits on an electron-nucleus double-spin register."};
    app.set_version_flag("--version", "endos 0.1.0");

    endos::cli::RunOptions options;
    std::string batch_dir;
    std::string report_path;

    app.add_option("--config", options.config_path, "key = value machine configuration")->check(CLI::ExistingFile);
    auto *circuit = app.add_option("--circuit", options.circuit_path, "circuit file");
    auto *batch = app.add_option("--batch", batch_dir, "run every *.circ file in a directory")
                      ->check(CLI::ExistingDirectory);
    circuit->excludes(batch);
    app.add_option("--seed", options.seed, "RNG seed; drawn from system entropy when omitted");
    app.add_option("--qubits", options.qubits, "register size (default: smallest that fits)")->check(CLI::PositiveNumber);
    app.add_option("--tips", options.tips, "schedule the circuit over K tips")->check(CLI::PositiveNumber);
    app.add_flag("--verify-frequencies", options.verify_frequencies, "audit closed-form lines against the engine");
    app.add_option("--dump-state", options.dump_state_path, "write the final state vector here");
    app.add_option("--trace-snr", options.trace_snr, "synthesize a current trace per measurement at this SNR")
        ->check(CLI::PositiveNumber);
    app.add_option("--trace-dir", options.trace_dir, "directory for trace files (with --trace-snr)");
    app.add_flag("--enforce-budget", options.enforce_budget, "exit 4 when the program outlasts T2");
    app.add_option("--report", report_path, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
        if (circuit->count() == 0 && batch->count() == 0) throw CLI::RequiredError("--circuit or --batch");
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return endos::cli::kInputError;
    }

    endos::cli::RunResult result;
    try {
        result = batch_dir.empty() ? endos::cli::run(options) : endos::cli::run_batch(batch_dir, options);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return endos::cli::kInputError;
    }
    if (!options.seed) std::cerr << "seed: " << result.seed << '\n';
    for (const auto &e : result.errors) std::cerr << "error: " << e << '\n';

    if (!result.report.empty()) {
        if (report_path.empty()) {
            std::cout << result.report;
        } else {
            std::ofstream out(report_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << report_path << '\n';
                return endos::cli::kInputError;
            }
            out << result.report;
        }
    }
    return result.exit_code;
}
