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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace endos::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kAuditFailure = 3,
    kBudgetExceeded = 4,
};

struct RunOptions {
    std::optional<std::string> config_path;
    std::string circuit_path;
    std::optional<std::uint64_t> seed;
    /// Register size; defaults to the smallest that fits the circuit.
    std::optional<std::size_t> qubits;
    std::optional<std::size_t> tips;
    bool verify_frequencies = false;
    std::optional<std::string> dump_state_path;
    std::optional<double> trace_snr;
    /// Where per-measurement traces go when trace_snr is set.
    std::optional<std::string> trace_dir;
    bool enforce_budget = false;
};

struct RunResult {
    int exit_code = kOk;
    std::uint64_t seed = 0;
    /// JSON document; empty when the inputs could not be read.
    std::string report;
    std::vector<std::string> errors;
};

/// Compiles and simulates one circuit. Never throws for bad inputs; they
/// surface as kInputError with a message in `errors`.
RunResult run(const RunOptions &options);

/// Runs every `*.circ` file of `dir` (sorted by name) concurrently. Run i
/// uses derive_seed(seed, i). The report holds one entry per file and the
/// exit code is the largest of the individual codes.
RunResult run_batch(const std::string &dir, const RunOptions &options);

}  // namespace endos::cli
