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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace endos {

/// Physical and timing constants of the machine. Frequencies and hyperfine
/// couplings are in Hz, times in seconds, field in tesla. Fundamental
/// constants are SI (CODATA 2018) and are converted to Hz where energies are
/// formed.
struct MachineConfig {
    double B = 5.0;
    double A_z = 120e6;
    double A_z_prime = 120e6;
    double A_prime = 2e9;
    double temperature = 1.0;
    double T2 = 10.0;
    double lattice_spacing = 30e-9;
    double tip_move_time = 15e-6;
    double nuclear_pi_duration = 10e-6;
    double electron_pi_duration = 0.1e-6;
    double measurement_dwell = 15e-6;
    double selectivity_tolerance = 1e3;

    double mu_B = 9.2740100783e-24;  // J/T
    double mu_N = 5.0507837461e-27;  // J/T
    double k_B = 1.380649e-23;       // J/K
    double h = 6.62607015e-34;       // J s

    /// mu_B / h and mu_N / h, in Hz per tesla.
    double bohr_hz_per_tesla() const { return mu_B / h; }
    double nuclear_hz_per_tesla() const { return mu_N / h; }

    bool operator==(const MachineConfig &) const = default;
};

inline constexpr double kMinimumLatticeSpacing = 30e-9;

/// Checks the config invariants. Throws ConfigError on hard violations and
/// returns human-readable warnings for soft ones (e.g. lattice spacing below
/// 30 nm).
std::vector<std::string> validate(const MachineConfig &cfg);

/// Smallest gap between distinct single-spin transition frequencies reachable
/// on the configured machine (coincident lines are merged before the gap is
/// taken). Returns +inf when fewer than two distinct lines exist.
double min_spectral_gap(const MachineConfig &cfg);

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and
/// malformed values raise ParseError naming the line. Missing keys keep
/// their defaults. `source` names the input in diagnostics.
MachineConfig parse_config(std::string_view text, const std::string &source = "<config>");
MachineConfig load_config(const std::string &path);

/// Every accepted key, in canonical order.
const std::vector<std::string> &config_keys();
double config_value(const MachineConfig &cfg, std::string_view key);

/// Writes the config back in the same `key = value` form.
void write_config(std::ostream &out, const MachineConfig &cfg);

}  // namespace endos
