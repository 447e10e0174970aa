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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endos/machine_config.hpp"
#include "endos/register_layout.hpp"

namespace endos {

enum class Species { Electron, PhosphorusNucleus, CarbonTipNucleus };
enum class Magneton { Bohr, Nuclear };
enum class Orientation { Up, Down };

/// Static description of a spin-1/2 species. g_factor is a magnitude; the
/// sign of each Zeeman term is carried by which orientation is the ground
/// state (|0>).
struct SpinSpecies {
    Species name;
    double g_factor;
    Magneton magneton;
    Orientation ground_orientation;
};

inline constexpr SpinSpecies kElectron{Species::Electron, 2.0, Magneton::Bohr, Orientation::Down};
inline constexpr SpinSpecies kPhosphorus{Species::PhosphorusNucleus, 2.26, Magneton::Nuclear, Orientation::Up};
inline constexpr SpinSpecies kCarbonTip{Species::CarbonTipNucleus, 1.4048, Magneton::Nuclear, Orientation::Up};

const SpinSpecies &species(Species s);
Species species_of(const RegisterLayout &layout, std::size_t site);
std::string_view species_name(Species s);

/// m = +1/2 or -1/2 for a bit of the given species (bit 0 is the ground orientation).
constexpr double m_value(const SpinSpecies &s, bool bit) {
    const bool up = (s.ground_orientation == Orientation::Up) != bit;
    return up ? 0.5 : -0.5;
}

/// Bare Zeeman splitting |g| * magneton * B / h, in Hz.
double zeeman_frequency(const SpinSpecies &s, const MachineConfig &cfg);

/// One bit per spin site, site s stored at bit s. Bit 0 means the species'
/// ground orientation.
class BasisConfiguration {
   public:
    BasisConfiguration() = default;
    BasisConfiguration(std::uint64_t bits, std::size_t size);
    static BasisConfiguration ground(std::size_t size) { return BasisConfiguration(0, size); }

    std::size_t size() const { return size_; }
    std::uint64_t bits() const { return bits_; }
    bool bit(std::size_t site) const { return (bits_ >> site) & 1U; }
    BasisConfiguration with_bit(std::size_t site, bool value) const;
    BasisConfiguration flipped(std::size_t site) const;

    /// Site 0 first.
    std::string to_string() const;

    bool operator==(const BasisConfiguration &) const = default;

   private:
    std::uint64_t bits_ = 0;
    std::size_t size_ = 0;
};

/// Diagonal register energy in Hz. Qubits away from the tip use the bare
/// hyperfine A_z; the qubit under the tip uses A_z_prime and gains the
/// A_prime contact term. The tip 13C Zeeman term is always included,
/// parked or not.
double configuration_energy(const BasisConfiguration &config, const RegisterLayout &layout,
                            const MachineConfig &cfg);

/// |E(config with `site` flipped) - E(config)| in Hz.
double transition_frequency(const BasisConfiguration &config, std::size_t site, const RegisterLayout &layout,
                            const MachineConfig &cfg);

/// Sites whose bits change the transition frequency of `site` (its hyperfine
/// partners under the current tip position).
std::vector<std::size_t> coupled_sites(std::size_t site, const RegisterLayout &layout);

/// The closed-form resonance lines as printed for the protocol, evaluated
/// literally. Reference values for auditing; the compiler derives its own.
struct ClosedFormFrequencies {
    double single_qubit;  // g_p mu_N B - A'_z / 2
    double f_ec;          // g_e mu_B B + A'/2 - A'_z/2
    double f_a;           // |g_a mu_N B - A'/2|
    double f_et1;         // g_e mu_B B + A'_z/2 + A'/2
    double f_et0;         // g_e mu_B B - A'_z/2 + A'/2
    double f_p;           // g_p mu_N B - A'_z/2

    struct Named {
        std::string_view name;
        double value;
    };
    std::array<Named, 6> named() const;
};

ClosedFormFrequencies closed_form_frequencies(const MachineConfig &cfg);

/// Tunneling-current modulation frequency for 31P bit `p_bit` and tip 13C bit
/// `a_bit`: g_e mu_B B/h + (a ? -1 : +1) A'/2 + (p ? -1 : +1) A'_z/2.
double modulation_frequency(bool p_bit, bool a_bit, const MachineConfig &cfg);

/// Result of matching one closed-form frequency against the engine on a
/// single qubit with the tip over it (sites: nucleus 0, electron 1, tip 2).
struct FrequencyAuditEntry {
    std::string name;
    double closed_form_hz = 0;
    /// The (site, spectator configuration) the compiler intends this line for.
    std::size_t intended_site = 0;
    BasisConfiguration intended_config;
    double intended_engine_hz = 0;
    bool intended_matches = false;
    /// First engine transition matching the closed form, if any (the intended
    /// one is tried first).
    std::optional<std::size_t> matched_site;
    std::optional<BasisConfiguration> matched_config;
    double matched_engine_hz = 0;
    double residual_hz = 0;
    bool matched() const { return matched_site.has_value(); }
};

inline constexpr double kAuditResidualHz = 1e-6;

std::vector<FrequencyAuditEntry> audit_closed_forms(const MachineConfig &cfg,
                                                    double max_residual_hz = kAuditResidualHz);

}  // namespace endos
