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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "endos/machine_config.hpp"
#include "endos/register_layout.hpp"
#include "endos/rng.hpp"
#include "endos/spin_physics.hpp"

namespace endos {

using Amplitude = std::complex<double>;

/// Dense pure state over all 2^size basis configurations of a register.
/// Amplitude index == BasisConfiguration::bits().
class PureState {
   public:
    /// Largest register a dense state will be allocated for.
    static constexpr std::size_t kMaxSites = 26;

    PureState() = default;
    /// The basis state |config>.
    explicit PureState(const BasisConfiguration &config);
    PureState(std::size_t num_sites, std::vector<Amplitude> amplitudes);

    static PureState ground(const RegisterLayout &layout);
    /// Qubit i in alpha_i |0> + beta_i |1> (normalized here), every ancilla in |0>.
    static PureState product(const RegisterLayout &layout, std::span<const std::pair<Amplitude, Amplitude>> qubits);

    std::size_t num_sites() const { return num_sites_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    const Amplitude &operator[](std::size_t index) const { return amplitudes_[index]; }
    Amplitude &operator[](std::size_t index) { return amplitudes_[index]; }

    double norm_squared() const;
    /// Probability that `site` reads 0.
    double probability_zero(std::size_t site) const;
    /// |<this|other>|^2.
    double fidelity(const PureState &other) const;

    bool operator==(const PureState &) const = default;

   private:
    std::size_t num_sites_ = 0;
    std::vector<Amplitude> amplitudes_;
};

enum class Channel { ElectronRF, PhosphorusNuclearRF, TipCarbonNuclearRF };
enum class PulseMode { LogicalX, PhasedRotation };

std::string_view channel_name(Channel c);

struct Pulse {
    Channel channel = Channel::ElectronRF;
    double frequency = 0;  // Hz
    double angle = 3.14159265358979323846;
    double phase = 0;
    double duration = 0;  // s
    PulseMode mode = PulseMode::LogicalX;

    bool operator==(const Pulse &) const = default;
};

/// Throws std::invalid_argument unless angle in (0, 2pi], frequency > 0 and duration > 0.
void check_pulse(const Pulse &pulse);

/// Spin site a pulse acts on: the electron or nucleus of the qubit under the
/// tip, or the tip 13C. Throws TipParked for tip-addressed channels when parked.
std::size_t addressed_site(Channel channel, const RegisterLayout &layout);

struct PulseOutcome {
    std::size_t addressed_site = 0;
    /// Basis pairs (c, c') whose transition matched the pulse frequency.
    std::size_t resonant_pairs = 0;
    /// Population inside the resonant subspace before the pulse.
    double resonant_population = 0;

    /// No transition of the addressed spin is within tolerance: the pulse
    /// frequency matches nothing in this register.
    bool no_resonant_transition() const { return resonant_pairs == 0; }
    /// Resonant transitions exist but carry no amplitude in this state.
    bool idle() const { return resonant_population == 0; }
};

/// Rotates every resonant two-level subspace of the addressed spin.
/// LogicalX: a plain amplitude swap at a = pi and the identity at a = 2pi,
/// whatever the phase; other angles use exp(i a/2) exp(-i a/2 (cos p X + sin p Y)).
/// PhasedRotation: exp(-i a/2 (cos p X + sin p Y)).
PulseOutcome apply_selective_pulse(PureState &state, const Pulse &pulse, const RegisterLayout &layout,
                                   const MachineConfig &cfg);

struct SpinMeasurement {
    bool bit = false;
    /// Born probability of the returned bit before collapse.
    double probability = 0;
};

/// Projective measurement of one site; collapses and renormalizes `state`.
SpinMeasurement measure_spin(PureState &state, std::size_t site, Rng &rng);
SpinMeasurement measure_spin(PureState &state, std::size_t site, std::uint64_t seed);

/// Probability that a spin with the given bare splitting sits in |0> at temperature T.
double thermal_ground_probability(double splitting_hz, const MachineConfig &cfg);

enum class ThermalSpins {
    All,
    /// Qubit nuclei thermal; electrons and tip 13C left in |0>.
    QubitNuclei,
};

/// Independent Boltzmann sample of each spin from its bare Zeeman splitting.
BasisConfiguration thermal_sample(const RegisterLayout &layout, const MachineConfig &cfg, Rng &rng,
                                  ThermalSpins which = ThermalSpins::All);

struct AncillaDiagnostics {
    std::vector<std::size_t> sites;
    /// Population of |0> per entry of `sites`.
    std::vector<double> population_zero;
    /// Tr(rho^2) of the reduced state on `sites`.
    double purity = 1;

    double min_population_zero() const;
};

/// Every electron plus the tip nucleus.
std::vector<std::size_t> ancilla_sites(const RegisterLayout &layout);

AncillaDiagnostics ancilla_diagnostics(const PureState &state, const RegisterLayout &layout);
AncillaDiagnostics ancilla_diagnostics(const PureState &state, std::span<const std::size_t> sites);

/// `bitstring re im` per amplitude with magnitude > 1e-12, sorted by bitstring.
void dump_state(std::ostream &out, const PureState &state);

}  // namespace endos
