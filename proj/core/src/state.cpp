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

#include "endos/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "endos/errors.hpp"

namespace endos {

namespace {

constexpr double kDegenerateNorm = 1e-9;
constexpr double kDumpThreshold = 1e-12;

// Pulls the bits of `index` at `sites` into a compact integer.
std::size_t gather_bits(std::size_t index, std::span<const std::size_t> sites) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < sites.size(); ++k) out |= ((index >> sites[k]) & 1U) << k;
    return out;
}

struct Rotation2 {
    Amplitude u00, u01, u10, u11;
};

Rotation2 pulse_matrix(const Pulse &pulse) {
    constexpr double pi = std::numbers::pi;
    // Exact values at the two angles the protocols use.
    double c = 0;
    double s = 0;
    Amplitude half_turn_phase;  // exp(i angle / 2)
    if (pulse.angle == pi) {
        c = 0;
        s = 1;
        half_turn_phase = {0, 1};
    } else if (pulse.angle == 2 * pi) {
        c = -1;
        s = 0;
        half_turn_phase = {-1, 0};
    } else {
        c = std::cos(pulse.angle / 2);
        s = std::sin(pulse.angle / 2);
        half_turn_phase = std::polar(1.0, pulse.angle / 2);
    }
    const Amplitude e_minus = pulse.phase == 0 ? Amplitude{1, 0} : std::polar(1.0, -pulse.phase);
    const Amplitude e_plus = pulse.phase == 0 ? Amplitude{1, 0} : std::polar(1.0, pulse.phase);
    const Amplitude minus_i{0, -1};
    Rotation2 r{{c, 0}, minus_i * s * e_minus, minus_i * s * e_plus, {c, 0}};
    if (pulse.mode == PulseMode::LogicalX) {
        r.u00 *= half_turn_phase;
        r.u01 *= half_turn_phase;
        r.u10 *= half_turn_phase;
        r.u11 *= half_turn_phase;
    }
    return r;
}

}  // namespace

PureState::PureState(const BasisConfiguration &config) : num_sites_(config.size()) {
    if (num_sites_ > kMaxSites) throw std::length_error("register too large for a dense state");
    amplitudes_.assign(std::size_t{1} << num_sites_, Amplitude{0, 0});
    amplitudes_[config.bits()] = 1;
}

PureState::PureState(std::size_t num_sites, std::vector<Amplitude> amplitudes)
    : num_sites_(num_sites), amplitudes_(std::move(amplitudes)) {
    if (num_sites_ > kMaxSites) throw std::length_error("register too large for a dense state");
    if (amplitudes_.size() != (std::size_t{1} << num_sites_)) {
        throw MismatchedRegister("amplitude vector length does not match 2^" + std::to_string(num_sites_));
    }
}

PureState PureState::ground(const RegisterLayout &layout) {
    return PureState(BasisConfiguration::ground(layout.size()));
}

PureState PureState::product(const RegisterLayout &layout, std::span<const std::pair<Amplitude, Amplitude>> qubits) {
    if (qubits.size() != layout.num_qubits()) {
        throw MismatchedRegister("product state needs one amplitude pair per qubit");
    }
    PureState state = ground(layout);
    std::vector<Amplitude> next(state.dimension());
    for (std::size_t q = 0; q < qubits.size(); ++q) {
        auto [alpha, beta] = qubits[q];
        double n = std::sqrt(std::norm(alpha) + std::norm(beta));
        if (!(n > 0)) throw std::invalid_argument("qubit amplitudes must not both vanish");
        alpha /= n;
        beta /= n;
        const std::size_t mask = std::size_t{1} << layout.nucleus_site(q);
        std::fill(next.begin(), next.end(), Amplitude{0, 0});
        for (std::size_t i = 0; i < state.dimension(); ++i) {
            if (state[i] == Amplitude{0, 0} || (i & mask)) continue;
            next[i] += alpha * state[i];
            next[i | mask] += beta * state[i];
        }
        std::swap(state.amplitudes_, next);
    }
    return state;
}

double PureState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) total += std::norm(a);
    return total;
}

double PureState::probability_zero(std::size_t site) const {
    if (site >= num_sites_) throw std::out_of_range("site index " + std::to_string(site) + " out of range");
    const std::size_t mask = std::size_t{1} << site;
    double p = 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (!(i & mask)) p += std::norm(amplitudes_[i]);
    }
    return p;
}

double PureState::fidelity(const PureState &other) const {
    if (other.num_sites_ != num_sites_) throw MismatchedRegister("fidelity between states of different registers");
    Amplitude overlap{0, 0};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) overlap += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    return std::norm(overlap);
}

std::string_view channel_name(Channel c) {
    switch (c) {
        case Channel::ElectronRF:
            return "ELECTRON";
        case Channel::PhosphorusNuclearRF:
            return "PHOSPHORUS";
        case Channel::TipCarbonNuclearRF:
            return "CARBON";
    }
    return "?";
}

void check_pulse(const Pulse &pulse) {
    if (!(pulse.angle > 0 && pulse.angle <= 2 * std::numbers::pi)) {
        throw std::invalid_argument("pulse angle must lie in (0, 2pi]");
    }
    if (!(pulse.frequency > 0)) throw std::invalid_argument("pulse frequency must be positive");
    if (!(pulse.duration > 0)) throw std::invalid_argument("pulse duration must be positive");
}

std::size_t addressed_site(Channel channel, const RegisterLayout &layout) {
    if (channel == Channel::TipCarbonNuclearRF) return layout.tip_site();
    if (layout.tip().is_parked()) {
        throw TipParked(std::string(channel_name(channel)) + " pulse needs the tip over a qubit, but it is parked");
    }
    const std::size_t q = layout.tip().qubit();
    return channel == Channel::ElectronRF ? layout.electron_site(q) : layout.nucleus_site(q);
}

PulseOutcome apply_selective_pulse(PureState &state, const Pulse &pulse, const RegisterLayout &layout,
                                   const MachineConfig &cfg) {
    if (state.num_sites() != layout.size()) {
        throw MismatchedRegister("state has " + std::to_string(state.num_sites()) + " sites, register has " +
                                 std::to_string(layout.size()));
    }
    check_pulse(pulse);
    PulseOutcome outcome;
    const std::size_t site = addressed_site(pulse.channel, layout);
    outcome.addressed_site = site;

    // The diagonal Hamiltonian couples a spin only to its hyperfine partners,
    // so the line of `site` is fixed by the spectator bits at those partners.
    const std::vector<std::size_t> partners = coupled_sites(site, layout);
    std::vector<bool> resonant(std::size_t{1} << partners.size());
    for (std::size_t pattern = 0; pattern < resonant.size(); ++pattern) {
        BasisConfiguration config = BasisConfiguration::ground(layout.size());
        for (std::size_t k = 0; k < partners.size(); ++k) config = config.with_bit(partners[k], (pattern >> k) & 1U);
        const double line = transition_frequency(config, site, layout, cfg);
        resonant[pattern] = std::fabs(line - pulse.frequency) <= cfg.selectivity_tolerance;
    }
    if (std::none_of(resonant.begin(), resonant.end(), [](bool r) { return r; })) return outcome;

    const Rotation2 u = pulse_matrix(pulse);
    // LogicalX tracks plain bit flips: pi swaps, 2pi (two swaps) is the identity.
    const bool logical = pulse.mode == PulseMode::LogicalX;
    const bool plain_swap = logical && pulse.angle == std::numbers::pi;
    const bool full_turn = logical && pulse.angle == 2 * std::numbers::pi;
    const std::size_t mask = std::size_t{1} << site;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) continue;
        if (!resonant[gather_bits(i, partners)]) continue;
        const std::size_t j = i | mask;
        ++outcome.resonant_pairs;
        outcome.resonant_population += std::norm(amps[i]) + std::norm(amps[j]);
        if (plain_swap) {
            std::swap(amps[i], amps[j]);
        } else if (!full_turn) {
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[j];
            amps[i] = u.u00 * a0 + u.u01 * a1;
            amps[j] = u.u10 * a0 + u.u11 * a1;
        }
    }
    return outcome;
}

SpinMeasurement measure_spin(PureState &state, std::size_t site, Rng &rng) {
    const double total = state.norm_squared();
    if (total < kDegenerateNorm) throw DegenerateState("state norm collapsed before measurement");
    const double p0 = state.probability_zero(site) / total;
    const bool bit = !(rng.uniform() < p0);
    const double p = bit ? 1.0 - p0 : p0;
    const std::size_t mask = std::size_t{1} << site;
    double kept = 0;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (bool((i & mask) != 0) != bit) {
            amps[i] = 0;
        } else {
            kept += std::norm(amps[i]);
        }
    }
    if (kept < kDegenerateNorm) throw DegenerateState("post-measurement branch has vanishing norm");
    const double scale = 1.0 / std::sqrt(kept);
    for (auto &a : amps) a *= scale;
    return {bit, p};
}

SpinMeasurement measure_spin(PureState &state, std::size_t site, std::uint64_t seed) {
    Rng rng(seed);
    return measure_spin(state, site, rng);
}

double thermal_ground_probability(double splitting_hz, const MachineConfig &cfg) {
    const double x = cfg.h * splitting_hz / (cfg.k_B * cfg.temperature);
    return 1.0 / (1.0 + std::exp(-x));
}

BasisConfiguration thermal_sample(const RegisterLayout &layout, const MachineConfig &cfg, Rng &rng,
                                  ThermalSpins which) {
    if (!(cfg.temperature > 0)) throw std::invalid_argument("temperature must be positive");
    BasisConfiguration config = BasisConfiguration::ground(layout.size());
    for (std::size_t site = 0; site < layout.size(); ++site) {
        const Species s = species_of(layout, site);
        if (which == ThermalSpins::QubitNuclei && s != Species::PhosphorusNucleus) continue;
        const double p0 = thermal_ground_probability(zeeman_frequency(species(s), cfg), cfg);
        config = config.with_bit(site, !(rng.uniform() < p0));
    }
    return config;
}

double AncillaDiagnostics::min_population_zero() const {
    return population_zero.empty() ? 1.0 : *std::min_element(population_zero.begin(), population_zero.end());
}

std::vector<std::size_t> ancilla_sites(const RegisterLayout &layout) {
    std::vector<std::size_t> sites;
    for (std::size_t q = 0; q < layout.num_qubits(); ++q) sites.push_back(layout.electron_site(q));
    sites.push_back(layout.tip_site());
    return sites;
}

AncillaDiagnostics ancilla_diagnostics(const PureState &state, const RegisterLayout &layout) {
    if (state.num_sites() != layout.size()) throw MismatchedRegister("state does not match register");
    const auto sites = ancilla_sites(layout);
    return ancilla_diagnostics(state, sites);
}

AncillaDiagnostics ancilla_diagnostics(const PureState &state, std::span<const std::size_t> sites) {
    AncillaDiagnostics out;
    out.sites.assign(sites.begin(), sites.end());
    for (std::size_t s : sites) out.population_zero.push_back(state.probability_zero(s));

    std::vector<std::size_t> rest;
    for (std::size_t s = 0; s < state.num_sites(); ++s) {
        if (std::find(sites.begin(), sites.end(), s) == sites.end()) rest.push_back(s);
    }
    // psi as a matrix M[a][b] over (kept sites, traced sites); purity = ||M^dagger M||_F^2,
    // formed on whichever side is smaller.
    const std::size_t dim_a = std::size_t{1} << sites.size();
    const std::size_t dim_b = std::size_t{1} << rest.size();
    std::vector<Amplitude> m(dim_a * dim_b);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        m[gather_bits(i, sites) * dim_b + gather_bits(i, rest)] = state[i];
    }
    const bool gram_over_a = dim_a <= dim_b;
    const std::size_t outer = gram_over_a ? dim_a : dim_b;
    const std::size_t inner = gram_over_a ? dim_b : dim_a;
    auto at = [&](std::size_t o, std::size_t k) { return gram_over_a ? m[o * dim_b + k] : m[k * dim_b + o]; };
    double purity = 0;
    for (std::size_t x = 0; x < outer; ++x) {
        for (std::size_t y = x; y < outer; ++y) {
            Amplitude g{0, 0};
            for (std::size_t k = 0; k < inner; ++k) g += at(x, k) * std::conj(at(y, k));
            purity += (x == y ? 1.0 : 2.0) * std::norm(g);
        }
    }
    out.purity = purity;
    return out;
}

void dump_state(std::ostream &out, const PureState &state) {
    std::vector<std::pair<std::string, Amplitude>> rows;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (std::abs(state[i]) <= kDumpThreshold) continue;
        rows.emplace_back(BasisConfiguration(i, state.num_sites()).to_string(), state[i]);
    }
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    char buf[96];
    for (const auto &[bits, amp] : rows) {
        std::snprintf(buf, sizeof buf, " %.17g %.17g\n", amp.real(), amp.imag());
        out << bits << buf;
    }
}

}  // namespace endos
