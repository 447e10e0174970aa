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

#include "endos/spin_physics.hpp"

#include <cmath>
#include <stdexcept>

#include "endos/errors.hpp"

namespace endos {

namespace {

// Energies near 1e11 Hz are differenced down to kHz-scale lines, so sums are
// carried in extended precision and rounded once.
using Wide = long double;

Wide magneton_hz(Magneton m, const MachineConfig &cfg) {
    Wide mu = m == Magneton::Bohr ? Wide(cfg.mu_B) : Wide(cfg.mu_N);
    return mu / Wide(cfg.h);
}

Wide zeeman_wide(const SpinSpecies &s, const MachineConfig &cfg) {
    return Wide(s.g_factor) * magneton_hz(s.magneton, cfg) * Wide(cfg.B);
}

// Zeeman energy of one spin. The ground orientation is the low-energy one:
// a Down ground state means E = +Z m, an Up ground state means E = -Z m.
Wide zeeman_energy(const SpinSpecies &s, bool bit, const MachineConfig &cfg) {
    Wide sign = s.ground_orientation == Orientation::Down ? 1 : -1;
    return sign * zeeman_wide(s, cfg) * Wide(m_value(s, bit));
}

void require_matching(const BasisConfiguration &config, const RegisterLayout &layout) {
    if (config.size() != layout.size()) {
        throw MismatchedRegister("configuration has " + std::to_string(config.size()) + " sites, register has " +
                                 std::to_string(layout.size()));
    }
}

Wide energy_wide(const BasisConfiguration &config, const RegisterLayout &layout, const MachineConfig &cfg) {
    Wide total = 0;
    const TipPosition tip = layout.tip();
    const bool tip_bit = config.bit(layout.tip_site());
    const Wide m_tip = m_value(kCarbonTip, tip_bit);
    for (std::size_t q = 0; q < layout.num_qubits(); ++q) {
        const bool p_bit = config.bit(layout.nucleus_site(q));
        const bool e_bit = config.bit(layout.electron_site(q));
        const Wide m_s = m_value(kElectron, e_bit);
        const Wide m_p = m_value(kPhosphorus, p_bit);
        const bool under_tip = tip.is_at(q);
        const Wide hyperfine = under_tip ? Wide(cfg.A_z_prime) : Wide(cfg.A_z);
        total += zeeman_energy(kElectron, e_bit, cfg);
        total += zeeman_energy(kPhosphorus, p_bit, cfg);
        total += hyperfine * m_s * m_p;
        if (under_tip) total += Wide(cfg.A_prime) * m_s * m_tip;
    }
    total += zeeman_energy(kCarbonTip, tip_bit, cfg);
    return total;
}

}  // namespace

const SpinSpecies &species(Species s) {
    switch (s) {
        case Species::Electron:
            return kElectron;
        case Species::PhosphorusNucleus:
            return kPhosphorus;
        case Species::CarbonTipNucleus:
            return kCarbonTip;
    }
    throw std::invalid_argument("unknown species");
}

Species species_of(const RegisterLayout &layout, std::size_t site) {
    switch (layout.role(site)) {
        case SiteRole::Nucleus:
            return Species::PhosphorusNucleus;
        case SiteRole::Electron:
            return Species::Electron;
        case SiteRole::TipNucleus:
            return Species::CarbonTipNucleus;
    }
    throw std::invalid_argument("unknown site role");
}

std::string_view species_name(Species s) {
    switch (s) {
        case Species::Electron:
            return "electron";
        case Species::PhosphorusNucleus:
            return "P31";
        case Species::CarbonTipNucleus:
            return "C13_tip";
    }
    return "?";
}

double zeeman_frequency(const SpinSpecies &s, const MachineConfig &cfg) {
    return static_cast<double>(zeeman_wide(s, cfg));
}

BasisConfiguration::BasisConfiguration(std::uint64_t bits, std::size_t size) : bits_(bits), size_(size) {
    if (size > 63) throw std::invalid_argument("basis configuration supports at most 63 sites");
    if (size < 64 && (bits >> size) != 0) throw std::invalid_argument("basis configuration has bits beyond its size");
}

BasisConfiguration BasisConfiguration::with_bit(std::size_t site, bool value) const {
    if (site >= size_) throw std::out_of_range("site index " + std::to_string(site) + " out of range");
    std::uint64_t mask = std::uint64_t{1} << site;
    return BasisConfiguration(value ? (bits_ | mask) : (bits_ & ~mask), size_);
}

BasisConfiguration BasisConfiguration::flipped(std::size_t site) const { return with_bit(site, !bit(site)); }

std::string BasisConfiguration::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) s[i] = bit(i) ? '1' : '0';
    return s;
}

double configuration_energy(const BasisConfiguration &config, const RegisterLayout &layout,
                            const MachineConfig &cfg) {
    require_matching(config, layout);
    return static_cast<double>(energy_wide(config, layout, cfg));
}

double transition_frequency(const BasisConfiguration &config, std::size_t site, const RegisterLayout &layout,
                            const MachineConfig &cfg) {
    require_matching(config, layout);
    if (site >= layout.size()) throw std::out_of_range("site index " + std::to_string(site) + " out of range");
    Wide e0 = energy_wide(config, layout, cfg);
    Wide e1 = energy_wide(config.flipped(site), layout, cfg);
    return static_cast<double>(std::fabs(e1 - e0));
}

std::vector<std::size_t> coupled_sites(std::size_t site, const RegisterLayout &layout) {
    const TipPosition tip = layout.tip();
    switch (layout.role(site)) {
        case SiteRole::Nucleus:
            return {site + 1};
        case SiteRole::Electron: {
            std::vector<std::size_t> out{site - 1};
            if (tip.is_at(site / 2)) out.push_back(layout.tip_site());
            return out;
        }
        case SiteRole::TipNucleus:
            if (tip.is_parked()) return {};
            return {layout.electron_site(tip.qubit())};
    }
    return {};
}

std::array<ClosedFormFrequencies::Named, 6> ClosedFormFrequencies::named() const {
    return {{{"single_qubit", single_qubit},
             {"f_ec", f_ec},
             {"f_a", f_a},
             {"f_et1", f_et1},
             {"f_et0", f_et0},
             {"f_p", f_p}}};
}

ClosedFormFrequencies closed_form_frequencies(const MachineConfig &cfg) {
    const Wide ze = zeeman_wide(kElectron, cfg);
    const Wide zp = zeeman_wide(kPhosphorus, cfg);
    const Wide za = zeeman_wide(kCarbonTip, cfg);
    const Wide azp = cfg.A_z_prime;
    const Wide ap = cfg.A_prime;
    ClosedFormFrequencies f{};
    f.single_qubit = static_cast<double>(zp - azp / 2);
    f.f_ec = static_cast<double>(ze + ap / 2 - azp / 2);
    f.f_a = static_cast<double>(std::fabs(za - ap / 2));
    f.f_et1 = static_cast<double>(ze + azp / 2 + ap / 2);
    f.f_et0 = static_cast<double>(ze - azp / 2 + ap / 2);
    f.f_p = static_cast<double>(zp - azp / 2);
    return f;
}

double modulation_frequency(bool p_bit, bool a_bit, const MachineConfig &cfg) {
    const Wide ze = zeeman_wide(kElectron, cfg);
    const Wide tip_term = (a_bit ? -1 : 1) * Wide(cfg.A_prime) / 2;
    const Wide p_term = (p_bit ? -1 : 1) * Wide(cfg.A_z_prime) / 2;
    return static_cast<double>(ze + tip_term + p_term);
}

std::vector<FrequencyAuditEntry> audit_closed_forms(const MachineConfig &cfg, double max_residual_hz) {
    const RegisterLayout layout(1, 1, TipPosition::at(0));
    const std::size_t nucleus = layout.nucleus_site(0);
    const std::size_t electron = layout.electron_site(0);
    const std::size_t tip = layout.tip_site();
    auto config = [&](bool p, bool e, bool a) {
        return BasisConfiguration::ground(layout.size())
            .with_bit(nucleus, p)
            .with_bit(electron, e)
            .with_bit(tip, a);
    };

    struct Intended {
        std::size_t site;
        BasisConfiguration config;
    };
    const Intended intended[6] = {
        {nucleus, config(false, false, false)},  // single qubit: electron and tip in |0>
        {electron, config(true, false, false)},  // f_ec
        {tip, config(false, true, false)},       // f_a
        {electron, config(true, false, true)},   // f_et1
        {electron, config(false, false, true)},  // f_et0
        {nucleus, config(false, true, false)},   // f_p
    };

    std::vector<FrequencyAuditEntry> out;
    const auto named = closed_form_frequencies(cfg).named();
    for (std::size_t k = 0; k < named.size(); ++k) {
        FrequencyAuditEntry entry;
        entry.name = std::string(named[k].name);
        entry.closed_form_hz = named[k].value;
        entry.intended_site = intended[k].site;
        entry.intended_config = intended[k].config;
        entry.intended_engine_hz = transition_frequency(intended[k].config, intended[k].site, layout, cfg);
        entry.intended_matches = std::fabs(entry.intended_engine_hz - entry.closed_form_hz) <= max_residual_hz;

        if (entry.intended_matches) {
            entry.matched_site = intended[k].site;
            entry.matched_config = intended[k].config;
            entry.matched_engine_hz = entry.intended_engine_hz;
        } else {
            for (std::size_t site = 0; site < layout.size() && !entry.matched(); ++site) {
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << layout.size()); ++bits) {
                    BasisConfiguration c(bits, layout.size());
                    if (c.bit(site)) continue;
                    double f = transition_frequency(c, site, layout, cfg);
                    if (std::fabs(f - entry.closed_form_hz) <= max_residual_hz) {
                        entry.matched_site = site;
                        entry.matched_config = c;
                        entry.matched_engine_hz = f;
                        break;
                    }
                }
            }
        }
        entry.residual_hz = entry.matched() ? std::fabs(entry.matched_engine_hz - entry.closed_form_hz)
                                            : std::fabs(entry.intended_engine_hz - entry.closed_form_hz);
        out.push_back(entry);
    }
    return out;
}

}  // namespace endos
