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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "endos/compiler.hpp"
#include "endos/errors.hpp"
#include "oracles/spin_oracle.hpp"

using namespace endos;

namespace {

constexpr double kPi = std::numbers::pi;

PureState random_state(std::size_t sites, std::mt19937_64 &gen) {
    std::normal_distribution<double> n;
    std::vector<Amplitude> a(std::size_t{1} << sites);
    double total = 0;
    for (auto &x : a) {
        x = {n(gen), n(gen)};
        total += std::norm(x);
    }
    for (auto &x : a) x /= std::sqrt(total);
    return PureState(sites, std::move(a));
}

Pulse electron(double f) { return Pulse{Channel::ElectronRF, f, kPi, 0, 1e-7, PulseMode::LogicalX}; }

}  // namespace

TEST(PureState, BasisAndProductConstruction) {
    RegisterLayout layout(2);
    PureState g = PureState::ground(layout);
    EXPECT_EQ(g.dimension(), 32u);
    EXPECT_EQ(g[0], Amplitude(1, 0));
    const std::pair<Amplitude, Amplitude> q[] = {{1, 1}, {0.6, Amplitude(0, 0.8)}};
    PureState p = PureState::product(layout, q);
    EXPECT_NEAR(p.norm_squared(), 1.0, 1e-15);
    EXPECT_NEAR(p.probability_zero(layout.nucleus_site(0)), 0.5, 1e-15);
    EXPECT_NEAR(p.probability_zero(layout.nucleus_site(1)), 0.36, 1e-15);
    const auto expected = oracle::product_state({{1, 1}, {0.6, Amplitude(0, 0.8)}});
    for (std::size_t i = 0; i < 32; ++i) EXPECT_NEAR(std::abs(p[i] - expected[i]), 0.0, 1e-15);
}

TEST(SelectivePulse, ControlInGroundIsUntouchedByFec) {
    MachineConfig cfg;
    RegisterLayout layout(1, 1, TipPosition::at(0));
    PureState psi = PureState::ground(layout);
    const PureState before = psi;
    const PulseOutcome out = apply_selective_pulse(psi, electron(cnot_frequencies(cfg).f_ec), layout, cfg);
    EXPECT_EQ(psi, before);
    EXPECT_FALSE(out.no_resonant_transition());  // the |1>_c branch line exists
    EXPECT_TRUE(out.idle());                      // but holds no population here
    EXPECT_EQ(out.resonant_population, 0.0);
}

TEST(SelectivePulse, ControlInOneFlipsItsElectron) {
    MachineConfig cfg;
    RegisterLayout layout(1, 1, TipPosition::at(0));
    PureState psi(BasisConfiguration(0b001, 3));
    apply_selective_pulse(psi, electron(cnot_frequencies(cfg).f_ec), layout, cfg);
    EXPECT_EQ(psi, PureState(BasisConfiguration(0b011, 3)));
}

TEST(SelectivePulse, DetunedPulseFlagsNoResonance) {
    MachineConfig cfg;
    RegisterLayout layout(2, 0, TipPosition::at(1));
    std::mt19937_64 gen(3);
    PureState psi = random_state(5, gen);
    const PureState before = psi;
    const PulseOutcome out = apply_selective_pulse(psi, electron(cnot_frequencies(cfg).f_ec + 5e3), layout, cfg);
    EXPECT_TRUE(out.no_resonant_transition());
    EXPECT_EQ(psi, before);
}

TEST(SelectivePulse, DoublePiIsExactIdentity) {
    MachineConfig cfg;
    RegisterLayout layout(2, 0, TipPosition::at(0));
    std::mt19937_64 gen(5);
    const auto f = cnot_frequencies(cfg);
    for (double line : {f.f_ec, f.f_et0, f.f_et1}) {
        PureState psi = random_state(5, gen);
        const PureState before = psi;
        apply_selective_pulse(psi, electron(line), layout, cfg);
        apply_selective_pulse(psi, electron(line), layout, cfg);
        EXPECT_EQ(psi, before);
    }
    Pulse tip{Channel::TipCarbonNuclearRF, f.f_a, kPi, 0, 1e-5, PulseMode::LogicalX};
    PureState psi = random_state(5, gen);
    const PureState before = psi;
    apply_selective_pulse(psi, tip, layout, cfg);
    apply_selective_pulse(psi, tip, layout, cfg);
    EXPECT_EQ(psi, before);
}

TEST(SelectivePulse, FullTurnPhasedRotationNegatesResonantBranch) {
    // Oracle: R(pi) R(pi) with R(a) = [[cos a/2, -i sin a/2], [-i sin a/2, cos a/2]]
    // multiplies out to -I on the resonant pair.
    const Amplitude c = std::cos(kPi / 2), s = std::sin(kPi / 2), mi(0, -1);
    const Amplitude r00 = c * c + (mi * s) * (mi * s), r01 = c * (mi * s) + (mi * s) * c;
    EXPECT_NEAR(std::abs(r00 - Amplitude(-1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r01), 0.0, 1e-15);

    MachineConfig cfg;
    RegisterLayout layout(1, 1, TipPosition::at(0));
    const double f_ec = cnot_frequencies(cfg).f_ec;
    std::mt19937_64 gen(9);
    PureState psi = random_state(3, gen);
    const PureState before = psi;
    Pulse turn{Channel::ElectronRF, f_ec, 2 * kPi, 0.3, 2e-7, PulseMode::PhasedRotation};
    apply_selective_pulse(psi, turn, layout, cfg);
    for (std::size_t i = 0; i < 8; ++i) {
        // Resonant pair: nucleus |1>, tip |0> (bits 0 set, 2 clear).
        const bool resonant = (i & 1U) && !(i & 4U);
        EXPECT_EQ(psi[i], resonant ? -before[i] : before[i]) << i;
    }
}

TEST(SelectivePulse, PhasedRotationMatchesDirectMatrix) {
    MachineConfig cfg;
    RegisterLayout layout(1, 1, TipPosition::at(0));
    const double f_ec = cnot_frequencies(cfg).f_ec;
    const double angle = 1.1, phase = 0.7;
    PureState psi(BasisConfiguration(0b001, 3));  // nucleus |1>, electron |0>
    apply_selective_pulse(psi, Pulse{Channel::ElectronRF, f_ec, angle, phase, 1e-7, PulseMode::PhasedRotation},
                          layout, cfg);
    const Amplitude lower = std::cos(angle / 2);
    const Amplitude upper = Amplitude(0, -1) * std::sin(angle / 2) * std::polar(1.0, phase);
    EXPECT_NEAR(std::abs(psi[0b001] - lower), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(psi[0b011] - upper), 0.0, 1e-15);
}

TEST(SelectivePulse, AgreesWithPairwiseOracle) {
    // Reference: rotate every pair whose full-register oracle line is within tolerance.
    MachineConfig cfg;
    oracle::Params x;
    std::mt19937_64 gen(13);
    const auto f = cnot_frequencies(cfg);
    for (std::size_t tip = 0; tip < 3; ++tip) {
        RegisterLayout layout(3, 0, TipPosition::at(tip));
        const std::size_t sites[] = {layout.electron_site(tip), layout.nucleus_site(tip), layout.tip_site()};
        const Channel channels[] = {Channel::ElectronRF, Channel::PhosphorusNuclearRF, Channel::TipCarbonNuclearRF};
        const double lines[][2] = {{f.f_ec, f.f_et0}, {f.f_p, addressed_nuclear_frequency(cfg)}, {f.f_a, f.f_a}};
        for (int k = 0; k < 3; ++k) {
            for (double line : lines[k]) {
                PureState psi = random_state(7, gen);
                std::vector<Amplitude> ref(psi.amplitudes().begin(), psi.amplitudes().end());
                const std::size_t mask = std::size_t{1} << sites[k];
                for (std::size_t i = 0; i < ref.size(); ++i) {
                    if (i & mask) continue;
                    if (std::fabs(double(oracle::register_line(i, sites[k], 3, long(tip), x)) - line) <= 1e3) {
                        std::swap(ref[i], ref[i | mask]);
                    }
                }
                apply_selective_pulse(psi, Pulse{channels[k], line, kPi, 0, 1e-6, PulseMode::LogicalX}, layout, cfg);
                for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_EQ(psi[i], ref[i]);
            }
        }
    }
}

TEST(SelectivePulse, ParkedTipRejectsTipAddressedChannels) {
    MachineConfig cfg;
    RegisterLayout layout(2);
    PureState psi = PureState::ground(layout);
    EXPECT_THROW(apply_selective_pulse(psi, electron(1e11), layout, cfg), TipParked);
    Pulse p{Channel::PhosphorusNuclearRF, 1e8, kPi, 0, 1e-5, PulseMode::LogicalX};
    EXPECT_THROW(apply_selective_pulse(psi, p, layout, cfg), TipParked);
    // The tip 13C is always addressable; parked it sees only its bare Zeeman line.
    Pulse tip{Channel::TipCarbonNuclearRF, zeeman_frequency(kCarbonTip, cfg), kPi, 0, 1e-5, PulseMode::LogicalX};
    apply_selective_pulse(psi, tip, layout, cfg);
    EXPECT_EQ(psi, PureState(BasisConfiguration(0b10000, 5)));
}

TEST(SelectivePulse, InvalidPulsesRejected) {
    MachineConfig cfg;
    RegisterLayout layout(1, 1, TipPosition::at(0));
    PureState psi = PureState::ground(layout);
    EXPECT_THROW(apply_selective_pulse(psi, Pulse{Channel::ElectronRF, 1e11, 0, 0, 1e-7}, layout, cfg),
                 std::invalid_argument);
    EXPECT_THROW(apply_selective_pulse(psi, Pulse{Channel::ElectronRF, 1e11, 7, 0, 1e-7}, layout, cfg),
                 std::invalid_argument);
    EXPECT_THROW(apply_selective_pulse(psi, Pulse{Channel::ElectronRF, -1, kPi, 0, 1e-7}, layout, cfg),
                 std::invalid_argument);
    EXPECT_THROW(apply_selective_pulse(psi, Pulse{Channel::ElectronRF, 1e11, kPi, 0, 0}, layout, cfg),
                 std::invalid_argument);
}

TEST(SelectivePulse, LocalityKeepsOtherMarginals) {
    MachineConfig cfg;
    std::mt19937_64 gen(17);
    RegisterLayout layout(3, 0, TipPosition::at(1));
    const auto f = cnot_frequencies(cfg);
    for (int trial = 0; trial < 30; ++trial) {
        PureState psi = random_state(7, gen);
        std::vector<double> before;
        for (std::size_t s = 0; s < 7; ++s) before.push_back(psi.probability_zero(s));
        const double lines[] = {f.f_ec, f.f_et1, f.f_et0};
        const auto out = apply_selective_pulse(psi, electron(lines[trial % 3]), layout, cfg);
        for (std::size_t s = 0; s < 7; ++s) {
            if (s == out.addressed_site) continue;
            EXPECT_NEAR(psi.probability_zero(s), before[s], 1e-14);
        }
    }
}

TEST(MeasureSpin, BasisStateIsDeterministic) {
    PureState psi(BasisConfiguration(0b01101, 5));
    for (std::size_t s = 0; s < 5; ++s) {
        PureState copy = psi;
        const auto m = measure_spin(copy, s, std::uint64_t{42 + s});
        EXPECT_EQ(m.bit, bool((0b01101 >> s) & 1));
        EXPECT_EQ(m.probability, 1.0);
        EXPECT_EQ(copy, psi);
    }
}

TEST(MeasureSpin, BornRuleFrequency) {
    const int n = 4000;
    int zeros = 0;
    for (int seed = 1; seed <= n; ++seed) {
        const double r = 1 / std::sqrt(2.0);
        PureState psi(1, {r, r});
        const auto m = measure_spin(psi, 0, std::uint64_t(seed));
        EXPECT_NEAR(m.probability, 0.5, 1e-15);
        zeros += !m.bit;
    }
    const double sigma = std::sqrt(0.25 / n);
    EXPECT_NEAR(double(zeros) / n, 0.5, 3 * sigma);
}

TEST(MeasureSpin, CollapsesTheEntangledStepTwoState) {
    // alpha'|0 0_ec 0_a> + beta'|1 1_ec 1_a> on (nucleus, electron, tip).
    const double alpha = 0.6, beta = 0.8;
    std::vector<Amplitude> a(8);
    a[0b000] = alpha;
    a[0b111] = beta;
    for (std::uint64_t seed = 1; seed < 100; ++seed) {
        PureState psi(3, a);
        const auto m = measure_spin(psi, 0, seed);
        if (m.bit) {
            EXPECT_NEAR(m.probability, 0.64, 1e-15);
            EXPECT_NEAR(std::abs(psi[0b111] - Amplitude(1, 0)), 0.0, 1e-15);
            EXPECT_EQ(psi.probability_zero(1), 0.0);
            EXPECT_EQ(psi.probability_zero(2), 0.0);
            return;
        }
    }
    FAIL() << "never observed |1>";
}

TEST(MeasureSpin, SeedsReproduceBitForBit) {
    std::mt19937_64 gen(23);
    PureState base = random_state(6, gen);
    for (std::uint64_t seed : {1ULL, 99ULL, 123456789ULL}) {
        PureState a = base, b = base;
        Rng ra(seed), rb(seed);
        for (std::size_t s = 0; s < 6; ++s) {
            EXPECT_EQ(measure_spin(a, s, ra).bit, measure_spin(b, s, rb).bit);
        }
        EXPECT_EQ(a, b);
    }
}

TEST(MeasureSpin, DegenerateStateDetected) {
    PureState psi(2, {0, 0, 0, 0});
    EXPECT_THROW(measure_spin(psi, 0, std::uint64_t{1}), DegenerateState);
}

TEST(ThermalSample, GroundFractionsAtOneKelvin) {
    // Frozen from 1 / (1 + exp(-h f / k_B T)) with f_e = 139.96 GHz and f_p = 86.135 MHz.
    MachineConfig cfg;
    EXPECT_NEAR(thermal_ground_probability(zeeman_frequency(kElectron, cfg), cfg), 0.99879146623774336, 1e-12);
    EXPECT_NEAR(thermal_ground_probability(zeeman_frequency(kPhosphorus, cfg), cfg), 0.50103345917490225, 1e-12);
    EXPECT_NEAR(thermal_ground_probability(zeeman_frequency(kPhosphorus, cfg), cfg), 0.5, 0.01);
}

TEST(ThermalSample, HotLimitIsUnbiased) {
    MachineConfig cfg;
    cfg.temperature = 1e9;
    RegisterLayout layout(4);
    Rng rng(5);
    std::size_t zeros = 0, total = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto c = thermal_sample(layout, cfg, rng);
        for (std::size_t s = 0; s < layout.size(); ++s, ++total) zeros += !c.bit(s);
    }
    EXPECT_NEAR(double(zeros) / double(total), 0.5, 3 * std::sqrt(0.25 / double(total)));
}

TEST(ThermalSample, QubitNucleiSelectionKeepsAncillasGround) {
    MachineConfig cfg;
    RegisterLayout layout(3);
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto c = thermal_sample(layout, cfg, rng, ThermalSpins::QubitNuclei);
        for (std::size_t s : ancilla_sites(layout)) EXPECT_FALSE(c.bit(s));
    }
}

TEST(AncillaDiagnostics, ProductStateIsPure) {
    RegisterLayout layout(2);
    const std::pair<Amplitude, Amplitude> q[] = {{0.3, 0.4}, {Amplitude(0, 1), 2}};
    const auto d = ancilla_diagnostics(PureState::product(layout, q), layout);
    ASSERT_EQ(d.sites.size(), 3u);
    for (double p : d.population_zero) EXPECT_NEAR(p, 1.0, 1e-15);
    EXPECT_NEAR(d.purity, 1.0, 1e-15);
}

TEST(AncillaDiagnostics, GhzAncillasHaveHalfPurity) {
    // rho = (|000><000| + |111><111|) / 2 over the ancillas; Tr rho^2 = 1/2.
    RegisterLayout layout(2);
    std::vector<Amplitude> a(32);
    const std::size_t anc = (1u << 1) | (1u << 3) | (1u << 4);
    const double r = 1 / std::sqrt(2.0);
    a[0b00000] = r;        // qubit 0 |0>, ancillas |000>
    a[0b00001 | anc] = r;  // qubit 0 |1>, ancillas |111>
    const auto d = ancilla_diagnostics(PureState(5, a), layout);
    EXPECT_NEAR(d.purity, 0.5, 1e-15);
    for (double p : d.population_zero) EXPECT_NEAR(p, 0.5, 1e-15);
}

TEST(AncillaDiagnostics, PurityIsSymmetricUnderComplement) {
    std::mt19937_64 gen(29);
    PureState psi = random_state(5, gen);
    const std::size_t a[] = {1, 3, 4};
    const std::size_t b[] = {0, 2};
    EXPECT_NEAR(ancilla_diagnostics(psi, a).purity, ancilla_diagnostics(psi, b).purity, 1e-14);
}

TEST(DumpState, SortedNonNegligibleAmplitudes) {
    std::vector<Amplitude> a(8);
    a[0b001] = {0.6, 0};
    a[0b100] = {0, 0.8};
    a[0b010] = {1e-13, 0};
    std::ostringstream out;
    dump_state(out, PureState(3, a));
    EXPECT_EQ(out.str(), "001 0 0.80000000000000004\n100 0.59999999999999998 0\n");
}

TEST(SelectivePulse, LogicalXIgnoresPhaseAtPiAndTwoPi) {
    MachineConfig cfg;
    RegisterLayout layout(1, 1, TipPosition::at(0));
    const double f_ec = cnot_frequencies(cfg).f_ec;
    std::mt19937_64 gen(37);
    const PureState before = random_state(3, gen);
    PureState swapped = before;
    apply_selective_pulse(swapped, Pulse{Channel::ElectronRF, f_ec, kPi, 1.3, 1e-7, PulseMode::LogicalX}, layout, cfg);
    EXPECT_EQ(swapped[0b011], before[0b001]);
    EXPECT_EQ(swapped[0b001], before[0b011]);
    PureState turned = before;
    const auto out = apply_selective_pulse(
        turned, Pulse{Channel::ElectronRF, f_ec, 2 * kPi, 0.4, 2e-7, PulseMode::LogicalX}, layout, cfg);
    EXPECT_EQ(turned, before);
    EXPECT_EQ(out.resonant_pairs, 1u);
}
