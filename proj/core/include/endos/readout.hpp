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
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "endos/machine_config.hpp"
#include "endos/register_layout.hpp"
#include "endos/rng.hpp"
#include "endos/state.hpp"

namespace endos {

struct MeasurementRecord {
    std::size_t qubit = 0;
    double observed_frequency = 0;  // Hz
    bool inferred_p_bit = false;
    bool inferred_a_bit = false;
    double pre_measurement_probability = 0;
};

/// Projectively reads the 31P bit of `qubit` (one draw from `rng`), then the
/// tip 13C bit (a second draw), and reports the modulation line of the
/// outcome. The tip must sit over `qubit`.
MeasurementRecord measure_via_current(PureState &state, std::size_t qubit, const RegisterLayout &layout,
                                      const MachineConfig &cfg, Rng &rng);

/// The four modulation lines indexed by (p_bit << 1) | a_bit.
std::array<double, 4> modulation_lines(const MachineConfig &cfg);
/// Smallest gap between the four modulation lines.
double min_line_gap(const MachineConfig &cfg);

/// The unique (p_bit, a_bit) whose line lies within `tolerance` of `f`.
/// Throws std::invalid_argument if tolerance is not below half the minimum
/// line gap, UnclassifiableFrequency if no line matches.
std::pair<bool, bool> classify_frequency(double f, const MachineConfig &cfg, double tolerance);

/// Synthetic tunneling-current trace. Carrier frequencies are multiplied by
/// `scale` so physical GHz lines can be sampled at modest rates.
struct CurrentTrace {
    double sample_rate = 0;  // Hz, in scaled units
    double duration = 0;     // s
    double scale = 1;
    std::vector<double> samples;
};

struct TraceParams {
    double snr = 10;  // signal power / noise power
    double duration = 0.1;
    double sample_rate = 0;  // 0 picks 4x the highest scaled line
    double scale = 1e-6;
};

/// Scaled highest line times four, rounded up to a whole kHz.
double default_sample_rate(const MachineConfig &cfg, double scale);

/// Unit-amplitude sinusoid at the scaled modulation line plus white Gaussian
/// noise of power 1 / (2 snr). Throws AliasingError when the sample rate does
/// not exceed twice every scaled line.
CurrentTrace synth_trace(bool p_bit, bool a_bit, const MachineConfig &cfg, TraceParams params, Rng &rng);

/// Peak of the magnitude spectrum (DC excluded), refined by parabolic
/// interpolation on the neighbouring bins. Returned in physical Hz
/// (divided by the trace scale).
double detect_peak(const CurrentTrace &trace);

/// Bin spacing of the trace spectrum in physical Hz.
double bin_width(const CurrentTrace &trace);

/// Classifier tolerance used for traces: a quarter of the minimum line gap.
double trace_tolerance(const MachineConfig &cfg);

/// Two columns: time_s amplitude.
void write_trace(std::ostream &out, const CurrentTrace &trace);

}  // namespace endos
