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

#include "endos/readout.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "endos/errors.hpp"
#include "endos/spin_physics.hpp"

namespace endos {

namespace {

// FFTW's planner is not thread-safe; execution is.
std::mutex &planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void *p) const { fftw_free(p); }
};

}  // namespace

MeasurementRecord measure_via_current(PureState &state, std::size_t qubit, const RegisterLayout &layout,
                                      const MachineConfig &cfg, Rng &rng) {
    if (layout.tip().is_parked()) throw TipParked("readout of qubit " + std::to_string(qubit) + " with the tip parked");
    if (!layout.tip().is_at(qubit)) {
        throw IllFormedProgram("readout of qubit " + std::to_string(qubit) + " with the tip over qubit " +
                               layout.tip().to_string());
    }
    const SpinMeasurement p = measure_spin(state, layout.nucleus_site(qubit), rng);
    const SpinMeasurement a = measure_spin(state, layout.tip_site(), rng);
    MeasurementRecord record;
    record.qubit = qubit;
    record.inferred_p_bit = p.bit;
    record.inferred_a_bit = a.bit;
    record.pre_measurement_probability = p.probability;
    record.observed_frequency = modulation_frequency(p.bit, a.bit, cfg);
    return record;
}

std::array<double, 4> modulation_lines(const MachineConfig &cfg) {
    return {modulation_frequency(false, false, cfg), modulation_frequency(false, true, cfg),
            modulation_frequency(true, false, cfg), modulation_frequency(true, true, cfg)};
}

double min_line_gap(const MachineConfig &cfg) {
    const auto lines = modulation_lines(cfg);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) gap = std::min(gap, std::fabs(lines[i] - lines[j]));
    }
    return gap;
}

std::pair<bool, bool> classify_frequency(double f, const MachineConfig &cfg, double tolerance) {
    if (!(tolerance > 0 && tolerance < min_line_gap(cfg) / 2)) {
        throw std::invalid_argument("classifier tolerance must be positive and below half the minimum line gap");
    }
    const auto lines = modulation_lines(cfg);
    int found = -1;
    for (int k = 0; k < 4; ++k) {
        if (std::fabs(lines[k] - f) <= tolerance) {
            if (found >= 0) throw UnclassifiableFrequency("frequency matches more than one modulation line");
            found = k;
        }
    }
    if (found < 0) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.6f Hz is not within tolerance of any modulation line", f);
        throw UnclassifiableFrequency(buf);
    }
    return {(found >> 1) & 1, found & 1};
}

double default_sample_rate(const MachineConfig &cfg, double scale) {
    const auto lines = modulation_lines(cfg);
    const double top = *std::max_element(lines.begin(), lines.end()) * scale;
    return std::ceil(4 * top / 1e3) * 1e3;
}

double trace_tolerance(const MachineConfig &cfg) { return min_line_gap(cfg) / 4; }

CurrentTrace synth_trace(bool p_bit, bool a_bit, const MachineConfig &cfg, TraceParams params, Rng &rng) {
    if (!(params.snr > 0)) throw std::invalid_argument("snr must be positive");
    if (!(params.duration > 0)) throw std::invalid_argument("trace duration must be positive");
    if (!(params.scale > 0)) throw std::invalid_argument("trace scale must be positive");
    if (params.sample_rate == 0) params.sample_rate = default_sample_rate(cfg, params.scale);
    const auto lines = modulation_lines(cfg);
    for (double line : lines) {
        if (!(params.sample_rate > 2 * line * params.scale)) {
            throw AliasingError("sample rate " + std::to_string(params.sample_rate) +
                                " Hz does not exceed twice the scaled line " + std::to_string(line * params.scale) +
                                " Hz");
        }
    }

    CurrentTrace trace;
    trace.sample_rate = params.sample_rate;
    trace.duration = params.duration;
    trace.scale = params.scale;
    const auto n = static_cast<std::size_t>(std::llround(params.duration * params.sample_rate));
    if (n < 4) throw std::invalid_argument("trace too short");
    const double f = modulation_frequency(p_bit, a_bit, cfg) * params.scale;
    const double sigma = std::sqrt(0.5 / params.snr);
    const double w = 2 * std::numbers::pi * f / params.sample_rate;
    trace.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k) trace.samples[k] = std::sin(w * double(k)) + sigma * rng.normal();
    return trace;
}

double bin_width(const CurrentTrace &trace) {
    return trace.sample_rate / double(trace.samples.size()) / trace.scale;
}

double detect_peak(const CurrentTrace &trace) {
    const std::size_t n = trace.samples.size();
    if (n < 4) throw std::invalid_argument("trace too short for spectral analysis");
    const std::size_t bins = n / 2 + 1;

    std::unique_ptr<double, FftwFree> in(static_cast<double *>(fftw_malloc(sizeof(double) * n)));
    std::unique_ptr<fftw_complex, FftwFree> out(static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * bins)));
    if (!in || !out) throw std::bad_alloc();
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
    }
    std::copy(trace.samples.begin(), trace.samples.end(), in.get());
    fftw_execute(plan);
    std::vector<double> mag(bins);
    for (std::size_t k = 0; k < bins; ++k) mag[k] = std::hypot(out.get()[k][0], out.get()[k][1]);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    std::size_t peak = 1;
    for (std::size_t k = 2; k < bins; ++k) {
        if (mag[k] > mag[peak]) peak = k;
    }
    double offset = 0;
    if (peak > 1 && peak + 1 < bins) {
        const double l = mag[peak - 1];
        const double c = mag[peak];
        const double r = mag[peak + 1];
        const double denom = l - 2 * c + r;
        if (denom != 0) offset = 0.5 * (l - r) / denom;
    }
    const double f_scaled = (double(peak) + offset) * trace.sample_rate / double(n);
    return f_scaled / trace.scale;
}

void write_trace(std::ostream &out, const CurrentTrace &trace) {
    char buf[80];
    for (std::size_t k = 0; k < trace.samples.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.12g %.17g\n", double(k) / trace.sample_rate, trace.samples[k]);
        out << buf;
    }
}

}  // namespace endos
