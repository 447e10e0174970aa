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

#include "endos/machine_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "endos/errors.hpp"
#include "endos/spin_physics.hpp"

namespace endos {

namespace {

struct KeyBinding {
    const char *key;
    double MachineConfig::*member;
};

constexpr KeyBinding kBindings[] = {
    {"B", &MachineConfig::B},
    {"A_z", &MachineConfig::A_z},
    {"A_z_prime", &MachineConfig::A_z_prime},
    {"A_prime", &MachineConfig::A_prime},
    {"temperature", &MachineConfig::temperature},
    {"T2", &MachineConfig::T2},
    {"lattice_spacing", &MachineConfig::lattice_spacing},
    {"tip_move_time", &MachineConfig::tip_move_time},
    {"nuclear_pi_duration", &MachineConfig::nuclear_pi_duration},
    {"electron_pi_duration", &MachineConfig::electron_pi_duration},
    {"measurement_dwell", &MachineConfig::measurement_dwell},
    {"selectivity_tolerance", &MachineConfig::selectivity_tolerance},
    {"mu_B", &MachineConfig::mu_B},
    {"mu_N", &MachineConfig::mu_N},
    {"k_B", &MachineConfig::k_B},
    {"h", &MachineConfig::h},
};

const KeyBinding *find_binding(std::string_view key) {
    for (const auto &b : kBindings) {
        if (key == b.key) return &b;
    }
    return nullptr;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Offset of the first non-blank character at or after `from`.
std::size_t skip_blank(std::string_view s, std::size_t from) {
    while (from < s.size() && is_space(s[from])) ++from;
    return from;
}

std::string_view trim(std::string_view s) {
    std::size_t b = skip_blank(s, 0);
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

}  // namespace

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto &b : kBindings) out.emplace_back(b.key);
        return out;
    }();
    return keys;
}

double config_value(const MachineConfig &cfg, std::string_view key) {
    const KeyBinding *b = find_binding(key);
    if (b == nullptr) throw ConfigError("unknown config key '" + std::string(key) + "'");
    return cfg.*(b->member);
}

double min_spectral_gap(const MachineConfig &cfg) {
    std::vector<double> lines;
    for (TipPosition tip : {TipPosition::at(0), TipPosition::parked()}) {
        RegisterLayout layout(1, 1, tip);
        for (std::uint64_t bits = 0; bits < 8; ++bits) {
            BasisConfiguration config(bits, layout.size());
            for (std::size_t site = 0; site < layout.size(); ++site) {
                lines.push_back(transition_frequency(config, site, layout, cfg));
            }
        }
    }
    std::sort(lines.begin(), lines.end());
    // Lines closer than this are the same line up to rounding.
    constexpr double kSameLine = 1e-3;
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < lines.size(); ++i) {
        double d = lines[i] - lines[i - 1];
        if (d > kSameLine) gap = std::min(gap, d);
    }
    return gap;
}

std::vector<std::string> validate(const MachineConfig &cfg) {
    for (const auto &b : kBindings) {
        if (!std::isfinite(cfg.*(b.member))) {
            throw ConfigError(std::string("config key '") + b.key + "' is not finite");
        }
    }
    const std::pair<const char *, double> positive[] = {
        {"B", cfg.B},
        {"temperature", cfg.temperature},
        {"T2", cfg.T2},
        {"lattice_spacing", cfg.lattice_spacing},
        {"tip_move_time", cfg.tip_move_time},
        {"nuclear_pi_duration", cfg.nuclear_pi_duration},
        {"electron_pi_duration", cfg.electron_pi_duration},
        {"measurement_dwell", cfg.measurement_dwell},
        {"selectivity_tolerance", cfg.selectivity_tolerance},
        {"mu_B", cfg.mu_B},
        {"mu_N", cfg.mu_N},
        {"k_B", cfg.k_B},
        {"h", cfg.h},
    };
    for (const auto &[key, value] : positive) {
        if (!(value > 0)) throw ConfigError(std::string("config key '") + key + "' must be strictly positive");
    }
    double gap = min_spectral_gap(cfg);
    if (!(cfg.selectivity_tolerance < gap)) {
        std::ostringstream msg;
        msg << "selectivity_tolerance " << cfg.selectivity_tolerance
            << " Hz is not below the minimum spectral gap " << gap << " Hz";
        throw ConfigError(msg.str());
    }

    std::vector<std::string> warnings;
    if (cfg.lattice_spacing < kMinimumLatticeSpacing) {
        std::ostringstream msg;
        msg << "lattice_spacing " << cfg.lattice_spacing << " m is below 30 nm; neighbouring donors may couple";
        warnings.push_back(msg.str());
    }
    return warnings;
}

MachineConfig parse_config(std::string_view text, const std::string &source) {
    MachineConfig cfg;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t first = skip_blank(line, 0);
        if (first == line.size()) continue;

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(source, line_no, first + 1, "expected 'key = value'");
        }
        std::string_view key = trim(line.substr(0, eq));
        if (key.empty()) throw ParseError(source, line_no, first + 1, "missing key before '='");
        const KeyBinding *binding = find_binding(key);
        if (binding == nullptr) {
            throw ParseError(source, line_no, first + 1, "unknown config key '" + std::string(key) + "'");
        }

        std::size_t value_col = skip_blank(line, eq + 1);
        std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) throw ParseError(source, line_no, eq + 2, "missing value for '" + std::string(key) + "'");
        double parsed = 0;
        auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc() || end != value.data() + value.size()) {
            throw ParseError(source, line_no, value_col + 1,
                             "invalid number '" + std::string(value) + "' for '" + std::string(key) + "'");
        }
        cfg.*(binding->member) = parsed;
    }
    return cfg;
}

MachineConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

void write_config(std::ostream &out, const MachineConfig &cfg) {
    char buf[64];
    for (const auto &b : kBindings) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, cfg.*(b.member));
        out << b.key << " = " << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
    }
}

}  // namespace endos
