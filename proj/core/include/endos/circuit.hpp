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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace endos {

namespace gate {
struct Init {
    bool operator==(const Init &) const = default;
};
struct Rot {
    std::size_t qubit = 0;
    double angle = 0;
    double phase = 0;
    bool operator==(const Rot &) const = default;
};
struct Cnot {
    std::size_t control = 0;
    std::size_t target = 0;
    bool operator==(const Cnot &) const = default;
};
struct Measure {
    std::size_t qubit = 0;
    bool operator==(const Measure &) const = default;
};
}  // namespace gate

using Gate = std::variant<gate::Init, gate::Rot, gate::Cnot, gate::Measure>;

struct Circuit {
    std::vector<Gate> gates;

    /// One more than the largest qubit index referenced; 0 if none.
    std::size_t min_qubits() const;
    bool operator==(const Circuit &) const = default;
};

/// Qubits a gate touches. Init touches every qubit of an n-qubit register.
std::vector<std::size_t> gate_qubits(const Gate &g, std::size_t num_qubits);
std::string gate_to_string(const Gate &g);

/// Throws std::invalid_argument on out-of-range qubits or control == target.
void check_circuit(const Circuit &circuit, std::size_t num_qubits);

/// Line format: `INIT`, `ROT q <angle_rad> <phase_rad>`, `CNOT c t`,
/// `MEASURE q`; `#` comments, blank lines ignored. Rotation angles are
/// reduced into (0, 2pi]; a rotation by a multiple of 2pi is dropped.
Circuit parse_circuit(std::string_view text, const std::string &source = "<circuit>");
Circuit load_circuit(const std::string &path);

}  // namespace endos
