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

#include "endos/register_layout.hpp"

#include <cmath>
#include <stdexcept>

namespace endos {

std::string TipPosition::to_string() const { return is_parked() ? "PARK" : std::to_string(*qubit_); }

RegisterLayout::RegisterLayout(std::size_t num_qubits, std::size_t columns, TipPosition tip)
    : num_qubits_(num_qubits), columns_(columns), tip_(tip) {
    if (columns_ == 0) {
        columns_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(double(num_qubits)))));
    }
    if (!tip_.is_parked() && tip_.qubit() >= num_qubits_) {
        throw std::out_of_range("tip position " + tip_.to_string() + " is not a qubit of this register");
    }
}

std::size_t RegisterLayout::nucleus_site(std::size_t qubit) const {
    if (!valid_qubit(qubit)) throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    return 2 * qubit;
}

std::size_t RegisterLayout::electron_site(std::size_t qubit) const {
    if (!valid_qubit(qubit)) throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    return 2 * qubit + 1;
}

SiteRole RegisterLayout::role(std::size_t site) const {
    if (site >= size()) throw std::out_of_range("site index " + std::to_string(site) + " out of range");
    if (site == tip_site()) return SiteRole::TipNucleus;
    return site % 2 == 0 ? SiteRole::Nucleus : SiteRole::Electron;
}

std::optional<std::size_t> RegisterLayout::qubit_of(std::size_t site) const {
    if (role(site) == SiteRole::TipNucleus) return std::nullopt;
    return site / 2;
}

void RegisterLayout::move_tip(TipPosition to) {
    if (!to.is_parked() && !valid_qubit(to.qubit())) {
        throw std::out_of_range("cannot move tip to missing qubit " + to.to_string());
    }
    tip_ = to;
}

RegisterLayout RegisterLayout::with_tip(TipPosition to) const {
    RegisterLayout copy = *this;
    copy.move_tip(to);
    return copy;
}

std::pair<std::size_t, std::size_t> RegisterLayout::grid_position(std::size_t qubit) const {
    if (!valid_qubit(qubit)) throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    return {qubit % columns_, qubit / columns_};
}

std::size_t RegisterLayout::hop_distance(TipPosition from, TipPosition to) const {
    if (from == to) return 0;
    if (from.is_parked() || to.is_parked()) return 1;
    auto [x0, y0] = grid_position(from.qubit());
    auto [x1, y1] = grid_position(to.qubit());
    auto diff = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
    return diff(x0, x1) + diff(y0, y1);
}

std::string RegisterLayout::site_name(std::size_t site) const {
    switch (role(site)) {
        case SiteRole::Nucleus:
            return "P" + std::to_string(site / 2);
        case SiteRole::Electron:
            return "e" + std::to_string(site / 2);
        case SiteRole::TipNucleus:
            return "C_tip";
    }
    return "?";
}

}  // namespace endos
