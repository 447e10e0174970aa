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
#include <optional>
#include <string>
#include <utility>

namespace endos {

/// Where the STM tip currently sits: lifted away (parked) or over a qubit.
class TipPosition {
   public:
    constexpr TipPosition() = default;

    static constexpr TipPosition parked() { return TipPosition{}; }
    static constexpr TipPosition at(std::size_t qubit) {
        TipPosition p;
        p.qubit_ = qubit;
        return p;
    }

    constexpr bool is_parked() const { return !qubit_.has_value(); }
    constexpr bool is_at(std::size_t qubit) const { return qubit_ == qubit; }
    /// Precondition: !is_parked().
    constexpr std::size_t qubit() const { return *qubit_; }

    std::string to_string() const;

    constexpr bool operator==(const TipPosition &) const = default;

   private:
    std::optional<std::size_t> qubit_;
};

enum class SiteRole { Nucleus, Electron, TipNucleus };

/// Ordered spin register: for each qubit i the 31P nucleus (site 2i) and its
/// donor electron (site 2i+1), followed by the tip 13C nucleus (site 2n).
/// Qubits sit on a row-major grid `columns` wide.
class RegisterLayout {
   public:
    RegisterLayout() = default;
    explicit RegisterLayout(std::size_t num_qubits, std::size_t columns = 0,
                            TipPosition tip = TipPosition::parked());

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t columns() const { return columns_; }
    /// Number of spin sites, 2 * num_qubits + 1.
    std::size_t size() const { return 2 * num_qubits_ + 1; }

    std::size_t nucleus_site(std::size_t qubit) const;
    std::size_t electron_site(std::size_t qubit) const;
    std::size_t tip_site() const { return 2 * num_qubits_; }

    SiteRole role(std::size_t site) const;
    /// Qubit owning `site`; nullopt for the tip nucleus.
    std::optional<std::size_t> qubit_of(std::size_t site) const;

    TipPosition tip() const { return tip_; }
    void move_tip(TipPosition to);
    RegisterLayout with_tip(TipPosition to) const;

    /// Grid coordinates (column, row) of a qubit.
    std::pair<std::size_t, std::size_t> grid_position(std::size_t qubit) const;

    /// Manhattan hop count between two tip positions. Moving to or from the
    /// parked position costs one hop; staying put costs nothing.
    std::size_t hop_distance(TipPosition from, TipPosition to) const;

    bool valid_qubit(std::size_t qubit) const { return qubit < num_qubits_; }
    std::string site_name(std::size_t site) const;

    bool operator==(const RegisterLayout &) const = default;

   private:
    std::size_t num_qubits_ = 0;
    std::size_t columns_ = 1;
    TipPosition tip_;
};

}  // namespace endos
