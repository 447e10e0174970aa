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

#include "endos/circuit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "endos/errors.hpp"

namespace endos {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineParser {
   public:
    LineParser(const std::string &source, std::size_t line_no, std::vector<Token> tokens)
        : source_(source), line_no_(line_no), tokens_(std::move(tokens)) {}

    void expect_arity(std::size_t args) const {
        if (tokens_.size() == args + 1) return;
        std::size_t col = tokens_.size() > args + 1 ? tokens_[args + 1].column : tokens_.back().column;
        throw ParseError(source_, line_no_, col,
                         std::string(tokens_[0].text) + " takes " + std::to_string(args) + " argument(s), got " +
                             std::to_string(tokens_.size() - 1));
    }

    std::size_t qubit(std::size_t k) const {
        const Token &t = tokens_[k];
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || end != t.text.data() + t.text.size()) {
            throw ParseError(source_, line_no_, t.column, "expected a qubit index, got '" + std::string(t.text) + "'");
        }
        return value;
    }

    double real(std::size_t k) const {
        const Token &t = tokens_[k];
        double value = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || end != t.text.data() + t.text.size() || !std::isfinite(value)) {
            throw ParseError(source_, line_no_, t.column, "expected a number, got '" + std::string(t.text) + "'");
        }
        return value;
    }

    [[noreturn]] void fail(std::size_t k, const std::string &what) const {
        throw ParseError(source_, line_no_, tokens_[k].column, what);
    }

   private:
    const std::string &source_;
    std::size_t line_no_;
    std::vector<Token> tokens_;
};

// Reduces an angle into (0, 2pi]; returns 0 for multiples of 2pi.
double reduce_angle(double angle) {
    constexpr double two_pi = 2 * std::numbers::pi;
    if (angle > 0 && angle <= two_pi) return angle;
    double r = std::fmod(angle, two_pi);
    if (r < 0) r += two_pi;
    return r;
}

}  // namespace

std::size_t Circuit::min_qubits() const {
    std::size_t n = 0;
    for (const Gate &g : gates) {
        std::visit(overloaded{
                       [](const gate::Init &) {},
                       [&](const gate::Rot &r) { n = std::max(n, r.qubit + 1); },
                       [&](const gate::Cnot &c) { n = std::max({n, c.control + 1, c.target + 1}); },
                       [&](const gate::Measure &m) { n = std::max(n, m.qubit + 1); },
                   },
                   g);
    }
    return n;
}

std::vector<std::size_t> gate_qubits(const Gate &g, std::size_t num_qubits) {
    return std::visit(overloaded{
                          [&](const gate::Init &) {
                              std::vector<std::size_t> all(num_qubits);
                              for (std::size_t q = 0; q < num_qubits; ++q) all[q] = q;
                              return all;
                          },
                          [](const gate::Rot &r) { return std::vector<std::size_t>{r.qubit}; },
                          [](const gate::Cnot &c) { return std::vector<std::size_t>{c.control, c.target}; },
                          [](const gate::Measure &m) { return std::vector<std::size_t>{m.qubit}; },
                      },
                      g);
}

std::string gate_to_string(const Gate &g) {
    return std::visit(overloaded{
                          [](const gate::Init &) { return std::string("INIT"); },
                          [](const gate::Rot &r) {
                              std::ostringstream s;
                              s.precision(17);
                              s << "ROT " << r.qubit << ' ' << r.angle << ' ' << r.phase;
                              return s.str();
                          },
                          [](const gate::Cnot &c) {
                              return "CNOT " + std::to_string(c.control) + ' ' + std::to_string(c.target);
                          },
                          [](const gate::Measure &m) { return "MEASURE " + std::to_string(m.qubit); },
                      },
                      g);
}

void check_circuit(const Circuit &circuit, std::size_t num_qubits) {
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate &g = circuit.gates[i];
        if (const auto *c = std::get_if<gate::Cnot>(&g); c != nullptr && c->control == c->target) {
            throw std::invalid_argument("gate " + std::to_string(i) + ": CNOT control equals target");
        }
        for (std::size_t q : gate_qubits(g, num_qubits)) {
            if (q >= num_qubits) {
                throw std::invalid_argument("gate " + std::to_string(i) + ": qubit " + std::to_string(q) +
                                            " outside a " + std::to_string(num_qubits) + "-qubit register");
            }
        }
    }
}

Circuit parse_circuit(std::string_view text, const std::string &source) {
    Circuit circuit;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string_view op = tokens[0].text;
        LineParser p(source, line_no, tokens);
        if (op == "INIT") {
            p.expect_arity(0);
            circuit.gates.emplace_back(gate::Init{});
        } else if (op == "ROT") {
            p.expect_arity(3);
            double angle = reduce_angle(p.real(2));
            double phase = p.real(3);
            std::size_t q = p.qubit(1);
            if (angle > 0) circuit.gates.emplace_back(gate::Rot{q, angle, phase});
        } else if (op == "CNOT") {
            p.expect_arity(2);
            std::size_t c = p.qubit(1);
            std::size_t t = p.qubit(2);
            if (c == t) p.fail(2, "CNOT control and target must differ");
            circuit.gates.emplace_back(gate::Cnot{c, t});
        } else if (op == "MEASURE") {
            p.expect_arity(1);
            circuit.gates.emplace_back(gate::Measure{p.qubit(1)});
        } else {
            p.fail(0, "unknown gate '" + std::string(op) + "'");
        }
    }
    return circuit;
}

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open circuit file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str(), path);
}

}  // namespace endos
