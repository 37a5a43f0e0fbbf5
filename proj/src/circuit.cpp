// Copyright 2026 The qromc Authors
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

#include "qromc/circuit.hpp"

#include <algorithm>
#include <array>

#include "qromc/error.hpp"

namespace qromc {
namespace {

constexpr std::array<std::string_view, 11> kNames = {"x", "h", "cx", "cz", "ccx", "mcx", "rx", "ry", "rz", "mcrx", "mcrz"};

}  // namespace

std::string_view kind_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> kind_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) {
            return static_cast<GateKind>(i);
        }
    }
    return std::nullopt;
}

bool is_rotation(GateKind kind) {
    return kind == GateKind::rx || kind == GateKind::ry || kind == GateKind::rz || kind == GateKind::mcrx ||
           kind == GateKind::mcrz;
}

namespace gates {
Gate x(Qubit q) { return Gate{GateKind::x, {}, {q}, 0.0}; }
Gate h(Qubit q) { return Gate{GateKind::h, {}, {q}, 0.0}; }
Gate cx(Qubit control, Qubit target) { return Gate{GateKind::cx, {{control, true}}, {target}, 0.0}; }
Gate cz(Qubit control, Qubit target) { return Gate{GateKind::cz, {{control, true}}, {target}, 0.0}; }
Gate ccx(Qubit c0, Qubit c1, Qubit target) { return Gate{GateKind::ccx, {{c0, true}, {c1, true}}, {target}, 0.0}; }
Gate mcx(std::vector<Control> controls, Qubit target) { return Gate{GateKind::mcx, std::move(controls), {target}, 0.0}; }
Gate rx(Qubit q, double angle) { return Gate{GateKind::rx, {}, {q}, angle}; }
Gate ry(Qubit q, double angle) { return Gate{GateKind::ry, {}, {q}, angle}; }
Gate rz(Qubit q, double angle) { return Gate{GateKind::rz, {}, {q}, angle}; }
Gate mcrx(std::vector<Control> controls, Qubit target, double angle) {
    return Gate{GateKind::mcrx, std::move(controls), {target}, angle};
}
Gate mcrz(std::vector<Control> controls, Qubit target, double angle) {
    return Gate{GateKind::mcrz, std::move(controls), {target}, angle};
}
}  // namespace gates

void validate(const Gate &gate, std::size_t num_qubits) {
    const std::size_t k = gate.controls.size();
    bool arity_ok = false;
    switch (gate.kind) {
    case GateKind::x:
    case GateKind::h:
    case GateKind::rx:
    case GateKind::ry:
    case GateKind::rz:
        arity_ok = k == 0;
        break;
    case GateKind::cx:
    case GateKind::cz:
        arity_ok = k == 1;
        break;
    case GateKind::ccx:
        arity_ok = k == 2;
        break;
    case GateKind::mcx:
    case GateKind::mcrx:
    case GateKind::mcrz:
        arity_ok = k >= 1;
        break;
    }
    if (!arity_ok) {
        throw InvalidArgument(std::string(kind_name(gate.kind)) + " gate with " + std::to_string(k) + " controls");
    }
    if (gate.targets.empty() || (gate.kind != GateKind::mcx && gate.targets.size() != 1)) {
        throw InvalidArgument(std::string(kind_name(gate.kind)) + " gate with bad target count");
    }
    std::vector<Qubit> seen;
    for (const Control &c : gate.controls) {
        seen.push_back(c.qubit);
    }
    seen.insert(seen.end(), gate.targets.begin(), gate.targets.end());
    for (Qubit q : seen) {
        if (q >= num_qubits) {
            throw InvalidArgument("qubit " + std::to_string(q) + " outside a register of " + std::to_string(num_qubits));
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw InvalidArgument(std::string(kind_name(gate.kind)) + " gate repeats a qubit");
    }
}

void Circuit::append(Gate gate) {
    validate(gate, num_qubits());
    gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits() > num_qubits()) {
        throw InvalidArgument("appended circuit is wider than the register");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::reserve_ancilla(std::size_t count) { layout_.ancilla = std::max(layout_.ancilla, count); }

std::size_t quantum_cost(const Circuit &circuit) {
    std::size_t cost = 0;
    for (const Gate &g : circuit.gates()) {
        cost += g.controls.size() + g.targets.size();
    }
    return cost;
}

std::size_t quantum_depth(const Circuit &circuit) {
    std::vector<std::size_t> level(circuit.num_qubits(), 0);
    std::size_t depth = 0;
    for (const Gate &g : circuit.gates()) {
        std::size_t layer = 0;
        for (const Control &c : g.controls) {
            layer = std::max(layer, level[c.qubit]);
        }
        for (Qubit t : g.targets) {
            layer = std::max(layer, level[t]);
        }
        ++layer;
        for (const Control &c : g.controls) {
            level[c.qubit] = layer;
        }
        for (Qubit t : g.targets) {
            level[t] = layer;
        }
        depth = std::max(depth, layer);
    }
    return depth;
}

Metrics compute_metrics(const Circuit &circuit) {
    Metrics m;
    m.gate_count = circuit.size();
    m.quantum_cost = quantum_cost(circuit);
    m.quantum_depth = quantum_depth(circuit);
    m.qubit_count = circuit.num_qubits();
    for (const Gate &g : circuit.gates()) {
        ++m.gate_histogram[std::string(kind_name(g.kind))];
    }
    return m;
}

Circuit compose(const Circuit &a, const Circuit &b) {
    if (!(a.layout() == b.layout())) {
        throw InvalidArgument("cannot compose circuits over different registers");
    }
    Circuit out = a;
    out.append(b);
    return out;
}

Circuit inverse(const Circuit &circuit) {
    Circuit out(circuit.layout());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        Gate g = *it;
        if (is_rotation(g.kind)) {
            g.angle = -g.angle;
        }
        out.append(std::move(g));
    }
    return out;
}

Circuit relabel(const Circuit &circuit, std::span<const Qubit> permutation) {
    if (permutation.size() != circuit.num_qubits()) {
        throw InvalidArgument("permutation size does not match the register");
    }
    Circuit out(circuit.layout());
    for (Gate g : circuit.gates()) {
        for (Control &c : g.controls) {
            c.qubit = permutation[c.qubit];
        }
        for (Qubit &t : g.targets) {
            t = permutation[t];
        }
        out.append(std::move(g));
    }
    return out;
}

}  // namespace qromc
