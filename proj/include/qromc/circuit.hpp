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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qromc {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { x, h, cx, cz, ccx, mcx, rx, ry, rz, mcrx, mcrz };

/// Lower-case mnemonic ("x", "ccx", "mcrx", ...).
std::string_view kind_name(GateKind kind);
std::optional<GateKind> kind_from_name(std::string_view name);
bool is_rotation(GateKind kind);

/// A control point. Negative controls fire on |0>.
struct Control {
    Qubit qubit = 0;
    bool positive = true;

    bool operator==(const Control &) const = default;
};

struct Gate {
    GateKind kind = GateKind::x;
    std::vector<Control> controls;
    std::vector<Qubit> targets;
    /// Radians; rotation kinds only.
    double angle = 0.0;

    bool operator==(const Gate &) const = default;
};

namespace gates {
Gate x(Qubit q);
Gate h(Qubit q);
Gate cx(Qubit control, Qubit target);
Gate cz(Qubit control, Qubit target);
Gate ccx(Qubit c0, Qubit c1, Qubit target);
Gate mcx(std::vector<Control> controls, Qubit target);
Gate rx(Qubit q, double angle);
Gate ry(Qubit q, double angle);
Gate rz(Qubit q, double angle);
Gate mcrx(std::vector<Control> controls, Qubit target, double angle);
Gate mcrz(std::vector<Control> controls, Qubit target, double angle);
}  // namespace gates

/// Register partition: address qubits first, then data, then ancilla.
struct Layout {
    std::size_t address = 0;
    std::size_t data = 0;
    std::size_t ancilla = 0;

    std::size_t num_qubits() const { return address + data + ancilla; }
    Qubit address_qubit(std::size_t i) const { return static_cast<Qubit>(i); }
    Qubit data_qubit(std::size_t i) const { return static_cast<Qubit>(address + i); }
    Qubit ancilla_qubit(std::size_t i) const { return static_cast<Qubit>(address + data + i); }

    bool operator==(const Layout &) const = default;
};

/// Ordered gate list over a partitioned register.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(Layout layout) : layout_(layout) {}

    const Layout &layout() const { return layout_; }
    std::size_t num_qubits() const { return layout_.num_qubits(); }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Validates the gate against the register before appending.
    void append(Gate gate);
    void append(const Circuit &other);

    /// Grows the ancilla block; never shrinks it.
    void reserve_ancilla(std::size_t count);

  private:
    Layout layout_;
    std::vector<Gate> gates_;
};

/// Throws InvalidArgument when the gate breaks kind arity, overlaps controls
/// with targets, or indexes outside `num_qubits`.
void validate(const Gate &gate, std::size_t num_qubits);

struct Metrics {
    std::size_t gate_count = 0;
    std::size_t quantum_cost = 0;
    std::size_t quantum_depth = 0;
    std::size_t qubit_count = 0;
    std::map<std::string, std::size_t> gate_histogram;
};

/// Sum over gates of the qubits each acts on (controls included).
std::size_t quantum_cost(const Circuit &circuit);

/// Greedy ASAP layering; a control occupies its qubit like a target does.
std::size_t quantum_depth(const Circuit &circuit);

Metrics compute_metrics(const Circuit &circuit);

/// Gates of `a` followed by gates of `b`. Layouts must match.
Circuit compose(const Circuit &a, const Circuit &b);

/// Reversed gate order, negated rotation angles.
Circuit inverse(const Circuit &circuit);

/// Same gates with every qubit index q replaced by `permutation[q]`.
/// The result keeps the original layout sizes.
Circuit relabel(const Circuit &circuit, std::span<const Qubit> permutation);

}  // namespace qromc
