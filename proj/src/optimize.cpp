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

#include "qromc/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>

#include "qromc/error.hpp"
#include "qromc/kernels.hpp"

namespace qromc {
namespace {

bool is_plain_x(const Gate &g) { return g.kind == GateKind::x && g.controls.empty(); }

bool is_x_family(GateKind kind) {
    return kind == GateKind::x || kind == GateKind::cx || kind == GateKind::ccx || kind == GateKind::mcx;
}

Gate single_rotation(GateKind axis, Qubit target, double angle) {
    switch (axis) {
    case GateKind::rx:
        return gates::rx(target, angle);
    case GateKind::ry:
        return gates::ry(target, angle);
    case GateKind::rz:
        return gates::rz(target, angle);
    default:
        throw InvalidArgument("multiplexed rotations need an rx, ry or rz axis");
    }
}

GateKind axis_of(GateKind kind) {
    return kind == GateKind::mcrx || kind == GateKind::rx ? GateKind::rx : GateKind::rz;
}

std::size_t stage_cost(std::size_t gates, std::size_t address_bits) { return gates * (address_bits + 1); }

Circuit gray_stage(const Layout &layout, GateKind axis, const std::vector<double> &rho) {
    Circuit stage(layout);
    std::vector<Qubit> controls;
    for (std::size_t i = 0; i < layout.address; ++i) {
        controls.push_back(layout.address_qubit(i));
    }
    append_multiplexed_rotation(stage, axis, controls, layout.data_qubit(0), rho);
    return stage;
}

Circuit cascade_stage(const Circuit &circuit, GateKind kind) {
    Circuit stage(circuit.layout());
    for (const Gate &g : circuit.gates()) {
        if (axis_of(g.kind) == kind) {
            stage.append(g);
        }
    }
    return stage;
}

Circuit optimize_stages(const Circuit &circuit, bool guard) {
    const RotationStages stages = extract_rotation_stages(circuit);
    Circuit out(circuit.layout());
    const GateKind axes[] = {GateKind::rx, GateKind::rz};
    for (GateKind axis : axes) {
        const auto &rho = axis == GateKind::rx ? stages.rx : stages.rz;
        const std::size_t count = axis == GateKind::rx ? stages.rx_gates : stages.rz_gates;
        if (count == 0) {
            continue;
        }
        Circuit gray = gray_stage(circuit.layout(), axis, rho);
        if (guard && quantum_cost(gray) > stage_cost(count, stages.address_bits)) {
            out.append(cascade_stage(circuit, axis));
        } else {
            out.append(gray);
        }
    }
    return out;
}

}  // namespace

Circuit double_not_removal(const Circuit &circuit) {
    const auto &gs = circuit.gates();
    std::vector<bool> removed(gs.size(), false);
    std::vector<std::optional<std::size_t>> pending(circuit.num_qubits());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Gate &g = gs[i];
        if (is_plain_x(g)) {
            auto &slot = pending[g.targets[0]];
            if (slot) {
                removed[*slot] = true;
                removed[i] = true;
                slot.reset();
            } else {
                slot = i;
            }
            continue;
        }
        for (const Control &c : g.controls) {
            pending[c.qubit].reset();
        }
        for (Qubit t : g.targets) {
            pending[t].reset();
        }
    }
    Circuit out(circuit.layout());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (!removed[i]) {
            out.append(gs[i]);
        }
    }
    return out;
}

std::vector<double> graycode_transform(std::span<const double> rho) {
    if (rho.empty() || !std::has_single_bit(rho.size())) {
        throw InvalidArgument("rotation vector length must be a power of two");
    }
    std::vector<double> w(rho.begin(), rho.end());
    kernels::walsh_hadamard(w);
    const double scale = 1.0 / static_cast<double>(rho.size());
    std::vector<double> out(rho.size());
    for (std::size_t j = 0; j < rho.size(); ++j) {
        out[j] = w[j ^ (j >> 1)] * scale;
    }
    return out;
}

std::vector<std::size_t> control_ladder(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("control ladder needs at least one address bit");
    }
    if (n >= 32) {
        throw ResourceLimit("control ladder too long");
    }
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::size_t> ladder;
    ladder.reserve(size);
    for (std::uint64_t k = 1; k < size; ++k) {
        ladder.push_back(static_cast<std::size_t>(std::countr_zero(k)));
    }
    ladder.push_back(n - 1);
    return ladder;
}

void append_multiplexed_rotation(Circuit &circuit, GateKind axis, std::span<const Qubit> controls, Qubit target,
                                 std::span<const double> rho) {
    if (rho.size() != (std::size_t{1} << controls.size())) {
        throw InvalidArgument("rotation vector length must be 2^controls");
    }
    if (controls.empty()) {
        if (std::abs(rho[0]) >= kPruneThreshold) {
            circuit.append(single_rotation(axis, target, rho[0]));
        }
        return;
    }
    const std::vector<double> transformed = graycode_transform(rho);
    const std::vector<std::size_t> ladder = control_ladder(controls.size());
    for (std::size_t k = 0; k < transformed.size(); ++k) {
        if (std::abs(transformed[k]) >= kPruneThreshold) {
            circuit.append(single_rotation(axis, target, transformed[k]));
        }
        const Qubit c = controls[ladder[k]];
        circuit.append(axis == GateKind::rx ? gates::cz(c, target) : gates::cx(c, target));
    }
}

RotationStages extract_rotation_stages(const Circuit &circuit) {
    const Layout &layout = circuit.layout();
    if (layout.data != 1 || layout.ancilla != 0) {
        throw InvalidArgument("rotation cascade must act on one data qubit without ancilla");
    }
    if (layout.address >= 31) {
        throw ResourceLimit("rotation cascade address register too wide");
    }
    const Qubit data = layout.data_qubit(0);
    RotationStages stages;
    stages.address_bits = layout.address;
    const std::size_t size = std::size_t{1} << layout.address;
    stages.rx.assign(size, 0.0);
    stages.rz.assign(size, 0.0);
    std::vector<bool> saw_rz(size, false);

    for (const Gate &g : circuit.gates()) {
        const bool controlled = g.kind == GateKind::mcrx || g.kind == GateKind::mcrz;
        const bool bare = g.kind == GateKind::rx || g.kind == GateKind::rz;
        if (!(controlled || bare) || g.targets.size() != 1 || g.targets[0] != data) {
            throw InvalidArgument("not a uniformly controlled rotation cascade: unexpected " +
                                  std::string(kind_name(g.kind)) + " gate");
        }
        if (g.controls.size() != layout.address) {
            throw InvalidArgument("not a uniformly controlled rotation cascade: rotation does not select one address");
        }
        std::uint64_t address = 0;
        std::uint64_t seen = 0;
        for (const Control &c : g.controls) {
            if (c.qubit >= layout.address || ((seen >> c.qubit) & 1)) {
                throw InvalidArgument("not a uniformly controlled rotation cascade: bad control set");
            }
            seen |= std::uint64_t{1} << c.qubit;
            if (c.positive) {
                address |= std::uint64_t{1} << c.qubit;
            }
        }
        if (axis_of(g.kind) == GateKind::rx) {
            if (saw_rz[address]) {
                throw InvalidArgument("rotation cascade applies Rx after Rz on address " + std::to_string(address));
            }
            stages.rx[address] += g.angle;
            ++stages.rx_gates;
        } else {
            saw_rz[address] = true;
            stages.rz[address] += g.angle;
            ++stages.rz_gates;
        }
    }
    return stages;
}

Circuit gray_code_optimize(const Circuit &circuit) { return optimize_stages(circuit, false); }

Circuit optimize_rotation_cascade(const Circuit &circuit) { return optimize_stages(circuit, true); }

Circuit lower_mcx(const Circuit &circuit) {
    const auto &gs = circuit.gates();
    std::size_t needed = 0;
    for (const Gate &g : gs) {
        if (is_x_family(g.kind) && g.controls.size() >= 3) {
            needed = std::max(needed, g.controls.size() - 1);
        }
    }
    Layout layout = circuit.layout();
    const std::size_t first_ancilla = layout.ancilla;
    layout.ancilla += needed;
    Circuit out(layout);
    auto ancilla = [&](std::size_t i) { return layout.ancilla_qubit(first_ancilla + i); };
    auto flip_negatives = [&](const std::vector<Control> &controls) {
        for (const Control &c : controls) {
            if (!c.positive) {
                out.append(gates::x(c.qubit));
            }
        }
    };

    std::size_t i = 0;
    while (i < gs.size()) {
        const Gate &g = gs[i];
        if (is_x_family(g.kind)) {
            std::vector<Qubit> targets(g.targets);
            std::size_t j = i + 1;
            while (j < gs.size() && is_x_family(gs[j].kind) && gs[j].controls == g.controls) {
                targets.insert(targets.end(), gs[j].targets.begin(), gs[j].targets.end());
                ++j;
            }
            std::vector<Qubit> cs;
            for (const Control &c : g.controls) {
                cs.push_back(c.qubit);
            }
            flip_negatives(g.controls);
            const std::size_t k = cs.size();
            if (k <= 2) {
                for (Qubit t : targets) {
                    out.append(k == 0 ? gates::x(t) : k == 1 ? gates::cx(cs[0], t) : gates::ccx(cs[0], cs[1], t));
                }
            } else {
                std::vector<Gate> chain;
                chain.push_back(gates::ccx(cs[0], cs[1], ancilla(0)));
                for (std::size_t a = 2; a < k; ++a) {
                    chain.push_back(gates::ccx(ancilla(a - 2), cs[a], ancilla(a - 1)));
                }
                for (const Gate &c : chain) {
                    out.append(c);
                }
                for (Qubit t : targets) {
                    out.append(gates::cx(ancilla(k - 2), t));
                }
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                    out.append(*it);
                }
            }
            flip_negatives(g.controls);
            i = j;
            continue;
        }

        if ((g.kind == GateKind::mcrx || g.kind == GateKind::mcrz) && g.controls.size() >= 2) {
            std::vector<Qubit> cs;
            std::uint64_t pattern = 0;
            for (std::size_t c = 0; c < g.controls.size(); ++c) {
                cs.push_back(g.controls[c].qubit);
                if (g.controls[c].positive) {
                    pattern |= std::uint64_t{1} << c;
                }
            }
            std::vector<double> rho(std::size_t{1} << cs.size(), 0.0);
            rho[pattern] = g.angle;
            append_multiplexed_rotation(out, axis_of(g.kind), cs, g.targets[0], rho);
        } else {
            Gate positive = g;
            for (Control &c : positive.controls) {
                c.positive = true;
            }
            flip_negatives(g.controls);
            out.append(positive);
            flip_negatives(g.controls);
        }
        ++i;
    }
    return out;
}

}  // namespace qromc
