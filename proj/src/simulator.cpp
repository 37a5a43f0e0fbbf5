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

#include "qromc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qromc/error.hpp"

namespace qromc {
namespace {

// A qubit leaves the amplitude array once the probability on one side drops below this.
constexpr double kDemoteThreshold = 1e-26;

constexpr double kInvSqrt2 = 0.70710678118654752440;

kernels::Mat2 rx_matrix(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return {{c, 0}, {0, -s}, {0, -s}, {c, 0}};
}

kernels::Mat2 ry_matrix(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return {{c, 0}, {-s, 0}, {s, 0}, {c, 0}};
}

kernels::Mat2 rz_matrix(double angle) {
    return {std::polar(1.0, -angle / 2), {0, 0}, {0, 0}, std::polar(1.0, angle / 2)};
}

bool is_zero(Amplitude a) { return a.real() == 0.0 && a.imag() == 0.0; }

}  // namespace

kernels::Mat2 target_matrix(const Gate &gate) {
    switch (gate.kind) {
    case GateKind::x:
    case GateKind::cx:
    case GateKind::ccx:
    case GateKind::mcx:
        return {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    case GateKind::cz:
        return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}};
    case GateKind::h:
        return {{kInvSqrt2, 0}, {kInvSqrt2, 0}, {kInvSqrt2, 0}, {-kInvSqrt2, 0}};
    case GateKind::rx:
    case GateKind::mcrx:
        return rx_matrix(gate.angle);
    case GateKind::ry:
        return ry_matrix(gate.angle);
    case GateKind::rz:
    case GateKind::mcrz:
        return rz_matrix(gate.angle);
    }
    throw InvalidArgument("unknown gate kind");
}

StateVector::StateVector(std::size_t num_qubits)
    : num_qubits_(num_qubits), local_of_(num_qubits, -1), amps_{Amplitude{1.0, 0.0}} {
    if (num_qubits > 63) {
        throw ResourceLimit("registers wider than 63 qubits are not supported");
    }
}

StateVector StateVector::basis_state(std::size_t num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (num_qubits < 64 && (index >> num_qubits)) {
        throw InvalidArgument("basis index outside the register");
    }
    s.classical_ = index;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw InvalidArgument("amplitude count must be a power of two");
    }
    double norm = 0.0;
    for (const Amplitude &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-10) {
        throw InvalidArgument("initial state is not normalized");
    }
    std::size_t q = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    StateVector s(q);
    for (std::size_t i = 0; i < q; ++i) {
        s.active_.push_back(static_cast<Qubit>(i));
        s.local_of_[i] = static_cast<int>(i);
    }
    s.amps_ = std::move(amplitudes);
    return s;
}

std::uint64_t StateVector::local_to_global(std::uint64_t local) const {
    std::uint64_t global = classical_;
    for (std::size_t k = 0; k < active_.size(); ++k) {
        if ((local >> k) & 1) {
            global |= std::uint64_t{1} << active_[k];
        }
    }
    return global;
}

Amplitude StateVector::amplitude(std::uint64_t index) const {
    std::uint64_t local = 0;
    std::uint64_t active_mask = 0;
    for (std::size_t k = 0; k < active_.size(); ++k) {
        std::uint64_t bit = std::uint64_t{1} << active_[k];
        active_mask |= bit;
        if (index & bit) {
            local |= std::uint64_t{1} << k;
        }
    }
    if ((index & ~active_mask) != classical_) {
        return {0.0, 0.0};
    }
    return amps_[local];
}

std::vector<Amplitude> StateVector::to_dense() const {
    if (num_qubits_ > 30) {
        throw ResourceLimit("dense expansion of more than 30 qubits");
    }
    std::vector<Amplitude> dense(std::size_t{1} << num_qubits_);
    for (std::uint64_t local = 0; local < amps_.size(); ++local) {
        dense[local_to_global(local)] = amps_[local];
    }
    return dense;
}

std::vector<std::pair<std::uint64_t, Amplitude>> StateVector::nonzero(double threshold) const {
    std::vector<std::pair<std::uint64_t, Amplitude>> out;
    for (std::uint64_t local = 0; local < amps_.size(); ++local) {
        if (std::abs(amps_[local]) > threshold) {
            out.emplace_back(local_to_global(local), amps_[local]);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

double StateVector::norm_squared() const {
    auto [clear, set] = kernels::split_norm(amps_, 0);
    return clear + set;
}

void StateVector::promote(Qubit q) {
    const bool bit = (classical_ >> q) & 1;
    const std::size_t old_size = amps_.size();
    amps_.resize(2 * old_size);
    if (bit) {
        std::copy(amps_.begin(), amps_.begin() + old_size, amps_.begin() + old_size);
        std::fill(amps_.begin(), amps_.begin() + old_size, Amplitude{0.0, 0.0});
    }
    local_of_[q] = static_cast<int>(active_.size());
    active_.push_back(q);
    classical_ &= ~(std::uint64_t{1} << q);
}

void StateVector::maybe_demote(Qubit q) {
    const int l = local_of_[q];
    const std::uint64_t bit = std::uint64_t{1} << l;
    auto [clear, set] = kernels::split_norm(amps_, bit);
    bool keep_set;
    if (set <= kDemoteThreshold) {
        keep_set = false;
    } else if (clear <= kDemoteThreshold) {
        keep_set = true;
    } else {
        return;
    }
    std::vector<Amplitude> kept(amps_.size() / 2);
    for (std::uint64_t i = 0; i < kept.size(); ++i) {
        std::uint64_t low = i & (bit - 1);
        std::uint64_t src = ((i - low) << 1) | low | (keep_set ? bit : 0);
        kept[i] = amps_[src];
    }
    amps_ = std::move(kept);
    active_.erase(active_.begin() + l);
    for (std::size_t k = static_cast<std::size_t>(l); k < active_.size(); ++k) {
        local_of_[active_[k]] = static_cast<int>(k);
    }
    local_of_[q] = -1;
    if (keep_set) {
        classical_ |= std::uint64_t{1} << q;
    }
}

void StateVector::apply_controlled(std::span<const Control> controls, Qubit target, const kernels::Mat2 &u) {
    std::uint64_t control_mask = 0;
    std::uint64_t control_value = 0;
    for (const Control &c : controls) {
        const int l = local_of_[c.qubit];
        if (l < 0) {
            const bool bit = (classical_ >> c.qubit) & 1;
            if (bit != c.positive) {
                return;
            }
            continue;
        }
        control_mask |= std::uint64_t{1} << l;
        if (c.positive) {
            control_value |= std::uint64_t{1} << l;
        }
    }

    const bool diagonal = is_zero(u.m01) && is_zero(u.m10);
    const bool anti_diagonal = is_zero(u.m00) && is_zero(u.m11);
    if (local_of_[target] < 0) {
        const bool bit = (classical_ >> target) & 1;
        if (diagonal) {
            Amplitude factor = bit ? u.m11 : u.m00;
            if (factor != Amplitude{1.0, 0.0}) {
                kernels::scale_where(amps_, control_mask, control_value, factor);
            }
            return;
        }
        if (anti_diagonal && control_mask == 0) {
            Amplitude factor = bit ? u.m01 : u.m10;
            classical_ ^= std::uint64_t{1} << target;
            if (factor != Amplitude{1.0, 0.0}) {
                kernels::scale_where(amps_, 0, 0, factor);
            }
            return;
        }
        promote(target);
    }
    kernels::apply_controlled(amps_, std::uint64_t{1} << local_of_[target], control_mask, control_value, u);
    if (!diagonal) {
        maybe_demote(target);
    }
}

void StateVector::apply(const Gate &gate) {
    const kernels::Mat2 u = target_matrix(gate);
    for (Qubit t : gate.targets) {
        apply_controlled(gate.controls, t, u);
    }
}

StateVector simulate(const Circuit &circuit, StateVector initial, std::size_t max_qubits) {
    if (circuit.num_qubits() > max_qubits) {
        throw ResourceLimit("circuit uses " + std::to_string(circuit.num_qubits()) + " qubits, cap is " +
                            std::to_string(max_qubits));
    }
    if (circuit.num_qubits() != initial.num_qubits()) {
        throw InvalidArgument("initial state width does not match the circuit");
    }
    if (std::abs(initial.norm_squared() - 1.0) > 1e-10) {
        throw InvalidArgument("initial state is not normalized");
    }
    for (const Gate &g : circuit.gates()) {
        initial.apply(g);
    }
    return initial;
}

double overlap(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw InvalidArgument("overlap of states with different widths");
    }
    Amplitude sum{0.0, 0.0};
    for (const auto &[index, amp] : a.nonzero()) {
        sum += std::conj(amp) * b.amplitude(index);
    }
    return std::abs(sum);
}

ReadbackResult readback(const Circuit &circuit, std::uint64_t address, const ReadbackReference &reference,
                        double tolerance, std::size_t max_qubits) {
    const Layout &layout = circuit.layout();
    if (layout.address < 64 && (address >> layout.address)) {
        throw InvalidArgument("address " + std::to_string(address) + " outside the address register");
    }
    const bool basis = reference.encoding == Encoding::basis;
    if (!basis && (!reference.encoded || layout.data != 1)) {
        throw InvalidArgument("angle-family readback needs encoded parameters and one data qubit");
    }
    if (basis && layout.data != reference.image.word_bits) {
        throw InvalidArgument("basis readback needs one data qubit per word bit");
    }

    // Address preparation: X on every address qubit whose bit is 1.
    Circuit prepare(layout);
    for (std::size_t i = 0; i < layout.address; ++i) {
        if ((address >> i) & 1) {
            prepare.append(gates::x(layout.address_qubit(i)));
        }
    }
    StateVector state = simulate(compose(prepare, circuit), StateVector(layout.num_qubits()), max_qubits);

    const std::uint64_t data_shift = layout.address;
    auto index_of = [&](std::uint64_t data) { return address | (data << data_shift); };

    ReadbackResult result;
    result.address = address;
    std::ostringstream msg;

    if (basis) {
        const std::uint64_t word = reference.image.words[address];
        result.expected = static_cast<double>(word);
        Amplitude hit = state.amplitude(index_of(word));
        double stray = 0.0;
        std::uint64_t best_index = 0;
        double best = -1.0;
        for (const auto &[index, amp] : state.nonzero()) {
            double mag = std::abs(amp);
            if (mag > best) {
                best = mag;
                best_index = index;
            }
            if (index != index_of(word)) {
                stray = std::max(stray, mag);
            }
        }
        std::uint64_t data_mask = layout.data >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << layout.data) - 1;
        result.value = static_cast<double>((best_index >> data_shift) & data_mask);
        result.error = std::max(std::abs(std::abs(hit) - 1.0), stray);
        result.passed = result.error <= tolerance;
        if (!result.passed) {
            msg << "expected word " << word << ", strongest basis state " << best_index;
            if ((best_index & ((std::uint64_t{1} << layout.address) - 1)) != address) {
                msg << " (address register disturbed)";
            } else if (best_index >> (layout.address + layout.data)) {
                msg << " (ancilla not restored)";
            }
        }
        result.message = msg.str();
        return result;
    }

    const EncodedImage &enc = *reference.encoded;
    const double theta = enc.theta[address];
    const double phi = enc.phi[address];
    const Amplitude alpha = state.amplitude(index_of(0));
    const Amplitude beta = state.amplitude(index_of(1));
    double stray = 0.0;
    for (const auto &[index, amp] : state.nonzero()) {
        if (index != index_of(0) && index != index_of(1)) {
            stray = std::max(stray, std::abs(amp));
        }
    }

    result.value = std::atan2(std::abs(beta), std::abs(alpha));
    result.expected = std::atan2(std::abs(std::sin(theta)), std::abs(std::cos(theta)));
    if (reference.encoding == Encoding::angle) {
        result.error = std::max({std::abs(std::abs(alpha) - std::abs(std::cos(theta))),
                                 std::abs(std::abs(beta) - std::abs(std::sin(theta))), stray});
    } else {
        // Rx(2 theta) then Rz(phi) on |0>: cos(theta)|0> - i e^{i phi} sin(theta)|1>, up to global phase.
        const Amplitude e0{std::cos(theta), 0.0};
        const Amplitude e1 = Amplitude{0.0, -1.0} * std::polar(1.0, phi) * std::sin(theta);
        const Amplitude ov = std::conj(e0) * alpha + std::conj(e1) * beta;
        if (std::abs(ov) < 0.5) {
            result.error = 1.0;
        } else {
            const Amplitude g = ov / std::abs(ov);
            result.error = std::max({std::abs(alpha - g * e0), std::abs(beta - g * e1), stray});
        }
    }

    if (reference.encoding == Encoding::improved_angle) {
        const std::uint64_t word = reference.image.words[address];
        result.expected = word == 0 ? 0.0 : interpret_fixed_point(word, NormalizationMode::interp04, enc.word_bits);
        double measured_phase = 0.0;
        const Amplitude r = beta * std::conj(alpha);
        const double sc = std::sin(theta) * std::cos(theta);
        if (std::abs(r) > 0.0 && sc != 0.0) {
            measured_phase = std::arg(Amplitude{0.0, 1.0} * r * (sc > 0 ? 1.0 : -1.0));
        }
        result.value = decode_improved_angle(theta, measured_phase, enc.z_max, enc.hidden_bit);
        result.error = std::max(result.error, std::abs(result.value - result.expected));
    }
    result.passed = result.error <= tolerance;
    if (!result.passed) {
        msg << "data qubit deviates from the encoded state by " << result.error;
        if (stray > tolerance) {
            msg << " (amplitude outside the addressed subspace)";
        }
    }
    result.message = msg.str();
    return result;
}

}  // namespace qromc
