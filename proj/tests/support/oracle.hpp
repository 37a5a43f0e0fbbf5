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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qromc/circuit.hpp"
#include "qromc/pla.hpp"

// Reference implementations used only by tests. They share no code with the
// library beyond the circuit data types.
namespace qromc::oracle {

using Complex = std::complex<double>;
using State = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;

struct U2 {
    Complex a, b, c, d;
};

inline U2 matrix_of(const Gate &g) {
    const double t = g.angle / 2;
    const Complex i{0, 1};
    switch (g.kind) {
    case GateKind::x:
    case GateKind::cx:
    case GateKind::ccx:
    case GateKind::mcx:
        return {0, 1, 1, 0};
    case GateKind::cz:
        return {1, 0, 0, -1};
    case GateKind::h: {
        const double r = 1 / std::sqrt(2.0);
        return {r, r, r, -r};
    }
    case GateKind::rx:
    case GateKind::mcrx:
        return {std::cos(t), -i * std::sin(t), -i * std::sin(t), std::cos(t)};
    case GateKind::ry:
        return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
    case GateKind::rz:
    case GateKind::mcrz:
        return {std::exp(-i * t), 0, 0, std::exp(i * t)};
    }
    return {1, 0, 0, 1};
}

/// Plain dense simulation: every gate touches all 2^q amplitudes.
inline State run(const Circuit &circuit, State state) {
    for (const Gate &g : circuit.gates()) {
        const U2 u = matrix_of(g);
        for (Qubit t : g.targets) {
            const std::uint64_t tb = std::uint64_t{1} << t;
            for (std::uint64_t i = 0; i < state.size(); ++i) {
                if (i & tb) {
                    continue;
                }
                bool fire = true;
                for (const Control &c : g.controls) {
                    if (((i >> c.qubit) & 1) != (c.positive ? 1u : 0u)) {
                        fire = false;
                    }
                }
                if (!fire) {
                    continue;
                }
                const Complex a0 = state[i], a1 = state[i | tb];
                state[i] = u.a * a0 + u.b * a1;
                state[i | tb] = u.c * a0 + u.d * a1;
            }
        }
    }
    return state;
}

inline State basis(std::size_t qubits, std::uint64_t index) {
    State s(std::size_t{1} << qubits);
    s[index] = 1;
    return s;
}

/// 1 - |<a|b>|.
inline double infidelity(const State &a, const State &b) {
    Complex ov = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ov += std::conj(a[i]) * b[i];
    }
    return 1 - std::abs(ov);
}

/// Largest infidelity over all address basis inputs, with data and ancilla at |0>.
/// Both circuits may differ in ancilla count; the narrower one is padded.
inline double max_infidelity_over_addresses(const Circuit &a, const Circuit &b) {
    const std::size_t q = std::max(a.num_qubits(), b.num_qubits());
    auto widen = [&](const Circuit &c) {
        Layout l = c.layout();
        l.ancilla += q - c.num_qubits();
        Circuit w(l);
        w.append(c);
        return w;
    };
    const Circuit wa = a.num_qubits() == q ? a : widen(a);
    const Circuit wb = b.num_qubits() == q ? b : widen(b);
    double worst = 0;
    for (std::uint64_t addr = 0; addr < (std::uint64_t{1} << a.layout().address); ++addr) {
        worst = std::max(worst, infidelity(run(wa, basis(q, addr)), run(wb, basis(q, addr))));
    }
    return worst;
}

/// Largest infidelity over every computational basis input.
inline double max_infidelity_all_inputs(const Circuit &a, const Circuit &b) {
    double worst = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << a.num_qubits()); ++i) {
        worst = std::max(worst, infidelity(run(a, basis(a.num_qubits(), i)), run(b, basis(b.num_qubits(), i))));
    }
    return worst;
}

inline MemoryImage random_image(std::mt19937_64 &rng, std::size_t n, std::size_t m, double zero_fraction = 0.0) {
    MemoryImage image{n, m, std::vector<std::uint64_t>(std::size_t{1} << n)};
    std::uniform_int_distribution<std::uint64_t> word(1, (std::uint64_t{1} << m) - 1);
    std::bernoulli_distribution zero(zero_fraction);
    for (auto &w : image.words) {
        w = zero(rng) ? 0 : word(rng);
    }
    return image;
}

/// rho'_j = 2^-n sum_i (-1)^<i, gray(j)> rho_i, evaluated as a matrix product.
inline std::vector<double> graycode_matrix_transform(const std::vector<double> &rho) {
    const std::size_t size = rho.size();
    std::vector<double> out(size, 0.0);
    for (std::size_t j = 0; j < size; ++j) {
        const std::size_t g = j ^ (j >> 1);
        for (std::size_t i = 0; i < size; ++i) {
            int parity = 0;
            for (std::size_t b = i & g; b; b &= b - 1) {
                parity ^= 1;
            }
            out[j] += (parity ? -1.0 : 1.0) * rho[i];
        }
        out[j] /= static_cast<double>(size);
    }
    return out;
}

}  // namespace qromc::oracle
