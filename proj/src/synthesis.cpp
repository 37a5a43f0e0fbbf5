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

#include "qromc/synthesis.hpp"

#include "qromc/error.hpp"
#include "qromc/kernels.hpp"

namespace qromc {
namespace {

Gate addressed_rotation(GateKind kind, std::uint64_t address, const Layout &layout, double angle) {
    const Qubit data = layout.data_qubit(0);
    if (layout.address == 0) {
        return kind == GateKind::mcrx ? gates::rx(data, angle) : gates::rz(data, angle);
    }
    return Gate{kind, address_controls(address, layout.address), {data}, angle};
}

void append_cascade(Circuit &circuit, GateKind kind, const std::vector<double> &angles, double scale) {
    for (std::uint64_t j = 0; j < angles.size(); ++j) {
        if (angles[j] != 0.0) {
            circuit.append(addressed_rotation(kind, j, circuit.layout(), scale * angles[j]));
        }
    }
}

}  // namespace

std::vector<Control> address_controls(std::uint64_t address, std::size_t address_bits) {
    std::vector<Control> controls;
    controls.reserve(address_bits);
    for (std::size_t i = 0; i < address_bits; ++i) {
        controls.push_back({static_cast<Qubit>(i), ((address >> i) & 1) != 0});
    }
    return controls;
}

Circuit synth_basis(const MemoryImage &image) {
    validate(image);
    Circuit circuit(Layout{image.address_bits, image.word_bits, 0});
    for (std::uint64_t j = 0; j < image.words.size(); ++j) {
        const std::uint64_t word = image.words[j];
        for (std::size_t b = 0; b < image.word_bits; ++b) {
            if ((word >> b) & 1) {
                const Qubit target = circuit.layout().data_qubit(b);
                if (image.address_bits == 0) {
                    circuit.append(gates::x(target));
                } else {
                    circuit.append(gates::mcx(address_controls(j, image.address_bits), target));
                }
            }
        }
    }
    return circuit;
}

Circuit synth_basis_esop(const MemoryImage &image) {
    validate(image);
    const std::size_t size = image.words.size();
    std::vector<std::vector<std::uint8_t>> coefficients(image.word_bits, std::vector<std::uint8_t>(size));
    for (std::size_t b = 0; b < image.word_bits; ++b) {
        for (std::size_t j = 0; j < size; ++j) {
            coefficients[b][j] = static_cast<std::uint8_t>((image.words[j] >> b) & 1);
        }
        kernels::reed_muller(coefficients[b]);
    }

    Circuit circuit(Layout{image.address_bits, image.word_bits, 0});
    for (std::uint64_t monomial = 0; monomial < size; ++monomial) {
        std::vector<Control> controls;
        for (std::size_t i = 0; i < image.address_bits; ++i) {
            if ((monomial >> i) & 1) {
                controls.push_back({static_cast<Qubit>(i), true});
            }
        }
        for (std::size_t b = 0; b < image.word_bits; ++b) {
            if (!coefficients[b][monomial]) {
                continue;
            }
            const Qubit target = circuit.layout().data_qubit(b);
            if (controls.empty()) {
                circuit.append(gates::x(target));
            } else {
                circuit.append(gates::mcx(controls, target));
            }
        }
    }
    return circuit;
}

Circuit synth_angle(const EncodedImage &encoded) {
    if (encoded.encoding != Encoding::angle && encoded.encoding != Encoding::dense_angle) {
        throw InvalidArgument("synth_angle needs an angle or dense-angle image");
    }
    Circuit circuit(Layout{encoded.address_bits, 1, 0});
    for (std::uint64_t j = 0; j < encoded.theta.size(); ++j) {
        if (encoded.theta[j] != 0.0) {
            circuit.append(addressed_rotation(GateKind::mcrx, j, circuit.layout(), 2.0 * encoded.theta[j]));
        }
        if (encoded.phi[j] != 0.0) {
            circuit.append(addressed_rotation(GateKind::mcrz, j, circuit.layout(), encoded.phi[j]));
        }
    }
    return circuit;
}

Circuit synth_improved_angle(const EncodedImage &encoded) {
    if (encoded.encoding != Encoding::improved_angle) {
        throw InvalidArgument("synth_improved_angle needs an improved-angle image");
    }
    Circuit circuit(Layout{encoded.address_bits, 1, 0});
    append_cascade(circuit, GateKind::mcrx, encoded.theta, 2.0);
    append_cascade(circuit, GateKind::mcrz, encoded.phi, 1.0);
    return circuit;
}

}  // namespace qromc
