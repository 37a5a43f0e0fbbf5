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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qromc/circuit.hpp"
#include "qromc/kernels.hpp"
#include "qromc/pla.hpp"
#include "qromc/preprocess.hpp"

namespace qromc {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 22;

/// State of a q-qubit register; qubit 0 is the least significant index bit.
///
/// Qubits known to sit in a computational basis state are kept out of the
/// amplitude array as classical bits. A gate that puts such a qubit into
/// superposition moves it into the array; a qubit whose amplitude vanishes on
/// one side after a gate moves back out. Semantically this is a dense
/// statevector of 2^q amplitudes.
class StateVector {
  public:
    /// |0...0>.
    explicit StateVector(std::size_t num_qubits);

    static StateVector basis_state(std::size_t num_qubits, std::uint64_t index);
    /// Dense amplitudes (size 2^q). Throws InvalidArgument unless normalized within 1e-10.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    /// Qubits currently held in the amplitude array.
    std::size_t active_qubits() const { return active_.size(); }

    Amplitude amplitude(std::uint64_t index) const;
    std::vector<Amplitude> to_dense() const;
    /// (index, amplitude) pairs with |amplitude| > threshold.
    std::vector<std::pair<std::uint64_t, Amplitude>> nonzero(double threshold = 0.0) const;
    double norm_squared() const;

    void apply(const Gate &gate);

    /// Applies `u` to `target` when every control matches its polarity.
    void apply_controlled(std::span<const Control> controls, Qubit target, const kernels::Mat2 &u);

  private:
    void promote(Qubit q);
    void maybe_demote(Qubit q);
    std::uint64_t local_to_global(std::uint64_t local) const;

    std::size_t num_qubits_;
    std::vector<Qubit> active_;
    std::vector<int> local_of_;
    std::uint64_t classical_ = 0;
    std::vector<Amplitude> amps_;
};

/// Matrix applied to the target of `gate` (X for the X family, Z for cz, ...).
kernels::Mat2 target_matrix(const Gate &gate);

/// Runs every gate of `circuit` on `initial`. Throws ResourceLimit when the
/// register exceeds `max_qubits` and InvalidArgument on a size mismatch or an
/// unnormalized input.
StateVector simulate(const Circuit &circuit, StateVector initial, std::size_t max_qubits = kDefaultMaxQubits);

/// |<a|b>| for two states of equal width (1 means equal up to global phase).
double overlap(const StateVector &a, const StateVector &b);

/// Expected content of a compiled QROM.
struct ReadbackReference {
    Encoding encoding = Encoding::basis;
    MemoryImage image;
    std::optional<EncodedImage> encoded;
};

struct ReadbackResult {
    std::uint64_t address = 0;
    bool passed = false;
    /// Basis: the word read. Angle: atan2(|beta|, |alpha|). Improved angle: decoded value.
    double value = 0.0;
    double expected = 0.0;
    /// Largest deviation observed against the expected state.
    double error = 0.0;
    std::string message;
};

/// Prepares |address> on the address register, runs the circuit and checks the
/// data register (and that address and ancilla qubits are undisturbed).
ReadbackResult readback(const Circuit &circuit, std::uint64_t address, const ReadbackReference &reference,
                        double tolerance = 1e-9, std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace qromc
