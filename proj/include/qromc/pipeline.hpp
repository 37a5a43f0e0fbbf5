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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qromc/circuit.hpp"
#include "qromc/pla.hpp"
#include "qromc/preprocess.hpp"
#include "qromc/simulator.hpp"

namespace qromc {

struct CompileOptions {
    Encoding encoding = Encoding::basis;
    NormalizationMode normalization = NormalizationMode::interp04;
    bool hidden_bit = false;
    bool esop = false;
    bool optimize = false;
    bool lower = false;
};

/// Throws InvalidArgument for flag combinations that do not apply to the
/// chosen encoding (hidden bit outside improved angle, ESOP outside basis).
void check_options(const CompileOptions &options);

struct Compilation {
    CompileOptions options;
    MemoryImage image;
    std::optional<EncodedImage> encoded;
    /// Circuit straight out of synthesis.
    Circuit synthesized;
    /// Circuit after optimization and lowering.
    Circuit circuit;
    Metrics metrics;
};

/// Basis: synthesis, MCX lowering, then double-NOT removal (optimize) and
/// uniform lowering (lower). Angle family: synthesis, gray-code rewriting
/// (optimize), then MCX and uniform lowering (lower).
Compilation compile(const MemoryImage &image, const CompileOptions &options);

ReadbackReference make_reference(const Compilation &compilation);

/// Address register width of the compiled circuit.
std::size_t address_bits(const Compilation &compilation);

/// "all" or "sample:<k>". Samples are drawn without replacement from a fixed
/// seed and returned ascending. Throws InvalidArgument on a bad spec.
std::vector<std::uint64_t> select_addresses(std::size_t address_bits, std::string_view spec);

/// Default address spec: "all" up to 4096 addresses, otherwise "sample:4096".
std::string_view default_address_spec(std::size_t address_bits);

struct VerifyReport {
    std::vector<ReadbackResult> results;
    std::size_t failures = 0;

    bool passed() const { return failures == 0; }
};

/// Reads back every listed address. Throws ResourceLimit when the circuit
/// exceeds `max_qubits`.
VerifyReport verify(const Circuit &circuit, const ReadbackReference &reference, std::span<const std::uint64_t> addresses,
                    double tolerance = 1e-9, std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace qromc
