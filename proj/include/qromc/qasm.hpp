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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qromc/circuit.hpp"

namespace qromc {

/// OpenQASM 2.0 text for a circuit over {x, h, cx, cz, ccx, rx, ry, rz}.
/// Angles are printed with 17 significant digits. Throws InvalidArgument on
/// multi-controlled gates or negative controls.
std::string emit_qasm(const Circuit &circuit);

/// True when emit_qasm accepts the circuit.
bool is_emittable(const Circuit &circuit);

struct QasmProgram {
    Circuit circuit;
    std::vector<std::string> warnings;
};

/// Reads the subset written by emit_qasm. `creg`, `measure` and `barrier`
/// statements are skipped with a warning; anything else unknown is a
/// ParseError. Angle arguments may use numbers, `pi`, + - * / and parentheses.
///
/// Without `layout` every qubit is a data qubit; with it, the qreg size must
/// equal layout.num_qubits().
QasmProgram parse_qasm(std::string_view text, std::optional<Layout> layout = std::nullopt);

}  // namespace qromc
