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
#include <span>
#include <vector>

#include "qromc/circuit.hpp"

namespace qromc {

/// Transformed rotations below this magnitude are dropped.
inline constexpr double kPruneThreshold = 1e-12;

/// Removes pairs of uncontrolled X gates on the same qubit with no gate
/// touching that qubit in between. The result is a fixed point of the pass.
Circuit double_not_removal(const Circuit &circuit);

/// rho'_j = 2^-n * sum_i (-1)^popcount(i & gray(j)) * rho_i, gray(j) = j ^ (j >> 1).
/// Throws InvalidArgument unless rho.size() is a power of two.
std::vector<double> graycode_transform(std::span<const double> rho);

/// [ruler(1), ..., ruler(2^n - 1), n - 1] where ruler(k) is the lowest set bit of k.
std::vector<std::size_t> control_ladder(std::size_t n);

/// Appends the uniformly controlled rotation that applies `axis`(rho[p]) to
/// `target` when the controls read p (bit i of p is controls[i]).
///
/// Emits rotation rho'_k followed by an entangler from controls[ladder[k]]
/// for every k: CZ for the Rx axis, CX for the Rz axis. Rotations with
/// |rho'_k| < kPruneThreshold are dropped; entanglers are always kept.
/// With no controls this is the single rotation rho[0] (dropped when zero).
void append_multiplexed_rotation(Circuit &circuit, GateKind axis, std::span<const Qubit> controls, Qubit target,
                                 std::span<const double> rho);

/// Per-address rotation angles recovered from a cascade of fully addressed
/// MCRx / MCRz gates on a single data qubit.
struct RotationStages {
    std::size_t address_bits = 0;
    std::vector<double> rx;
    std::vector<double> rz;
    std::size_t rx_gates = 0;
    std::size_t rz_gates = 0;
};

/// Throws InvalidArgument when the circuit is not such a cascade, or when some
/// address sees an Rz before an Rx (the stages would not commute apart).
RotationStages extract_rotation_stages(const Circuit &circuit);

/// Rewrites each rotation stage in gray-code form: the Rx stage, then the Rz stage.
Circuit gray_code_optimize(const Circuit &circuit);

/// Like gray_code_optimize, but a stage keeps its cascade form when the
/// gray-code form has a higher quantum cost.
Circuit optimize_rotation_cascade(const Circuit &circuit);

/// Replaces negative controls with X sandwiches and lowers X-family gates
/// with k >= 3 controls through an AND chain of k - 1 shared ancilla.
/// Consecutive gates with the same control set share one compute/uncompute
/// pair. Rotations with k >= 2 controls become multiplexed rotations; no
/// ancilla are used for them.
Circuit lower_mcx(const Circuit &circuit);

}  // namespace qromc
