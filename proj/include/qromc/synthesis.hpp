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

#include "qromc/circuit.hpp"
#include "qromc/pla.hpp"
#include "qromc/preprocess.hpp"

namespace qromc {

/// Controls selecting `address` on the first `address_bits` qubits: positive
/// where the address bit is 1, negative where it is 0.
std::vector<Control> address_controls(std::uint64_t address, std::size_t address_bits);

/// One MCX per set word bit per address, addresses ascending.
/// Layout: n address qubits, m data qubits.
Circuit synth_basis(const MemoryImage &image);

/// Positive-polarity Reed-Muller cover of each output bit. Gates are ordered
/// by monomial, then by output bit, so gates sharing a monomial are adjacent.
Circuit synth_basis_esop(const MemoryImage &image);

/// MCRx(2 theta_j) then, for dense images, MCRz(phi_j) per address.
/// Zero angles emit nothing. Layout: address bits of `encoded`, one data qubit.
Circuit synth_angle(const EncodedImage &encoded);

/// MCRx(2 S_j) cascade followed by the MCRz(E_j) cascade.
Circuit synth_improved_angle(const EncodedImage &encoded);

}  // namespace qromc
