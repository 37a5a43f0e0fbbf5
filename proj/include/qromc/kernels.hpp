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
#include <span>
#include <utility>

/// Data-parallel inner loops. Each kernel in `qromc::kernels` has a
/// single-threaded twin in `qromc::kernels::serial` with the same contract;
/// the serial versions are the test reference and the benchmark baseline.
namespace qromc::kernels {

using Amplitude = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    Amplitude m00, m01, m10, m11;
};

/// Arrays shorter than this run single-threaded even in the parallel kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Applies `u` to the bit `target_bit` of every basis index i with
/// (i & control_mask) == control_value. `target_bit` is a one-hot mask that
/// must not overlap `control_mask`.
void apply_controlled(std::span<Amplitude> amps, std::uint64_t target_bit, std::uint64_t control_mask,
                      std::uint64_t control_value, const Mat2 &u);

/// Multiplies amplitudes with (i & mask) == value by `factor`.
void scale_where(std::span<Amplitude> amps, std::uint64_t mask, std::uint64_t value, Amplitude factor);

/// Squared norm of the amplitudes with the bit clear and with the bit set.
std::pair<double, double> split_norm(std::span<const Amplitude> amps, std::uint64_t bit);

/// Unnormalized in-place Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(std::span<double> values);

/// In-place AND-XOR butterfly (truth table -> positive-polarity Reed-Muller
/// coefficients); size must be a power of two. Entries are 0 or 1.
void reed_muller(std::span<std::uint8_t> values);

namespace serial {
void apply_controlled(std::span<Amplitude> amps, std::uint64_t target_bit, std::uint64_t control_mask,
                      std::uint64_t control_value, const Mat2 &u);
void scale_where(std::span<Amplitude> amps, std::uint64_t mask, std::uint64_t value, Amplitude factor);
std::pair<double, double> split_norm(std::span<const Amplitude> amps, std::uint64_t bit);
void walsh_hadamard(std::span<double> values);
void reed_muller(std::span<std::uint8_t> values);
}  // namespace serial

}  // namespace qromc::kernels
