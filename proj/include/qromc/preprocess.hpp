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
#include <string_view>
#include <vector>

#include "qromc/pla.hpp"

namespace qromc {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

enum class Encoding { basis, angle, dense_angle, improved_angle };

/// How an m-bit word becomes a real angle.
///  - interp01:      0.b b b ...        -> [0, 1)
///  - interp04:      b b . b b ...      -> [0, 4)
///  - scale_2pi:     2*pi * interp01    -> [0, 2*pi)
///  - global_max:    word * f_norm, f_norm = 2*pi*(1 - 2^-m) / V_max
///  - signed_interp: two's complement b b . b ... -> [-2, 2), stored mod 2*pi
enum class NormalizationMode { interp01, interp04, scale_2pi, global_max, signed_interp };

std::string_view to_string(Encoding encoding);
std::optional<Encoding> parse_encoding(std::string_view name);
std::string_view to_string(NormalizationMode mode);
std::optional<NormalizationMode> parse_normalization(std::string_view name);

/// Per-address rotation parameters of an angle-family QROM.
///
/// For angle encodings `theta` holds amplitude-borne values and `phi` the
/// phase-borne ones (zero unless dense). For improved angle encoding `theta`
/// holds the significand S_j and `phi` the exponent phase E_j.
struct EncodedImage {
    Encoding encoding = Encoding::angle;
    /// Address qubits of the circuit (n, or n - 1 when dense).
    std::size_t address_bits = 0;
    std::size_t word_bits = 0;
    std::vector<double> theta;
    std::vector<double> phi;

    NormalizationMode mode = NormalizationMode::interp04;
    double f_norm = 1.0;
    std::optional<double> v_max;
    bool dense = false;

    // Improved angle only.
    std::vector<int> leading_zeros;
    int z_max = 0;
    bool hidden_bit = false;
};

/// Fixed-point reading of one word. `global_max` is not accepted here since it
/// needs the whole image.
double interpret_fixed_point(std::uint64_t word, NormalizationMode mode, std::size_t word_bits);

EncodedImage encode_angle(const MemoryImage &image, NormalizationMode mode, bool dense);

/// Leading-zero count of a nonzero word within `word_bits`.
int leading_zeros(std::uint64_t word, std::size_t word_bits);

/// Number of slots the exponent phase circle is divided into (z_max + 1).
int exponent_grid_size(int z_max);

/// Offset added to a hidden-bit significand so that a stored value of zero
/// (a power-of-two word) stays distinct from the zero word and keeps a
/// nonzero |1> amplitude to carry the exponent phase.
inline constexpr double kHiddenBitBias = 0.5;

EncodedImage encode_improved_angle(const MemoryImage &image, bool hidden_bit);

/// Inverse of the improved-angle pre-processing under the [0, 4) reading:
/// rounds the phase to the nearest exponent slot and returns S * 2^-z.
/// With `hidden_bit` the implicit leading one is restored first. A zero
/// significand decodes to 0.
double decode_improved_angle(double significand, double exponent_phase, int z_max, bool hidden_bit);

/// Wraps an angle into [0, 2*pi).
double wrap_angle(double angle);

}  // namespace qromc
