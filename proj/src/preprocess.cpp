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

#include "qromc/preprocess.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qromc/error.hpp"

namespace qromc {

std::string_view to_string(Encoding encoding) {
    switch (encoding) {
    case Encoding::basis:
        return "basis";
    case Encoding::angle:
        return "angle";
    case Encoding::dense_angle:
        return "dense-angle";
    case Encoding::improved_angle:
        return "improved-angle";
    }
    return "?";
}

std::optional<Encoding> parse_encoding(std::string_view name) {
    for (Encoding e : {Encoding::basis, Encoding::angle, Encoding::dense_angle, Encoding::improved_angle}) {
        if (to_string(e) == name) {
            return e;
        }
    }
    return std::nullopt;
}

std::string_view to_string(NormalizationMode mode) {
    switch (mode) {
    case NormalizationMode::interp01:
        return "interp01";
    case NormalizationMode::interp04:
        return "interp04";
    case NormalizationMode::scale_2pi:
        return "scale-2pi";
    case NormalizationMode::global_max:
        return "global-max";
    case NormalizationMode::signed_interp:
        return "signed";
    }
    return "?";
}

std::optional<NormalizationMode> parse_normalization(std::string_view name) {
    for (NormalizationMode m : {NormalizationMode::interp01, NormalizationMode::interp04, NormalizationMode::scale_2pi,
                                NormalizationMode::global_max, NormalizationMode::signed_interp}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

double wrap_angle(double angle) {
    double wrapped = std::fmod(angle, kTwoPi);
    if (wrapped < 0) {
        wrapped += kTwoPi;
    }
    // fmod of a tiny negative number can round up to exactly 2*pi.
    return wrapped >= kTwoPi ? 0.0 : wrapped;
}

double interpret_fixed_point(std::uint64_t word, NormalizationMode mode, std::size_t word_bits) {
    if (word_bits == 0 || word_bits > kMaxWordBits) {
        throw InvalidArgument("word width must be in [1, 64]");
    }
    if (word_bits < 64 && (word >> word_bits)) {
        throw InvalidArgument("word does not fit in " + std::to_string(word_bits) + " bits");
    }
    const int m = static_cast<int>(word_bits);
    switch (mode) {
    case NormalizationMode::interp01:
        return std::ldexp(static_cast<double>(word), -m);
    case NormalizationMode::interp04:
        if (m < 2) {
            throw InvalidArgument("interp04 needs words of at least 2 bits");
        }
        return std::ldexp(static_cast<double>(word), -(m - 2));
    case NormalizationMode::scale_2pi:
        return kTwoPi * std::ldexp(static_cast<double>(word), -m);
    case NormalizationMode::signed_interp: {
        if (m < 2) {
            throw InvalidArgument("signed interpretation needs words of at least 2 bits");
        }
        double value = static_cast<double>(word);
        if ((word >> (m - 1)) & 1) {
            value -= std::ldexp(1.0, m);
        }
        return wrap_angle(std::ldexp(value, -(m - 2)));
    }
    case NormalizationMode::global_max:
        break;
    }
    throw InvalidArgument("global-max normalization needs the whole memory image");
}

EncodedImage encode_angle(const MemoryImage &image, NormalizationMode mode, bool dense) {
    validate(image);
    if (dense && image.address_bits == 0) {
        throw InvalidArgument("dense angle encoding needs at least one address bit");
    }

    EncodedImage enc;
    enc.encoding = dense ? Encoding::dense_angle : Encoding::angle;
    enc.address_bits = dense ? image.address_bits - 1 : image.address_bits;
    enc.word_bits = image.word_bits;
    enc.mode = mode;
    enc.dense = dense;

    std::vector<double> values(image.size());
    if (mode == NormalizationMode::global_max) {
        std::uint64_t v_max = *std::max_element(image.words.begin(), image.words.end());
        if (v_max == 0) {
            throw InvalidArgument("global-max normalization of an all-zero image");
        }
        enc.v_max = static_cast<double>(v_max);
        enc.f_norm = kTwoPi * (1.0 - std::ldexp(1.0, -static_cast<int>(image.word_bits))) / *enc.v_max;
        for (std::size_t j = 0; j < image.size(); ++j) {
            values[j] = static_cast<double>(image.words[j]) * enc.f_norm;
        }
    } else {
        for (std::size_t j = 0; j < image.size(); ++j) {
            values[j] = interpret_fixed_point(image.words[j], mode, image.word_bits);
        }
    }

    const std::size_t slots = std::size_t{1} << enc.address_bits;
    enc.theta.assign(slots, 0.0);
    enc.phi.assign(slots, 0.0);
    for (std::size_t j = 0; j < slots; ++j) {
        if (dense) {
            enc.theta[j] = values[2 * j + 1];
            enc.phi[j] = values[2 * j];
        } else {
            enc.theta[j] = values[j];
        }
    }
    return enc;
}

int leading_zeros(std::uint64_t word, std::size_t word_bits) {
    return static_cast<int>(word_bits) - static_cast<int>(std::bit_width(word));
}

int exponent_grid_size(int z_max) { return z_max + 1; }

EncodedImage encode_improved_angle(const MemoryImage &image, bool hidden_bit) {
    validate(image);
    const std::size_t m = image.word_bits;
    if (m < 2) {
        throw InvalidArgument("improved angle encoding needs words of at least 2 bits");
    }
    const std::uint64_t mask = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

    EncodedImage enc;
    enc.encoding = Encoding::improved_angle;
    enc.address_bits = image.address_bits;
    enc.word_bits = m;
    enc.mode = NormalizationMode::interp04;
    enc.hidden_bit = hidden_bit;
    enc.theta.assign(image.size(), 0.0);
    enc.phi.assign(image.size(), 0.0);
    enc.leading_zeros.assign(image.size(), 0);

    for (std::size_t j = 0; j < image.size(); ++j) {
        std::uint64_t w = image.words[j];
        if (w == 0) {
            continue;
        }
        int z = leading_zeros(w, m);
        std::uint64_t shifted = (w << z) & mask;
        if (hidden_bit) {
            shifted = (shifted << 1) & mask;
        }
        enc.leading_zeros[j] = z;
        enc.theta[j] = std::ldexp(static_cast<double>(shifted), -static_cast<int>(m - 2));
        if (hidden_bit) {
            enc.theta[j] += kHiddenBitBias;
        }
        enc.z_max = std::max(enc.z_max, z);
    }

    const int grid = exponent_grid_size(enc.z_max);
    for (std::size_t j = 0; j < image.size(); ++j) {
        enc.phi[j] = kTwoPi * enc.leading_zeros[j] / grid;
    }
    return enc;
}

double decode_improved_angle(double significand, double exponent_phase, int z_max, bool hidden_bit) {
    if (z_max < 0) {
        throw InvalidArgument("z_max must be non-negative");
    }
    if (significand == 0.0) {
        return 0.0;
    }
    const int grid = exponent_grid_size(z_max);
    long slot = std::lround(wrap_angle(exponent_phase) * grid / kTwoPi) % grid;
    if (hidden_bit) {
        significand = 2.0 + (significand - kHiddenBitBias) / 2.0;
    }
    return std::ldexp(significand, -static_cast<int>(slot));
}

}  // namespace qromc
