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

#include "qromc/kernels.hpp"

namespace qromc::kernels::serial {

void apply_controlled(std::span<Amplitude> amps, std::uint64_t target_bit, std::uint64_t control_mask,
                      std::uint64_t control_value, const Mat2 &u) {
    for (std::uint64_t i0 = 0; i0 < amps.size(); ++i0) {
        if ((i0 & target_bit) || (i0 & control_mask) != control_value) {
            continue;
        }
        std::uint64_t i1 = i0 | target_bit;
        Amplitude v0 = amps[i0];
        Amplitude v1 = amps[i1];
        amps[i0] = u.m00 * v0 + u.m01 * v1;
        amps[i1] = u.m10 * v0 + u.m11 * v1;
    }
}

void scale_where(std::span<Amplitude> amps, std::uint64_t mask, std::uint64_t value, Amplitude factor) {
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == value) {
            amps[i] *= factor;
        }
    }
}

std::pair<double, double> split_norm(std::span<const Amplitude> amps, std::uint64_t bit) {
    double clear = 0.0;
    double set = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        (i & bit ? set : clear) += std::norm(amps[i]);
    }
    return {clear, set};
}

void walsh_hadamard(std::span<double> values) {
    for (std::size_t stride = 1; stride < values.size(); stride <<= 1) {
        for (std::size_t block = 0; block < values.size(); block += 2 * stride) {
            for (std::size_t i = block; i < block + stride; ++i) {
                double x = values[i];
                double y = values[i + stride];
                values[i] = x + y;
                values[i + stride] = x - y;
            }
        }
    }
}

void reed_muller(std::span<std::uint8_t> values) {
    for (std::size_t stride = 1; stride < values.size(); stride <<= 1) {
        for (std::size_t block = 0; block < values.size(); block += 2 * stride) {
            for (std::size_t i = block; i < block + stride; ++i) {
                values[i + stride] ^= values[i];
            }
        }
    }
}

}  // namespace qromc::kernels::serial
