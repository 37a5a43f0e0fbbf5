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

#include <cstdint>

namespace qromc::kernels {
namespace {

// Spreads index i (one bit shorter) around a zero at `target_bit`.
inline std::uint64_t insert_zero(std::uint64_t i, std::uint64_t target_bit) {
    std::uint64_t low = i & (target_bit - 1);
    return ((i - low) << 1) | low;
}

}  // namespace

void apply_controlled(std::span<Amplitude> amps, std::uint64_t target_bit, std::uint64_t control_mask,
                      std::uint64_t control_value, const Mat2 &u) {
    const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
    Amplitude *a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < half; ++i) {
        std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(i), target_bit);
        if ((i0 & control_mask) != control_value) {
            continue;
        }
        std::uint64_t i1 = i0 | target_bit;
        Amplitude v0 = a[i0];
        Amplitude v1 = a[i1];
        a[i0] = u.m00 * v0 + u.m01 * v1;
        a[i1] = u.m10 * v0 + u.m11 * v1;
    }
}

void scale_where(std::span<Amplitude> amps, std::uint64_t mask, std::uint64_t value, Amplitude factor) {
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    Amplitude *a = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < size; ++i) {
        if ((static_cast<std::uint64_t>(i) & mask) == value) {
            a[i] *= factor;
        }
    }
}

std::pair<double, double> split_norm(std::span<const Amplitude> amps, std::uint64_t bit) {
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    const Amplitude *a = amps.data();
    double clear = 0.0;
    double set = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : clear, set) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < size; ++i) {
        double p = std::norm(a[i]);
        if (static_cast<std::uint64_t>(i) & bit) {
            set += p;
        } else {
            clear += p;
        }
    }
    return {clear, set};
}

void walsh_hadamard(std::span<double> values) {
    const std::int64_t half = static_cast<std::int64_t>(values.size() / 2);
    double *v = values.data();
    for (std::uint64_t stride = 1; stride < values.size(); stride <<= 1) {
#pragma omp parallel for schedule(static) if (values.size() >= kParallelThreshold)
        for (std::int64_t i = 0; i < half; ++i) {
            std::uint64_t lo = insert_zero(static_cast<std::uint64_t>(i), stride);
            std::uint64_t hi = lo | stride;
            double x = v[lo];
            double y = v[hi];
            v[lo] = x + y;
            v[hi] = x - y;
        }
    }
}

void reed_muller(std::span<std::uint8_t> values) {
    const std::int64_t half = static_cast<std::int64_t>(values.size() / 2);
    std::uint8_t *v = values.data();
    for (std::uint64_t stride = 1; stride < values.size(); stride <<= 1) {
#pragma omp parallel for schedule(static) if (values.size() >= kParallelThreshold)
        for (std::int64_t i = 0; i < half; ++i) {
            std::uint64_t lo = insert_zero(static_cast<std::uint64_t>(i), stride);
            v[lo | stride] ^= v[lo];
        }
    }
}

}  // namespace qromc::kernels
