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

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <vector>

using namespace qromc::kernels;

namespace {

std::vector<Amplitude> random_amps(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    std::vector<Amplitude> v(size);
    for (auto &a : v) {
        a = {d(rng), d(rng)};
    }
    return v;
}

const Mat2 kU{{0.6, 0.0}, {0.0, -0.8}, {0.0, -0.8}, {0.6, 0.0}};

// Sizes on both sides of the parallel threshold.
const std::size_t kSizes[] = {2, 64, kParallelThreshold, 4 * kParallelThreshold};

}  // namespace

TEST(kernels, apply_controlled_matches_serial) {
    for (std::size_t size : kSizes) {
        const int bits = std::countr_zero(size);
        for (int t = 0; t < bits; ++t) {
            const std::uint64_t target = std::uint64_t{1} << t;
            const std::uint64_t mask = bits > 1 ? (std::uint64_t{1} << ((t + 1) % bits)) : 0;
            for (std::uint64_t value : {std::uint64_t{0}, mask}) {
                auto a = random_amps(size, size + t);
                auto b = a;
                apply_controlled(a, target, mask, value, kU);
                serial::apply_controlled(b, target, mask, value, kU);
                ASSERT_EQ(a, b) << "size=" << size << " t=" << t;
            }
        }
    }
}

TEST(kernels, apply_controlled_hand_example) {
    // Two qubits, control bit 0 = 1, X on bit 1: swaps |01> and |11>.
    std::vector<Amplitude> v{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    const Mat2 x{{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    apply_controlled(v, 2, 1, 1, x);
    EXPECT_EQ(v, (std::vector<Amplitude>{{1, 0}, {4, 0}, {3, 0}, {2, 0}}));
}

TEST(kernels, scale_where_matches_serial) {
    for (std::size_t size : kSizes) {
        auto a = random_amps(size, 3);
        auto b = a;
        scale_where(a, 1, 1, Amplitude{0, 1});
        serial::scale_where(b, 1, 1, Amplitude{0, 1});
        ASSERT_EQ(a, b);
    }
}

TEST(kernels, split_norm_matches_serial) {
    for (std::size_t size : kSizes) {
        auto a = random_amps(size, 4);
        auto [p0, p1] = split_norm(a, 1);
        auto [s0, s1] = serial::split_norm(a, 1);
        EXPECT_NEAR(p0, s0, 1e-9 * s0);
        EXPECT_NEAR(p1, s1, 1e-9 * s1);
    }
    std::vector<Amplitude> v{{1, 0}, {0, 2}, {0, 0}, {3, 0}};
    auto [c, s] = split_norm(v, 1);
    EXPECT_EQ(c, 1.0);
    EXPECT_EQ(s, 13.0);
}

TEST(kernels, walsh_hadamard_matches_matrix) {
    for (std::size_t size : {std::size_t{1}, std::size_t{8}, std::size_t{64}}) {
        std::vector<double> v(size);
        for (std::size_t i = 0; i < size; ++i) {
            v[i] = 0.5 + static_cast<double>(i * i % 7);
        }
        std::vector<double> expected(size, 0.0);
        for (std::size_t s = 0; s < size; ++s) {
            for (std::size_t i = 0; i < size; ++i) {
                expected[s] += (std::popcount(s & i) % 2 ? -1.0 : 1.0) * v[i];
            }
        }
        auto p = v;
        walsh_hadamard(p);
        serial::walsh_hadamard(v);
        EXPECT_EQ(p, expected);
        EXPECT_EQ(v, expected);
    }
}

TEST(kernels, walsh_hadamard_large_matches_serial_and_is_involution) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-1, 1);
    std::vector<double> v(4 * kParallelThreshold);
    for (auto &x : v) {
        x = d(rng);
    }
    auto p = v, s = v;
    walsh_hadamard(p);
    serial::walsh_hadamard(s);
    ASSERT_EQ(p, s);
    walsh_hadamard(p);
    for (std::size_t i = 0; i < v.size(); ++i) {
        ASSERT_NEAR(p[i], v[i] * static_cast<double>(v.size()), 1e-6);
    }
}

TEST(kernels, reed_muller_xor_example_and_involution) {
    std::vector<std::uint8_t> xor2{0, 1, 1, 0};
    reed_muller(xor2);
    EXPECT_EQ(xor2, (std::vector<std::uint8_t>{0, 1, 1, 0}));
    std::vector<std::uint8_t> ones{1, 1, 1, 1};
    reed_muller(ones);
    EXPECT_EQ(ones, (std::vector<std::uint8_t>{1, 0, 0, 0}));

    std::mt19937_64 rng(8);
    std::vector<std::uint8_t> v(4 * kParallelThreshold);
    for (auto &x : v) {
        x = rng() & 1;
    }
    auto p = v, s = v;
    reed_muller(p);
    serial::reed_muller(s);
    ASSERT_EQ(p, s);
    reed_muller(p);
    EXPECT_EQ(p, v);
}
