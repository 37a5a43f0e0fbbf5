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

#include "qromc/pipeline.hpp"

#include <gtest/gtest.h>

#include <random>

#include "../support/oracle.hpp"
#include "qromc/error.hpp"
#include "qromc/lowering.hpp"

using namespace qromc;

TEST(options, invalid_combinations) {
    CompileOptions o;
    o.hidden_bit = true;
    EXPECT_THROW(check_options(o), InvalidArgument);
    o.encoding = Encoding::improved_angle;
    EXPECT_NO_THROW(check_options(o));
    o.esop = true;
    EXPECT_THROW(check_options(o), InvalidArgument);
}

TEST(compile, basis_qubits_after_mcx_lowering) {
    MemoryImage img{5, 8, std::vector<std::uint64_t>(32, 0xA5)};
    Compilation c = compile(img, {});
    EXPECT_EQ(c.metrics.qubit_count, 17u);
    MemoryImage one{9, 1, std::vector<std::uint64_t>(512, 0)};
    one.words[300] = 1;
    EXPECT_EQ(compile(one, {}).metrics.qubit_count, 18u);
}

TEST(compile, esop_ancilla_follow_widest_cube) {
    // f(a) = a0 XOR a1 needs no ancilla even with eight address bits.
    MemoryImage img{8, 1, std::vector<std::uint64_t>(256)};
    for (std::size_t a = 0; a < 256; ++a) {
        img.words[a] = (a ^ (a >> 1)) & 1;
    }
    CompileOptions o;
    o.esop = true;
    EXPECT_EQ(compile(img, o).metrics.qubit_count, 9u);
}

TEST(compile, angle_family_qubits) {
    std::mt19937_64 rng(61);
    MemoryImage img = oracle::random_image(rng, 4, 6);
    for (auto enc : {Encoding::angle, Encoding::improved_angle}) {
        for (bool opt : {false, true}) {
            for (bool low : {false, true}) {
                CompileOptions o;
                o.encoding = enc;
                o.optimize = opt;
                o.lower = low;
                Compilation c = compile(img, o);
                EXPECT_EQ(c.metrics.qubit_count, 5u);
                EXPECT_EQ(is_uniform(c.circuit), low);
            }
        }
    }
    CompileOptions dense;
    dense.encoding = Encoding::dense_angle;
    EXPECT_EQ(compile(img, dense).metrics.qubit_count, 4u);
}

TEST(compile, lowered_cost_exceeds_natural) {
    std::mt19937_64 rng(62);
    MemoryImage img = oracle::random_image(rng, 3, 4);
    for (auto enc : {Encoding::basis, Encoding::angle, Encoding::dense_angle, Encoding::improved_angle}) {
        CompileOptions o;
        o.encoding = enc;
        const std::size_t natural = compile(img, o).metrics.quantum_cost;
        o.lower = true;
        EXPECT_GT(compile(img, o).metrics.quantum_cost, natural);
    }
}

TEST(select_addresses, all_and_sample) {
    EXPECT_EQ(select_addresses(2, "all"), (std::vector<std::uint64_t>{0, 1, 2, 3}));
    auto s = select_addresses(10, "sample:20");
    EXPECT_EQ(s.size(), 20u);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_EQ(s, select_addresses(10, "sample:20"));
    EXPECT_EQ(select_addresses(2, "sample:9").size(), 4u);
    EXPECT_THROW(select_addresses(2, "some"), InvalidArgument);
    EXPECT_THROW(select_addresses(2, "sample:x"), InvalidArgument);
    EXPECT_THROW(select_addresses(2, "sample:0"), InvalidArgument);
    EXPECT_EQ(default_address_spec(12), "all");
    EXPECT_EQ(default_address_spec(13), "sample:4096");
}

TEST(verify, every_combination_on_random_images) {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 8; ++trial) {
        MemoryImage img = oracle::random_image(rng, 1 + rng() % 5, 2 + rng() % 7, 0.2);
        for (auto enc : {Encoding::basis, Encoding::angle, Encoding::dense_angle, Encoding::improved_angle}) {
            for (int flags = 0; flags < 4; ++flags) {
                CompileOptions o;
                o.encoding = enc;
                o.optimize = flags & 1;
                o.lower = flags & 2;
                o.normalization = static_cast<NormalizationMode>(trial % 5);
                if (enc == Encoding::improved_angle) {
                    o.hidden_bit = trial % 2;
                }
                if (enc == Encoding::basis) {
                    o.esop = trial % 2;
                }
                Compilation c = compile(img, o);
                auto addrs = select_addresses(address_bits(c), "all");
                VerifyReport r = verify(c.circuit, make_reference(c), addrs);
                EXPECT_TRUE(r.passed()) << to_string(enc) << " flags=" << flags << " trial=" << trial;
            }
        }
    }
}

TEST(verify, cap_is_enforced) {
    MemoryImage img{5, 8, std::vector<std::uint64_t>(32, 1)};
    Compilation c = compile(img, {});
    auto addrs = select_addresses(5, "all");
    EXPECT_THROW(verify(c.circuit, make_reference(c), addrs, 1e-9, 10), ResourceLimit);
}
