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

#include "qromc/pla.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qromc/error.hpp"

using namespace qromc;

TEST(pla_parse, three_cubes) {
    PlaFile p = parse_pla(".i 2\n.o 2\n00 01\n01 10\n1- 11\n.e\n");
    EXPECT_EQ(p.num_inputs, 2u);
    EXPECT_EQ(p.num_outputs, 2u);
    ASSERT_EQ(p.cubes.size(), 3u);
    EXPECT_EQ(p.cubes[2].inputs, "1-");
    EXPECT_EQ(p.cubes[2].outputs, "11");
    EXPECT_EQ(p.cubes[2].line, 5u);
}

TEST(pla_parse, empty_cover) {
    PlaFile p = parse_pla(".i 1\n.o 1\n.e\n");
    EXPECT_EQ(p.num_inputs, 1u);
    EXPECT_TRUE(p.cubes.empty());
}

TEST(pla_parse, width_mismatch_reports_line) {
    try {
        parse_pla(".i 2\n.o 2\n0 01\n.e\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(pla_parse, comments_crlf_labels_and_dialects) {
    PlaFile p = parse_pla("# header\r\n.i 3 # inputs\r\n.o 2\r\n.ilb a b c\r\n.ob f g\r\n.type f\r\n.p 1\r\n"
                          "1-0 ~2\r\n.end\r\n");
    ASSERT_EQ(p.cubes.size(), 1u);
    EXPECT_EQ(p.cubes[0].outputs, "--");
    EXPECT_EQ(p.input_labels, (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(p.output_labels, (std::vector<std::string>{"f", "g"}));
    EXPECT_EQ(p.type, "f");
    EXPECT_EQ(p.declared_product_count, 1u);
    EXPECT_TRUE(p.warnings.empty());
}

TEST(pla_parse, unknown_directive_and_count_mismatch_warn) {
    PlaFile p = parse_pla(".i 1\n.o 1\n.phase 1\n.p 3\n1 1\n.e\n");
    EXPECT_EQ(p.warnings.size(), 2u);
}

TEST(pla_parse, rejects_bad_input) {
    EXPECT_THROW(parse_pla(".o 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_pla(".i 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_pla(".i 2\n.o 1\n0x 1\n"), ParseError);
    EXPECT_THROW(parse_pla(".i 2\n.o 1\n01 x\n"), ParseError);
    EXPECT_THROW(parse_pla(".i 0\n.o 1\n"), ParseError);
}

TEST(pla_expand, dont_care_inputs) {
    MemoryImage img = expand(parse_pla(".i 2\n.o 2\n00 01\n01 10\n1- 11\n.e\n"));
    EXPECT_EQ(img.address_bits, 2u);
    EXPECT_EQ(img.words, (std::vector<std::uint64_t>{0b01, 0b10, 0b11, 0b11}));
}

TEST(pla_expand, missing_words_are_zero) {
    MemoryImage img = expand(parse_pla(".i 2\n.o 2\n.e\n"));
    EXPECT_EQ(img.words, (std::vector<std::uint64_t>{0, 0, 0, 0}));
}

TEST(pla_expand, leftmost_character_is_most_significant) {
    MemoryImage img = expand(parse_pla(".i 3\n.o 4\n100 1000\n.e\n"));
    EXPECT_EQ(img.words[4], 8u);
    EXPECT_EQ(img.words[1], 0u);
}

TEST(pla_expand, conflict_names_address) {
    try {
        expand(parse_pla(".i 2\n.o 2\n0- 01\n00 10\n.e\n"));
        FAIL() << "expected ExpansionConflict";
    } catch (const ExpansionConflict &e) {
        EXPECT_EQ(e.address(), 0u);
        EXPECT_NE(std::string(e.what()).find("00"), std::string::npos);
    }
}

TEST(pla_expand, agreeing_overlap_is_accepted) {
    MemoryImage img = expand(parse_pla(".i 2\n.o 2\n0- 01\n00 01\n.e\n"));
    EXPECT_EQ(img.words[0], 1u);
    EXPECT_EQ(img.words[1], 1u);
}

TEST(pla_expand, output_dont_care_reads_zero_and_does_not_conflict) {
    MemoryImage img = expand(parse_pla(".i 1\n.o 2\n0 -1\n0 1-\n.e\n"));
    EXPECT_EQ(img.words[0], 0b11u);
    MemoryImage only = expand(parse_pla(".i 1\n.o 2\n1 -1\n.e\n"));
    EXPECT_EQ(only.words[1], 0b01u);
}

TEST(pla_expand, address_cap) {
    EXPECT_THROW(expand(parse_pla(".i 25\n.o 1\n.e\n")), ResourceLimit);
}

TEST(pla_expand, round_trip_through_writer) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 6, m = 1 + rng() % 12;
        MemoryImage img{n, m, std::vector<std::uint64_t>(std::size_t{1} << n)};
        for (auto &w : img.words) {
            w = rng() & ((std::uint64_t{1} << m) - 1);
        }
        EXPECT_EQ(expand(parse_pla(write_pla(img))), img);
        // Expanding a fully specified image again changes nothing.
        EXPECT_EQ(expand(parse_pla(write_pla(expand(parse_pla(write_pla(img)))))), img);
    }
}

TEST(pla_validate, rejects_broken_images) {
    EXPECT_THROW(validate(MemoryImage{2, 2, {0, 1, 2}}), InvalidArgument);
    EXPECT_THROW(validate(MemoryImage{1, 2, {0, 4}}), InvalidArgument);
    EXPECT_NO_THROW(validate(MemoryImage{1, 2, {0, 3}}));
}
