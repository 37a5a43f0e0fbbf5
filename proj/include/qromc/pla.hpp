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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qromc {

/// Widest address field `expand` will materialize (2^24 words).
inline constexpr std::size_t kMaxAddressBits = 24;

/// Word values are held in 64-bit integers.
inline constexpr std::size_t kMaxWordBits = 64;

/// One product term. Input characters are `0`, `1`, `-`; output characters
/// are `0`, `1`, `-` (the `~` and `2` dialect spellings are normalized to `-`).
/// Character 0 is the most significant bit.
struct Cube {
    std::string inputs;
    std::string outputs;
    std::size_t line = 0;
};

struct PlaFile {
    std::size_t num_inputs = 0;
    std::size_t num_outputs = 0;
    std::vector<Cube> cubes;
    std::optional<std::size_t> declared_product_count;
    std::vector<std::string> input_labels;
    std::vector<std::string> output_labels;
    std::string type;
    /// Non-fatal diagnostics (unknown directives, product count mismatch).
    std::vector<std::string> warnings;
};

/// Completely specified memory: `words[a]` is the word stored at address `a`.
struct MemoryImage {
    std::size_t address_bits = 0;
    std::size_t word_bits = 0;
    std::vector<std::uint64_t> words;

    std::size_t size() const { return words.size(); }
    bool operator==(const MemoryImage &) const = default;
};

PlaFile parse_pla(std::string_view text);
PlaFile parse_pla(std::istream &in);
PlaFile read_pla_file(const std::filesystem::path &path);

/// Expands don't-cares and fills uncovered addresses with zero.
/// Output `-` asserts nothing and reads as 0. Throws ExpansionConflict when two
/// cubes assert different values for the same output bit of one address.
MemoryImage expand(const PlaFile &pla);

/// Checks the MemoryImage invariants; throws InvalidArgument.
void validate(const MemoryImage &image);

/// One fully specified cube per address.
std::string write_pla(const MemoryImage &image);

}  // namespace qromc
