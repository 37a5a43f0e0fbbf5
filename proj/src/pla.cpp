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

#include <fstream>
#include <istream>
#include <sstream>

#include "qromc/error.hpp"

namespace qromc {
namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '|')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '|') {
            ++i;
        }
        if (i > start) {
            fields.emplace_back(line.substr(start, i - start));
        }
    }
    return fields;
}

std::size_t parse_count(const std::vector<std::string> &fields, std::size_t line_no) {
    if (fields.size() < 2) {
        throw ParseError(line_no, "directive " + fields[0] + " needs a value");
    }
    std::size_t value = 0;
    try {
        std::size_t used = 0;
        value = std::stoul(fields[1], &used);
        if (used != fields[1].size()) {
            throw std::invalid_argument("trailing");
        }
    } catch (const std::logic_error &) {
        throw ParseError(line_no, "directive " + fields[0] + " expects an integer, got '" + fields[1] + "'");
    }
    return value;
}

void check_pattern(std::string &pattern, bool output, std::size_t line_no) {
    for (char &c : pattern) {
        if (c == '0' || c == '1' || c == '-') {
            continue;
        }
        if (output && (c == '~' || c == '2')) {
            c = '-';
            continue;
        }
        throw ParseError(line_no, std::string("invalid character '") + c + "' in cube " +
                                      (output ? "output" : "input") + " part");
    }
}

}  // namespace

PlaFile parse_pla(std::istream &in) {
    PlaFile pla;
    bool have_inputs = false;
    bool have_outputs = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        auto fields = split_fields(line);
        if (fields.empty()) {
            continue;
        }
        const std::string &head = fields[0];
        if (head[0] == '.') {
            if (head == ".i") {
                pla.num_inputs = parse_count(fields, line_no);
                if (pla.num_inputs == 0) {
                    throw ParseError(line_no, ".i must be at least 1");
                }
                have_inputs = true;
            } else if (head == ".o") {
                pla.num_outputs = parse_count(fields, line_no);
                if (pla.num_outputs == 0) {
                    throw ParseError(line_no, ".o must be at least 1");
                }
                have_outputs = true;
            } else if (head == ".p") {
                pla.declared_product_count = parse_count(fields, line_no);
            } else if (head == ".ilb") {
                pla.input_labels.assign(fields.begin() + 1, fields.end());
            } else if (head == ".ob") {
                pla.output_labels.assign(fields.begin() + 1, fields.end());
            } else if (head == ".type") {
                pla.type = fields.size() > 1 ? fields[1] : "";
            } else if (head == ".e" || head == ".end") {
                break;
            } else {
                pla.warnings.push_back("line " + std::to_string(line_no) + ": ignoring unknown directive " + head);
            }
            continue;
        }

        if (!have_inputs || !have_outputs) {
            throw ParseError(line_no, "cube before .i/.o declarations");
        }
        Cube cube;
        cube.line = line_no;
        if (fields.size() == 2) {
            cube.inputs = fields[0];
            cube.outputs = fields[1];
        } else {
            std::string joined;
            for (const auto &f : fields) {
                joined += f;
            }
            if (joined.size() != pla.num_inputs + pla.num_outputs) {
                throw ParseError(line_no, "cube width " + std::to_string(joined.size()) + " != " +
                                              std::to_string(pla.num_inputs + pla.num_outputs));
            }
            cube.inputs = joined.substr(0, pla.num_inputs);
            cube.outputs = joined.substr(pla.num_inputs);
        }
        if (cube.inputs.size() != pla.num_inputs) {
            throw ParseError(line_no, "cube input width " + std::to_string(cube.inputs.size()) +
                                          " != " + std::to_string(pla.num_inputs));
        }
        if (cube.outputs.size() != pla.num_outputs) {
            throw ParseError(line_no, "cube output width " + std::to_string(cube.outputs.size()) +
                                          " != " + std::to_string(pla.num_outputs));
        }
        check_pattern(cube.inputs, false, line_no);
        check_pattern(cube.outputs, true, line_no);
        pla.cubes.push_back(std::move(cube));
    }
    if (!have_inputs) {
        throw ParseError(0, "missing .i directive");
    }
    if (!have_outputs) {
        throw ParseError(0, "missing .o directive");
    }
    if (pla.declared_product_count && *pla.declared_product_count != pla.cubes.size()) {
        pla.warnings.push_back(".p declares " + std::to_string(*pla.declared_product_count) +
                               " products but " + std::to_string(pla.cubes.size()) + " were read");
    }
    return pla;
}

PlaFile parse_pla(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_pla(in);
}

PlaFile read_pla_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open " + path.string());
    }
    return parse_pla(in);
}

MemoryImage expand(const PlaFile &pla) {
    const std::size_t n = pla.num_inputs;
    const std::size_t m = pla.num_outputs;
    if (n > kMaxAddressBits) {
        throw ResourceLimit("address width " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kMaxAddressBits) + " bits");
    }
    if (m > kMaxWordBits) {
        throw ResourceLimit("word width " + std::to_string(m) + " exceeds " + std::to_string(kMaxWordBits) + " bits");
    }

    MemoryImage image{n, m, std::vector<std::uint64_t>(std::size_t{1} << n, 0)};
    // Bits of each word that some cube has asserted (as 0 or 1).
    std::vector<std::uint64_t> asserted(image.words.size(), 0);

    for (const Cube &cube : pla.cubes) {
        std::uint64_t base = 0;
        std::uint64_t free_mask = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
            if (cube.inputs[i] == '1') {
                base |= bit;
            } else if (cube.inputs[i] == '-') {
                free_mask |= bit;
            }
        }
        std::uint64_t care = 0;
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < m; ++i) {
            std::uint64_t bit = std::uint64_t{1} << (m - 1 - i);
            if (cube.outputs[i] != '-') {
                care |= bit;
                if (cube.outputs[i] == '1') {
                    value |= bit;
                }
            }
        }

        std::uint64_t sub = free_mask;
        while (true) {
            std::uint64_t address = base | sub;
            std::uint64_t clash = asserted[address] & care & (image.words[address] ^ value);
            if (clash) {
                std::string bits;
                for (std::size_t i = 0; i < n; ++i) {
                    bits += ((address >> (n - 1 - i)) & 1) ? '1' : '0';
                }
                throw ExpansionConflict(address, "line " + std::to_string(cube.line) +
                                                     ": conflicting output bits at address " + bits);
            }
            image.words[address] = (image.words[address] & ~care) | value;
            asserted[address] |= care;
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & free_mask;
        }
    }
    return image;
}

void validate(const MemoryImage &image) {
    if (image.address_bits > kMaxAddressBits) {
        throw InvalidArgument("address width exceeds cap");
    }
    if (image.word_bits == 0 || image.word_bits > kMaxWordBits) {
        throw InvalidArgument("word width must be in [1, 64]");
    }
    if (image.words.size() != (std::size_t{1} << image.address_bits)) {
        throw InvalidArgument("memory image must hold exactly 2^n words");
    }
    if (image.word_bits < 64) {
        for (std::uint64_t w : image.words) {
            if (w >> image.word_bits) {
                throw InvalidArgument("memory word wider than the declared word size");
            }
        }
    }
}

std::string write_pla(const MemoryImage &image) {
    validate(image);
    std::ostringstream out;
    out << ".i " << image.address_bits << "\n.o " << image.word_bits << "\n.p " << image.words.size() << "\n";
    for (std::size_t a = 0; a < image.words.size(); ++a) {
        for (std::size_t i = 0; i < image.address_bits; ++i) {
            out << (((a >> (image.address_bits - 1 - i)) & 1) ? '1' : '0');
        }
        out << ' ';
        for (std::size_t i = 0; i < image.word_bits; ++i) {
            out << (((image.words[a] >> (image.word_bits - 1 - i)) & 1) ? '1' : '0');
        }
        out << '\n';
    }
    out << ".e\n";
    return out.str();
}

}  // namespace qromc
