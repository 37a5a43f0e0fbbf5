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

#include <algorithm>
#include <charconv>
#include <iterator>
#include <random>

#include "qromc/error.hpp"
#include "qromc/lowering.hpp"
#include "qromc/optimize.hpp"
#include "qromc/synthesis.hpp"

namespace qromc {
namespace {

constexpr std::uint64_t kSampleSeed = 0x51c0ffee2026ULL;

}  // namespace

void check_options(const CompileOptions &options) {
    if (options.hidden_bit && options.encoding != Encoding::improved_angle) {
        throw InvalidArgument("--hidden-bit applies only to improved-angle encoding");
    }
    if (options.esop && options.encoding != Encoding::basis) {
        throw InvalidArgument("--esop applies only to basis encoding");
    }
}

Compilation compile(const MemoryImage &image, const CompileOptions &options) {
    check_options(options);
    validate(image);
    Compilation c;
    c.options = options;
    c.image = image;

    if (options.encoding == Encoding::basis) {
        c.synthesized = options.esop ? synth_basis_esop(image) : synth_basis(image);
        c.circuit = lower_mcx(c.synthesized);
        if (options.optimize) {
            c.circuit = double_not_removal(c.circuit);
        }
    } else {
        if (options.encoding == Encoding::improved_angle) {
            c.encoded = encode_improved_angle(image, options.hidden_bit);
            c.synthesized = synth_improved_angle(*c.encoded);
        } else {
            c.encoded = encode_angle(image, options.normalization, options.encoding == Encoding::dense_angle);
            c.synthesized = synth_angle(*c.encoded);
        }
        c.circuit = options.optimize ? optimize_rotation_cascade(c.synthesized) : c.synthesized;
        if (options.lower) {
            c.circuit = lower_mcx(c.circuit);
        }
    }
    if (options.lower) {
        c.circuit = lower_uniform(c.circuit);
    }
    c.metrics = compute_metrics(c.circuit);
    return c;
}

ReadbackReference make_reference(const Compilation &compilation) {
    return ReadbackReference{compilation.options.encoding, compilation.image, compilation.encoded};
}

std::size_t address_bits(const Compilation &compilation) { return compilation.circuit.layout().address; }

std::string_view default_address_spec(std::size_t address_bits) {
    return address_bits <= 12 ? "all" : "sample:4096";
}

std::vector<std::uint64_t> select_addresses(std::size_t address_bits, std::string_view spec) {
    if (address_bits > kMaxAddressBits) {
        throw ResourceLimit("address register wider than " + std::to_string(kMaxAddressBits) + " bits");
    }
    const std::uint64_t total = std::uint64_t{1} << address_bits;
    std::vector<std::uint64_t> out;
    if (spec == "all") {
        out.resize(total);
        for (std::uint64_t a = 0; a < total; ++a) {
            out[a] = a;
        }
        return out;
    }
    constexpr std::string_view prefix = "sample:";
    if (spec.substr(0, prefix.size()) != prefix) {
        throw InvalidArgument("address selection must be 'all' or 'sample:<k>', got '" + std::string(spec) + "'");
    }
    std::string_view digits = spec.substr(prefix.size());
    std::uint64_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || k == 0) {
        throw InvalidArgument("sample size must be a positive integer, got '" + std::string(digits) + "'");
    }
    if (k >= total) {
        return select_addresses(address_bits, "all");
    }
    std::vector<std::uint64_t> all(total);
    for (std::uint64_t a = 0; a < total; ++a) {
        all[a] = a;
    }
    std::mt19937_64 rng(kSampleSeed);
    std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
    std::sort(out.begin(), out.end());
    return out;
}

VerifyReport verify(const Circuit &circuit, const ReadbackReference &reference, std::span<const std::uint64_t> addresses,
                    double tolerance, std::size_t max_qubits) {
    if (circuit.num_qubits() > max_qubits) {
        throw ResourceLimit("circuit uses " + std::to_string(circuit.num_qubits()) + " qubits, cap is " +
                            std::to_string(max_qubits));
    }
    VerifyReport report;
    report.results.reserve(addresses.size());
    for (std::uint64_t a : addresses) {
        report.results.push_back(readback(circuit, a, reference, tolerance, max_qubits));
        if (!report.results.back().passed) {
            ++report.failures;
        }
    }
    return report;
}

}  // namespace qromc
