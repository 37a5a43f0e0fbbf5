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

#include "qromc/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "qromc/error.hpp"

namespace qromc {
namespace {

constexpr Encoding kBenchEncodings[] = {Encoding::basis, Encoding::angle, Encoding::improved_angle};

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string metrics_json(const Compilation &compilation) {
    const Metrics &m = compilation.metrics;
    nlohmann::ordered_json j;
    j["encoding"] = std::string(to_string(compilation.options.encoding));
    j["optimized"] = compilation.options.optimize;
    j["lowered"] = compilation.options.lower;
    j["inputs"] = compilation.image.address_bits;
    j["outputs"] = compilation.image.word_bits;
    j["qubits"] = m.qubit_count;
    j["gate_count"] = m.gate_count;
    j["quantum_cost"] = m.quantum_cost;
    j["quantum_depth"] = m.quantum_depth;
    j["gate_histogram"] = m.gate_histogram;
    return j.dump(2) + "\n";
}

std::string metadata_json(const Compilation &compilation) {
    nlohmann::ordered_json j;
    j["encoding"] = std::string(to_string(compilation.options.encoding));
    j["address_bits"] = compilation.image.address_bits;
    j["word_bits"] = compilation.image.word_bits;
    if (compilation.encoded) {
        const EncodedImage &e = *compilation.encoded;
        j["circuit_address_bits"] = e.address_bits;
        if (e.encoding == Encoding::improved_angle) {
            j["mode"] = std::string(to_string(NormalizationMode::interp04));
            j["z_max"] = e.z_max;
            j["exponent_grid"] = exponent_grid_size(e.z_max);
            j["hidden_bit"] = e.hidden_bit;
            j["hidden_bit_bias"] = e.hidden_bit ? kHiddenBitBias : 0.0;
        } else {
            j["mode"] = std::string(to_string(e.mode));
            j["dense"] = e.dense;
        }
        j["f_norm"] = e.f_norm;
        j["v_max"] = e.v_max ? nlohmann::ordered_json(*e.v_max) : nlohmann::ordered_json(nullptr);
    }
    return j.dump(2) + "\n";
}

std::vector<BenchRow> bench_file(const std::filesystem::path &path) {
    std::vector<BenchRow> rows;
    const std::string name = path.filename().string();
    std::optional<MemoryImage> image;
    std::string load_error;
    try {
        image = expand(read_pla_file(path));
    } catch (const std::exception &e) {
        load_error = e.what();
    }
    for (Encoding encoding : kBenchEncodings) {
        for (bool optimized : {false, true}) {
            for (bool lowered : {false, true}) {
                BenchRow row;
                row.file = name;
                row.encoding = encoding;
                row.optimized = optimized;
                row.lowered = lowered;
                if (!image) {
                    row.status = "ERROR";
                    row.message = load_error;
                    rows.push_back(std::move(row));
                    continue;
                }
                row.inputs = image->address_bits;
                row.outputs = image->word_bits;
                try {
                    CompileOptions options;
                    options.encoding = encoding;
                    options.optimize = optimized;
                    options.lower = lowered;
                    row.metrics = compile(*image, options).metrics;
                } catch (const std::exception &e) {
                    row.status = "ERROR";
                    row.message = e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::vector<BenchRow> bench_directory(const std::filesystem::path &dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw InvalidArgument("not a directory: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".pla") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<std::vector<BenchRow>> per_file(files.size());
    const long count = static_cast<long>(files.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        per_file[static_cast<std::size_t>(i)] = bench_file(files[static_cast<std::size_t>(i)]);
    }
    std::vector<BenchRow> rows;
    for (auto &chunk : per_file) {
        rows.insert(rows.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::ostringstream out;
    out << "file,encoding,optimized,gate_set,status,inputs,outputs,qubits,gate_count,quantum_cost,quantum_depth,"
           "gate_histogram,message\n";
    for (const BenchRow &r : rows) {
        std::string histogram;
        for (const auto &[kind, n] : r.metrics.gate_histogram) {
            if (!histogram.empty()) {
                histogram += ' ';
            }
            histogram += kind + ":" + std::to_string(n);
        }
        out << csv_field(r.file) << ',' << to_string(r.encoding) << ',' << (r.optimized ? "yes" : "no") << ','
            << (r.lowered ? "lowered" : "natural") << ',' << r.status << ',' << r.inputs << ',' << r.outputs << ','
            << r.metrics.qubit_count << ',' << r.metrics.gate_count << ',' << r.metrics.quantum_cost << ','
            << r.metrics.quantum_depth << ',' << csv_field(histogram) << ',' << csv_field(r.message) << '\n';
    }
    return out.str();
}

}  // namespace qromc
