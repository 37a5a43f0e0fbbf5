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

#include <filesystem>
#include <string>
#include <vector>

#include "qromc/circuit.hpp"
#include "qromc/pipeline.hpp"

namespace qromc {

/// {"encoding", "optimized", "lowered", "inputs", "outputs", "qubits",
///  "gate_count", "quantum_cost", "quantum_depth", "gate_histogram"}
std::string metrics_json(const Compilation &compilation);

/// Decode parameters of angle-family encodings (mode, f_norm, v_max, z_max, hidden_bit, ...).
std::string metadata_json(const Compilation &compilation);

struct BenchRow {
    std::string file;
    Encoding encoding = Encoding::basis;
    bool optimized = false;
    bool lowered = false;
    /// "OK" or "ERROR".
    std::string status = "OK";
    std::string message;
    std::size_t inputs = 0;
    std::size_t outputs = 0;
    Metrics metrics;
};

/// Twelve rows: {basis, angle, improved-angle} x {plain, optimized} x {natural, lowered}.
/// A file that fails to load or compile yields rows with status ERROR.
std::vector<BenchRow> bench_file(const std::filesystem::path &path);

/// Every `.pla` file of `dir`, processed in parallel, rows ordered by file name.
std::vector<BenchRow> bench_directory(const std::filesystem::path &dir);

std::string bench_csv(const std::vector<BenchRow> &rows);

}  // namespace qromc
