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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qromc/error.hpp"
#include "qromc/optimize.hpp"
#include "qromc/pipeline.hpp"
#include "qromc/pla.hpp"
#include "qromc/qasm.hpp"
#include "qromc/report.hpp"

namespace {

using namespace qromc;

constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

// Errors raised while reading inputs map to exit 1, everything later to exit 2.
struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompileFlags {
    std::string input;
    std::string encoding;
    std::string normalization = "interp04";
    bool hidden_bit = false;
    bool esop = false;
    bool optimize = false;
    bool lower = false;
};

void add_compile_flags(CLI::App *cmd, CompileFlags &f) {
    cmd->add_option("input", f.input, "Memory image in .pla format")->required();
    cmd->add_option("--encoding", f.encoding, "basis | angle | dense-angle | improved-angle")
        ->required()
        ->check(CLI::IsMember({"basis", "angle", "dense-angle", "improved-angle"}));
    cmd->add_option("--normalization", f.normalization, "Angle normalization (default interp04)")
        ->check(CLI::IsMember({"interp01", "interp04", "scale-2pi", "global-max", "signed"}));
    cmd->add_flag("--hidden-bit", f.hidden_bit, "Drop the implicit leading one (improved-angle)");
    cmd->add_flag("--esop", f.esop, "Reed-Muller synthesis (basis)");
    cmd->add_flag("--optimize", f.optimize, "Gray-code rewriting (angle family) or double-NOT removal (basis)");
    cmd->add_flag("--lower", f.lower, "Lower to {rx, ry, rz, cx}");
}

CompileOptions to_options(const CompileFlags &f) {
    CompileOptions o;
    o.encoding = *parse_encoding(f.encoding);
    o.normalization = *parse_normalization(f.normalization);
    o.hidden_bit = f.hidden_bit;
    o.esop = f.esop;
    o.optimize = f.optimize;
    o.lower = f.lower;
    return o;
}

MemoryImage load_image(const std::string &path) {
    try {
        PlaFile pla = read_pla_file(path);
        for (const std::string &w : pla.warnings) {
            std::cerr << path << ": warning: " << w << "\n";
        }
        return expand(pla);
    } catch (const Error &e) {
        throw InputFailure(path + ": " + e.what());
    }
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument("cannot write " + path);
    }
    out << content;
}

int run_compile(const CompileFlags &f, const std::string &qasm_path, const std::string &metrics_path,
                const std::string &metadata_path) {
    CompileOptions options = to_options(f);
    check_options(options);
    Compilation c = compile(load_image(f.input), options);
    if (!qasm_path.empty()) {
        Circuit emitted = c.circuit;
        if (!is_emittable(emitted)) {
            std::cerr << "note: lowering multi-controlled gates for QASM output\n";
            emitted = lower_mcx(emitted);
        }
        write_file(qasm_path, emit_qasm(emitted));
    }
    if (!metadata_path.empty()) {
        write_file(metadata_path, metadata_json(c));
    }
    if (metrics_path.empty()) {
        std::cout << metrics_json(c);
    } else {
        write_file(metrics_path, metrics_json(c));
    }
    return 0;
}

int run_verify(const CompileFlags &f, double tolerance, const std::string &address_spec, std::size_t max_qubits,
               const std::string &circuit_path) {
    CompileOptions options = to_options(f);
    check_options(options);
    Compilation c = compile(load_image(f.input), options);
    Circuit circuit = c.circuit;
    if (!circuit_path.empty()) {
        std::ifstream in(circuit_path);
        if (!in) {
            throw InputFailure("cannot open " + circuit_path);
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            QasmProgram program = parse_qasm(buffer.str(), c.circuit.layout());
            for (const std::string &w : program.warnings) {
                std::cerr << circuit_path << ": warning: " << w << "\n";
            }
            circuit = std::move(program.circuit);
        } catch (const ParseError &e) {
            throw InputFailure(circuit_path + ": " + e.what());
        }
    }
    const std::size_t bits = address_bits(c);
    const std::string spec = address_spec.empty() ? std::string(default_address_spec(bits)) : address_spec;
    const std::vector<std::uint64_t> addresses = select_addresses(bits, spec);
    VerifyReport report = verify(circuit, make_reference(c), addresses, tolerance, max_qubits);

    std::printf("%-10s %-6s %-22s %-22s %s\n", "address", "result", "value", "expected", "error");
    for (const ReadbackResult &r : report.results) {
        std::printf("%-10llu %-6s %-22.17g %-22.17g %.3e", static_cast<unsigned long long>(r.address),
                    r.passed ? "PASS" : "FAIL", r.value, r.expected, r.error);
        if (!r.message.empty()) {
            std::printf("  %s", r.message.c_str());
        }
        std::printf("\n");
    }
    std::printf("%zu of %zu addresses passed\n", report.results.size() - report.failures, report.results.size());
    return report.passed() ? 0 : kExitVerify;
}

int run_bench(const std::string &dir, const std::string &out_path) {
    std::string csv = bench_csv(bench_directory(dir));
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_file(out_path, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qromc: compile memory images into QROM circuits"};
    app.require_subcommand(1);

    CompileFlags compile_flags;
    std::string qasm_path, metrics_path, metadata_path;
    auto *compile_cmd = app.add_subcommand("compile", "Compile a .pla memory image");
    add_compile_flags(compile_cmd, compile_flags);
    compile_cmd->add_option("--emit-qasm", qasm_path, "Write OpenQASM 2.0");
    compile_cmd->add_option("--metrics-json", metrics_path, "Write metrics JSON (default: standard output)");
    compile_cmd->add_option("--metadata-json", metadata_path, "Write decode parameters JSON");

    CompileFlags verify_flags;
    double tolerance = 1e-9;
    std::string address_spec;
    std::size_t max_qubits = kDefaultMaxQubits;
    std::string circuit_path;
    auto *verify_cmd = app.add_subcommand("verify", "Simulate the compiled circuit and read back every address");
    add_compile_flags(verify_cmd, verify_flags);
    verify_cmd->add_option("--tolerance", tolerance, "Amplitude tolerance")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--addresses", address_spec, "all | sample:<k>");
    verify_cmd->add_option("--max-qubits", max_qubits, "Simulator qubit cap");
    verify_cmd->add_option("--circuit", circuit_path, "Check this OpenQASM file instead of the compiled circuit");

    std::string bench_dir, bench_out;
    auto *bench_cmd = app.add_subcommand("bench", "Metrics CSV for every .pla file of a directory");
    bench_cmd->add_option("dir", bench_dir, "Directory of .pla files")->required();
    bench_cmd->add_option("--out", bench_out, "CSV path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compile_cmd) {
            return run_compile(compile_flags, qasm_path, metrics_path, metadata_path);
        }
        if (*verify_cmd) {
            return run_verify(verify_flags, tolerance, address_spec, max_qubits, circuit_path);
        }
        return run_bench(bench_dir, bench_out);
    } catch (const InputFailure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
