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

#include "qromc/qasm.hpp"

#include <gtest/gtest.h>

#include <random>

#include "../support/oracle.hpp"
#include "qromc/error.hpp"

using namespace qromc;

namespace {

Circuit random_lowered(std::mt19937_64 &rng, std::size_t q, std::size_t count) {
    std::uniform_real_distribution<double> angle(-10, 10);
    Circuit c(Layout{0, q, 0});
    for (std::size_t i = 0; i < count; ++i) {
        const Qubit a = static_cast<Qubit>(rng() % q);
        const Qubit b = static_cast<Qubit>((a + 1 + rng() % (q - 1)) % q);
        switch (rng() % 4) {
        case 0:
            c.append(gates::rx(a, angle(rng)));
            break;
        case 1:
            c.append(gates::ry(a, angle(rng)));
            break;
        case 2:
            c.append(gates::rz(a, angle(rng) * 1e-7));
            break;
        default:
            c.append(gates::cx(a, b));
            break;
        }
    }
    return c;
}

}  // namespace

TEST(emit_qasm, header_only) {
    EXPECT_EQ(emit_qasm(Circuit(Layout{0, 2, 0})), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");
}

TEST(emit_qasm, statements) {
    Circuit c(Layout{2, 3, 0});
    c.append(gates::x(0));
    c.append(gates::rx(3, 1.5707963267948966));
    c.append(gates::ccx(0, 1, 4));
    c.append(gates::cz(1, 2));
    c.append(gates::h(2));
    const std::string text = emit_qasm(c);
    EXPECT_NE(text.find("\nx q[0];\n"), std::string::npos);
    EXPECT_NE(text.find("\nrx(1.5707963267948966) q[3];\n"), std::string::npos);
    EXPECT_NE(text.find("\nccx q[0],q[1],q[4];\n"), std::string::npos);
    EXPECT_NE(text.find("\ncz q[1],q[2];\n"), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
}

TEST(emit_qasm, rejects_unlowered_gates) {
    Circuit c(Layout{2, 1, 0});
    c.append(gates::mcx({{0, true}, {1, true}}, 2));
    EXPECT_THROW(emit_qasm(c), InvalidArgument);
    EXPECT_FALSE(is_emittable(c));
    Circuit n(Layout{1, 1, 0});
    n.append(gates::mcrx({{0, true}}, 1, 0.2));
    EXPECT_THROW(emit_qasm(n), InvalidArgument);
    Circuit neg(Layout{1, 1, 0});
    neg.append(Gate{GateKind::cx, {{0, false}}, {1}, 0.0});
    EXPECT_THROW(emit_qasm(neg), InvalidArgument);
}

TEST(parse_qasm, round_trip_gate_lists) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        Circuit c = random_lowered(rng, 2 + rng() % 5, rng() % 30);
        const std::string text = emit_qasm(c);
        QasmProgram p = parse_qasm(text);
        EXPECT_EQ(p.circuit.gates(), c.gates());
        EXPECT_EQ(emit_qasm(p.circuit), text);
        EXPECT_TRUE(p.warnings.empty());
    }
}

TEST(parse_qasm, round_trip_statevector) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        Circuit c = random_lowered(rng, 4, 30);
        c.append(gates::h(0));
        c.append(gates::ccx(0, 1, 2));
        Circuit back = parse_qasm(emit_qasm(c), c.layout()).circuit;
        EXPECT_EQ(oracle::run(back, oracle::basis(4, 3)), oracle::run(c, oracle::basis(4, 3)));
    }
}

TEST(parse_qasm, zero_rotation_kept) {
    QasmProgram p = parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nrx(0) q[0];\n");
    ASSERT_EQ(p.circuit.size(), 1u);
    EXPECT_EQ(p.circuit.gates()[0], gates::rx(0, 0.0));
}

TEST(parse_qasm, creg_measure_barrier_ignored_with_warning) {
    QasmProgram p = parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\nx q[1];\n"
                               "barrier q[0],q[1];\nmeasure q[0] -> c[0];\n");
    EXPECT_EQ(p.circuit.size(), 1u);
    EXPECT_EQ(p.warnings.size(), 3u);
}

TEST(parse_qasm, pi_expressions_and_comments) {
    QasmProgram p = parse_qasm("OPENQASM 2.0; // header\ninclude \"qelib1.inc\";\nqreg q[1];\n"
                               "rz(-pi/2) q[0]; // quarter\nry(3*pi/4) q[0];\nrx(2*(pi-1)) q[0];\n");
    ASSERT_EQ(p.circuit.size(), 3u);
    EXPECT_DOUBLE_EQ(p.circuit.gates()[0].angle, -oracle::kPi / 2);
    EXPECT_DOUBLE_EQ(p.circuit.gates()[1].angle, 3 * oracle::kPi / 4);
    EXPECT_DOUBLE_EQ(p.circuit.gates()[2].angle, 2 * (oracle::kPi - 1));
}

TEST(parse_qasm, errors_carry_line_numbers) {
    try {
        parse_qasm("OPENQASM 2.0;\nqreg q[2];\nu3(0,0,0) q[0];\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nx q[2];\n"), ParseError);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n"), ParseError);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[0];\n"), ParseError);
    EXPECT_THROW(parse_qasm("qreg q[2];\n"), ParseError);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nqreg r[2];\n"), ParseError);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nx q[0]\n"), ParseError);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[3];\n", Layout{1, 1, 0}), ParseError);
}
