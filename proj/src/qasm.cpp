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

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qromc/error.hpp"

namespace qromc {
namespace {

std::string format_angle(double angle) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", angle);
    return buf;
}

bool emittable(const Gate &g) {
    for (const Control &c : g.controls) {
        if (!c.positive) {
            return false;
        }
    }
    return g.kind != GateKind::mcx && g.kind != GateKind::mcrx && g.kind != GateKind::mcrz;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Recursive-descent evaluator for angle arguments.
class Expr {
  public:
    Expr(std::string_view text, std::size_t line) : s_(text), line_(line) {}

    double parse() {
        double v = sum();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(s_.substr(pos_)) + "' in angle");
        }
        return v;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(line_, msg); }

    double sum() {
        double v = product();
        while (true) {
            if (eat('+')) {
                v += product();
            } else if (eat('-')) {
                v -= product();
            } else {
                return v;
            }
        }
    }

    double product() {
        double v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }

    double unary() {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        return atom();
    }

    double atom() {
        skip();
        if (eat('(')) {
            double v = sum();
            if (!eat(')')) {
                fail("missing ')' in angle");
            }
            return v;
        }
        if (s_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return std::numbers::pi;
        }
        const char *begin = s_.data() + pos_;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
        if (ec != std::errc() || ptr == begin) {
            fail("bad number in angle");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

Qubit parse_operand(std::string_view text, std::size_t line, std::size_t num_qubits) {
    text = trim(text);
    if (text.size() < 4 || text.substr(0, 2) != "q[" || text.back() != ']') {
        throw ParseError(line, "expected operand q[i], got '" + std::string(text) + "'");
    }
    std::string_view digits = text.substr(2, text.size() - 3);
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError(line, "bad qubit index '" + std::string(digits) + "'");
    }
    if (index >= num_qubits) {
        throw ParseError(line, "qubit index " + std::to_string(index) + " outside qreg");
    }
    return static_cast<Qubit>(index);
}

}  // namespace

bool is_emittable(const Circuit &circuit) {
    for (const Gate &g : circuit.gates()) {
        if (!emittable(g)) {
            return false;
        }
    }
    return true;
}

std::string emit_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << circuit.num_qubits() << "];\n";
    for (const Gate &g : circuit.gates()) {
        if (!emittable(g)) {
            throw InvalidArgument("cannot emit " + std::string(kind_name(g.kind)) +
                                  " with these controls; lower multi-controlled gates first");
        }
        out << kind_name(g.kind);
        if (is_rotation(g.kind)) {
            out << '(' << format_angle(g.angle) << ')';
        }
        char sep = ' ';
        for (const Control &c : g.controls) {
            out << sep << "q[" << c.qubit << ']';
            sep = ',';
        }
        for (Qubit t : g.targets) {
            out << sep << "q[" << t << ']';
            sep = ',';
        }
        out << ";\n";
    }
    return out.str();
}

QasmProgram parse_qasm(std::string_view text, std::optional<Layout> layout) {
    QasmProgram program;
    std::optional<std::size_t> num_qubits;
    bool saw_header = false;

    // Statements end at ';'; track line numbers of each statement start.
    std::size_t line = 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::string statement;
        std::size_t statement_line = 0;
        bool terminated = false;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (pos < text.size() && text[pos] != '\n') {
                    ++pos;
                }
                continue;
            }
            ++pos;
            if (c == '\n') {
                ++line;
            }
            if (c == ';') {
                terminated = true;
                break;
            }
            if (statement_line == 0 && !std::isspace(static_cast<unsigned char>(c))) {
                statement_line = line;
            }
            statement.push_back(c);
        }
        std::string_view st = trim(statement);
        if (st.empty()) {
            continue;
        }
        if (!terminated) {
            throw ParseError(statement_line, "missing ';'");
        }

        std::size_t name_end = 0;
        while (name_end < st.size() && (std::isalnum(static_cast<unsigned char>(st[name_end])) || st[name_end] == '_')) {
            ++name_end;
        }
        const std::string name(st.substr(0, name_end));
        std::string_view rest = trim(st.substr(name_end));

        if (name == "OPENQASM") {
            if (rest != "2.0") {
                throw ParseError(statement_line, "only OPENQASM 2.0 is supported");
            }
            saw_header = true;
            continue;
        }
        if (!saw_header) {
            throw ParseError(statement_line, "missing OPENQASM 2.0 header");
        }
        if (name == "include") {
            continue;
        }
        if (name == "qreg") {
            if (num_qubits) {
                throw ParseError(statement_line, "only one qreg is supported");
            }
            std::size_t open = rest.find('[');
            std::size_t close = rest.find(']');
            if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
                throw ParseError(statement_line, "bad qreg declaration");
            }
            std::string_view digits = rest.substr(open + 1, close - open - 1);
            std::size_t n = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
            if (ec != std::errc() || ptr != digits.data() + digits.size()) {
                throw ParseError(statement_line, "bad qreg size");
            }
            if (layout) {
                if (layout->num_qubits() != n) {
                    throw ParseError(statement_line, "qreg has " + std::to_string(n) + " qubits, expected " +
                                                         std::to_string(layout->num_qubits()));
                }
                program.circuit = Circuit(*layout);
            } else {
                program.circuit = Circuit(Layout{0, n, 0});
            }
            num_qubits = n;
            continue;
        }
        if (name == "creg" || name == "measure" || name == "barrier") {
            program.warnings.push_back("line " + std::to_string(statement_line) + ": ignored " + name + " statement");
            continue;
        }

        auto kind = kind_from_name(name);
        if (!kind || *kind == GateKind::mcx || *kind == GateKind::mcrx || *kind == GateKind::mcrz) {
            throw ParseError(statement_line, "unsupported statement '" + name + "'");
        }
        if (!num_qubits) {
            throw ParseError(statement_line, "gate before qreg declaration");
        }
        double angle = 0.0;
        if (is_rotation(*kind)) {
            if (rest.empty() || rest.front() != '(') {
                throw ParseError(statement_line, name + " needs an angle argument");
            }
            int depth = 0;
            std::size_t close = 0;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                depth += rest[i] == '(' ? 1 : rest[i] == ')' ? -1 : 0;
                if (depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close == 0) {
                throw ParseError(statement_line, "unbalanced parentheses");
            }
            angle = Expr(rest.substr(1, close - 1), statement_line).parse();
            rest = trim(rest.substr(close + 1));
        } else if (!rest.empty() && rest.front() == '(') {
            throw ParseError(statement_line, name + " takes no parameters");
        }

        std::vector<Qubit> operands;
        while (!rest.empty()) {
            std::size_t comma = rest.find(',');
            operands.push_back(parse_operand(rest.substr(0, comma), statement_line, *num_qubits));
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
        std::size_t expected = 1;
        if (*kind == GateKind::cx || *kind == GateKind::cz) {
            expected = 2;
        } else if (*kind == GateKind::ccx) {
            expected = 3;
        }
        if (operands.size() != expected) {
            throw ParseError(statement_line, name + " takes " + std::to_string(expected) + " operands");
        }
        Gate g{*kind, {}, {operands.back()}, angle};
        for (std::size_t i = 0; i + 1 < operands.size(); ++i) {
            g.controls.push_back({operands[i], true});
        }
        try {
            program.circuit.append(std::move(g));
        } catch (const InvalidArgument &e) {
            throw ParseError(statement_line, e.what());
        }
    }
    if (!saw_header) {
        throw ParseError(1, "missing OPENQASM 2.0 header");
    }
    if (!num_qubits) {
        throw ParseError(line, "missing qreg declaration");
    }
    return program;
}

}  // namespace qromc
