// Copyright 2026 The qarch Authors
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

#include "qarch/circuit.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace qarch {

QasmError::QasmError(const std::string &what, size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {
}

void Circuit::append(Gate gate) {
    size_t want = gate.kind == GateKind::two_qubit ? 2 : 1;
    if (gate.operands.size() != want) {
        throw std::invalid_argument("gate '" + gate.name + "' has wrong operand count");
    }
    for (auto q : gate.operands) {
        if (q >= num_qubits) {
            throw std::out_of_range("gate '" + gate.name + "' operand out of range");
        }
    }
    if (want == 2 && gate.operands[0] == gate.operands[1]) {
        throw std::invalid_argument("gate '" + gate.name + "' operands must be distinct");
    }
    gates.push_back(std::move(gate));
}

void Circuit::append_cx(QubitId a, QubitId b) {
    append(Gate{"cx", "", GateKind::two_qubit, {a, b}});
}

namespace {

struct Statement {
    std::string text;
    size_t line;
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Removes `//` comments, keeping newlines so line numbers survive.
std::string strip_comments(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (in_comment) {
            if (c == '\n') {
                in_comment = false;
                out.push_back(c);
            }
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            in_comment = true;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

// Splits into `;`-terminated statements. `gate ... { ... }` bodies are skipped
// as a whole.
std::vector<Statement> split_statements(const std::string &text) {
    std::vector<Statement> out;
    size_t line = 1;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            if (text[i] == '\n') {
                line++;
            }
            i++;
        }
        if (i >= text.size()) {
            break;
        }
        size_t start_line = line;
        std::string current;
        bool is_gate_def = text.compare(i, 4, "gate") == 0 && i + 4 < text.size() &&
                           std::isspace(static_cast<unsigned char>(text[i + 4]));
        if (is_gate_def) {
            size_t depth = 0;
            bool opened = false;
            for (; i < text.size(); i++) {
                char c = text[i];
                if (c == '\n') {
                    line++;
                }
                if (c == '{') {
                    depth++;
                    opened = true;
                } else if (c == '}') {
                    if (depth == 0) {
                        throw SyntaxError("unbalanced '}'", line);
                    }
                    depth--;
                    if (depth == 0 && opened) {
                        i++;
                        break;
                    }
                }
            }
            if (depth != 0 || !opened) {
                throw SyntaxError("unterminated gate definition", start_line);
            }
            continue;
        }
        bool terminated = false;
        for (; i < text.size(); i++) {
            char c = text[i];
            if (c == ';') {
                terminated = true;
                i++;
                break;
            }
            if (c == '\n') {
                line++;
            }
            current.push_back(c);
        }
        if (!terminated) {
            throw SyntaxError("missing ';'", start_line);
        }
        out.push_back({std::move(current), start_line});
    }
    return out;
}

class Cursor {
   public:
    Cursor(std::string_view text, size_t line) : text_(text), line_(line) {
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            pos_++;
            return true;
        }
        return false;
    }

    bool accept(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string identifier() {
        skip_ws();
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) {
            fail("expected identifier");
        }
        size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
            pos_++;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    uint64_t integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        auto digits = text_.substr(start, pos_ - start);
        if (digits.size() > 9) {
            fail("integer too large");
        }
        return std::stoull(std::string(digits));
    }

    // Balanced text between an already consumed '(' and its matching ')'.
    std::string parenthesized() {
        size_t depth = 1;
        size_t start = pos_;
        for (; pos_ < text_.size(); pos_++) {
            if (text_[pos_] == '(') {
                depth++;
            } else if (text_[pos_] == ')') {
                if (--depth == 0) {
                    auto inner = text_.substr(start, pos_ - start);
                    pos_++;
                    std::string out;
                    for (char c : inner) {
                        if (!std::isspace(static_cast<unsigned char>(c))) {
                            out.push_back(c);
                        }
                    }
                    return out;
                }
            }
        }
        fail("unbalanced '('");
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw SyntaxError(what + " in '" + std::string(text_) + "'", line_);
    }

    size_t line() const {
        return line_;
    }

   private:
    std::string_view text_;
    size_t line_;
    size_t pos_ = 0;
};

struct Register {
    std::string name;
    size_t size = 0;
};

// A qubit argument; nullopt index means the whole register.
struct Argument {
    std::optional<QubitId> index;
};

Argument parse_qubit_argument(Cursor &cur, const std::optional<Register> &qreg) {
    auto name = cur.identifier();
    if (!qreg.has_value()) {
        cur.fail("qubit argument before any qreg declaration");
    }
    if (name != qreg->name) {
        cur.fail("unknown quantum register '" + name + "'");
    }
    if (!cur.accept('[')) {
        return {};
    }
    auto index = cur.integer();
    cur.expect(']');
    if (index >= qreg->size) {
        throw IndexOutOfRange(
            "qubit index " + std::to_string(index) + " exceeds register size " +
                std::to_string(qreg->size),
            cur.line());
    }
    return {static_cast<QubitId>(index)};
}

// Classical argument of `measure ... -> c[i]`; only its syntax is checked.
void parse_classical_argument(Cursor &cur) {
    cur.identifier();
    if (cur.accept('[')) {
        cur.integer();
        cur.expect(']');
    }
}

}  // namespace

Circuit parse_qasm(std::string_view text, std::string name) {
    Circuit circuit;
    circuit.name = std::move(name);
    std::optional<Register> qreg;

    for (const auto &stmt : split_statements(strip_comments(text))) {
        Cursor cur(stmt.text, stmt.line);
        if (cur.accept("OPENQASM")) {
            continue;
        }
        auto keyword = cur.identifier();
        if (keyword == "include" || keyword == "opaque" || keyword == "barrier") {
            continue;
        }
        if (keyword == "if") {
            cur.fail("classically controlled operations are not supported");
        }
        if (keyword == "qreg" || keyword == "creg") {
            Register reg;
            reg.name = cur.identifier();
            cur.expect('[');
            reg.size = cur.integer();
            cur.expect(']');
            if (!cur.at_end()) {
                cur.fail("trailing tokens");
            }
            if (keyword == "creg") {
                continue;
            }
            if (qreg.has_value()) {
                throw MultipleRegisters("only one qreg is supported", stmt.line);
            }
            qreg = reg;
            circuit.num_qubits = reg.size;
            continue;
        }
        if (keyword == "measure") {
            auto arg = parse_qubit_argument(cur, qreg);
            if (!cur.accept("->")) {
                cur.fail("expected '->'");
            }
            parse_classical_argument(cur);
            if (!cur.at_end()) {
                cur.fail("trailing tokens");
            }
            if (arg.index.has_value()) {
                circuit.gates.push_back({"measure", "", GateKind::measure, {*arg.index}});
            } else {
                for (QubitId q = 0; q < qreg->size; q++) {
                    circuit.gates.push_back({"measure", "", GateKind::measure, {q}});
                }
            }
            continue;
        }

        Gate gate;
        gate.name = keyword;
        if (cur.accept('(')) {
            gate.params = cur.parenthesized();
        }
        std::vector<Argument> args;
        do {
            args.push_back(parse_qubit_argument(cur, qreg));
        } while (cur.accept(','));
        if (!cur.at_end()) {
            cur.fail("trailing tokens");
        }
        if (args.size() >= 3) {
            throw UnsupportedGate(
                "gate '" + keyword + "' acts on " + std::to_string(args.size()) +
                    " qubits; decompose it into 1- and 2-qubit gates",
                stmt.line);
        }
        if (args.size() == 2) {
            if (!args[0].index.has_value() || !args[1].index.has_value()) {
                cur.fail("register broadcast of two-qubit gates is not supported");
            }
            if (*args[0].index == *args[1].index) {
                cur.fail("two-qubit gate operands must be distinct");
            }
            gate.kind = GateKind::two_qubit;
            gate.operands = {*args[0].index, *args[1].index};
            circuit.gates.push_back(std::move(gate));
            continue;
        }
        gate.kind = GateKind::one_qubit;
        if (args[0].index.has_value()) {
            gate.operands = {*args[0].index};
            circuit.gates.push_back(std::move(gate));
        } else {
            for (QubitId q = 0; q < qreg->size; q++) {
                Gate copy = gate;
                copy.operands = {q};
                circuit.gates.push_back(std::move(copy));
            }
        }
    }
    return circuit;
}

Circuit read_qasm_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_qasm(buffer.str(), std::filesystem::path(path).stem().string());
}

std::string to_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits << "];\n";
    out << "creg c[" << circuit.num_qubits << "];\n";
    for (const auto &gate : circuit.gates) {
        if (gate.kind == GateKind::measure) {
            out << "measure q[" << gate.operands[0] << "] -> c[" << gate.operands[0] << "];\n";
            continue;
        }
        out << gate.name;
        if (!gate.params.empty()) {
            out << "(" << gate.params << ")";
        }
        for (size_t k = 0; k < gate.operands.size(); k++) {
            out << (k == 0 ? " " : ",") << "q[" << gate.operands[k] << "]";
        }
        out << ";\n";
    }
    return out.str();
}

size_t two_qubit_gate_count(const Circuit &circuit) {
    return std::count_if(circuit.gates.begin(), circuit.gates.end(), [](const Gate &g) {
        return g.kind == GateKind::two_qubit;
    });
}

}  // namespace qarch
