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

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qarch {

using QubitId = uint32_t;

enum class GateKind : uint8_t {
    one_qubit,
    two_qubit,
    measure,
};

struct Gate {
    std::string name;
    /// Parameter text between the parentheses, kept verbatim (may be empty).
    std::string params;
    GateKind kind = GateKind::one_qubit;
    std::vector<QubitId> operands;

    bool operator==(const Gate &other) const = default;
};

/// A program over `num_qubits` logical qubits, gates in source order.
struct Circuit {
    std::string name;
    size_t num_qubits = 0;
    std::vector<Gate> gates;

    bool operator==(const Circuit &other) const = default;

    /// Appends a gate after checking arity and operand range.
    void append(Gate gate);
    void append_cx(QubitId a, QubitId b);
};

/// Base class of every error raised while reading a QASM program.
struct QasmError : std::runtime_error {
    QasmError(const std::string &what, size_t line);
    size_t line;
};

struct SyntaxError : QasmError {
    using QasmError::QasmError;
};

/// Gates acting on three or more qubits; the input was not decomposed.
struct UnsupportedGate : QasmError {
    using QasmError::QasmError;
};

struct IndexOutOfRange : QasmError {
    using QasmError::QasmError;
};

struct MultipleRegisters : QasmError {
    using QasmError::QasmError;
};

/// Parses the supported OpenQASM 2.0 subset.
///
/// One `qreg` is allowed. `creg`, `barrier`, `include` and the version line are
/// accepted and dropped, as are `gate`/`opaque` definitions (applications of
/// user gates pass through by name). A single-qubit gate or measurement applied
/// to a whole register expands to one gate per qubit.
Circuit parse_qasm(std::string_view text, std::string name = "");

/// Reads and parses a `.qasm` file; the circuit name is the file stem.
Circuit read_qasm_file(const std::string &path);

/// Serializes back to the supported subset. `parse_qasm(to_qasm(c)) == c`.
std::string to_qasm(const Circuit &circuit);

size_t two_qubit_gate_count(const Circuit &circuit);

}  // namespace qarch
