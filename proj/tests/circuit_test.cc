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


#include <gtest/gtest.h>

#include <random>

#include "qarch/circuit.h"
#include "test_support.h"

namespace qarch {
namespace {

TEST(Parse, MinimalCx) {
    auto c = parse_qasm("qreg q[2]; cx q[0],q[1];");
    EXPECT_EQ(c.num_qubits, 2u);
    ASSERT_EQ(c.gates.size(), 1u);
    EXPECT_EQ(c.gates[0].kind, GateKind::two_qubit);
    EXPECT_EQ(c.gates[0].name, "cx");
    EXPECT_EQ(c.gates[0].operands, (std::vector<QubitId>{0, 1}));
}

TEST(Parse, HadamardAndMeasure) {
    auto c = parse_qasm("qreg q[1]; h q[0]; measure q[0] -> c[0];");
    ASSERT_EQ(c.gates.size(), 2u);
    EXPECT_EQ(c.gates[0].kind, GateKind::one_qubit);
    EXPECT_EQ(c.gates[0].name, "h");
    EXPECT_EQ(c.gates[1].kind, GateKind::measure);
    EXPECT_EQ(c.gates[1].operands, (std::vector<QubitId>{0}));
}

TEST(Parse, ThreeQubitGateRejected) {
    EXPECT_THROW(parse_qasm("qreg q[3]; ccx q[0],q[1],q[2];"), UnsupportedGate);
}

TEST(Parse, IndexOutOfRange) {
    EXPECT_THROW(parse_qasm("qreg q[2];\ncx q[0],q[2];"), IndexOutOfRange);
}

TEST(Parse, SecondQregRejected) {
    EXPECT_THROW(parse_qasm("qreg q[2]; qreg r[2];"), MultipleRegisters);
}

TEST(Parse, SyntaxErrorCarriesLine) {
    try {
        parse_qasm("OPENQASM 2.0;\nqreg q[2];\n\ncx q[0] q[1];");
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError &e) {
        EXPECT_EQ(e.line, 4u);
    }
    EXPECT_THROW(parse_qasm("qreg q[2]; cx q[0],q[1]"), SyntaxError);
    EXPECT_THROW(parse_qasm("qreg q[2]; cx q[1],q[1];"), SyntaxError);
}

TEST(Parse, HeaderBarrierCommentsAndGateDefs) {
    auto c = parse_qasm(R"(OPENQASM 2.0;
include "qelib1.inc";
// comment cx q[0],q[1];
gate foo a,b { cx a,b; h a; }
qreg q[3];
creg c[3];
u3(0.1, 0.2, pi/2) q[2];
barrier q[0],q[1];
cx q[2],q[0];
)");
    ASSERT_EQ(c.gates.size(), 2u);
    EXPECT_EQ(c.gates[0].params, "0.1,0.2,pi/2");
    EXPECT_EQ(c.gates[1].operands, (std::vector<QubitId>{2, 0}));
}

TEST(Parse, RegisterBroadcast) {
    auto c = parse_qasm("qreg q[3]; h q; measure q -> c;");
    EXPECT_EQ(c.gates.size(), 6u);
    EXPECT_EQ(c.gates[5].kind, GateKind::measure);
    EXPECT_EQ(c.gates[5].operands[0], 2u);
}

TEST(Parse, FileNameBecomesCircuitName) {
    auto c = read_qasm_file(testing::source_path("benchmarks/qft_8.qasm"));
    EXPECT_EQ(c.name, "qft_8");
    EXPECT_EQ(c.num_qubits, 8u);
    EXPECT_EQ(two_qubit_gate_count(c), 56u);
}

TEST(Count, Examples) {
    Circuit empty;
    EXPECT_EQ(two_qubit_gate_count(empty), 0u);
    auto c = parse_qasm("qreg q[3]; cx q[0],q[1]; h q[0]; cx q[1],q[2]; h q[1]; cx q[0],q[2];"
                        "cx q[2],q[1]; h q[2]; cx q[1],q[0];");
    EXPECT_EQ(two_qubit_gate_count(c), 5u);
}

TEST(Circuit, AppendValidatesOperands) {
    Circuit c;
    c.num_qubits = 2;
    EXPECT_THROW(c.append_cx(0, 2), std::out_of_range);
    EXPECT_THROW(c.append_cx(1, 1), std::invalid_argument);
    EXPECT_THROW(c.append({"h", "", GateKind::one_qubit, {0, 1}}), std::invalid_argument);
}

TEST(Property, RoundTripIsIdentity) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; trial++) {
        auto c = testing::random_circuit(rng, 12, 120);
        auto again = parse_qasm(to_qasm(c), c.name);
        ASSERT_EQ(again, c) << "trial " << trial;
    }
}

TEST(Property, CountMatchesCxStatements) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; trial++) {
        auto c = testing::random_circuit(rng, 16, 200);
        auto text = to_qasm(c);
        size_t statements = 0;
        for (size_t pos = text.find("\ncx "); pos != std::string::npos;
             pos = text.find("\ncx ", pos + 1)) {
            statements++;
        }
        ASSERT_EQ(two_qubit_gate_count(parse_qasm(text)), statements);
    }
}

}  // namespace
}  // namespace qarch
