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

#include <algorithm>
#include <random>
#include <sstream>

#include "qarch/profiler.h"
#include "test_support.h"

namespace qarch {
namespace {

Circuit three_qubit_example() {
    Circuit c;
    c.num_qubits = 3;
    c.append_cx(0, 1);
    c.append_cx(1, 0);
    c.append_cx(1, 2);
    return c;
}

TEST(Matrix, HandEnumeratedExample) {
    auto m = coupling_matrix(three_qubit_example());
    EXPECT_EQ(m(0, 1), 2u);
    EXPECT_EQ(m(1, 0), 2u);
    EXPECT_EQ(m(1, 2), 1u);
    EXPECT_EQ(m(0, 2), 0u);
    EXPECT_EQ(m.total(), 3u);
}

TEST(Matrix, IgnoresOneQubitGatesAndMeasurement) {
    auto c = parse_qasm("qreg q[3]; h q; rz(0.3) q[1]; measure q -> c;");
    auto m = coupling_matrix(c);
    for (QubitId a = 0; a < 3; a++) {
        for (QubitId b = 0; b < 3; b++) {
            EXPECT_EQ(m(a, b), 0u);
        }
    }
}

TEST(Matrix, WalkthroughFixture) {
    auto m = coupling_matrix(testing::star_walkthrough());
    EXPECT_EQ(m(0, 4), 2u);
    EXPECT_EQ(m(4, 0), 2u);
    EXPECT_EQ(m(1, 4), 2u);
    EXPECT_EQ(m(0, 1), 1u);
    EXPECT_EQ(m(2, 4), 1u);
    EXPECT_EQ(m(3, 4), 1u);
    EXPECT_EQ(m(2, 3), 0u);
}

TEST(Degrees, HandEnumeratedExample) {
    auto l = degree_list(coupling_matrix(three_qubit_example()));
    EXPECT_EQ(l, (CouplingDegreeList{{1, 3}, {0, 2}, {2, 1}}));
}

TEST(Degrees, ZeroMatrixSortsById) {
    auto l = degree_list(CouplingMatrix(3));
    EXPECT_EQ(l, (CouplingDegreeList{{0, 0}, {1, 0}, {2, 0}}));
}

TEST(Degrees, WalkthroughHeadIsHub) {
    auto l = profile(testing::star_walkthrough()).degrees;
    ASSERT_EQ(l.size(), 5u);
    EXPECT_EQ(l[0].qubit, 4u);
    EXPECT_EQ(l[1].qubit, 0u);
    EXPECT_EQ(l[2].qubit, 1u);
}

TEST(MatrixCsv, HeaderAndCells) {
    std::ostringstream out;
    write_matrix_csv(out, coupling_matrix(three_qubit_example()));
    EXPECT_EQ(out.str(), "q0,q1,q2\n0,2,0\n2,0,1\n0,1,0\n");
}

TEST(Property, RandomCircuitIdentities) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; trial++) {
        auto c = testing::random_circuit(rng, 16, 300);
        auto prof = profile(c);
        const auto &m = prof.matrix;
        uint64_t degree_sum = 0;
        for (QubitId a = 0; a < m.size(); a++) {
            ASSERT_EQ(m(a, a), 0u);
            for (QubitId b = 0; b < m.size(); b++) {
                ASSERT_EQ(m(a, b), m(b, a));
            }
            degree_sum += m.degree(a);
        }
        ASSERT_EQ(degree_sum, 2 * two_qubit_gate_count(c));
        ASSERT_EQ(m.total(), two_qubit_gate_count(c));
        for (size_t k = 1; k < prof.degrees.size(); k++) {
            const auto &prev = prof.degrees[k - 1];
            const auto &cur = prof.degrees[k];
            ASSERT_TRUE(prev.degree > cur.degree ||
                        (prev.degree == cur.degree && prev.qubit < cur.qubit));
        }
    }
}

TEST(Property, GateOrderDoesNotMatter) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; trial++) {
        auto c = testing::random_circuit(rng, 10, 100);
        auto shuffled = c;
        std::shuffle(shuffled.gates.begin(), shuffled.gates.end(), rng);
        ASSERT_EQ(coupling_matrix(c), coupling_matrix(shuffled));
    }
}

}  // namespace
}  // namespace qarch
