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

#include <cmath>
#include <random>
#include <string>

#include "qarch/bus.h"
#include "qarch/circuit.h"
#include "qarch/layout.h"

namespace qarch::testing {

inline std::string source_path(const std::string &rel) {
    return std::string(QARCH_SOURCE_DIR) + "/" + rel;
}

inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Five qubits around a hub q4; q0 and q1 each share two gates with it and
// one with each other.
inline Circuit star_walkthrough() {
    return read_qasm_file(source_path("tests/data/star5.qasm"));
}

inline Circuit chain_circuit(size_t n, int rounds) {
    Circuit c;
    c.name = "chain" + std::to_string(n);
    c.num_qubits = n;
    for (int r = 0; r < rounds; r++) {
        for (QubitId q = 0; q + 1 < n; q++) {
            c.append_cx(q, q + 1);
            c.append({"rz", "0.25", GateKind::one_qubit, {q + 1}});
            c.append_cx(q, q + 1);
        }
    }
    return c;
}

inline Circuit random_circuit(std::mt19937_64 &rng, size_t max_qubits, size_t max_gates) {
    std::uniform_int_distribution<size_t> nq(2, max_qubits);
    std::uniform_int_distribution<size_t> ng(0, max_gates);
    Circuit c;
    c.name = "random";
    c.num_qubits = nq(rng);
    size_t gates = ng(rng);
    std::uniform_int_distribution<QubitId> pick(0, QubitId(c.num_qubits - 1));
    std::uniform_int_distribution<int> kind(0, 9);
    for (size_t g = 0; g < gates; g++) {
        int k = kind(rng);
        QubitId a = pick(rng);
        if (k < 5) {
            QubitId b = pick(rng);
            while (b == a) b = pick(rng);
            c.append_cx(a, b);
        } else if (k < 9) {
            c.append({k % 2 ? "h" : "rz", k % 2 ? "" : "0.5", GateKind::one_qubit, {a}});
        } else {
            c.append({"measure", "", GateKind::measure, {a}});
        }
    }
    return c;
}

// Random connected blob grown by attaching cells to the frontier.
inline Placement random_placement(std::mt19937_64 &rng, size_t n) {
    Placement p(n);
    if (n == 0) return p;
    p.place(0, {0, 0});
    for (QubitId q = 1; q < n; q++) {
        auto frontier = candidate_nodes(p);
        std::uniform_int_distribution<size_t> pick(0, frontier.size() - 1);
        p.place(q, frontier[pick(rng)]);
    }
    return p;
}

inline Placement grid_placement(int width, int height) {
    Placement p(size_t(width * height));
    for (int y = 0; y < height; y++) {
        for (int x = 0; x < width; x++) {
            p.place(QubitId(y * width + x), {x, y});
        }
    }
    return p;
}

}  // namespace qarch::testing
