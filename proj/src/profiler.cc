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

#include "qarch/profiler.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qarch {

CouplingMatrix::CouplingMatrix(size_t n) : n_(n), cells_(n * n, 0) {
}

void CouplingMatrix::add(QubitId a, QubitId b, uint64_t count) {
    if (a >= n_ || b >= n_ || a == b) {
        throw std::invalid_argument("coupling pair must be two distinct in-range qubits");
    }
    cells_[a * n_ + b] += count;
    cells_[b * n_ + a] += count;
}

uint64_t CouplingMatrix::degree(QubitId q) const {
    uint64_t sum = 0;
    for (size_t j = 0; j < n_; j++) {
        sum += cells_[q * n_ + j];
    }
    return sum;
}

uint64_t CouplingMatrix::total() const {
    uint64_t sum = 0;
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            sum += cells_[i * n_ + j];
        }
    }
    return sum;
}

CouplingMatrix coupling_matrix(const Circuit &circuit) {
    CouplingMatrix m(circuit.num_qubits);
    for (const auto &gate : circuit.gates) {
        if (gate.kind == GateKind::two_qubit) {
            m.add(gate.operands[0], gate.operands[1]);
        }
    }
    return m;
}

CouplingDegreeList degree_list(const CouplingMatrix &m) {
    CouplingDegreeList out;
    out.reserve(m.size());
    for (QubitId q = 0; q < m.size(); q++) {
        out.push_back({q, m.degree(q)});
    }
    std::stable_sort(out.begin(), out.end(), [](const DegreeEntry &a, const DegreeEntry &b) {
        return a.degree > b.degree;
    });
    return out;
}

CouplingProfile profile(const Circuit &circuit) {
    CouplingProfile p;
    p.matrix = coupling_matrix(circuit);
    p.degrees = degree_list(p.matrix);
    return p;
}

void write_matrix_csv(std::ostream &out, const CouplingMatrix &m) {
    for (size_t j = 0; j < m.size(); j++) {
        out << (j ? "," : "") << "q" << j;
    }
    out << "\n";
    for (QubitId i = 0; i < m.size(); i++) {
        for (QubitId j = 0; j < m.size(); j++) {
            out << (j ? "," : "") << m(i, j);
        }
        out << "\n";
    }
}

}  // namespace qarch
