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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qarch/circuit.h"

namespace qarch {

/// Symmetric count of two-qubit gates per unordered logical qubit pair.
class CouplingMatrix {
   public:
    CouplingMatrix() = default;
    explicit CouplingMatrix(size_t n);

    size_t size() const {
        return n_;
    }

    uint64_t operator()(QubitId a, QubitId b) const {
        return cells_[a * n_ + b];
    }

    /// Adds `count` gates between a and b (a != b), keeping symmetry.
    void add(QubitId a, QubitId b, uint64_t count = 1);

    /// Sum over the row of q.
    uint64_t degree(QubitId q) const;

    /// Sum over unordered pairs i < j.
    uint64_t total() const;

    bool operator==(const CouplingMatrix &other) const = default;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> cells_;
};

struct DegreeEntry {
    QubitId qubit;
    uint64_t degree;

    bool operator==(const DegreeEntry &other) const = default;
};

/// Qubits by coupling degree, descending; ties by ascending id.
using CouplingDegreeList = std::vector<DegreeEntry>;

struct CouplingProfile {
    CouplingMatrix matrix;
    CouplingDegreeList degrees;
};

/// Counts two-qubit gates per pair; single-qubit gates and measurements are
/// ignored and gate direction does not matter.
CouplingMatrix coupling_matrix(const Circuit &circuit);

CouplingDegreeList degree_list(const CouplingMatrix &m);

CouplingProfile profile(const Circuit &circuit);

/// CSV dump: header `q0,...,qN-1`, then one row of integer cells per qubit.
void write_matrix_csv(std::ostream &out, const CouplingMatrix &m);

}  // namespace qarch
