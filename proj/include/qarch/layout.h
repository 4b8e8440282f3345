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

#include <compare>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qarch/profiler.h"

namespace qarch {

/// Lattice node; x is the column, y the row, one unit per lattice pitch.
struct Coord {
    int32_t x = 0;
    int32_t y = 0;

    auto operator<=>(const Coord &other) const = default;

    Coord operator+(const Coord &o) const {
        return {x + o.x, y + o.y};
    }
};

inline int64_t manhattan(Coord a, Coord b) {
    return std::abs(int64_t{a.x} - b.x) + std::abs(int64_t{a.y} - b.y);
}

/// Deterministic scan order used for every tie in the layout and bus code:
/// greatest y first, then least x.
inline bool north_west_first(Coord a, Coord b) {
    return a.y != b.y ? a.y > b.y : a.x < b.x;
}

struct CoordHash {
    size_t operator()(Coord c) const {
        return std::hash<uint64_t>()((uint64_t(uint32_t(c.x)) << 32) | uint32_t(c.y));
    }
};

struct OccupiedNode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Injective assignment of logical qubits to lattice nodes.
class Placement {
   public:
    Placement() = default;
    explicit Placement(size_t num_qubits);

    size_t num_qubits() const {
        return positions_.size();
    }
    size_t num_placed() const {
        return occupant_.size();
    }
    bool complete() const {
        return num_placed() == num_qubits();
    }
    bool empty() const {
        return occupant_.empty();
    }

    /// Throws OccupiedNode if `at` holds a qubit, std::logic_error if q is
    /// already placed.
    void place(QubitId q, Coord at);

    bool is_placed(QubitId q) const {
        return positions_[q].has_value();
    }
    Coord position(QubitId q) const;
    std::optional<QubitId> occupant(Coord c) const;

    /// Placed qubits in ascending id order.
    std::vector<QubitId> placed_qubits() const;

   private:
    std::vector<std::optional<Coord>> positions_;
    std::unordered_map<Coord, QubitId, CoordHash> occupant_;
};

inline constexpr Coord kLatticeSteps[4] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};

/// Σ over placed logical neighbours q' of m[q][q'] * manhattan(loc, pos(q')).
uint64_t node_cost(QubitId q, Coord loc, const Placement &placement, const CouplingMatrix &m);

/// Empty nodes 4-adjacent to at least one occupied node, in north_west_first order.
std::vector<Coord> candidate_nodes(const Placement &placement);

/// One greedy step of place_qubits, kept for replay checks.
struct PlacementStep {
    QubitId qubit;
    Coord chosen;
    std::vector<std::pair<Coord, uint64_t>> candidate_costs;
};

/// Greedy coupling-driven placement on an unbounded lattice.
///
/// The first entry of `degrees` goes to (0,0). Each following qubit is the
/// highest-degree unplaced qubit coupled to a placed one (the highest-degree
/// unplaced qubit if none is coupled) and lands on a minimal node_cost
/// candidate. Equal-cost nodes are ordered by north_west_first.
Placement place_qubits(const CouplingDegreeList &degrees, const CouplingMatrix &m,
                       std::vector<PlacementStep> *trace = nullptr);

}  // namespace qarch
