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

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qarch/layout.h"

namespace qarch {

/// Unit lattice square identified by its lower-left corner.
struct Square {
    Coord anchor;
    /// Corner occupants in order (i,j), (i+1,j), (i,j+1), (i+1,j+1).
    std::array<std::optional<QubitId>, 4> corners;
    int occupied_count = 0;

    /// Corner coordinates in the same order as `corners`.
    std::array<Coord, 4> corner_coords() const;
    /// Occupied corners, ascending id.
    std::vector<QubitId> qubits() const;

    bool operator==(const Square &other) const = default;
};

using QubitPair = std::pair<QubitId, QubitId>;

inline QubitPair ordered_pair(QubitId a, QubitId b) {
    return a < b ? QubitPair{a, b} : QubitPair{b, a};
}

struct BusPlan {
    /// Occupied lattice edges not covered by a selected square, sorted.
    std::vector<QubitPair> two_qubit_buses;
    /// Selected squares (3- or 4-occupied), in selection order.
    std::vector<Square> four_qubit_buses;
};

struct DuplicatePair : std::logic_error {
    using std::logic_error::logic_error;
};

/// Physical qubits and the pairs that support native two-qubit gates.
class ConnectivityGraph {
   public:
    ConnectivityGraph() = default;
    /// Throws DuplicatePair if a pair repeats.
    ConnectivityGraph(size_t num_nodes, std::vector<QubitPair> pairs);

    size_t num_nodes() const {
        return adjacency_.size();
    }
    /// Sorted, each as (low, high).
    const std::vector<QubitPair> &pairs() const {
        return pairs_;
    }
    /// Ascending neighbour ids.
    const std::vector<QubitId> &neighbors(QubitId q) const {
        return adjacency_[q];
    }
    bool connected(QubitId a, QubitId b) const;

   private:
    std::vector<QubitPair> pairs_;
    std::vector<std::vector<QubitId>> adjacency_;
};

/// Every unit square with at least three occupied corners, ordered by
/// anchor north_west_first.
std::vector<Square> enumerate_squares(const Placement &p);

/// Coupling strength across the diagonals of a square. A 3-occupied square
/// only has one complete diagonal.
uint64_t cross_weight(const Square &s, const CouplingMatrix &m);

/// True when two squares share a lattice edge.
bool squares_adjacent(const Square &a, const Square &b);

/// Greedy filtered-weight selection of at most `k_max` squares for 4-qubit
/// buses.
///
/// Each round recomputes filtered_weight = weight - Σ weight of the four
/// edge-adjacent squares, picks the best available square with positive
/// current weight, zeroes and blocks its four neighbours. Selected squares
/// replace the 2-qubit buses on their boundary edges.
BusPlan select_buses(const Placement &p, const CouplingMatrix &m, size_t k_max);

/// Uniformly random selection of up to `k` pairwise non-adjacent squares among
/// all candidate squares, regardless of coupling weight.
BusPlan random_buses(const Placement &p, size_t k, std::mt19937_64 &rng);

/// A maximum set of pairwise non-adjacent squares (as many 4-qubit buses as
/// the layout allows).
BusPlan max_buses(const Placement &p);

/// Builds a plan from an explicit square selection; throws
/// std::invalid_argument if two selected squares are adjacent or a square has
/// fewer than three occupied corners.
BusPlan make_bus_plan(const Placement &p, std::vector<Square> selected);

/// Union of the pairs supported by every bus: 1 per 2-qubit bus, 3 per
/// 3-occupied square, 6 per 4-occupied square.
ConnectivityGraph connectivity(const Placement &p, const BusPlan &plan);

}  // namespace qarch
