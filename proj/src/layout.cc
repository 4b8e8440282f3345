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

#include "qarch/layout.h"

#include <algorithm>
#include <unordered_set>

namespace qarch {

Placement::Placement(size_t num_qubits) : positions_(num_qubits) {
}

void Placement::place(QubitId q, Coord at) {
    if (q >= positions_.size()) {
        throw std::out_of_range("qubit id out of range");
    }
    if (positions_[q].has_value()) {
        throw std::logic_error("qubit already placed");
    }
    if (occupant_.contains(at)) {
        throw OccupiedNode("lattice node already occupied");
    }
    positions_[q] = at;
    occupant_.emplace(at, q);
}

Coord Placement::position(QubitId q) const {
    if (!positions_.at(q).has_value()) {
        throw std::logic_error("qubit not placed");
    }
    return *positions_[q];
}

std::optional<QubitId> Placement::occupant(Coord c) const {
    auto it = occupant_.find(c);
    if (it == occupant_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<QubitId> Placement::placed_qubits() const {
    std::vector<QubitId> out;
    for (QubitId q = 0; q < positions_.size(); q++) {
        if (positions_[q].has_value()) {
            out.push_back(q);
        }
    }
    return out;
}

uint64_t node_cost(QubitId q, Coord loc, const Placement &placement, const CouplingMatrix &m) {
    if (placement.occupant(loc).has_value()) {
        throw OccupiedNode("cost requested for an occupied node");
    }
    uint64_t cost = 0;
    for (QubitId other = 0; other < m.size(); other++) {
        if (other == q || !placement.is_placed(other) || m(q, other) == 0) {
            continue;
        }
        cost += m(q, other) * uint64_t(manhattan(loc, placement.position(other)));
    }
    return cost;
}

std::vector<Coord> candidate_nodes(const Placement &placement) {
    std::unordered_set<Coord, CoordHash> seen;
    std::vector<Coord> out;
    for (auto q : placement.placed_qubits()) {
        Coord c = placement.position(q);
        for (auto step : kLatticeSteps) {
            Coord n = c + step;
            if (!placement.occupant(n).has_value() && seen.insert(n).second) {
                out.push_back(n);
            }
        }
    }
    std::sort(out.begin(), out.end(), north_west_first);
    return out;
}

Placement place_qubits(const CouplingDegreeList &degrees, const CouplingMatrix &m,
                       std::vector<PlacementStep> *trace) {
    if (degrees.size() != m.size()) {
        throw std::invalid_argument("degree list and coupling matrix disagree on qubit count");
    }
    Placement placement(m.size());
    if (degrees.empty()) {
        return placement;
    }
    placement.place(degrees.front().qubit, {0, 0});
    if (trace) {
        trace->push_back({degrees.front().qubit, {0, 0}, {{{0, 0}, 0}}});
    }

    while (!placement.complete()) {
        // Degree list order already encodes "largest degree, then lowest id".
        std::optional<QubitId> next;
        for (const auto &entry : degrees) {
            if (placement.is_placed(entry.qubit)) {
                continue;
            }
            bool coupled = false;
            for (auto p : placement.placed_qubits()) {
                if (m(entry.qubit, p) > 0) {
                    coupled = true;
                    break;
                }
            }
            if (coupled) {
                next = entry.qubit;
                break;
            }
        }
        if (!next.has_value()) {
            for (const auto &entry : degrees) {
                if (!placement.is_placed(entry.qubit)) {
                    next = entry.qubit;
                    break;
                }
            }
        }

        PlacementStep step{*next, {}, {}};
        std::optional<Coord> best;
        uint64_t best_cost = 0;
        for (auto loc : candidate_nodes(placement)) {
            uint64_t cost = node_cost(*next, loc, placement, m);
            step.candidate_costs.emplace_back(loc, cost);
            bool better = !best.has_value() || cost < best_cost;
            // Candidates arrive in north_west_first order, so a full tie keeps
            // the earlier node.
            if (better) {
                best = loc;
                best_cost = cost;
            }
        }
        placement.place(*next, *best);
        step.chosen = *best;
        if (trace) {
            trace->push_back(std::move(step));
        }
    }
    return placement;
}

}  // namespace qarch
