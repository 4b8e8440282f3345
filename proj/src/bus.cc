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

#include "qarch/bus.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qarch {

std::array<Coord, 4> Square::corner_coords() const {
    return {anchor, anchor + Coord{1, 0}, anchor + Coord{0, 1}, anchor + Coord{1, 1}};
}

std::vector<QubitId> Square::qubits() const {
    std::vector<QubitId> out;
    for (const auto &c : corners) {
        if (c.has_value()) {
            out.push_back(*c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConnectivityGraph::ConnectivityGraph(size_t num_nodes, std::vector<QubitPair> pairs)
    : adjacency_(num_nodes) {
    for (auto &pr : pairs) {
        if (pr.first == pr.second || pr.first >= num_nodes || pr.second >= num_nodes) {
            throw std::invalid_argument("invalid connectivity pair");
        }
        pr = ordered_pair(pr.first, pr.second);
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
        throw DuplicatePair("a qubit pair is connected by more than one bus");
    }
    for (auto [a, b] : pairs) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto &nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    pairs_ = std::move(pairs);
}

bool ConnectivityGraph::connected(QubitId a, QubitId b) const {
    const auto &nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

namespace {

Square square_at(const Placement &p, Coord anchor) {
    Square s;
    s.anchor = anchor;
    auto coords = s.corner_coords();
    for (size_t k = 0; k < 4; k++) {
        s.corners[k] = p.occupant(coords[k]);
        s.occupied_count += s.corners[k].has_value() ? 1 : 0;
    }
    return s;
}

// Corner index pairs of the four boundary edges.
constexpr std::array<std::pair<int, int>, 4> kBoundary = {{{0, 1}, {2, 3}, {0, 2}, {1, 3}}};

using AnchorSet = std::unordered_set<Coord, CoordHash>;

std::array<Coord, 4> neighbor_anchors(Coord a) {
    return {a + Coord{1, 0}, a + Coord{0, 1}, a + Coord{-1, 0}, a + Coord{0, -1}};
}

}  // namespace

std::vector<Square> enumerate_squares(const Placement &p) {
    AnchorSet anchors;
    for (auto q : p.placed_qubits()) {
        Coord c = p.position(q);
        for (int dx = -1; dx <= 0; dx++) {
            for (int dy = -1; dy <= 0; dy++) {
                anchors.insert(c + Coord{dx, dy});
            }
        }
    }
    std::vector<Square> out;
    for (auto a : anchors) {
        auto s = square_at(p, a);
        if (s.occupied_count >= 3) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Square &a, const Square &b) { return north_west_first(a.anchor, b.anchor); });
    return out;
}

uint64_t cross_weight(const Square &s, const CouplingMatrix &m) {
    const auto &c = s.corners;
    uint64_t w = 0;
    if (c[0] && c[3]) {
        w += m(*c[0], *c[3]);
    }
    if (c[1] && c[2]) {
        w += m(*c[1], *c[2]);
    }
    return w;
}

bool squares_adjacent(const Square &a, const Square &b) {
    return manhattan(a.anchor, b.anchor) == 1;
}

BusPlan make_bus_plan(const Placement &p, std::vector<Square> selected) {
    for (size_t i = 0; i < selected.size(); i++) {
        if (selected[i].occupied_count < 3) {
            throw std::invalid_argument("a bus square needs at least three occupied corners");
        }
        for (size_t j = i + 1; j < selected.size(); j++) {
            if (squares_adjacent(selected[i], selected[j]) ||
                selected[i].anchor == selected[j].anchor) {
                throw std::invalid_argument("selected bus squares violate the prohibited condition");
            }
        }
    }
    std::set<QubitPair> covered;
    for (const auto &s : selected) {
        for (auto [u, v] : kBoundary) {
            if (s.corners[u] && s.corners[v]) {
                covered.insert(ordered_pair(*s.corners[u], *s.corners[v]));
            }
        }
    }
    BusPlan plan;
    for (auto q : p.placed_qubits()) {
        Coord c = p.position(q);
        for (Coord step : {Coord{1, 0}, Coord{0, 1}}) {
            if (auto other = p.occupant(c + step)) {
                auto pr = ordered_pair(q, *other);
                if (!covered.contains(pr)) {
                    plan.two_qubit_buses.push_back(pr);
                }
            }
        }
    }
    std::sort(plan.two_qubit_buses.begin(), plan.two_qubit_buses.end());
    plan.four_qubit_buses = std::move(selected);
    return plan;
}

BusPlan select_buses(const Placement &p, const CouplingMatrix &m, size_t k_max) {
    auto squares = enumerate_squares(p);
    std::unordered_map<Coord, uint64_t, CoordHash> weight;
    for (const auto &s : squares) {
        weight[s.anchor] = cross_weight(s, m);
    }
    auto weight_of = [&](Coord a) -> int64_t {
        auto it = weight.find(a);
        return it == weight.end() ? 0 : int64_t(it->second);
    };

    AnchorSet blocked;
    AnchorSet taken;
    std::vector<Square> selected;
    size_t budget = k_max;
    while (budget > 0) {
        const Square *best = nullptr;
        int64_t best_filtered = 0;
        for (const auto &s : squares) {
            if (blocked.contains(s.anchor) || taken.contains(s.anchor) ||
                weight_of(s.anchor) <= 0) {
                continue;
            }
            int64_t filtered = weight_of(s.anchor);
            for (auto n : neighbor_anchors(s.anchor)) {
                filtered -= weight_of(n);
            }
            if (best == nullptr || filtered > best_filtered) {
                best = &s;
                best_filtered = filtered;
            }
        }
        if (best == nullptr) {
            break;
        }
        taken.insert(best->anchor);
        selected.push_back(*best);
        for (auto n : neighbor_anchors(best->anchor)) {
            if (weight.contains(n)) {
                weight[n] = 0;
            }
            blocked.insert(n);
        }
        budget--;
    }
    return make_bus_plan(p, std::move(selected));
}

BusPlan random_buses(const Placement &p, size_t k, std::mt19937_64 &rng) {
    auto squares = enumerate_squares(p);
    AnchorSet unavailable;
    std::vector<Square> selected;
    while (selected.size() < k) {
        std::vector<const Square *> open;
        for (const auto &s : squares) {
            if (!unavailable.contains(s.anchor)) {
                open.push_back(&s);
            }
        }
        if (open.empty()) {
            break;
        }
        std::uniform_int_distribution<size_t> pick(0, open.size() - 1);
        const Square &s = *open[pick(rng)];
        selected.push_back(s);
        unavailable.insert(s.anchor);
        for (auto n : neighbor_anchors(s.anchor)) {
            unavailable.insert(n);
        }
    }
    return make_bus_plan(p, std::move(selected));
}

BusPlan max_buses(const Placement &p) {
    // Square adjacency is bipartite by anchor parity, so a maximum independent
    // set follows from a maximum matching (König).
    auto squares = enumerate_squares(p);
    std::vector<size_t> left, right;
    std::map<Coord, size_t> right_index;
    for (size_t i = 0; i < squares.size(); i++) {
        auto a = squares[i].anchor;
        if (((a.x + a.y) % 2 + 2) % 2 == 0) {
            left.push_back(i);
        } else {
            right_index[a] = right.size();
            right.push_back(i);
        }
    }
    std::vector<std::vector<size_t>> adj(left.size());
    for (size_t li = 0; li < left.size(); li++) {
        for (auto n : neighbor_anchors(squares[left[li]].anchor)) {
            if (auto it = right_index.find(n); it != right_index.end()) {
                adj[li].push_back(it->second);
            }
        }
    }
    std::vector<int> match_left(left.size(), -1), match_right(right.size(), -1);
    std::vector<char> visited;
    std::function<bool(size_t)> augment = [&](size_t li) {
        for (auto ri : adj[li]) {
            if (visited[ri]) {
                continue;
            }
            visited[ri] = 1;
            if (match_right[ri] < 0 || augment(size_t(match_right[ri]))) {
                match_left[li] = int(ri);
                match_right[ri] = int(li);
                return true;
            }
        }
        return false;
    };
    for (size_t li = 0; li < left.size(); li++) {
        visited.assign(right.size(), 0);
        augment(li);
    }

    // Alternating reachability from unmatched left vertices.
    std::vector<char> reach_left(left.size(), 0), reach_right(right.size(), 0);
    std::vector<size_t> stack;
    for (size_t li = 0; li < left.size(); li++) {
        if (match_left[li] < 0) {
            reach_left[li] = 1;
            stack.push_back(li);
        }
    }
    while (!stack.empty()) {
        size_t li = stack.back();
        stack.pop_back();
        for (auto ri : adj[li]) {
            if (reach_right[ri] || match_left[li] == int(ri)) {
                continue;
            }
            reach_right[ri] = 1;
            int next = match_right[ri];
            if (next >= 0 && !reach_left[size_t(next)]) {
                reach_left[size_t(next)] = 1;
                stack.push_back(size_t(next));
            }
        }
    }
    std::vector<Square> selected;
    for (size_t i = 0; i < squares.size(); i++) {
        auto a = squares[i].anchor;
        bool is_left = ((a.x + a.y) % 2 + 2) % 2 == 0;
        if (is_left) {
            size_t li = size_t(std::find(left.begin(), left.end(), i) - left.begin());
            if (reach_left[li]) {
                selected.push_back(squares[i]);
            }
        } else if (!reach_right[right_index[a]]) {
            selected.push_back(squares[i]);
        }
    }
    return make_bus_plan(p, std::move(selected));
}

ConnectivityGraph connectivity(const Placement &p, const BusPlan &plan) {
    std::vector<QubitPair> pairs = plan.two_qubit_buses;
    for (const auto &s : plan.four_qubit_buses) {
        auto qs = s.qubits();
        for (size_t i = 0; i < qs.size(); i++) {
            for (size_t j = i + 1; j < qs.size(); j++) {
                pairs.push_back({qs[i], qs[j]});
            }
        }
    }
    return ConnectivityGraph(p.num_qubits(), std::move(pairs));
}

}  // namespace qarch
