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
#include <set>

#include "qarch/layout.h"
#include "qarch/profiler.h"
#include "test_support.h"

namespace qarch {
namespace {

std::set<Coord> as_set(const std::vector<Coord> &v) {
    return {v.begin(), v.end()};
}

TEST(NodeCost, SingleTerm) {
    CouplingMatrix m(2);
    m.add(0, 1, 3);
    Placement p(2);
    p.place(0, {0, 0});
    EXPECT_EQ(node_cost(1, {1, 1}, p, m), 6u);
    EXPECT_EQ(node_cost(1, {0, -1}, p, m), 3u);
}

TEST(NodeCost, NoPlacedNeighbours) {
    CouplingMatrix m(3);
    m.add(1, 2, 4);
    Placement p(3);
    p.place(0, {0, 0});
    for (auto loc : candidate_nodes(p)) {
        EXPECT_EQ(node_cost(1, loc, p, m), 0u);
    }
}

TEST(NodeCost, OccupiedNodeRejected) {
    CouplingMatrix m(2);
    Placement p(2);
    p.place(0, {0, 0});
    EXPECT_THROW(node_cost(1, {0, 0}, p, m), OccupiedNode);
}

TEST(Placement, RejectsDoubleOccupancy) {
    Placement p(2);
    p.place(0, {0, 0});
    EXPECT_THROW(p.place(1, {0, 0}), OccupiedNode);
}

TEST(Candidates, SingleQubit) {
    Placement p(1);
    p.place(0, {0, 0});
    EXPECT_EQ(as_set(candidate_nodes(p)), (std::set<Coord>{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}));
}

TEST(Candidates, Domino) {
    Placement p(2);
    p.place(0, {0, 0});
    p.place(1, {0, 1});
    auto c = candidate_nodes(p);
    EXPECT_EQ(c.size(), 6u);
    EXPECT_EQ(as_set(c).size(), 6u);
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end(), north_west_first));
}

TEST(Candidates, Block) {
    auto c = candidate_nodes(testing::grid_placement(2, 2));
    EXPECT_EQ(c.size(), 8u);
    for (auto loc : c) {
        EXPECT_FALSE(loc.x >= 0 && loc.x <= 1 && loc.y >= 0 && loc.y <= 1);
    }
}

TEST(Place, WalkthroughFixture) {
    auto prof = profile(testing::star_walkthrough());
    auto p = place_qubits(prof.degrees, prof.matrix);
    EXPECT_EQ(p.position(4), (Coord{0, 0}));
    EXPECT_EQ(p.position(0), (Coord{0, 1}));
    EXPECT_EQ(p.position(1), (Coord{-1, 0}));
    EXPECT_EQ(p.position(2), (Coord{1, 0}));
    EXPECT_EQ(p.position(3), (Coord{0, -1}));
}

TEST(Place, SingleQubit) {
    Circuit c;
    c.num_qubits = 1;
    auto prof = profile(c);
    auto p = place_qubits(prof.degrees, prof.matrix);
    EXPECT_EQ(p.position(0), (Coord{0, 0}));
}

TEST(Place, PathBecomesLatticePath) {
    CouplingMatrix m(4);
    for (QubitId q = 0; q < 3; q++) {
        m.add(q, q + 1, 5);
    }
    auto p = place_qubits(degree_list(m), m);
    for (QubitId q = 0; q < 3; q++) {
        EXPECT_EQ(manhattan(p.position(q), p.position(q + 1)), 1);
    }
    EXPECT_EQ(p.position(1), (Coord{0, 0}));
    EXPECT_EQ(p.position(2), (Coord{0, 1}));
    EXPECT_EQ(p.position(0), (Coord{-1, 0}));
    EXPECT_EQ(p.position(3), (Coord{0, 2}));
}

TEST(Place, LongChainNeverTraps) {
    auto c = testing::chain_circuit(16, 2);
    auto prof = profile(c);
    auto p = place_qubits(prof.degrees, prof.matrix);
    for (QubitId q = 0; q + 1 < 16; q++) {
        EXPECT_EQ(manhattan(p.position(q), p.position(q + 1)), 1) << q;
    }
}

TEST(Place, DisconnectedProgramStaysContiguous) {
    CouplingMatrix m(5);
    m.add(0, 1, 2);
    m.add(3, 4, 1);
    auto p = place_qubits(degree_list(m), m);
    ASSERT_TRUE(p.complete());
    // Every qubit but the first touches an earlier one on the lattice.
    for (auto q : p.placed_qubits()) {
        bool touches = false;
        for (auto step : kLatticeSteps) {
            touches = touches || p.occupant(p.position(q) + step).has_value();
        }
        EXPECT_TRUE(touches) << q;
    }
}

TEST(Property, RandomProgramsReplayAndInject) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; trial++) {
        auto c = testing::random_circuit(rng, 14, 120);
        auto prof = profile(c);
        std::vector<PlacementStep> trace;
        auto p = place_qubits(prof.degrees, prof.matrix, &trace);
        ASSERT_TRUE(p.complete());
        ASSERT_EQ(trace.size(), c.num_qubits);
        std::set<Coord> used;
        for (QubitId q = 0; q < c.num_qubits; q++) {
            used.insert(p.position(q));
        }
        ASSERT_EQ(used.size(), c.num_qubits);

        // Replay: each step sits on the first minimal-cost candidate.
        Placement replay(c.num_qubits);
        replay.place(trace[0].qubit, {0, 0});
        for (size_t s = 1; s < trace.size(); s++) {
            auto cands = candidate_nodes(replay);
            uint64_t best = UINT64_MAX;
            Coord best_loc{};
            for (auto loc : cands) {
                uint64_t cost = node_cost(trace[s].qubit, loc, replay, prof.matrix);
                if (cost < best) {
                    best = cost;
                    best_loc = loc;
                }
            }
            ASSERT_EQ(trace[s].chosen, best_loc);
            replay.place(trace[s].qubit, trace[s].chosen);
        }

        auto again = place_qubits(prof.degrees, prof.matrix);
        for (QubitId q = 0; q < c.num_qubits; q++) {
            ASSERT_EQ(again.position(q), p.position(q));
        }
    }
}

TEST(Property, DominantSpokesHugTheHub) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 6 + trial % 6;
        CouplingMatrix m(n);
        std::uniform_int_distribution<QubitId> pick(1, QubitId(n - 1));
        for (int e = 0; e < 6; e++) {
            QubitId a = pick(rng), b = pick(rng);
            if (a != b) m.add(a, b, 1);
        }
        for (QubitId s = 1; s <= 4; s++) {
            m.add(0, s, 100);
        }
        auto p = place_qubits(degree_list(m), m);
        for (QubitId s = 1; s <= 4; s++) {
            ASSERT_EQ(manhattan(p.position(0), p.position(s)), 1) << "trial " << trial;
        }
    }
}

}  // namespace
}  // namespace qarch
