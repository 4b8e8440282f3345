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

#include <optional>
#include <stdexcept>
#include <vector>

#include "qarch/bus.h"
#include "qarch/circuit.h"
#include "qarch/profiler.h"

namespace qarch {

/// Logical to physical assignment; unused physical qubits map to nullopt.
struct QubitMap {
    std::vector<QubitId> logical_to_physical;
    std::vector<std::optional<QubitId>> physical_to_logical;

    static QubitMap from_logical(std::vector<QubitId> l2p, size_t num_physical);

    bool operator==(const QubitMap &other) const = default;
};

struct TooFewPhysicalQubits : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr uint32_t kUnreachable = 1u << 20;

/// Hop distance between every pair of physical qubits (kUnreachable when
/// disconnected).
std::vector<std::vector<uint32_t>> hop_distances(const ConnectivityGraph &g);

/// Σ over logical pairs of coupling strength times physical hop distance.
uint64_t mapping_cost(const CouplingMatrix &m, const std::vector<std::vector<uint32_t>> &dist,
                      const QubitMap &map);

/// Greedy placement of logical qubits onto the physical graph.
///
/// Logical qubits are taken in coupling-degree order (preferring ones coupled
/// to already mapped qubits) and put on the free physical qubit minimising
/// Σ strength * hop distance to mapped neighbours. The greedy is restarted
/// from every physical qubit with two tie-break policies and the cheapest
/// result by mapping_cost() wins. `hint` (e.g. the layout's own
/// logical-to-site assignment) is used instead when it is at least as cheap.
QubitMap initial_mapping(const CouplingProfile &profile, const ConnectivityGraph &g,
                         const std::optional<std::vector<QubitId>> &hint = std::nullopt);

struct RouterOptions {
    /// Weight of the next layer in the swap score.
    double lookahead_weight = 0.5;
};

struct RoutedOp {
    bool is_swap = false;
    QubitId a = 0;
    QubitId b = 0;
    /// Index into Circuit::gates for executed gates.
    size_t gate_index = 0;
};

struct RoutedResult {
    size_t inserted_swaps = 0;
    size_t post_gate_count = 0;
    QubitMap final_map;
    /// Two-qubit gates and swaps in execution order, on physical qubits.
    std::vector<RoutedOp> ops;
};

/// SWAP-insertion routing.
///
/// Gates whose operands are adjacent execute as soon as their predecessors
/// have. When every front-layer gate is blocked, the router applies the swap
/// touching a front-layer qubit that strictly lowers the front layer's summed
/// distance and minimises front + lookahead_weight * next-layer distance. If
/// no swap lowers it, the oldest blocked gate is walked along a shortest path
/// until it executes. Each swap costs three gates.
RoutedResult route(const Circuit &c, const ConnectivityGraph &g, const QubitMap &initial,
                   const RouterOptions &options = {});

/// Post-mapping gate count; lower is better.
inline size_t performance_metric(const RoutedResult &r) {
    return r.post_gate_count;
}

}  // namespace qarch
