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

#include <vector>

#include "qarch/bus.h"
#include "qarch/layout.h"
#include "qarch/rules.h"
#include "qarch/yield.h"

namespace qarch {

inline constexpr double kMinFrequencyMhz = 5000;
inline constexpr double kMaxFrequencyMhz = 5340;
inline constexpr double kFrequencyStepMhz = 10;
/// Frequency given to the first qubit of every traversal.
inline constexpr double kCenterFrequencyMhz = 5170;

/// 5.00, 5.01, ..., 5.34 GHz expressed in MHz.
std::vector<double> candidate_frequencies();

/// IBM-style five-frequency ladder 5.00 to 5.27 GHz.
std::vector<double> five_frequencies();

struct FrequencyPlan {
    std::vector<double> freq_mhz;
};

/// The qubit closest (Euclidean) to the centroid of `among`; ties by id.
QubitId center_qubit(const Placement &p, const std::vector<QubitId> &among);
QubitId center_qubit(const Placement &p);

struct Subgraph {
    std::vector<QubitId> nodes;
    std::vector<QubitPair> pairs;
};

/// Qubits within two hops of q that are already assigned, plus q, and the
/// connectivity pairs among them.
Subgraph local_region(QubitId q, const ConnectivityGraph &g, const std::vector<bool> &assigned);

/// Breadth-first visiting order starting at the centre qubit, neighbours in
/// ascending id; each further component restarts at its own centre.
std::vector<QubitId> traversal_order(const Placement &p, const ConnectivityGraph &g);

struct AllocationOptions {
    /// Monte Carlo trials per candidate frequency.
    size_t trials_per_candidate = 2000;
};

struct AllocationStep {
    QubitId qubit;
    /// Successes per candidate frequency, same order as candidate_frequencies().
    std::vector<size_t> successes;
    double chosen_mhz;
};

/// Centre-outward allocation: each visited qubit takes the candidate with the
/// best local-region yield (ties to the lower frequency). All candidates of
/// one step share the same noise draws, taken from substream (seed, qubit).
FrequencyPlan allocate(const Placement &p, const ConnectivityGraph &g, const SimParams &params,
                       const RuleSet &rules, const AllocationOptions &options = {},
                       std::vector<AllocationStep> *trace = nullptr);

/// Local-region success count of `candidate_mhz` on qubit q given the already
/// assigned frequencies; the building block of allocate().
size_t local_successes(QubitId q, double candidate_mhz, const ConnectivityGraph &g,
                       const std::vector<double> &freq_mhz, const std::vector<bool> &assigned,
                       const SimParams &params, const RuleSet &rules);

/// Five-frequency baseline: the bounding box of the placement is numbered
/// row-major from its top-left cell and cell n takes five_frequencies()[n % 5].
FrequencyPlan five_frequency_plan(const Placement &p);

}  // namespace qarch
