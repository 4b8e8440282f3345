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
#include <random>
#include <span>
#include <vector>

#include "qarch/bus.h"
#include "qarch/rules.h"

namespace qarch {

struct SimParams {
    /// Standard deviation of the fabrication frequency offset.
    double sigma_mhz = 30;
    size_t trials = 10000;
    uint64_t seed = 0;
    /// Worker threads for the trial loop; results do not depend on it.
    size_t threads = 1;
};

struct YieldEstimate {
    double rate = 0;
    size_t successes = 0;
    size_t trials = 0;
};

/// Centre j connected to both k and i (k < i); both orientations are tested.
struct TripleCheck {
    QubitId j;
    QubitId k;
    QubitId i;

    bool operator==(const TripleCheck &other) const = default;
};

struct CollisionChecks {
    /// Both orientations of every connected pair.
    std::vector<QubitPair> pairs;
    std::vector<TripleCheck> triples;
};

CollisionChecks enumerate_checks(const ConnectivityGraph &g);

/// Adds i.i.d. N(0, sigma) to every design frequency.
std::vector<double> sample_fabrication(std::span<const double> design_mhz, double sigma_mhz,
                                       std::mt19937_64 &rng);

/// True if any rule fires on any check instance.
bool check_collision(std::span<const double> postfab_mhz, const CollisionChecks &checks,
                     const RuleSet &rules);

/// Monte Carlo yield. Trial t draws from substream (seed, t), so the estimate
/// is identical for any thread count.
YieldEstimate simulate_yield(const ConnectivityGraph &g, std::span<const double> design_mhz,
                             const SimParams &params, const RuleSet &rules);

}  // namespace qarch
