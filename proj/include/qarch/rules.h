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

#include <string>
#include <vector>

#include "json.hpp"

namespace qarch {

enum class RuleScope { pair, triple };

enum class Relation {
    /// Collides when |expr| < threshold.
    near_zero,
    /// Collides when expr > 0.
    strictly_positive,
};

/// expr = fj*f_j + fk*f_k + fi*f_i + delta*δ, all in MHz.
///
/// Pair rules involve two connected qubits j and k. Triple rules involve a
/// centre j connected to both k and i.
struct CollisionRule {
    int id = 0;
    RuleScope scope = RuleScope::pair;
    double fj = 0;
    double fk = 0;
    double fi = 0;
    double delta = 0;
    Relation relation = Relation::near_zero;
    double threshold_mhz = 0;

    double expression(double f_j, double f_k, double f_i, double delta_mhz) const {
        return fj * f_j + fk * f_k + fi * f_i + delta * delta_mhz;
    }

    bool collides(double f_j, double f_k, double f_i, double delta_mhz) const {
        double e = expression(f_j, f_k, f_i, delta_mhz);
        return relation == Relation::near_zero ? (e < threshold_mhz && e > -threshold_mhz) : e > 0;
    }
};

struct RuleSet {
    double delta_mhz = -340;
    std::vector<CollisionRule> rules;

    /// Throws std::invalid_argument on malformed rows (pair rule using f_i,
    /// negative threshold, duplicate id).
    void validate() const;
};

RuleSet rules_from_json(const nlohmann::json &j);
nlohmann::json rules_to_json(const RuleSet &rules);
RuleSet load_rules(const std::string &path);

/// The seven transmon collision conditions shipped in data/rules.json.
const RuleSet &default_rules();

/// Only rule 1 (|f_j - f_k| < 17 MHz) of the default set.
RuleSet nearest_neighbor_only_rules();

}  // namespace qarch
