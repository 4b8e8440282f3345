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
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qarch/bus.h"
#include "qarch/frequency.h"
#include "qarch/layout.h"
#include "qarch/rules.h"
#include "qarch/yield.h"

namespace qarch {

struct Provenance {
    std::string config;
    size_t k = 0;
    uint64_t seed = 0;
    std::string source;
};

/// A complete chip design: qubit sites, buses and design frequencies.
///
/// For generated designs physical qubit i is the site chosen for logical
/// qubit i, which makes the identity a natural initial mapping.
struct Architecture {
    Placement placement;
    BusPlan buses;
    FrequencyPlan frequencies;
    Provenance provenance;

    size_t num_qubits() const {
        return placement.num_qubits();
    }
    ConnectivityGraph connectivity() const;

    /// Identity logical-to-physical map for generated designs hosting exactly
    /// `num_logical` qubits; nullopt for baselines.
    std::optional<std::vector<QubitId>> layout_mapping(size_t num_logical) const;
};

struct UnknownBaseline : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Names accepted by baseline_arch(), in sweep seed-label order 1..4.
const std::vector<std::string> &baseline_names();

/// ibm16 (2x8), ibm16-4bus (four 4-qubit buses), ibm20 (4x5), ibm20-4bus (six
/// 4-qubit buses); all use the five-frequency plan.
Architecture baseline_arch(std::string_view name);

YieldEstimate simulate_yield(const Architecture &arch, const SimParams &params,
                             const RuleSet &rules);

nlohmann::json architecture_to_json(const Architecture &arch);
/// Throws std::invalid_argument on inconsistent documents.
Architecture architecture_from_json(const nlohmann::json &j);

void save_architecture(const Architecture &arch, const std::string &path);
Architecture load_architecture(const std::string &path);

}  // namespace qarch
