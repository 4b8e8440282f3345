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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qarch/architecture.h"
#include "qarch/circuit.h"
#include "qarch/frequency.h"
#include "qarch/mapper.h"

namespace qarch {

/// Experiment configurations of the design-space sweep.
enum class Config {
    /// Fixed general-purpose lattices with the five-frequency plan.
    ibm,
    /// Layout, weighted bus selection and frequency allocation.
    eff_full,
    /// As eff_full but with the five-frequency plan.
    eff_5_freq,
    /// As eff_full but with random bus squares.
    eff_rd_bus,
    /// Generated layout, either no or as many as possible 4-qubit buses,
    /// five-frequency plan.
    eff_layout_only,
};

std::string_view config_name(Config c);
/// Throws std::invalid_argument for unknown names.
Config parse_config(std::string_view name);
const std::vector<Config> &all_configs();

struct DesignOptions {
    SimParams params;
    RuleSet rules = default_rules();
    AllocationOptions allocation;
};

/// Profile, place, select up to k 4-qubit buses and allocate frequencies.
Architecture run_flow(const Circuit &c, size_t k, const SimParams &params, const RuleSet &rules,
                      const AllocationOptions &allocation = {});

/// One design of a generated configuration. `k` is the 4-qubit bus budget
/// (eff_layout_only: 0 for none, anything else for the maximum); `seed`
/// drives random bus choice and frequency allocation.
Architecture design(const Circuit &c, Config config, size_t k, uint64_t seed,
                    const DesignOptions &options);

/// Number of squares weighted selection takes before running out of
/// positive-weight squares; the automatic upper end of the bus sweep.
size_t auto_k_max(const Circuit &c);

/// Initial mapping plus routing of `c` on `arch`.
RoutedResult map_circuit(const Circuit &c, const Architecture &arch,
                         const RouterOptions &options = {});

struct SweepRow {
    std::string benchmark;
    std::string config;
    size_t k = 0;
    uint64_t seed = 0;
    double yield = 0;
    size_t post_gates = 0;
    /// Best post_gates of the benchmark divided by this row's.
    double perf_norm = 0;
    size_t four_qubit_buses = 0;
};

struct SweepOptions {
    std::vector<Config> configs = all_configs();
    /// Upper bus budget; nullopt means auto_k_max().
    std::optional<size_t> k_max;
    size_t rd_samples = 10;
    DesignOptions design;
    RouterOptions router;
    /// Parallel design points; output does not depend on it.
    size_t jobs = 1;
};

/// All design points for every circuit, sorted by (benchmark, config, k, seed).
///
/// eff_full and eff_5_freq span k = 0..k_max, eff_rd_bus emits rd_samples rows
/// per k = 1..k_max with seeds base+1..base+rd_samples, eff_layout_only emits
/// its two bus options and ibm its four baselines with seed base+label.
std::vector<SweepRow> pareto_sweep(const std::vector<Circuit> &circuits,
                                   const SweepOptions &options);

/// Columns benchmark,config,k,seed,yield,post_gates,perf_norm.
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

}  // namespace qarch
