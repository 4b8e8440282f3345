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

#include "qarch/flow.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "qarch/bus.h"
#include "qarch/layout.h"
#include "qarch/profiler.h"
#include "qarch/seeding.h"

namespace qarch {

std::string_view config_name(Config c) {
    switch (c) {
        case Config::ibm:
            return "ibm";
        case Config::eff_full:
            return "eff-full";
        case Config::eff_5_freq:
            return "eff-5-freq";
        case Config::eff_rd_bus:
            return "eff-rd-bus";
        case Config::eff_layout_only:
            return "eff-layout-only";
    }
    throw std::logic_error("bad config");
}

Config parse_config(std::string_view name) {
    for (auto c : all_configs()) {
        if (config_name(c) == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown configuration '" + std::string(name) + "'");
}

const std::vector<Config> &all_configs() {
    static const std::vector<Config> configs = {Config::ibm, Config::eff_full, Config::eff_5_freq,
                                                Config::eff_rd_bus, Config::eff_layout_only};
    return configs;
}

Architecture design(const Circuit &c, Config config, size_t k, uint64_t seed,
                    const DesignOptions &options) {
    if (config == Config::ibm) {
        throw std::invalid_argument("ibm designs come from baseline_arch()");
    }
    auto prof = profile(c);
    Architecture arch;
    arch.placement = place_qubits(prof.degrees, prof.matrix);
    switch (config) {
        case Config::eff_full:
        case Config::eff_5_freq:
            arch.buses = select_buses(arch.placement, prof.matrix, k);
            break;
        case Config::eff_rd_bus: {
            std::mt19937_64 rng(substream_seed(seed, 0xb05));
            arch.buses = random_buses(arch.placement, k, rng);
            break;
        }
        case Config::eff_layout_only:
            arch.buses = k == 0 ? make_bus_plan(arch.placement, {}) : max_buses(arch.placement);
            break;
        case Config::ibm:
            break;
    }
    if (config == Config::eff_full || config == Config::eff_rd_bus) {
        SimParams params = options.params;
        params.seed = seed;
        arch.frequencies = allocate(arch.placement, qarch::connectivity(arch.placement, arch.buses),
                                    params, options.rules, options.allocation);
    } else {
        arch.frequencies = five_frequency_plan(arch.placement);
    }
    arch.provenance = {std::string(config_name(config)), k, seed, c.name};
    return arch;
}

Architecture run_flow(const Circuit &c, size_t k, const SimParams &params, const RuleSet &rules,
                      const AllocationOptions &allocation) {
    return design(c, Config::eff_full, k, params.seed, DesignOptions{params, rules, allocation});
}

size_t auto_k_max(const Circuit &c) {
    auto prof = profile(c);
    auto placement = place_qubits(prof.degrees, prof.matrix);
    return select_buses(placement, prof.matrix, std::numeric_limits<size_t>::max())
        .four_qubit_buses.size();
}

RoutedResult map_circuit(const Circuit &c, const Architecture &arch, const RouterOptions &options) {
    auto g = arch.connectivity();
    auto initial = initial_mapping(profile(c), g, arch.layout_mapping(c.num_qubits));
    return route(c, g, initial, options);
}

namespace {

struct Job {
    size_t circuit;
    Config config;
    size_t k;
    uint64_t seed;
    std::string baseline;
};

SweepRow run_job(const Job &job, const std::vector<Circuit> &circuits, const SweepOptions &options) {
    const Circuit &c = circuits[job.circuit];
    Architecture arch = job.config == Config::ibm
                            ? baseline_arch(job.baseline)
                            : design(c, job.config, job.k, job.seed, options.design);
    SimParams params = options.design.params;
    params.seed = job.seed;
    params.threads = 1;
    auto y = simulate_yield(arch, params, options.design.rules);
    auto routed = map_circuit(c, arch, options.router);
    SweepRow row;
    row.benchmark = c.name;
    row.config = std::string(config_name(job.config));
    row.k = job.config == Config::eff_layout_only || job.config == Config::ibm
                ? arch.buses.four_qubit_buses.size()
                : job.k;
    row.seed = job.seed;
    row.yield = y.rate;
    row.post_gates = routed.post_gate_count;
    row.four_qubit_buses = arch.buses.four_qubit_buses.size();
    return row;
}

}  // namespace

std::vector<SweepRow> pareto_sweep(const std::vector<Circuit> &circuits,
                                   const SweepOptions &options) {
    uint64_t base = options.design.params.seed;
    std::vector<Job> jobs;
    for (size_t ci = 0; ci < circuits.size(); ci++) {
        const auto &c = circuits[ci];
        size_t k_max = options.k_max.value_or(auto_k_max(c));
        for (auto config : options.configs) {
            switch (config) {
                case Config::ibm: {
                    const auto &names = baseline_names();
                    for (size_t label = 0; label < names.size(); label++) {
                        if (baseline_arch(names[label]).num_qubits() >= c.num_qubits) {
                            jobs.push_back({ci, config, 0, base + label + 1, names[label]});
                        }
                    }
                    break;
                }
                case Config::eff_full:
                case Config::eff_5_freq:
                    for (size_t k = 0; k <= k_max; k++) {
                        jobs.push_back({ci, config, k, base, ""});
                    }
                    break;
                case Config::eff_rd_bus:
                    for (size_t k = 1; k <= k_max; k++) {
                        for (size_t s = 1; s <= options.rd_samples; s++) {
                            jobs.push_back({ci, config, k, base + s, ""});
                        }
                    }
                    break;
                case Config::eff_layout_only: {
                    jobs.push_back({ci, config, 0, base, ""});
                    auto prof = profile(c);
                    auto placement = place_qubits(prof.degrees, prof.matrix);
                    if (!max_buses(placement).four_qubit_buses.empty()) {
                        jobs.push_back({ci, config, 1, base, ""});
                    }
                    break;
                }
            }
        }
    }

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs.size());
    auto worker = [&] {
        for (size_t idx = next++; idx < jobs.size(); idx = next++) {
            try {
                rows[idx] = run_job(jobs[idx], circuits, options);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };
    size_t threads = std::clamp<size_t>(options.jobs, 1, std::max<size_t>(jobs.size(), 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) {
        return std::tie(a.benchmark, a.config, a.k, a.seed) <
               std::tie(b.benchmark, b.config, b.k, b.seed);
    });
    for (size_t begin = 0; begin < rows.size();) {
        size_t end = begin;
        size_t best = std::numeric_limits<size_t>::max();
        while (end < rows.size() && rows[end].benchmark == rows[begin].benchmark) {
            best = std::min(best, rows[end].post_gates);
            end++;
        }
        for (size_t r = begin; r < end; r++) {
            rows[r].perf_norm = rows[r].post_gates == 0 ? 1.0 : double(best) / double(rows[r].post_gates);
        }
        begin = end;
    }
    return rows;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "benchmark,config,k,seed,yield,post_gates,perf_norm\n";
    char buffer[64];
    for (const auto &r : rows) {
        out << r.benchmark << "," << r.config << "," << r.k << "," << r.seed << ",";
        std::snprintf(buffer, sizeof buffer, "%.6f", r.yield);
        out << buffer << "," << r.post_gates << ",";
        std::snprintf(buffer, sizeof buffer, "%.6f", r.perf_norm);
        out << buffer << "\n";
    }
}

}  // namespace qarch
