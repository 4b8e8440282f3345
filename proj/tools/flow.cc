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

// Command line front end: profile, run, sweep, yield, map and baseline.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qarch/architecture.h"
#include "qarch/circuit.h"
#include "qarch/flow.h"
#include "qarch/profiler.h"

namespace {

struct SimFlags {
    double sigma_mhz = 30;
    size_t trials = 10000;
    uint64_t seed = 1;
    std::string rules_path;
    size_t alloc_trials = 2000;

    void add(CLI::App *app, bool allocation) {
        app->add_option("--sigma-mhz", sigma_mhz, "Fabrication noise standard deviation (MHz)")
            ->check(CLI::NonNegativeNumber);
        app->add_option("--trials", trials, "Monte Carlo trials for yield")->check(CLI::PositiveNumber);
        app->add_option("--seed", seed, "Random seed");
        app->add_option("--rules", rules_path, "Collision rule JSON (default: built-in table)")
            ->check(CLI::ExistingFile);
        if (allocation) {
            app->add_option("--alloc-trials", alloc_trials,
                            "Monte Carlo trials per candidate frequency during allocation")
                ->check(CLI::PositiveNumber);
        }
    }

    qarch::SimParams params() const {
        qarch::SimParams p;
        p.sigma_mhz = sigma_mhz;
        p.trials = trials;
        p.seed = seed;
        return p;
    }

    qarch::RuleSet rules() const {
        return rules_path.empty() ? qarch::default_rules() : qarch::load_rules(rules_path);
    }
};

void print_summary(const qarch::Architecture &arch, const qarch::YieldEstimate &y) {
    std::cout << "qubits: " << arch.num_qubits() << "\n";
    std::cout << "2-qubit buses: " << arch.buses.two_qubit_buses.size() << "\n";
    std::cout << "4-qubit buses: " << arch.buses.four_qubit_buses.size() << "\n";
    std::cout << "yield: " << y.rate << " (" << y.successes << "/" << y.trials << ")\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Application-specific superconducting processor design flow"};
    app.require_subcommand(1);

    auto *profile_cmd = app.add_subcommand("profile", "Print the coupling degree list of a program");
    std::string profile_qasm, matrix_out;
    profile_cmd->add_option("--qasm", profile_qasm, "OpenQASM 2.0 program")->required()->check(CLI::ExistingFile);
    profile_cmd->add_option("--matrix", matrix_out, "Write the coupling strength matrix as CSV");

    auto *run_cmd = app.add_subcommand("run", "Generate one architecture");
    std::string run_qasm, run_config = "eff-full", run_out;
    size_t run_k = 0;
    SimFlags run_flags;
    run_cmd->add_option("--qasm", run_qasm, "OpenQASM 2.0 program")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--config", run_config, "eff-full | eff-5-freq | eff-rd-bus | eff-layout-only");
    run_cmd->add_option("--k", run_k, "Maximum number of 4-qubit buses");
    run_cmd->add_option("--out", run_out, "Architecture JSON output");
    run_flags.add(run_cmd, true);

    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep all configurations and bus budgets");
    std::vector<std::string> sweep_qasm;
    std::string sweep_configs = "all", sweep_kmax = "auto", sweep_out;
    size_t rd_samples = 10, jobs = 1;
    SimFlags sweep_flags;
    sweep_cmd->add_option("--qasm", sweep_qasm, "OpenQASM 2.0 program(s)")->required()->check(CLI::ExistingFile);
    sweep_cmd->add_option("--configs", sweep_configs, "Comma separated configurations or 'all'");
    sweep_cmd->add_option("--k-max", sweep_kmax, "Largest bus budget, or 'auto'");
    sweep_cmd->add_option("--rd-samples", rd_samples, "Random bus samples per budget");
    sweep_cmd->add_option("--jobs", jobs, "Parallel design points")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", sweep_out, "CSV output (default: stdout)");
    sweep_flags.add(sweep_cmd, true);

    auto *yield_cmd = app.add_subcommand("yield", "Monte Carlo yield of an architecture");
    std::string yield_arch;
    size_t yield_threads = 1;
    SimFlags yield_flags;
    yield_cmd->add_option("--arch", yield_arch, "Architecture JSON")->required()->check(CLI::ExistingFile);
    yield_cmd->add_option("--threads", yield_threads, "Worker threads")->check(CLI::PositiveNumber);
    yield_flags.add(yield_cmd, false);

    auto *map_cmd = app.add_subcommand("map", "Route a program on an architecture");
    std::string map_qasm, map_arch;
    map_cmd->add_option("--qasm", map_qasm, "OpenQASM 2.0 program")->required()->check(CLI::ExistingFile);
    map_cmd->add_option("--arch", map_arch, "Architecture JSON")->required()->check(CLI::ExistingFile);

    auto *baseline_cmd = app.add_subcommand("baseline", "Write a fixed baseline architecture");
    std::string baseline_name, baseline_out;
    baseline_cmd->add_option("--name", baseline_name, "ibm16 | ibm16-4bus | ibm20 | ibm20-4bus")->required();
    baseline_cmd->add_option("--out", baseline_out, "Architecture JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*profile_cmd) {
            auto c = qarch::read_qasm_file(profile_qasm);
            auto prof = qarch::profile(c);
            std::cout << "qubits: " << c.num_qubits
                      << "  two-qubit gates: " << qarch::two_qubit_gate_count(c) << "\n";
            for (const auto &e : prof.degrees) {
                std::cout << "q" << e.qubit << " " << e.degree << "\n";
            }
            if (!matrix_out.empty()) {
                std::ofstream out(matrix_out);
                qarch::write_matrix_csv(out, prof.matrix);
            }
        } else if (*run_cmd) {
            auto c = qarch::read_qasm_file(run_qasm);
            auto config = qarch::parse_config(run_config);
            qarch::DesignOptions options{run_flags.params(), run_flags.rules(), {run_flags.alloc_trials}};
            auto arch = qarch::design(c, config, run_k, run_flags.seed, options);
            print_summary(arch, qarch::simulate_yield(arch, options.params, options.rules));
            if (!run_out.empty()) {
                qarch::save_architecture(arch, run_out);
            }
        } else if (*sweep_cmd) {
            qarch::SweepOptions options;
            options.design = {sweep_flags.params(), sweep_flags.rules(), {sweep_flags.alloc_trials}};
            options.rd_samples = rd_samples;
            options.jobs = jobs;
            if (sweep_configs != "all") {
                options.configs.clear();
                std::stringstream ss(sweep_configs);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    options.configs.push_back(qarch::parse_config(item));
                }
            }
            if (sweep_kmax != "auto") {
                options.k_max = std::stoul(sweep_kmax);
            }
            std::vector<qarch::Circuit> circuits;
            for (const auto &path : sweep_qasm) {
                circuits.push_back(qarch::read_qasm_file(path));
            }
            auto rows = qarch::pareto_sweep(circuits, options);
            if (sweep_out.empty()) {
                qarch::write_sweep_csv(std::cout, rows);
            } else {
                std::ofstream out(sweep_out);
                qarch::write_sweep_csv(out, rows);
            }
        } else if (*yield_cmd) {
            auto arch = qarch::load_architecture(yield_arch);
            auto params = yield_flags.params();
            params.threads = yield_threads;
            auto y = qarch::simulate_yield(arch, params, yield_flags.rules());
            std::cout << "yield: " << y.rate << " (" << y.successes << "/" << y.trials << ")\n";
        } else if (*map_cmd) {
            auto c = qarch::read_qasm_file(map_qasm);
            auto arch = qarch::load_architecture(map_arch);
            auto routed = qarch::map_circuit(c, arch);
            std::cout << "gates: " << c.gates.size() << "\n";
            std::cout << "swaps: " << routed.inserted_swaps << "\n";
            std::cout << "post-mapping gates: " << qarch::performance_metric(routed) << "\n";
        } else if (*baseline_cmd) {
            auto arch = qarch::baseline_arch(baseline_name);
            if (baseline_out.empty()) {
                std::cout << qarch::architecture_to_json(arch).dump(2) << "\n";
            } else {
                qarch::save_architecture(arch, baseline_out);
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
