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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "qarch/flow.h"
#include "qarch/profiler.h"
#include "test_support.h"

namespace qarch {
namespace {

namespace fs = std::filesystem;

DesignOptions quick_options() {
    DesignOptions o;
    o.params.trials = 2000;
    o.allocation.trials_per_candidate = 300;
    return o;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir(const std::string &tag) {
    auto dir = fs::temp_directory_path() / ("qarch_" + tag + "_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string &args) {
    return std::system((std::string(QARCH_FLOW_BIN) + " " + args + " > /dev/null 2>&1").c_str());
}

TEST(Configs, NamesRoundTrip) {
    for (auto c : all_configs()) {
        EXPECT_EQ(parse_config(config_name(c)), c);
    }
    EXPECT_THROW(parse_config("eff-magic"), std::invalid_argument);
}

TEST(RunFlow, ChainNeverGetsFourQubitBuses) {
    auto c = testing::chain_circuit(9, 2);
    auto o = quick_options();
    for (size_t k : {0, 1, 4}) {
        auto arch = run_flow(c, k, o.params, o.rules, o.allocation);
        EXPECT_TRUE(arch.buses.four_qubit_buses.empty());
        EXPECT_EQ(map_circuit(c, arch).inserted_swaps, 0u);
    }
}

TEST(RunFlow, WalkthroughFixtureIsAPlus) {
    auto c = testing::star_walkthrough();
    auto o = quick_options();
    auto arch = run_flow(c, 0, o.params, o.rules, o.allocation);
    EXPECT_EQ(arch.buses.two_qubit_buses.size(), 4u);
    EXPECT_TRUE(arch.buses.four_qubit_buses.empty());
    EXPECT_EQ(arch.placement.position(4), (Coord{0, 0}));
    for (QubitId q = 0; q < 4; q++) {
        EXPECT_EQ(manhattan(arch.placement.position(q), {0, 0}), 1);
    }
    EXPECT_EQ(arch.frequencies.freq_mhz[4], 5170);
    EXPECT_EQ(arch.provenance.config, "eff-full");
    EXPECT_EQ(arch.provenance.source, "star5");
}

TEST(RunFlow, ZeroBudgetIsTwoQubitOnly) {
    auto c = read_qasm_file(testing::source_path("benchmarks/qaoa_12.qasm"));
    auto o = quick_options();
    auto arch = run_flow(c, 0, o.params, o.rules, o.allocation);
    EXPECT_TRUE(arch.buses.four_qubit_buses.empty());
    EXPECT_FALSE(arch.buses.two_qubit_buses.empty());
}

TEST(Design, LayoutOnlyMaxUsesEverySquareItCan) {
    auto c = read_qasm_file(testing::source_path("benchmarks/qft_8.qasm"));
    auto arch = design(c, Config::eff_layout_only, 1, 1, quick_options());
    EXPECT_EQ(arch.buses.four_qubit_buses.size(), max_buses(arch.placement).four_qubit_buses.size());
    EXPECT_THROW(design(c, Config::ibm, 0, 1, quick_options()), std::invalid_argument);
}

TEST(Architecture, JsonRoundTrip) {
    auto c = read_qasm_file(testing::source_path("benchmarks/adder_10.qasm"));
    auto o = quick_options();
    for (auto arch : {run_flow(c, 2, o.params, o.rules, o.allocation), baseline_arch("ibm20-4bus")}) {
        auto j = architecture_to_json(arch);
        auto back = architecture_from_json(j);
        EXPECT_EQ(architecture_to_json(back), j);
        EXPECT_EQ(back.frequencies.freq_mhz, arch.frequencies.freq_mhz);
    }
}

TEST(Architecture, JsonRejectsBadBuses) {
    auto j = architecture_to_json(baseline_arch("ibm16"));
    j["buses"].erase(0);
    EXPECT_THROW(architecture_from_json(j), std::invalid_argument);
}

TEST(Sweep, RowShapes) {
    std::vector<Circuit> cs{read_qasm_file(testing::source_path("benchmarks/qft_8.qasm"))};
    SweepOptions o;
    o.design = quick_options();
    o.rd_samples = 3;
    auto rows = pareto_sweep(cs, o);
    size_t k_max = auto_k_max(cs[0]);
    size_t ibm = 0, full = 0, rd = 0;
    double best = 0;
    for (const auto &r : rows) {
        EXPECT_GE(r.yield, 0.0);
        EXPECT_LE(r.yield, 1.0);
        EXPECT_GT(r.perf_norm, 0.0);
        EXPECT_LE(r.perf_norm, 1.0);
        best = std::max(best, r.perf_norm);
        ibm += r.config == "ibm";
        full += r.config == "eff-full";
        rd += r.config == "eff-rd-bus";
        if (r.config == "eff-full") EXPECT_LE(r.four_qubit_buses, r.k);
    }
    EXPECT_EQ(best, 1.0);
    EXPECT_EQ(ibm, 4u);
    EXPECT_EQ(full, k_max + 1);
    EXPECT_EQ(rd, 3 * k_max);

    std::ostringstream a, b;
    write_sweep_csv(a, rows);
    o.jobs = 3;
    write_sweep_csv(b, pareto_sweep(cs, o));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "benchmark,config,k,seed,yield,post_gates,perf_norm");
}

TEST(Cli, SubcommandsAndDeterministicSweep) {
    auto dir = scratch_dir("cli");
    auto qasm = testing::source_path("benchmarks/uccsd_8.qasm");
    auto arch = (dir / "a.json").string();
    ASSERT_EQ(run_cli("profile --qasm " + qasm + " --matrix " + (dir / "m.csv").string()), 0);
    EXPECT_EQ(slurp(dir / "m.csv").substr(0, 6), "q0,q1,");
    ASSERT_EQ(run_cli("run --qasm " + qasm + " --k 1 --trials 500 --alloc-trials 200 --out " + arch), 0);
    EXPECT_NO_THROW(load_architecture(arch));
    EXPECT_EQ(run_cli("yield --arch " + arch + " --trials 500 --threads 2"), 0);
    EXPECT_EQ(run_cli("map --qasm " + qasm + " --arch " + arch), 0);
    ASSERT_EQ(run_cli("baseline --name ibm16-4bus --out " + (dir / "b.json").string()), 0);
    EXPECT_EQ(load_architecture((dir / "b.json").string()).buses.four_qubit_buses.size(), 4u);
    EXPECT_NE(run_cli("baseline --name nope"), 0);
    EXPECT_NE(run_cli("run --qasm " + qasm + " --config nope"), 0);

    std::string common = " sweep --qasm " + qasm + " --trials 500 --alloc-trials 200 --rd-samples 2";
    ASSERT_EQ(run_cli(common + " --jobs 1 --out " + (dir / "s1.csv").string()), 0);
    ASSERT_EQ(run_cli(common + " --jobs 3 --out " + (dir / "s2.csv").string()), 0);
    ASSERT_EQ(run_cli(common + " --jobs 1 --out " + (dir / "s3.csv").string()), 0);
    auto s1 = slurp(dir / "s1.csv");
    EXPECT_FALSE(s1.empty());
    EXPECT_EQ(s1, slurp(dir / "s2.csv"));
    EXPECT_EQ(s1, slurp(dir / "s3.csv"));
    fs::remove_all(dir);
}

}  // namespace
}  // namespace qarch
