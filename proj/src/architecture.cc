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

#include "qarch/architecture.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

namespace qarch {

ConnectivityGraph Architecture::connectivity() const {
    return qarch::connectivity(placement, buses);
}

std::optional<std::vector<QubitId>> Architecture::layout_mapping(size_t num_logical) const {
    if (provenance.config.rfind("eff", 0) != 0 || num_logical != num_qubits()) {
        return std::nullopt;
    }
    std::vector<QubitId> identity(num_logical);
    for (QubitId q = 0; q < num_logical; q++) {
        identity[q] = q;
    }
    return identity;
}

const std::vector<std::string> &baseline_names() {
    static const std::vector<std::string> names = {"ibm16", "ibm16-4bus", "ibm20", "ibm20-4bus"};
    return names;
}

namespace {

Placement grid(int32_t columns, int32_t rows) {
    Placement p(size_t(columns * rows));
    for (int32_t y = 0; y < rows; y++) {
        for (int32_t x = 0; x < columns; x++) {
            p.place(QubitId(y * columns + x), {x, y});
        }
    }
    return p;
}

BusPlan squares_at(const Placement &p, const std::vector<Coord> &anchors) {
    auto all = enumerate_squares(p);
    std::vector<Square> chosen;
    for (auto a : anchors) {
        auto it = std::find_if(all.begin(), all.end(), [&](const Square &s) { return s.anchor == a; });
        chosen.push_back(*it);
    }
    return make_bus_plan(p, std::move(chosen));
}

}  // namespace

Architecture baseline_arch(std::string_view name) {
    Architecture arch;
    if (name == "ibm16" || name == "ibm16-4bus") {
        arch.placement = grid(8, 2);
        arch.buses = name == "ibm16" ? make_bus_plan(arch.placement, {})
                                     : squares_at(arch.placement, {{0, 0}, {2, 0}, {4, 0}, {6, 0}});
    } else if (name == "ibm20" || name == "ibm20-4bus") {
        arch.placement = grid(5, 4);
        // Checkerboard of the 4x3 squares, as on the 20-qubit device.
        arch.buses = name == "ibm20"
                         ? make_bus_plan(arch.placement, {})
                         : squares_at(arch.placement,
                                      {{1, 0}, {3, 0}, {0, 1}, {2, 1}, {1, 2}, {3, 2}});
    } else {
        throw UnknownBaseline("unknown baseline '" + std::string(name) + "'");
    }
    arch.frequencies = five_frequency_plan(arch.placement);
    arch.provenance = {std::string(name), arch.buses.four_qubit_buses.size(), 0, "baseline"};
    return arch;
}

YieldEstimate simulate_yield(const Architecture &arch, const SimParams &params,
                             const RuleSet &rules) {
    return simulate_yield(arch.connectivity(), arch.frequencies.freq_mhz, params, rules);
}

nlohmann::json architecture_to_json(const Architecture &arch) {
    nlohmann::json qubits = nlohmann::json::array();
    for (QubitId q = 0; q < arch.num_qubits(); q++) {
        auto c = arch.placement.position(q);
        qubits.push_back({{"id", q},
                          {"x", c.x},
                          {"y", c.y},
                          {"freq_ghz", arch.frequencies.freq_mhz[q] / 1000.0}});
    }
    nlohmann::json buses = nlohmann::json::array();
    for (auto [a, b] : arch.buses.two_qubit_buses) {
        buses.push_back({{"kind", "bus2"}, {"qubits", {a, b}}});
    }
    for (const auto &s : arch.buses.four_qubit_buses) {
        buses.push_back({{"kind", s.occupied_count == 4 ? "bus4" : "bus3"},
                         {"anchor", {s.anchor.x, s.anchor.y}},
                         {"qubits", s.qubits()}});
    }
    return {{"qubits", qubits},
            {"buses", buses},
            {"provenance",
             {{"config", arch.provenance.config},
              {"k", arch.provenance.k},
              {"seed", arch.provenance.seed},
              {"source", arch.provenance.source}}}};
}

Architecture architecture_from_json(const nlohmann::json &j) {
    Architecture arch;
    const auto &qubits = j.at("qubits");
    arch.placement = Placement(qubits.size());
    arch.frequencies.freq_mhz.assign(qubits.size(), 0.0);
    for (const auto &q : qubits) {
        auto id = q.at("id").get<QubitId>();
        if (id >= qubits.size()) {
            throw std::invalid_argument("qubit ids must be dense");
        }
        arch.placement.place(id, {q.at("x").get<int32_t>(), q.at("y").get<int32_t>()});
        arch.frequencies.freq_mhz[id] = std::round(q.at("freq_ghz").get<double>() * 1e6) / 1e3;
    }
    std::vector<Square> squares;
    std::vector<QubitPair> pairs;
    auto all = enumerate_squares(arch.placement);
    for (const auto &bus : j.at("buses")) {
        auto kind = bus.at("kind").get<std::string>();
        auto members = bus.at("qubits").get<std::vector<QubitId>>();
        if (kind == "bus2") {
            if (members.size() != 2) {
                throw std::invalid_argument("bus2 needs two qubits");
            }
            pairs.push_back(ordered_pair(members[0], members[1]));
            continue;
        }
        if (kind != "bus3" && kind != "bus4") {
            throw std::invalid_argument("unknown bus kind '" + kind + "'");
        }
        Coord anchor{bus.at("anchor").at(0).get<int32_t>(), bus.at("anchor").at(1).get<int32_t>()};
        auto it = std::find_if(all.begin(), all.end(), [&](const Square &s) { return s.anchor == anchor; });
        std::sort(members.begin(), members.end());
        if (it == all.end() || it->qubits() != members) {
            throw std::invalid_argument("bus square does not match the qubit sites");
        }
        squares.push_back(*it);
    }
    arch.buses = make_bus_plan(arch.placement, std::move(squares));
    std::sort(pairs.begin(), pairs.end());
    if (pairs != arch.buses.two_qubit_buses) {
        throw std::invalid_argument("2-qubit buses must cover exactly the uncovered lattice edges");
    }
    if (j.contains("provenance")) {
        const auto &p = j.at("provenance");
        arch.provenance.config = p.value("config", "");
        arch.provenance.k = p.value("k", size_t{0});
        arch.provenance.seed = p.value("seed", uint64_t{0});
        arch.provenance.source = p.value("source", "");
    }
    return arch;
}

void save_architecture(const Architecture &arch, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << architecture_to_json(arch).dump(2) << "\n";
}

Architecture load_architecture(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return architecture_from_json(nlohmann::json::parse(in));
}

}  // namespace qarch
