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

#include "qarch/mapper.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace qarch {

QubitMap QubitMap::from_logical(std::vector<QubitId> l2p, size_t num_physical) {
    QubitMap m;
    m.physical_to_logical.assign(num_physical, std::nullopt);
    for (QubitId l = 0; l < l2p.size(); l++) {
        if (l2p[l] >= num_physical || m.physical_to_logical[l2p[l]].has_value()) {
            throw std::invalid_argument("logical to physical map is not injective");
        }
        m.physical_to_logical[l2p[l]] = l;
    }
    m.logical_to_physical = std::move(l2p);
    return m;
}

std::vector<std::vector<uint32_t>> hop_distances(const ConnectivityGraph &g) {
    size_t n = g.num_nodes();
    std::vector<std::vector<uint32_t>> dist(n, std::vector<uint32_t>(n, kUnreachable));
    for (QubitId s = 0; s < n; s++) {
        std::deque<QubitId> queue{s};
        dist[s][s] = 0;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto nb : g.neighbors(v)) {
                if (dist[s][nb] == kUnreachable) {
                    dist[s][nb] = dist[s][v] + 1;
                    queue.push_back(nb);
                }
            }
        }
    }
    return dist;
}

uint64_t mapping_cost(const CouplingMatrix &m, const std::vector<std::vector<uint32_t>> &dist,
                      const QubitMap &map) {
    uint64_t cost = 0;
    const auto &pos = map.logical_to_physical;
    for (QubitId a = 0; a < m.size(); a++) {
        for (QubitId b = a + 1; b < m.size(); b++) {
            cost += m(a, b) * dist[pos[a]][pos[b]];
        }
    }
    return cost;
}

namespace {

enum class TiePolicy { fewest_free_neighbors, most_free_neighbors };

QubitMap greedy_mapping(const CouplingProfile &profile, const ConnectivityGraph &g,
                        const std::vector<std::vector<uint32_t>> &dist, QubitId seed,
                        TiePolicy policy) {
    const auto &m = profile.matrix;
    size_t nl = m.size();
    size_t np = g.num_nodes();
    std::vector<std::optional<QubitId>> l2p(nl);
    std::vector<bool> used(np, false);

    auto free_neighbors = [&](QubitId p) {
        return std::count_if(g.neighbors(p).begin(), g.neighbors(p).end(),
                             [&](QubitId nb) { return !used[nb]; });
    };

    size_t mapped = 0;
    while (mapped < nl) {
        std::optional<QubitId> next;
        for (const auto &e : profile.degrees) {
            if (l2p[e.qubit].has_value()) {
                continue;
            }
            for (QubitId o = 0; o < nl; o++) {
                if (l2p[o].has_value() && m(e.qubit, o) > 0) {
                    next = e.qubit;
                    break;
                }
            }
            if (next) {
                break;
            }
        }
        if (!next) {
            for (const auto &e : profile.degrees) {
                if (!l2p[e.qubit].has_value()) {
                    next = e.qubit;
                    break;
                }
            }
        }

        QubitId chosen = seed;
        if (mapped > 0) {
            uint64_t best_cost = std::numeric_limits<uint64_t>::max();
            long best_free = 0;
            bool any = false;
            for (QubitId p = 0; p < np; p++) {
                if (used[p]) {
                    continue;
                }
                uint64_t cost = 0;
                for (QubitId o = 0; o < nl; o++) {
                    if (l2p[o].has_value() && m(*next, o) > 0) {
                        cost += m(*next, o) * dist[p][*l2p[o]];
                    }
                }
                long nfree = free_neighbors(p);
                bool better = !any || cost < best_cost;
                if (!better && cost == best_cost) {
                    better = policy == TiePolicy::fewest_free_neighbors ? nfree < best_free
                                                                        : nfree > best_free;
                }
                if (better) {
                    any = true;
                    chosen = p;
                    best_cost = cost;
                    best_free = nfree;
                }
            }
        }
        l2p[*next] = chosen;
        used[chosen] = true;
        mapped++;
    }
    std::vector<QubitId> out(nl);
    for (QubitId l = 0; l < nl; l++) {
        out[l] = *l2p[l];
    }
    return QubitMap::from_logical(std::move(out), np);
}

}  // namespace

QubitMap initial_mapping(const CouplingProfile &profile, const ConnectivityGraph &g,
                         const std::optional<std::vector<QubitId>> &hint) {
    size_t nl = profile.matrix.size();
    size_t np = g.num_nodes();
    if (nl > np) {
        throw TooFewPhysicalQubits("program needs " + std::to_string(nl) +
                                   " qubits but the chip has " + std::to_string(np));
    }
    if (nl == 0) {
        return QubitMap::from_logical({}, np);
    }
    auto dist = hop_distances(g);
    std::optional<QubitMap> best;
    uint64_t best_cost = 0;
    for (auto policy : {TiePolicy::fewest_free_neighbors, TiePolicy::most_free_neighbors}) {
        for (QubitId seed = 0; seed < np; seed++) {
            auto candidate = greedy_mapping(profile, g, dist, seed, policy);
            uint64_t cost = mapping_cost(profile.matrix, dist, candidate);
            if (!best || cost < best_cost) {
                best = std::move(candidate);
                best_cost = cost;
            }
        }
    }
    if (hint.has_value()) {
        auto hinted = QubitMap::from_logical(*hint, np);
        if (mapping_cost(profile.matrix, dist, hinted) <= best_cost) {
            return hinted;
        }
    }
    return *best;
}

RoutedResult route(const Circuit &c, const ConnectivityGraph &g, const QubitMap &initial,
                   const RouterOptions &options) {
    if (initial.logical_to_physical.size() != c.num_qubits ||
        initial.physical_to_logical.size() != g.num_nodes()) {
        throw std::invalid_argument("initial mapping does not match circuit and chip");
    }
    auto dist = hop_distances(g);
    RoutedResult result;
    QubitMap map = initial;

    // Only two-qubit gates can block; everything else runs wherever its qubit is.
    std::vector<size_t> two_qubit;
    for (size_t k = 0; k < c.gates.size(); k++) {
        if (c.gates[k].kind == GateKind::two_qubit) {
            two_qubit.push_back(k);
        }
    }
    std::vector<std::vector<size_t>> queue(c.num_qubits);
    for (size_t idx = 0; idx < two_qubit.size(); idx++) {
        for (auto q : c.gates[two_qubit[idx]].operands) {
            queue[q].push_back(idx);
        }
    }
    std::vector<size_t> head(c.num_qubits, 0);
    constexpr size_t kNone = std::numeric_limits<size_t>::max();
    auto head_of = [&](QubitId q, size_t offset = 0) {
        return head[q] + offset < queue[q].size() ? queue[q][head[q] + offset] : kNone;
    };
    auto operands = [&](size_t idx) -> const std::vector<QubitId> & {
        return c.gates[two_qubit[idx]].operands;
    };
    auto gate_distance = [&](size_t idx) {
        const auto &ops = operands(idx);
        return dist[map.logical_to_physical[ops[0]]][map.logical_to_physical[ops[1]]];
    };
    auto apply_swap = [&](QubitId pa, QubitId pb) {
        auto la = map.physical_to_logical[pa];
        auto lb = map.physical_to_logical[pb];
        map.physical_to_logical[pa] = lb;
        map.physical_to_logical[pb] = la;
        if (la) {
            map.logical_to_physical[*la] = pb;
        }
        if (lb) {
            map.logical_to_physical[*lb] = pa;
        }
        result.ops.push_back({true, pa, pb, 0});
        result.inserted_swaps++;
    };

    size_t executed = 0;
    std::vector<size_t> front;
    while (executed < two_qubit.size()) {
        // Execute everything ready and adjacent, until nothing changes.
        bool progress = true;
        while (progress) {
            progress = false;
            front.clear();
            for (QubitId q = 0; q < c.num_qubits; q++) {
                size_t h = head_of(q);
                if (h == kNone) {
                    continue;
                }
                const auto &ops = operands(h);
                if (ops[0] == q && head_of(ops[1]) == h) {
                    front.push_back(h);
                }
            }
            std::sort(front.begin(), front.end());
            for (auto idx : front) {
                if (gate_distance(idx) == 1) {
                    const auto &ops = operands(idx);
                    result.ops.push_back({false, map.logical_to_physical[ops[0]],
                                          map.logical_to_physical[ops[1]], two_qubit[idx]});
                    head[ops[0]]++;
                    head[ops[1]]++;
                    executed++;
                    progress = true;
                }
            }
        }
        if (executed == two_qubit.size()) {
            break;
        }

        // Every front gate is blocked.
        std::vector<size_t> next;
        auto in_front = [&](size_t idx) { return std::binary_search(front.begin(), front.end(), idx); };
        for (QubitId q = 0; q < c.num_qubits; q++) {
            size_t h = head_of(q);
            size_t eff = (h != kNone && in_front(h)) ? head_of(q, 1) : h;
            if (eff == kNone || in_front(eff)) {
                continue;
            }
            const auto &ops = operands(eff);
            QubitId other = ops[0] == q ? ops[1] : ops[0];
            if (ops[0] != q) {
                continue;
            }
            size_t oh = head_of(other);
            size_t other_eff = (oh != kNone && in_front(oh)) ? head_of(other, 1) : oh;
            if (other_eff == eff) {
                next.push_back(eff);
            }
        }

        uint64_t front_sum = 0;
        for (auto idx : front) {
            if (gate_distance(idx) >= kUnreachable) {
                throw std::runtime_error("gate operands sit in disconnected parts of the chip");
            }
            front_sum += gate_distance(idx);
        }

        std::vector<QubitPair> swaps;
        for (auto idx : front) {
            for (auto lq : operands(idx)) {
                QubitId p = map.logical_to_physical[lq];
                for (auto nb : g.neighbors(p)) {
                    swaps.push_back(ordered_pair(p, nb));
                }
            }
        }
        std::sort(swaps.begin(), swaps.end());
        swaps.erase(std::unique(swaps.begin(), swaps.end()), swaps.end());

        std::optional<QubitPair> best;
        double best_score = 0;
        for (auto [pa, pb] : swaps) {
            // Evaluate the swap in place and undo it.
            auto la = map.physical_to_logical[pa];
            auto lb = map.physical_to_logical[pb];
            auto relocate = [&](std::optional<QubitId> l, QubitId p) {
                if (l) {
                    map.logical_to_physical[*l] = p;
                }
            };
            relocate(la, pb);
            relocate(lb, pa);
            uint64_t new_front = 0;
            for (auto idx : front) {
                new_front += gate_distance(idx);
            }
            uint64_t new_next = 0;
            for (auto idx : next) {
                new_next += gate_distance(idx);
            }
            relocate(la, pa);
            relocate(lb, pb);
            if (new_front >= front_sum) {
                continue;
            }
            double score = double(new_front) + options.lookahead_weight * double(new_next);
            if (!best || score < best_score) {
                best = QubitPair{pa, pb};
                best_score = score;
            }
        }
        if (best) {
            apply_swap(best->first, best->second);
            continue;
        }

        size_t oldest = front.front();
        const auto &ops = operands(oldest);
        while (gate_distance(oldest) > 1) {
            QubitId from = map.logical_to_physical[ops[0]];
            QubitId to = map.logical_to_physical[ops[1]];
            for (auto nb : g.neighbors(from)) {
                if (dist[nb][to] + 1 == dist[from][to]) {
                    apply_swap(from, nb);
                    break;
                }
            }
        }
    }
    result.final_map = map;
    result.post_gate_count = c.gates.size() + 3 * result.inserted_swaps;
    return result;
}

}  // namespace qarch
