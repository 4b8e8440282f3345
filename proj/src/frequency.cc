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

#include "qarch/frequency.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "qarch/seeding.h"

namespace qarch {

std::vector<double> candidate_frequencies() {
    std::vector<double> out;
    for (int k = 0; k <= 34; k++) {
        out.push_back(kMinFrequencyMhz + kFrequencyStepMhz * k);
    }
    return out;
}

std::vector<double> five_frequencies() {
    std::vector<double> out;
    for (int k = 0; k < 5; k++) {
        out.push_back(5000.0 + 67.5 * k);
    }
    return out;
}

QubitId center_qubit(const Placement &p, const std::vector<QubitId> &among) {
    if (among.empty()) {
        throw std::invalid_argument("center of an empty qubit set");
    }
    // Compare n^2 * squared distance to the centroid in exact integers.
    int64_t n = int64_t(among.size());
    int64_t sx = 0, sy = 0;
    for (auto q : among) {
        sx += p.position(q).x;
        sy += p.position(q).y;
    }
    QubitId best = among.front();
    int64_t best_d = std::numeric_limits<int64_t>::max();
    for (auto q : among) {
        int64_t dx = n * p.position(q).x - sx;
        int64_t dy = n * p.position(q).y - sy;
        int64_t d = dx * dx + dy * dy;
        if (d < best_d || (d == best_d && q < best)) {
            best = q;
            best_d = d;
        }
    }
    return best;
}

QubitId center_qubit(const Placement &p) {
    return center_qubit(p, p.placed_qubits());
}

Subgraph local_region(QubitId q, const ConnectivityGraph &g, const std::vector<bool> &assigned) {
    std::vector<bool> in(g.num_nodes(), false);
    in[q] = true;
    for (auto a : g.neighbors(q)) {
        if (assigned[a]) {
            in[a] = true;
        }
        for (auto b : g.neighbors(a)) {
            if (assigned[b]) {
                in[b] = true;
            }
        }
    }
    Subgraph out;
    for (QubitId v = 0; v < g.num_nodes(); v++) {
        if (in[v]) {
            out.nodes.push_back(v);
        }
    }
    for (auto [a, b] : g.pairs()) {
        if (in[a] && in[b]) {
            out.pairs.push_back({a, b});
        }
    }
    return out;
}

std::vector<QubitId> traversal_order(const Placement &p, const ConnectivityGraph &g) {
    size_t n = g.num_nodes();
    std::vector<bool> seen(n, false);
    std::vector<QubitId> order;
    while (order.size() < n) {
        // Collect the component of the lowest unvisited qubit, then start
        // from its centre.
        QubitId root = 0;
        while (seen[root]) {
            root++;
        }
        std::vector<QubitId> component{root};
        std::vector<bool> in_component(n, false);
        in_component[root] = true;
        for (size_t head = 0; head < component.size(); head++) {
            for (auto nb : g.neighbors(component[head])) {
                if (!in_component[nb]) {
                    in_component[nb] = true;
                    component.push_back(nb);
                }
            }
        }
        std::sort(component.begin(), component.end());
        QubitId start = center_qubit(p, component);
        std::deque<QubitId> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            QubitId v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (auto nb : g.neighbors(v)) {
                if (!seen[nb]) {
                    seen[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
    }
    return order;
}

namespace {

// Shared-noise evaluator for one allocation step. Checks not touching q do
// not depend on the candidate, so their outcome is computed once per trial.
class StepEvaluator {
   public:
    StepEvaluator(QubitId q, const ConnectivityGraph &g, const std::vector<double> &freq_mhz,
                  const std::vector<bool> &assigned, const SimParams &params, const RuleSet &rules,
                  size_t trials)
        : rules_(rules), trials_(trials) {
        auto region = local_region(q, g, assigned);
        size_t r = region.nodes.size();
        std::vector<int> local(g.num_nodes(), -1);
        for (size_t k = 0; k < r; k++) {
            local[region.nodes[k]] = int(k);
        }
        q_local_ = QubitId(local[q]);
        std::vector<QubitPair> local_pairs;
        for (auto [a, b] : region.pairs) {
            local_pairs.push_back({QubitId(local[a]), QubitId(local[b])});
        }
        auto checks = enumerate_checks(ConnectivityGraph(r, std::move(local_pairs)));
        for (auto pr : checks.pairs) {
            auto &dst = (pr.first == q_local_ || pr.second == q_local_) ? with_q_ : without_q_;
            dst.pairs.push_back(pr);
        }
        for (auto t : checks.triples) {
            auto &dst = (t.j == q_local_ || t.k == q_local_ || t.i == q_local_) ? with_q_ : without_q_;
            dst.triples.push_back(t);
        }

        width_ = r;
        samples_.resize(trials * r);
        others_ok_.resize(trials);
        std::mt19937_64 rng(substream_seed(params.seed, q));
        std::normal_distribution<double> noise(0.0, params.sigma_mhz);
        for (size_t t = 0; t < trials; t++) {
            double *row = &samples_[t * r];
            for (size_t k = 0; k < r; k++) {
                double base = k == q_local_ ? 0.0 : freq_mhz[region.nodes[k]];
                row[k] = base + (params.sigma_mhz > 0 ? noise(rng) : 0.0);
            }
            others_ok_[t] = !check_collision({row, r}, without_q_, rules_);
        }
    }

    size_t successes(double candidate_mhz) {
        size_t ok = 0;
        std::vector<double> row(width_);
        for (size_t t = 0; t < trials_; t++) {
            if (!others_ok_[t]) {
                continue;
            }
            std::copy_n(&samples_[t * width_], width_, row.begin());
            row[q_local_] += candidate_mhz;
            ok += check_collision(row, with_q_, rules_) ? 0 : 1;
        }
        return ok;
    }

   private:
    const RuleSet &rules_;
    size_t trials_;
    size_t width_ = 0;
    QubitId q_local_ = 0;
    CollisionChecks with_q_;
    CollisionChecks without_q_;
    std::vector<double> samples_;
    std::vector<char> others_ok_;
};

}  // namespace

size_t local_successes(QubitId q, double candidate_mhz, const ConnectivityGraph &g,
                       const std::vector<double> &freq_mhz, const std::vector<bool> &assigned,
                       const SimParams &params, const RuleSet &rules) {
    StepEvaluator eval(q, g, freq_mhz, assigned, params, rules, params.trials);
    return eval.successes(candidate_mhz);
}

FrequencyPlan allocate(const Placement &p, const ConnectivityGraph &g, const SimParams &params,
                       const RuleSet &rules, const AllocationOptions &options,
                       std::vector<AllocationStep> *trace) {
    if (p.num_qubits() != g.num_nodes() || !p.complete()) {
        throw std::invalid_argument("allocation needs a complete placement matching the graph");
    }
    size_t n = g.num_nodes();
    FrequencyPlan plan{std::vector<double>(n, 0.0)};
    std::vector<bool> assigned(n, false);
    auto candidates = candidate_frequencies();
    SimParams step_params = params;
    step_params.trials = options.trials_per_candidate;

    for (auto q : traversal_order(p, g)) {
        bool starts_component = std::none_of(g.neighbors(q).begin(), g.neighbors(q).end(),
                                             [&](QubitId nb) { return assigned[nb]; });
        if (starts_component) {
            plan.freq_mhz[q] = kCenterFrequencyMhz;
            assigned[q] = true;
            if (trace) {
                trace->push_back({q, {}, kCenterFrequencyMhz});
            }
            continue;
        }
        StepEvaluator eval(q, g, plan.freq_mhz, assigned, step_params, rules,
                           options.trials_per_candidate);
        AllocationStep step{q, {}, candidates.front()};
        size_t best = 0;
        for (size_t c = 0; c < candidates.size(); c++) {
            size_t ok = eval.successes(candidates[c]);
            step.successes.push_back(ok);
            if (c == 0 || ok > best) {
                best = ok;
                step.chosen_mhz = candidates[c];
            }
        }
        plan.freq_mhz[q] = step.chosen_mhz;
        assigned[q] = true;
        if (trace) {
            trace->push_back(std::move(step));
        }
    }
    return plan;
}

FrequencyPlan five_frequency_plan(const Placement &p) {
    auto qubits = p.placed_qubits();
    int32_t xmin = std::numeric_limits<int32_t>::max();
    int32_t xmax = std::numeric_limits<int32_t>::min();
    int32_t ymax = std::numeric_limits<int32_t>::min();
    for (auto q : qubits) {
        xmin = std::min(xmin, p.position(q).x);
        xmax = std::max(xmax, p.position(q).x);
        ymax = std::max(ymax, p.position(q).y);
    }
    auto ladder = five_frequencies();
    FrequencyPlan plan{std::vector<double>(p.num_qubits(), 0.0)};
    if (qubits.empty()) {
        return plan;
    }
    // Row-major cell index over the bounding box, top row first.
    int64_t width = int64_t{xmax} - xmin + 1;
    for (auto q : qubits) {
        int64_t col = p.position(q).x - xmin;
        int64_t row = ymax - p.position(q).y;
        plan.freq_mhz[q] = ladder[size_t((row * width + col) % 5)];
    }
    return plan;
}

}  // namespace qarch
