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

#include "qarch/yield.h"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "qarch/seeding.h"

namespace qarch {

CollisionChecks enumerate_checks(const ConnectivityGraph &g) {
    CollisionChecks out;
    for (auto [a, b] : g.pairs()) {
        out.pairs.push_back({a, b});
        out.pairs.push_back({b, a});
    }
    for (QubitId j = 0; j < g.num_nodes(); j++) {
        const auto &nbrs = g.neighbors(j);
        for (size_t x = 0; x < nbrs.size(); x++) {
            for (size_t y = x + 1; y < nbrs.size(); y++) {
                out.triples.push_back({j, nbrs[x], nbrs[y]});
            }
        }
    }
    return out;
}

std::vector<double> sample_fabrication(std::span<const double> design_mhz, double sigma_mhz,
                                       std::mt19937_64 &rng) {
    std::vector<double> out(design_mhz.begin(), design_mhz.end());
    if (sigma_mhz == 0) {
        return out;
    }
    std::normal_distribution<double> noise(0.0, sigma_mhz);
    for (auto &f : out) {
        f += noise(rng);
    }
    return out;
}

bool check_collision(std::span<const double> f, const CollisionChecks &checks,
                     const RuleSet &rules) {
    const double delta = rules.delta_mhz;
    for (const auto &r : rules.rules) {
        if (r.scope == RuleScope::pair) {
            for (auto [j, k] : checks.pairs) {
                if (r.collides(f[j], f[k], 0.0, delta)) {
                    return true;
                }
            }
        } else {
            for (const auto &t : checks.triples) {
                if (r.collides(f[t.j], f[t.k], f[t.i], delta) ||
                    r.collides(f[t.j], f[t.i], f[t.k], delta)) {
                    return true;
                }
            }
        }
    }
    return false;
}

YieldEstimate simulate_yield(const ConnectivityGraph &g, std::span<const double> design_mhz,
                             const SimParams &params, const RuleSet &rules) {
    if (params.trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (params.sigma_mhz < 0) {
        throw std::invalid_argument("sigma must be non-negative");
    }
    if (design_mhz.size() != g.num_nodes()) {
        throw std::invalid_argument("one design frequency per qubit is required");
    }
    auto checks = enumerate_checks(g);

    auto run_range = [&](size_t begin, size_t end) {
        size_t ok = 0;
        for (size_t t = begin; t < end; t++) {
            std::mt19937_64 rng(substream_seed(params.seed, t));
            auto postfab = sample_fabrication(design_mhz, params.sigma_mhz, rng);
            ok += check_collision(postfab, checks, rules) ? 0 : 1;
        }
        return ok;
    };

    size_t threads = std::clamp<size_t>(params.threads, 1, params.trials);
    size_t successes = 0;
    if (threads == 1) {
        successes = run_range(0, params.trials);
    } else {
        std::vector<size_t> partial(threads, 0);
        std::vector<std::thread> pool;
        for (size_t w = 0; w < threads; w++) {
            size_t begin = params.trials * w / threads;
            size_t end = params.trials * (w + 1) / threads;
            pool.emplace_back([&, w, begin, end] { partial[w] = run_range(begin, end); });
        }
        for (auto &t : pool) {
            t.join();
        }
        for (auto p : partial) {
            successes += p;
        }
    }
    return {double(successes) / double(params.trials), successes, params.trials};
}

}  // namespace qarch
