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

#include "qarch/rules.h"

#include <fstream>
#include <set>
#include <stdexcept>

#include "qarch_rules_data.h"

namespace qarch {

void RuleSet::validate() const {
    std::set<int> ids;
    for (const auto &r : rules) {
        if (!ids.insert(r.id).second) {
            throw std::invalid_argument("duplicate collision rule id " + std::to_string(r.id));
        }
        if (r.scope == RuleScope::pair && r.fi != 0) {
            throw std::invalid_argument("pair rule " + std::to_string(r.id) + " uses f_i");
        }
        if (r.relation == Relation::near_zero && !(r.threshold_mhz >= 0)) {
            throw std::invalid_argument("rule " + std::to_string(r.id) + " needs a threshold");
        }
    }
}

RuleSet rules_from_json(const nlohmann::json &j) {
    RuleSet out;
    out.delta_mhz = j.value("delta_mhz", -340.0);
    for (const auto &row : j.at("rules")) {
        CollisionRule r;
        r.id = row.at("id").get<int>();
        auto scope = row.at("scope").get<std::string>();
        if (scope == "pair") {
            r.scope = RuleScope::pair;
        } else if (scope == "triple") {
            r.scope = RuleScope::triple;
        } else {
            throw std::invalid_argument("unknown rule scope '" + scope + "'");
        }
        const auto &c = row.at("coeff");
        r.fj = c.value("fj", 0.0);
        r.fk = c.value("fk", 0.0);
        r.fi = c.value("fi", 0.0);
        r.delta = c.value("delta", 0.0);
        auto relation = row.at("relation").get<std::string>();
        if (relation == "near_zero") {
            r.relation = Relation::near_zero;
            r.threshold_mhz = row.at("threshold_mhz").get<double>();
        } else if (relation == "strictly_positive") {
            r.relation = Relation::strictly_positive;
        } else {
            throw std::invalid_argument("unknown rule relation '" + relation + "'");
        }
        out.rules.push_back(r);
    }
    out.validate();
    return out;
}

nlohmann::json rules_to_json(const RuleSet &rules) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : rules.rules) {
        nlohmann::json row = {
            {"id", r.id},
            {"scope", r.scope == RuleScope::pair ? "pair" : "triple"},
            {"coeff", {{"fj", r.fj}, {"fk", r.fk}, {"fi", r.fi}, {"delta", r.delta}}},
            {"relation", r.relation == Relation::near_zero ? "near_zero" : "strictly_positive"},
        };
        if (r.relation == Relation::near_zero) {
            row["threshold_mhz"] = r.threshold_mhz;
        }
        rows.push_back(row);
    }
    return {{"delta_mhz", rules.delta_mhz}, {"rules", rows}};
}

RuleSet load_rules(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open rules file '" + path + "'");
    }
    return rules_from_json(nlohmann::json::parse(in));
}

const RuleSet &default_rules() {
    static const RuleSet rules = rules_from_json(nlohmann::json::parse(kDefaultRulesJson));
    return rules;
}

RuleSet nearest_neighbor_only_rules() {
    RuleSet out;
    out.delta_mhz = default_rules().delta_mhz;
    for (const auto &r : default_rules().rules) {
        if (r.id == 1) {
            out.rules.push_back(r);
        }
    }
    return out;
}

}  // namespace qarch
