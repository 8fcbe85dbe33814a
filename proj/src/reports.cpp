// Copyright 2026 The kempelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kempe/reports.hpp"

#include <fstream>

#include "kempe/graph_io.hpp"

namespace kempe {

json graph_json(const graph& g, const std::string& name) {
    json j;
    j["name"] = name;
    j["n"] = g.vertex_count();
    j["edges"] = g.edge_count();
    return j;
}

json coloring_json(const coloring& c) { return json(c.assignment()); }

json chain_json(const kempe_chain& chain) {
    json j;
    j["pair"] = {chain.pair.i, chain.pair.j};
    j["members"] = chain.members;
    return j;
}

json backbone_json(const backbone& bb) {
    json j;
    j["pair"] = {bb.pair.i, bb.pair.j};
    j["anchors"] = {bb.anchor_i, bb.anchor_j};
    j["path"] = bb.path;
    j["length"] = bb.length();
    return j;
}

json clique_json(const kempe_clique& clique) {
    json j;
    j["q"] = clique.q;
    j["anchors"] = clique.anchors;
    j["backbones"] = json::array();
    for (const backbone& bb : clique.backbones)
        j["backbones"].push_back(backbone_json(bb));
    return j;
}

json immersion_json(const immersion_report& report) {
    json j;
    j["edge_disjoint"] = report.edge_disjoint;
    j["anchors_internal_free"] = report.anchors_internal_free;
    j["violations"] = report.violations;
    return j;
}

json minor_json(const minor_model& model, const minor_report& report) {
    json j;
    j["q"] = model.q;
    j["branch_sets"] = model.branch_sets;
    j["seeds"] = model.seeds;
    j["valid"] = report.valid;
    j["violations"] = report.violations;
    j["hadwiger_lower_bound"] = report.hadwiger_lower_bound;
    return j;
}

const char* status_name(search_status status) {
    switch (status) {
        case search_status::found:
            return "Found";
        case search_status::proven_nonexistent:
            return "ProvenNonexistent";
        case search_status::budget_exhausted:
            return "BudgetExhausted";
    }
    return "?";
}

json stats_json(const search_stats& stats, search_strategy strategy) {
    json j;
    j["colorings_examined"] = stats.colorings_examined;
    j["swaps"] = stats.swaps;
    if (strategy == search_strategy::kempe_walk)
        j["restarts"] = stats.restarts;
    j["budget_consumed"] = stats.budget_consumed;
    return j;
}

json search_report_json(const graph& g, const std::string& graph_name, int q,
                        search_strategy strategy, std::uint64_t seed, int workers,
                        const search_outcome& outcome) {
    json j;
    j["schema_version"] = report_schema_version;
    j["graph"] = graph_json(g, graph_name);
    j["q"] = q;
    j["strategy"] = strategy == search_strategy::exhaustive ? "exhaustive" : "kempe-walk";
    j["seed"] = seed;
    j["workers"] = workers;
    j["status"] = status_name(outcome.status);
    if (outcome.found_coloring)
        j["coloring"] = coloring_json(*outcome.found_coloring);
    if (outcome.clique)
        j["clique"] = clique_json(*outcome.clique);
    j["stats"] = stats_json(outcome.stats, strategy);
    return j;
}

coloring coloring_from_json(const json& j, int q_override) {
    if (!j.is_array())
        throw parse_error("coloring: expected a JSON array of 1-based colors");
    std::vector<int> assign;
    int max_color = 0;
    for (const auto& item : j) {
        if (!item.is_number_integer())
            throw parse_error("coloring: entries must be integers");
        int c = item.get<int>();
        if (c < 1)
            throw parse_error("coloring: colors are 1-based");
        max_color = std::max(max_color, c);
        assign.push_back(c);
    }
    return coloring(std::max(max_color, q_override), std::move(assign));
}

coloring load_coloring_file(const std::string& path, int q_override) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path);
    json j = json::parse(in);
    return coloring_from_json(j, q_override);
}

kempe_clique clique_from_json(const json& j) {
    kempe_clique clique;
    clique.q = j.at("q").get<int>();
    clique.anchors = j.at("anchors").get<std::vector<vertex>>();
    for (const auto& bj : j.at("backbones")) {
        auto pair = bj.at("pair").get<std::vector<int>>();
        auto anchors = bj.at("anchors").get<std::vector<vertex>>();
        if (pair.size() != 2 || anchors.size() != 2)
            throw parse_error("clique: malformed backbone record");
        backbone bb{color_pair(pair[0], pair[1]), anchors[0], anchors[1],
                    bj.at("path").get<std::vector<vertex>>()};
        clique.backbones.push_back(std::move(bb));
    }
    return clique;
}

}  // namespace kempe
