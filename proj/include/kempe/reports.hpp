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

#ifndef KEMPE_REPORTS_HPP
#define KEMPE_REPORTS_HPP

#include <string>

#include <json.hpp>

#include "kempe/clique.hpp"
#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/minor.hpp"
#include "kempe/search.hpp"

namespace kempe {

// All report builders use ordered_json: field order is part of the report
// contract (identical runs must serialize byte-identically).
using json = nlohmann::ordered_json;

inline constexpr const char* report_schema_version = "1";

json graph_json(const graph& g, const std::string& name);
json coloring_json(const coloring& c);          // 1-based colors, indexed by vertex id
json chain_json(const kempe_chain& chain);
json backbone_json(const backbone& bb);
json clique_json(const kempe_clique& clique);
json immersion_json(const immersion_report& report);
json minor_json(const minor_model& model, const minor_report& report);
json stats_json(const search_stats& stats, search_strategy strategy);

const char* status_name(search_status status);

/// {schema_version, graph, q, strategy, seed, workers, status, coloring?,
///  clique?, stats}
json search_report_json(const graph& g, const std::string& graph_name, int q,
                        search_strategy strategy, std::uint64_t seed, int workers,
                        const search_outcome& outcome);

/// Parses a coloring serialized as a JSON array of 1-based colors. The
/// palette defaults to the maximum color unless q_override is larger.
coloring coloring_from_json(const json& j, int q_override = 0);
coloring load_coloring_file(const std::string& path, int q_override = 0);

kempe_clique clique_from_json(const json& j);

}  // namespace kempe

#endif
