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

#ifndef KEMPE_MINOR_HPP
#define KEMPE_MINOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "kempe/clique.hpp"

namespace kempe {

/// K_q minor model: q disjoint connected branch sets, one seeded per color,
/// pairwise joined by at least one edge.
struct minor_model {
    int q = 0;
    std::vector<std::vector<vertex>> branch_sets;  // index color-1, each sorted
    std::vector<vertex> seeds;                     // seeds[c-1] = clique anchor of color c
};

struct minor_report {
    bool valid = false;
    std::vector<std::string> violations;
    int hadwiger_lower_bound = 0;  // q when valid, 0 otherwise
};

inline constexpr long long default_minor_node_limit = 10'000;

/// Grows branch sets from the clique anchors along backbone interiors.
/// Sound but incomplete: pairs are processed shortest backbone first; a pair
/// whose sets already touch needs nothing, otherwise the unassigned interior
/// of its backbone is split, a prefix joining the i-side set and the suffix
/// the j-side set, at the first split that creates adjacency. Backtracking
/// over split points and pair order is bounded by `node_limit` nodes.
/// An empty result means the heuristic failed, never that no minor exists.
std::optional<minor_model> grow_minor_from_clique(const graph& g, const coloring& c,
                                                  const kempe_clique& clique,
                                                  long long node_limit = default_minor_node_limit);

/// Checks disjointness, per-set connectivity, seed membership and pairwise
/// adjacency. Every failure is reported as a violation; a valid model
/// certifies a K_q minor and hence Hadwiger number >= q.
minor_report verify_minor_model(const graph& g, const minor_model& model);

}  // namespace kempe

#endif
