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

#ifndef KEMPE_CHROMATIC_HPP
#define KEMPE_CHROMATIC_HPP

#include <cstdint>
#include <stdexcept>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Raised when the exact search would exceed its node budget. Exactness is
/// never silently degraded to a heuristic answer.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct chromatic_result {
    int k = 0;
    coloring witness;  // proper k-coloring in canonical form
};

inline constexpr long long default_chi_node_budget = 100'000'000;

/// Exact chromatic number with witness. Branch and bound over canonical
/// colorings: a greedy clique gives the lower bound, DSATUR the upper bound,
/// and k-colorability decisions close the gap from below. Deterministic for
/// a fixed graph. Throws budget_exceeded past `node_budget` search nodes.
chromatic_result chromatic_number(const graph& g, long long node_budget = default_chi_node_budget);

/// Saturation-degree greedy coloring. Ties on saturation fall back to degree
/// then lowest id, so the plain call is deterministic. The seeded overload
/// breaks ties at random for walk restarts; it may use more colors than the
/// deterministic one.
coloring dsatur(const graph& g);
coloring dsatur_randomized(const graph& g, std::uint64_t seed);

/// Greedy clique heuristic (seeded from each of the top-degree vertices);
/// returns the best clique found. Lower-bounds the chromatic number.
std::vector<vertex> greedy_clique(const graph& g);

/// True iff g admits a proper coloring with at most k colors; pure decision
/// form used by chromatic_number and exposed for tests.
bool k_colorable(const graph& g, int k, long long node_budget = default_chi_node_budget);

}  // namespace kempe

#endif
