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

#ifndef KEMPE_SEARCH_HPP
#define KEMPE_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "kempe/clique.hpp"
#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

enum class search_strategy { exhaustive, kempe_walk };

struct search_budget {
    long long max_colorings = 10'000'000;  // exhaustive: canonical colorings examined
    long long max_swaps = 1'000'000;       // kempe-walk: swap steps across all restarts
    int max_restarts = 64;                 // kempe-walk: seeded restart count
};

struct search_stats {
    long long colorings_examined = 0;
    long long swaps = 0;
    int restarts = 0;
    long long budget_consumed = 0;  // colorings (exhaustive) or swaps (kempe-walk)
};

enum class search_status { found, proven_nonexistent, budget_exhausted };

struct search_outcome {
    search_status status = search_status::budget_exhausted;
    std::optional<coloring> found_coloring;
    std::optional<kempe_clique> clique;
    search_stats stats;
};

/// Searches for a correct q-coloring of g.
///
/// exhaustive: walks the canonical proper-coloring stream and tests each
/// coloring for a Kempe clique. "First hit" means first in stream order.
/// The stream is split at a fixed first-branching depth into subtree tasks;
/// each subtree examines at most ceil(max_colorings / subtree count)
/// colorings, so both the work bound and the reported statistics are
/// independent of scheduling and worker count. ProvenNonexistent is returned
/// only when every subtree was enumerated to completion without a hit.
///
/// kempe-walk: up to max_restarts independent seeded restarts, each owning
/// ceil(max_swaps / max_restarts) swap steps. A restart begins from a
/// randomized DSATUR q-coloring (repaired to use all q colors when possible),
/// then repeatedly applies a random Kempe swap (uniform over color pairs,
/// then over that pair's chains) and tests the result. Steps that land on an
/// already-visited canonical fingerprint do not move the walk; 50 * |V| such
/// stale steps in a row end the restart. The lowest restart index that finds
/// a clique wins, and reported statistics cover restarts 0..winner only, so
/// the outcome is identical however many workers run.
search_outcome search_correct_coloring(const graph& g, int q, search_strategy strategy,
                                       const search_budget& budget, std::uint64_t seed,
                                       int workers = 0);

/// Single-threaded reference with identical semantics; kept for testing and
/// benchmarked against the parallel kernels.
search_outcome search_correct_coloring_serial(const graph& g, int q, search_strategy strategy,
                                              const search_budget& budget, std::uint64_t seed);

/// Stagnation limit of the kempe-walk: this many consecutive stale steps end
/// a restart.
long long walk_stagnation_limit(const graph& g);

}  // namespace kempe

#endif
