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

#include <doctest.h>

#include "kempe/clique.hpp"
#include "kempe/generators.hpp"
#include "kempe/search.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {
bool same_outcome(const search_outcome& a, const search_outcome& b) {
    if (a.status != b.status)
        return false;
    if (a.found_coloring.has_value() != b.found_coloring.has_value())
        return false;
    if (a.found_coloring && !(*a.found_coloring == *b.found_coloring))
        return false;
    return a.stats.colorings_examined == b.stats.colorings_examined &&
           a.stats.swaps == b.stats.swaps && a.stats.restarts == b.stats.restarts &&
           a.stats.budget_consumed == b.stats.budget_consumed;
}
}  // namespace

TEST_CASE("exhaustive search on complete(4) finds the first canonical coloring") {
    search_outcome out =
        search_correct_coloring(make_complete(4), 4, search_strategy::exhaustive, {}, 0);
    CHECK(out.status == search_status::found);
    CHECK(out.stats.colorings_examined == 1);
    REQUIRE(out.found_coloring.has_value());
    CHECK(out.found_coloring->assignment() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("exhaustive search proves nonexistence when no proper coloring exists") {
    search_outcome out =
        search_correct_coloring(make_complete(4), 3, search_strategy::exhaustive, {}, 0);
    CHECK(out.status == search_status::proven_nonexistent);
    CHECK(out.stats.colorings_examined == 0);
}

TEST_CASE("degenerate searches") {
    // edgeless graph at q=1: the first (only) canonical coloring is correct
    search_outcome lone =
        search_correct_coloring(graph::from_edges(3, {}), 1, search_strategy::exhaustive, {}, 0);
    CHECK(lone.status == search_status::found);
    // q greater than n can never use all colors
    search_outcome wide =
        search_correct_coloring(make_path(2), 3, search_strategy::exhaustive, {}, 0);
    CHECK(wide.status == search_status::proven_nonexistent);
}

TEST_CASE("odd cycles are correctly colorable at chi") {
    for (int n : {5, 7, 9}) {
        search_outcome out =
            search_correct_coloring(make_cycle(n), 3, search_strategy::exhaustive, {}, 0);
        CHECK(out.status == search_status::found);
        REQUIRE(out.clique.has_value());
        CHECK(verify_strong_immersion(make_cycle(n), *out.clique).strong());
    }
}

TEST_CASE("exhaustive matches the uncanonicalized brute-force oracle") {
    int agreements = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        graph g = make_random_gnp(6, 0.5, 9900 + seed);
        if (!g.connected())
            continue;
        for (int q = 2; q <= 4; ++q) {
            search_outcome out = search_correct_coloring(g, q, search_strategy::exhaustive, {}, 0);
            bool oracle = oracles::brute_correct_coloring_exists(g, q);
            CHECK((out.status == search_status::found) == oracle);
            ++agreements;
        }
    }
    CHECK(agreements >= 20);
}

TEST_CASE("serial reference and parallel kernels agree: exhaustive") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        graph g = make_random_gnp(7, 0.45, 31000 + seed);
        for (int q = 2; q <= 4; ++q) {
            search_outcome serial =
                search_correct_coloring_serial(g, q, search_strategy::exhaustive, {}, 5);
            for (int workers : {1, 2, 4}) {
                search_outcome par =
                    search_correct_coloring(g, q, search_strategy::exhaustive, {}, 5, workers);
                CHECK(same_outcome(serial, par));
            }
        }
    }
}

TEST_CASE("serial reference and parallel kernels agree: kempe-walk") {
    search_budget budget;
    budget.max_swaps = 4000;
    budget.max_restarts = 8;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        graph g = make_random_gnp(8, 0.5, 52000 + seed);
        const int q = 3;
        search_outcome serial =
            search_correct_coloring_serial(g, q, search_strategy::kempe_walk, budget, seed);
        for (int workers : {1, 2, 4}) {
            search_outcome par =
                search_correct_coloring(g, q, search_strategy::kempe_walk, budget, seed, workers);
            CHECK(same_outcome(serial, par));
        }
    }
}

TEST_CASE("kempe-walk with a fixed seed reproduces stats exactly") {
    graph g = make_catlin(2, 2);
    search_budget budget;
    budget.max_swaps = 2000;
    budget.max_restarts = 4;
    search_outcome a = search_correct_coloring(g, 5, search_strategy::kempe_walk, budget, 77, 2);
    search_outcome b = search_correct_coloring(g, 5, search_strategy::kempe_walk, budget, 77, 2);
    CHECK(same_outcome(a, b));
    // catlin(2,2) has no correct 5-coloring, so the walk must exhaust.
    CHECK(a.status == search_status::budget_exhausted);
}

TEST_CASE("kempe-walk finds correct colorings on easy instances") {
    search_budget budget;
    budget.max_swaps = 20000;
    budget.max_restarts = 16;
    search_outcome out =
        search_correct_coloring(make_cycle(5), 3, search_strategy::kempe_walk, budget, 1);
    CHECK(out.status == search_status::found);
    REQUIRE(out.clique.has_value());
    CHECK(verify_strong_immersion(make_cycle(5), *out.clique).strong());
}

TEST_CASE("exhaustive budget exhaustion is reported, deterministically") {
    search_budget tiny;
    tiny.max_colorings = 3;
    graph g = make_random_gnp(9, 0.25, 4);
    search_outcome serial =
        search_correct_coloring_serial(g, 5, search_strategy::exhaustive, tiny, 0);
    for (int workers : {1, 2, 4}) {
        search_outcome par = search_correct_coloring(g, 5, search_strategy::exhaustive, tiny, 0, workers);
        CHECK(same_outcome(serial, par));
    }
    // With a 3-coloring cap on this instance the stream cannot finish and a
    // correct coloring cannot be certified either way.
    CHECK((serial.status == search_status::budget_exhausted ||
           serial.status == search_status::found));
}

TEST_CASE("found cliques pass strong-immersion verification") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        graph g = make_random_gnp(8, 0.5, 77000 + seed);
        for (int q = 2; q <= 4; ++q) {
            search_outcome out = search_correct_coloring(g, q, search_strategy::exhaustive, {}, 0);
            if (out.status == search_status::found) {
                REQUIRE(out.clique.has_value());
                CHECK(verify_strong_immersion(g, *out.clique).strong());
                CHECK(is_proper(g, *out.found_coloring));
                CHECK(out.found_coloring->uses_all_colors());
            }
        }
    }
}
