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

#include <set>

#include "kempe/enumerate.hpp"
#include "kempe/generators.hpp"
#include "oracles.hpp"

using namespace kempe;

TEST_CASE("canonical stream on tiny graphs") {
    CHECK(count_canonical_colorings(make_complete(3), 3) == 1);
    CHECK(count_canonical_colorings(make_cycle(4), 2) == 1);
    // Oracle (all 3^5 assignments, filter proper, canonicalize, dedupe): 5.
    CHECK(count_canonical_colorings(make_cycle(5), 3) == 5);
    CHECK(oracles::brute_canonical_count(make_cycle(5), 3) == 5);
}

TEST_CASE("stream yields canonical, proper, distinct colorings") {
    graph g = make_random_gnp(7, 0.4, 9);
    coloring_stream stream(g, 3);
    std::set<std::vector<int>> seen;
    while (auto c = stream.next()) {
        CHECK(c->is_canonical());
        CHECK(is_proper(g, *c));
        CHECK(seen.insert(c->assignment()).second);
    }
    CHECK(static_cast<long long>(seen.size()) == oracles::brute_canonical_count(g, 3));
}

TEST_CASE("empty stream when no proper q-coloring exists") {
    CHECK(count_canonical_colorings(make_complete(4), 3) == 0);
    CHECK(count_canonical_colorings(make_cycle(5), 2) == 0);
}

TEST_CASE("degenerate graphs stream exactly one coloring") {
    CHECK(count_canonical_colorings(graph::from_edges(0, {}), 3) == 1);
    CHECK(count_canonical_colorings(graph::from_edges(2, {}), 1) == 1);
}

TEST_CASE("canonical count times permutation expansions equals labeled count") {
    // A canonical coloring using m of q colors stands for q!/(q-m)! labeled
    // assignments.
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        graph g = make_random_gnp(7, 0.45, 40 + seed);
        for (int q = 2; q <= 4; ++q) {
            coloring_stream stream(g, q);
            long long expanded = 0;
            while (auto c = stream.next()) {
                long long perms = 1;
                for (int m = 0; m < c->colors_used(); ++m)
                    perms *= q - m;
                expanded += perms;
            }
            CHECK(expanded == oracles::brute_proper_assignment_count(g, q));
        }
    }
}

TEST_CASE("prefix streams partition the full stream in order") {
    graph g = make_random_gnp(8, 0.4, 77);
    const int q = 3;
    std::vector<std::vector<int>> full;
    coloring_stream stream(g, q);
    while (auto c = stream.next())
        full.push_back(c->assignment());

    for (int depth : {2, 4, 8}) {
        std::vector<std::vector<int>> stitched;
        for (const auto& prefix : canonical_prefixes(g, q, depth)) {
            coloring_stream completion(g, q, prefix);
            while (auto c = completion.next())
                stitched.push_back(c->assignment());
        }
        CHECK(stitched == full);
    }
}
