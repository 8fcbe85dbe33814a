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

#include <sstream>

#include "kempe/generators.hpp"
#include "kempe/graph.hpp"
#include "kempe/graph_io.hpp"

using namespace kempe;

TEST_CASE("graph construction validates simplicity") {
    CHECK_THROWS_AS(graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(graph::from_edges(2, {{0, 2}}), std::invalid_argument);

    int dups = -1;
    graph g = graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}}, &dups);
    CHECK(dups == 1);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("neighbor lists are sorted and symmetric") {
    graph g = graph::from_edges(5, {{3, 0}, {3, 1}, {3, 4}, {1, 0}});
    auto nbrs = g.neighbors(3);
    CHECK(std::vector<vertex>(nbrs.begin(), nbrs.end()) == std::vector<vertex>{0, 1, 4});
    for (vertex u = 0; u < 5; ++u)
        for (vertex v : g.neighbors(u))
            CHECK(g.adjacent(v, u));
}

TEST_CASE("degree sum equals twice the edge count") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        graph g = make_random_gnp(11, 0.4, seed);
        int sum = 0;
        for (vertex v = 0; v < g.vertex_count(); ++v)
            sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("dimacs parsing: triangle") {
    std::istringstream in("c a comment\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    graph g = parse_dimacs(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 2));
}

TEST_CASE("dimacs parsing rejects malformed input") {
    std::istringstream selfloop("p edge 3 1\ne 2 2\n");
    CHECK_THROWS_AS(parse_dimacs(selfloop), parse_error);
    std::istringstream no_problem("e 1 2\n");
    CHECK_THROWS_AS(parse_dimacs(no_problem), parse_error);
    std::istringstream out_of_range("p edge 2 1\ne 1 5\n");
    CHECK_THROWS_AS(parse_dimacs(out_of_range), parse_error);
    std::istringstream junk("p edge 2 1\nx 1 2\n");
    CHECK_THROWS_AS(parse_dimacs(junk), parse_error);
}

TEST_CASE("dimacs parsing tolerates duplicates with a warning") {
    std::istringstream in("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
    io_warnings w;
    graph g = parse_dimacs(in, &w);
    CHECK(g.edge_count() == 2);
    CHECK(w.duplicate_edges == 1);
}

TEST_CASE("edge list parsing") {
    std::istringstream in("0 1\n1 2  # comment\n\n2 3\n");
    graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    std::istringstream selfloop("2 2\n");
    CHECK_THROWS_AS(parse_edge_list(selfloop), parse_error);
}

TEST_CASE("serialize round-trips to an identical graph") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        graph g = make_random_gnp(9, 0.35, seed);
        std::istringstream in(dimacs_string(g));
        graph back = parse_dimacs(in);
        CHECK(back == g);
        CHECK(back.fingerprint() == g.fingerprint());
    }
}

TEST_CASE("connectivity") {
    CHECK(make_path(6).connected());
    CHECK_FALSE(graph::from_edges(4, {{0, 1}, {2, 3}}).connected());
    CHECK(graph::from_edges(0, {}).connected());
}
