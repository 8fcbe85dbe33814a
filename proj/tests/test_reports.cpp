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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kempe/corpus.hpp"
#include "kempe/dot_export.hpp"
#include "kempe/graph_io.hpp"
#include "kempe/generators.hpp"
#include "kempe/reports.hpp"
#include "kempe/search.hpp"

using namespace kempe;

TEST_CASE("coloring JSON round trip") {
    coloring c(4, {1, 2, 1, 4});
    json j = coloring_json(c);
    CHECK(j.dump() == "[1,2,1,4]");
    coloring back = coloring_from_json(j);
    CHECK(back.assignment() == c.assignment());
    CHECK(back.palette_size() == 4);
    CHECK(coloring_from_json(j, 6).palette_size() == 6);
    CHECK_THROWS(coloring_from_json(json::parse("[0,1]")));
    CHECK_THROWS(coloring_from_json(json::parse("{\"a\":1}")));
}

TEST_CASE("clique JSON round trip") {
    graph c5 = make_cycle(5);
    auto clique = find_kempe_clique(c5, coloring(3, {1, 2, 1, 2, 3}));
    REQUIRE(clique.has_value());
    json j = clique_json(*clique);
    kempe_clique back = clique_from_json(j);
    CHECK(back.q == clique->q);
    CHECK(back.anchors == clique->anchors);
    REQUIRE(back.backbones.size() == clique->backbones.size());
    for (std::size_t i = 0; i < back.backbones.size(); ++i)
        CHECK(back.backbones[i].path == clique->backbones[i].path);
    CHECK(verify_strong_immersion(c5, back).strong());
}

TEST_CASE("identical runs serialize byte-identically") {
    graph g = make_catlin(2, 2);
    auto run = [&]() {
        search_outcome out =
            search_correct_coloring(g, 6, search_strategy::exhaustive, {}, 9, 2);
        return search_report_json(g, "catlin(2,2)", 6, search_strategy::exhaustive, 9, 2, out)
            .dump(2);
    };
    std::string a = run();
    std::string b = run();
    CHECK(a == b);
    CHECK(a.find("\"schema_version\": \"1\"") != std::string::npos);
    CHECK(a.find("\"status\": \"Found\"") != std::string::npos);
}

TEST_CASE("dot export paints classes and ribbons") {
    graph c5 = make_cycle(5);
    coloring c(3, {1, 2, 1, 2, 3});
    auto clique = find_kempe_clique(c5, c);
    REQUIRE(clique.has_value());
    std::ostringstream out;
    write_dot(out, c5, &c, &*clique);
    std::string dot = out.str();
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("#7d3c98") != std::string::npos);  // backbone ribbon
    CHECK(dot.find("shape=box") != std::string::npos);  // anchors

    auto model = grow_minor_from_clique(c5, c, *clique);
    REQUIRE(model.has_value());
    std::ostringstream mout;
    write_dot_minor(mout, c5, *model);
    CHECK(mout.str().find("subgraph cluster_0") != std::string::npos);
}

TEST_CASE("corpus: koester entry loads and validates") {
    corpus_entry entry;
    graph g = load_corpus_graph("koester", &entry);
    CHECK(entry.n == 40);
    CHECK(g.vertex_count() == 40);
    CHECK(g.is_regular(4));
    CHECK(corpus_check("koester").empty());
    CHECK_THROWS_AS(load_corpus_graph("nonesuch"), parse_error);
}

TEST_CASE("corpus: tampered bytes fail the checksum") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "kempe_corpus_tamper";
    fs::create_directories(dir);
    {
        std::ifstream manifest(corpus_dir() + "/manifest.json");
        std::ofstream(dir / "manifest.json") << manifest.rdbuf();
        std::ifstream graph_file(corpus_dir() + "/koester.col");
        std::ostringstream bytes;
        bytes << graph_file.rdbuf();
        std::string tampered = bytes.str() + "c tampered\n";
        std::ofstream(dir / "koester.col") << tampered;
    }
    setenv("KEMPE_CORPUS_DIR", dir.string().c_str(), 1);
    CHECK_THROWS_AS(load_corpus_graph("koester"), parse_error);
    auto failures = corpus_check("koester");
    REQUIRE_FALSE(failures.empty());
    CHECK(failures.front().find("checksum") != std::string::npos);
    unsetenv("KEMPE_CORPUS_DIR");
    CHECK(corpus_check("koester").empty());
}
