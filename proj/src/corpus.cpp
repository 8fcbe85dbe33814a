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

#include "kempe/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kempe/chromatic.hpp"
#include "kempe/fnv.hpp"
#include "kempe/graph_io.hpp"

namespace kempe {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string file_checksum(const std::string& bytes) {
    fnv1a h;
    h.mix_bytes(bytes);
    return to_hex(h.value());
}

}  // namespace

std::string corpus_dir() {
    if (const char* env = std::getenv("KEMPE_CORPUS_DIR"))
        return env;
#ifdef KEMPE_DATA_DIR
    return KEMPE_DATA_DIR;
#else
    return "data";
#endif
}

std::vector<corpus_entry> corpus_manifest() {
    const std::string path = corpus_dir() + "/manifest.json";
    nlohmann::json manifest = nlohmann::json::parse(read_file(path));
    std::vector<corpus_entry> entries;
    for (auto& [name, spec] : manifest.items()) {
        corpus_entry e;
        e.name = name;
        e.file = spec.at("file").get<std::string>();
        e.checksum = spec.at("checksum").get<std::string>();
        e.n = spec.at("n").get<int>();
        if (spec.contains("regular_degree"))
            e.regular_degree = spec.at("regular_degree").get<int>();
        if (spec.contains("chi"))
            e.chi = spec.at("chi").get<int>();
        entries.push_back(std::move(e));
    }
    return entries;
}

graph load_corpus_graph(const std::string& name, corpus_entry* entry_out) {
    std::vector<corpus_entry> entries = corpus_manifest();
    const corpus_entry* entry = nullptr;
    for (const auto& e : entries)
        if (e.name == name)
            entry = &e;
    if (!entry)
        throw parse_error("unknown corpus name: " + name);
    if (entry_out)
        *entry_out = *entry;

    const std::string bytes = read_file(corpus_dir() + "/" + entry->file);
    if (file_checksum(bytes) != entry->checksum)
        throw parse_error("corpus " + name + ": checksum mismatch (file corrupted?)");
    std::istringstream in(bytes);
    graph g = parse_dimacs(in);
    if (g.vertex_count() != entry->n)
        throw parse_error("corpus " + name + ": expected n=" + std::to_string(entry->n) +
                          ", file has " + std::to_string(g.vertex_count()));
    if (entry->regular_degree && !g.is_regular(*entry->regular_degree))
        throw parse_error("corpus " + name + ": not " + std::to_string(*entry->regular_degree) +
                          "-regular");
    if (entry->chi) {
        const int chi = chromatic_number(g).k;
        if (chi != *entry->chi)
            throw parse_error("corpus " + name + ": expected chi=" + std::to_string(*entry->chi) +
                              ", computed " + std::to_string(chi));
    }
    return g;
}

std::vector<std::string> corpus_check(const std::string& name) {
    std::vector<std::string> failures;
    try {
        load_corpus_graph(name);
    } catch (const std::exception& e) {
        failures.push_back(e.what());
    }
    return failures;
}

}  // namespace kempe
