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

#include "kempe/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "kempe/corpus.hpp"

namespace kempe {

namespace {

std::vector<std::pair<vertex, vertex>> dedup_count(std::vector<std::pair<vertex, vertex>> edges,
                                                   int* dup_out) {
    for (auto& [u, v] : edges)
        if (u > v)
            std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    if (dup_out)
        *dup_out = static_cast<int>(edges.end() - last);
    edges.erase(last, edges.end());
    return edges;
}

}  // namespace

graph parse_dimacs(std::istream& in, io_warnings* warnings_out) {
    std::string line;
    int n = -1;
    long long m_declared = -1;
    std::vector<std::pair<vertex, vertex>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string kind;
            if (!(ls >> kind >> n >> m_declared) || (kind != "edge" && kind != "col"))
                throw parse_error("dimacs line " + std::to_string(lineno) +
                                  ": malformed problem line: " + line);
            if (n < 0)
                throw parse_error("dimacs: negative vertex count");
        } else if (tag == 'e') {
            long long u, v;
            if (!(ls >> u >> v))
                throw parse_error("dimacs line " + std::to_string(lineno) +
                                  ": malformed edge line: " + line);
            if (n < 0)
                throw parse_error("dimacs: edge before problem line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("dimacs line " + std::to_string(lineno) + ": endpoint out of 1.." +
                                  std::to_string(n));
            if (u == v)
                throw parse_error("dimacs line " + std::to_string(lineno) + ": self-loop at " +
                                  std::to_string(u));
            edges.emplace_back(static_cast<vertex>(u - 1), static_cast<vertex>(v - 1));
        } else {
            throw parse_error("dimacs line " + std::to_string(lineno) + ": unknown record '" +
                              std::string(1, tag) + "'");
        }
    }
    if (n < 0)
        throw parse_error("dimacs: missing problem line");
    int dups = 0;
    edges = dedup_count(std::move(edges), &dups);
    if (dups > 0) {
        if (warnings_out)
            warnings_out->duplicate_edges = dups;
        std::cerr << "warning: " << dups << " duplicate edge(s) collapsed\n";
    }
    return graph::from_edges(n, edges);
}

graph parse_edge_list(std::istream& in, io_warnings* warnings_out, int n_hint) {
    std::string line;
    std::vector<std::pair<vertex, vertex>> edges;
    int max_id = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u))
            continue;  // blank line
        if (!(ls >> v))
            throw parse_error("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || v < 0)
            throw parse_error("edge list line " + std::to_string(lineno) + ": negative vertex id");
        if (u == v)
            throw parse_error("edge list line " + std::to_string(lineno) + ": self-loop at " +
                              std::to_string(u));
        max_id = static_cast<int>(std::max<long long>(max_id, std::max(u, v)));
        edges.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
    }
    int dups = 0;
    edges = dedup_count(std::move(edges), &dups);
    if (dups > 0) {
        if (warnings_out)
            warnings_out->duplicate_edges = dups;
        std::cerr << "warning: " << dups << " duplicate edge(s) collapsed\n";
    }
    return graph::from_edges(std::max(n_hint, max_id + 1), edges);
}

void write_dimacs(std::ostream& out, const graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

std::string dimacs_string(const graph& g) {
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

graph_source parse_graph_source(const std::string& text) {
    graph_source src;
    src.label = text;
    if (text.rfind("corpus:", 0) == 0) {
        src.k = graph_source::kind::corpus_name;
        src.corpus = text.substr(7);
        src.label = src.corpus;
    } else if (text.rfind("edges:", 0) == 0) {
        src.k = graph_source::kind::edge_list_file;
        src.path = text.substr(6);
        src.label = src.path;
    } else {
        src.k = graph_source::kind::dimacs_file;
        src.path = text;
    }
    return src;
}

graph load_graph(const graph_source& source, io_warnings* warnings_out) {
    switch (source.k) {
        case graph_source::kind::generator:
            return generate(source.family);
        case graph_source::kind::corpus_name:
            return load_corpus_graph(source.corpus);
        case graph_source::kind::edge_list_file: {
            std::ifstream in(source.path);
            if (!in)
                throw parse_error("cannot open " + source.path);
            return parse_edge_list(in, warnings_out);
        }
        case graph_source::kind::dimacs_file: {
            if (source.path == "-")
                return parse_dimacs(std::cin, warnings_out);
            std::ifstream in(source.path);
            if (!in)
                throw parse_error("cannot open " + source.path);
            return parse_dimacs(in, warnings_out);
        }
    }
    throw parse_error("unhandled graph source");
}

}  // namespace kempe
