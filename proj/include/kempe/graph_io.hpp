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

#ifndef KEMPE_GRAPH_IO_HPP
#define KEMPE_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kempe/generators.hpp"
#include "kempe/graph.hpp"

namespace kempe {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_warnings {
    int duplicate_edges = 0;
};

/// DIMACS .col: "c" comment lines, one "p edge N M" line, "e u v" lines with
/// 1-based endpoints. Duplicate edges are collapsed and counted in
/// warnings_out; self-loops and malformed lines raise parse_error.
graph parse_dimacs(std::istream& in, io_warnings* warnings_out = nullptr);

/// Plain edge list: one "u v" pair per line, 0-based; '#' starts a comment.
/// The vertex count is 1 + max id unless a larger hint is given.
graph parse_edge_list(std::istream& in, io_warnings* warnings_out = nullptr, int n_hint = 0);

void write_dimacs(std::ostream& out, const graph& g);
std::string dimacs_string(const graph& g);

/// Where a graph comes from: a file in either format, a generator family, or
/// a named corpus entry.
struct graph_source {
    enum class kind { dimacs_file, edge_list_file, generator, corpus_name };

    kind k = kind::dimacs_file;
    std::string path;        // dimacs_file / edge_list_file
    family_params family;    // generator
    std::string corpus;      // corpus_name
    std::string label;       // human-readable origin, filled by the parser
};

/// Parses the CLI notation: "corpus:NAME", "edges:PATH", "-" (DIMACS on
/// stdin) or a plain path treated as a DIMACS file.
graph_source parse_graph_source(const std::string& text);

/// Loads and validates the graph named by the source. Corpus entries are
/// checked against their manifest (checksum and expected invariants).
graph load_graph(const graph_source& source, io_warnings* warnings_out = nullptr);

}  // namespace kempe

#endif
