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

#include "kempe/dot_export.hpp"

#include <map>
#include <ostream>
#include <set>

namespace kempe {

namespace {

const char* fill_for(int color) {
    static const char* palette[] = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8",
                                    "#f58231", "#911eb4", "#46f0f0", "#f032e6",
                                    "#bcf60c", "#fabebe", "#008080", "#e6beff"};
    return palette[(color - 1) % 12];
}

}  // namespace

void write_dot(std::ostream& out, const graph& g, const coloring* c, const kempe_clique* clique) {
    std::set<vertex> anchors;
    std::set<std::pair<vertex, vertex>> ribbon;
    if (clique) {
        anchors.insert(clique->anchors.begin(), clique->anchors.end());
        for (const backbone& bb : clique->backbones)
            for (std::size_t i = 0; i + 1 < bb.path.size(); ++i)
                ribbon.insert({std::min(bb.path[i], bb.path[i + 1]),
                               std::max(bb.path[i], bb.path[i + 1])});
    }
    out << "graph G {\n  node [style=filled];\n";
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [";
        if (c)
            out << "fillcolor=\"" << fill_for(c->color(v)) << "\" label=\"" << v << ":"
                << c->color(v) << "\"";
        else
            out << "fillcolor=\"#dddddd\"";
        if (anchors.count(v))
            out << " shape=box penwidth=3";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (ribbon.count({u, v}))
            out << " [color=\"#7d3c98\" penwidth=4]";
        out << ";\n";
    }
    out << "}\n";
}

void write_dot_minor(std::ostream& out, const graph& g, const minor_model& model) {
    std::map<vertex, int> owner;
    for (int s = 0; s < model.q; ++s)
        for (vertex v : model.branch_sets[s])
            owner[v] = s;
    out << "graph G {\n  node [style=filled];\n";
    for (int s = 0; s < model.q; ++s) {
        out << "  subgraph cluster_" << s << " {\n    label=\"branch " << (s + 1) << "\";\n";
        for (vertex v : model.branch_sets[s]) {
            out << "    " << v << " [fillcolor=\"" << fill_for(s + 1) << "\"";
            if (model.seeds[s] == v)
                out << " shape=box penwidth=3";
            out << "];\n";
        }
        out << "  }\n";
    }
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (!owner.count(v))
            out << "  " << v << " [fillcolor=\"#dddddd\"];\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

}  // namespace kempe
