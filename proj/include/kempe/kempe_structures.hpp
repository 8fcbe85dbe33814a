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

#ifndef KEMPE_KEMPE_STRUCTURES_HPP
#define KEMPE_KEMPE_STRUCTURES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Unordered pair of distinct palette colors, stored with i < j.
struct color_pair {
    int i;
    int j;

    color_pair(int a, int b);
    bool operator==(const color_pair&) const = default;
};

/// Per-color lists of critical vertices. A vertex of color c is critical when
/// its neighborhood carries all q-1 other palette colors; criticality is
/// always evaluated against the coloring's full palette size.
struct critical_set {
    int q = 0;
    std::vector<std::vector<vertex>> by_color;  // index color-1, each sorted ascending

    const std::vector<vertex>& of_color(int c) const { return by_color[c - 1]; }
    int total() const;
    bool covers_all_colors() const;
    bool contains(int c, vertex v) const;
};

critical_set critical_vertices(const graph& g, const coloring& c);
bool is_critical(const graph& g, const coloring& c, vertex v);

/// Maximal connected subgraph of the two color classes of `pair`. Carries the
/// graph and coloring fingerprints it was computed against so a stale chain
/// cannot be swapped against a different context.
struct kempe_chain {
    color_pair pair;
    std::vector<vertex> members;  // sorted ascending
    std::uint64_t graph_fp = 0;
    std::uint64_t coloring_fp = 0;

    bool contains(vertex v) const;
};

/// All (i, j)-chains, ordered by minimum member id. The chains partition the
/// union of the two color classes.
std::vector<kempe_chain> kempe_chains(const graph& g, const coloring& c, color_pair pair);

/// The single (i, j)-chain through v, where j = other_color and i = c(v).
kempe_chain chain_containing(const graph& g, const coloring& c, vertex v, int other_color);

/// Exchanges the two colors within the chain. Members' colors i <-> j, all
/// other vertices untouched; the result is proper and each member's
/// criticality is unchanged. Throws on a stale chain (context mismatch).
coloring kempe_swap(const graph& g, const coloring& c, const kempe_chain& chain);

/// Path inside one Kempe chain joining two critical anchors of the chain's
/// two colors.
struct backbone {
    color_pair pair;
    vertex anchor_i;               // colored pair.i
    vertex anchor_j;               // colored pair.j
    std::vector<vertex> path;      // anchor_i .. anchor_j, consecutive vertices adjacent

    int length() const { return static_cast<int>(path.size()) - 1; }
};

/// BFS-shortest path from xi to xj inside their shared (i, j)-chain, ties
/// broken toward the smallest next vertex id. Empty when the anchors lie in
/// different chains. Throws when xi or xj is not critical, or their colors
/// coincide.
std::optional<backbone> find_backbone(const graph& g, const coloring& c, vertex xi, vertex xj);

/// Result of the swap loop that tries to empty color a of critical vertices
/// using (a, b)-swaps: either some a-critical vertex turned out to share a
/// chain with a b-critical one (backbone found), or every a-critical vertex
/// was eliminated.
struct eliminate_outcome {
    bool backbone_found = false;
    std::optional<backbone> found;  // present iff backbone_found
    coloring final_coloring;        // coloring at the stopping point
    int swaps = 0;
};

/// Repeatedly picks the lowest-id critical vertex of color a; if its
/// (a, b)-chain holds a critical vertex of color b, stops with the backbone
/// between them, otherwise swaps that chain and continues. Terminates within
/// the initial number of a-critical vertices.
eliminate_outcome eliminate_critical_color(const graph& g, const coloring& c, int a, int b);

}  // namespace kempe

#endif
