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

#include "kempe/kempe_structures.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace kempe {

color_pair::color_pair(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b)
        throw std::invalid_argument("color_pair: colors must be distinct");
    if (i < 1)
        throw std::invalid_argument("color_pair: colors are 1-based");
}

int critical_set::total() const {
    int t = 0;
    for (const auto& verts : by_color)
        t += static_cast<int>(verts.size());
    return t;
}

bool critical_set::covers_all_colors() const {
    for (const auto& verts : by_color)
        if (verts.empty())
            return false;
    return true;
}

bool critical_set::contains(int c, vertex v) const {
    const auto& verts = by_color[c - 1];
    return std::binary_search(verts.begin(), verts.end(), v);
}

bool is_critical(const graph& g, const coloring& c, vertex v) {
    const int q = c.palette_size();
    std::vector<char> seen(q + 1, 0);
    int distinct_others = 0;
    const int own = c.color(v);
    for (vertex w : g.neighbors(v)) {
        int cw = c.color(w);
        if (cw != own && !seen[cw]) {
            seen[cw] = 1;
            ++distinct_others;
        }
    }
    return distinct_others == q - 1;
}

critical_set critical_vertices(const graph& g, const coloring& c) {
    if (!is_proper(g, c))
        throw std::invalid_argument("critical_vertices: coloring is not proper");
    critical_set out;
    out.q = c.palette_size();
    out.by_color.resize(out.q);
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (is_critical(g, c, v))
            out.by_color[c.color(v) - 1].push_back(v);
    return out;
}

namespace {

void check_pair_valid(const coloring& c, color_pair pair) {
    if (pair.j > c.palette_size())
        throw std::invalid_argument("color pair (" + std::to_string(pair.i) + "," +
                                    std::to_string(pair.j) + ") outside palette 1.." +
                                    std::to_string(c.palette_size()));
}

// Flood-fills the (i, j)-induced subgraph from `start` and returns the
// component, sorted.
std::vector<vertex> chain_component(const graph& g, const coloring& c, color_pair pair,
                                    vertex start, std::vector<char>& visited) {
    std::vector<vertex> members;
    std::vector<vertex> stack{start};
    visited[start] = 1;
    while (!stack.empty()) {
        vertex u = stack.back();
        stack.pop_back();
        members.push_back(u);
        for (vertex w : g.neighbors(u)) {
            int cw = c.color(w);
            if (!visited[w] && (cw == pair.i || cw == pair.j)) {
                visited[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

bool kempe_chain::contains(vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

std::vector<kempe_chain> kempe_chains(const graph& g, const coloring& c, color_pair pair) {
    if (!is_proper(g, c))
        throw std::invalid_argument("kempe_chains: coloring is not proper");
    check_pair_valid(c, pair);
    std::vector<kempe_chain> chains;
    std::vector<char> visited(g.vertex_count(), 0);
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        int cv = c.color(v);
        if (visited[v] || (cv != pair.i && cv != pair.j))
            continue;
        kempe_chain chain{pair, chain_component(g, c, pair, v, visited), g.fingerprint(),
                          c.fingerprint()};
        chains.push_back(std::move(chain));
    }
    // Scanning vertices in ascending id already yields chains ordered by
    // minimum member id.
    return chains;
}

kempe_chain chain_containing(const graph& g, const coloring& c, vertex v, int other_color) {
    color_pair pair(c.color(v), other_color);
    check_pair_valid(c, pair);
    std::vector<char> visited(g.vertex_count(), 0);
    return kempe_chain{pair, chain_component(g, c, pair, v, visited), g.fingerprint(),
                       c.fingerprint()};
}

coloring kempe_swap(const graph& g, const coloring& c, const kempe_chain& chain) {
    if (chain.graph_fp != g.fingerprint() || chain.coloring_fp != c.fingerprint())
        throw std::invalid_argument("kempe_swap: stale chain (context mismatch)");
    std::vector<int> out = c.assignment();
    for (vertex v : chain.members) {
        if (out[v] == chain.pair.i)
            out[v] = chain.pair.j;
        else if (out[v] == chain.pair.j)
            out[v] = chain.pair.i;
        else
            throw std::invalid_argument("kempe_swap: chain member " + std::to_string(v) +
                                        " not colored with the chain pair");
    }
    return coloring(c.palette_size(), std::move(out));
}

std::optional<backbone> find_backbone(const graph& g, const coloring& c, vertex xi, vertex xj) {
    const int ci = c.color(xi);
    const int cj = c.color(xj);
    if (ci == cj)
        throw std::invalid_argument("find_backbone: anchors share color " + std::to_string(ci));
    if (!is_critical(g, c, xi))
        throw std::invalid_argument("find_backbone: vertex " + std::to_string(xi) +
                                    " is not critical");
    if (!is_critical(g, c, xj))
        throw std::invalid_argument("find_backbone: vertex " + std::to_string(xj) +
                                    " is not critical");
    color_pair pair(ci, cj);
    const vertex src = (ci == pair.i) ? xi : xj;  // anchor colored pair.i
    const vertex dst = (src == xi) ? xj : xi;

    // Distances to dst inside the (i, j)-induced subgraph, then a greedy walk
    // from src that always steps to the smallest-id neighbor one level closer.
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<vertex> queue{dst};
    dist[dst] = 0;
    while (!queue.empty()) {
        vertex u = queue.front();
        queue.pop_front();
        for (vertex w : g.neighbors(u)) {
            int cw = c.color(w);
            if (dist[w] != -1 || (cw != pair.i && cw != pair.j))
                continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    if (dist[src] == -1)
        return std::nullopt;

    std::vector<vertex> path{src};
    vertex cur = src;
    while (cur != dst) {
        for (vertex w : g.neighbors(cur))  // sorted: first hit is smallest id
            if (dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    return backbone{pair, src, dst, std::move(path)};
}

eliminate_outcome eliminate_critical_color(const graph& g, const coloring& c, int a, int b) {
    if (a == b)
        throw std::invalid_argument("eliminate_critical_color: colors must differ");
    if (a < 1 || a > c.palette_size() || b < 1 || b > c.palette_size())
        throw std::invalid_argument("eliminate_critical_color: color outside palette");
    if (!is_proper(g, c))
        throw std::invalid_argument("eliminate_critical_color: coloring is not proper");

    coloring current = c;
    int swaps = 0;
    for (;;) {
        critical_set crit = critical_vertices(g, current);
        const auto& a_criticals = crit.of_color(a);
        if (a_criticals.empty())
            return eliminate_outcome{false, std::nullopt, std::move(current), swaps};

        vertex xa = a_criticals.front();
        kempe_chain chain = chain_containing(g, current, xa, b);

        vertex xb = -1;
        for (vertex v : chain.members)
            if (current.color(v) == b && crit.contains(b, v)) {
                xb = v;
                break;
            }
        if (xb != -1) {
            auto bb = find_backbone(g, current, xa, xb);
            // Both anchors lie in one chain, so the path always exists.
            return eliminate_outcome{true, std::move(bb), std::move(current), swaps};
        }
        current = kempe_swap(g, current, chain);
        ++swaps;
    }
}

}  // namespace kempe
