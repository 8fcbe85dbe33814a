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

#include "kempe/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace kempe {

namespace {

// DSATUR core: vertex order is dynamic (max saturation, then max degree among
// uncolored, then the order of `tiebreak`). `tiebreak` is a permutation of
// vertex ids; identity gives the deterministic variant.
coloring dsatur_impl(const graph& g, const std::vector<vertex>& tiebreak) {
    const int n = g.vertex_count();
    if (n == 0)
        return coloring(0, {});
    std::vector<int> color(n, 0);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i)
        rank[tiebreak[i]] = i;
    // saturation[v] counts distinct neighbor colors, tracked with bitsets of
    // small width; degrees here never exceed n.
    std::vector<std::vector<char>> neighbor_has(n);
    std::vector<int> saturation(n, 0);
    for (int v = 0; v < n; ++v)
        neighbor_has[v].assign(n + 2, 0);

    int used = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v])
                continue;
            if (best == -1 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] &&
                 (g.degree(v) > g.degree(best) ||
                  (g.degree(v) == g.degree(best) && rank[v] < rank[best]))))
                best = v;
        }
        int c = 1;
        while (neighbor_has[best][c])
            ++c;
        color[best] = c;
        used = std::max(used, c);
        for (vertex w : g.neighbors(best))
            if (!color[w] && !neighbor_has[w][c]) {
                neighbor_has[w][c] = 1;
                ++saturation[w];
            }
    }
    return coloring(used, std::move(color));
}

struct decision_searcher {
    const graph& g;
    int k;
    long long budget;
    long long nodes = 0;
    std::vector<vertex> order;      // static: degree desc, id asc
    std::vector<int> color_of;      // by position in `order`
    std::vector<int> result;        // by vertex id, filled on success

    decision_searcher(const graph& graph_in, int k_in, long long budget_in)
        : g(graph_in), k(k_in), budget(budget_in) {
        const int n = g.vertex_count();
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [this](vertex a, vertex b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        color_of.assign(n, 0);
        color_of_vertex.assign(n, 0);
    }

    bool expand(int pos, int max_used) {
        if (++nodes > budget)
            throw budget_exceeded("k_colorable: node budget exceeded at k=" + std::to_string(k));
        const int n = g.vertex_count();
        if (pos == n) {
            result.assign(n, 0);
            for (int i = 0; i < n; ++i)
                result[order[i]] = color_of[i];
            return true;
        }
        vertex v = order[pos];
        // First-use rule relative to the search order kills color symmetry.
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (vertex w : g.neighbors(v)) {
                // Only vertices placed earlier in the order are colored yet.
                if (color_of_vertex[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash)
                continue;
            color_of[pos] = c;
            color_of_vertex[v] = c;
            if (expand(pos + 1, std::max(max_used, c)))
                return true;
            color_of_vertex[v] = 0;
        }
        color_of[pos] = 0;
        return false;
    }

    std::vector<int> color_of_vertex;
};

}  // namespace

coloring dsatur(const graph& g) {
    std::vector<vertex> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    return dsatur_impl(g, identity);
}

coloring dsatur_randomized(const graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    return dsatur_impl(g, perm);
}

std::vector<vertex> greedy_clique(const graph& g) {
    const int n = g.vertex_count();
    std::vector<vertex> best;
    std::vector<vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](vertex a, vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    const int seeds = std::min(n, 16);
    for (int s = 0; s < seeds; ++s) {
        std::vector<vertex> clique{by_degree[s]};
        for (vertex v : by_degree) {
            bool ok = true;
            for (vertex u : clique)
                if (u == v || !g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok)
                clique.push_back(v);
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

bool k_colorable(const graph& g, int k, long long node_budget) {
    const int n = g.vertex_count();
    if (n == 0)
        return true;
    if (k <= 0)
        return false;
    if (k == 1)
        return g.edge_count() == 0;
    decision_searcher s(g, k, node_budget);
    return s.expand(0, 0);
}

chromatic_result chromatic_number(const graph& g, long long node_budget) {
    const int n = g.vertex_count();
    if (n == 0)
        return {0, coloring(0, {})};
    if (g.edge_count() == 0)
        return {1, coloring(1, std::vector<int>(n, 1))};

    coloring upper = dsatur(g);
    int ub = upper.palette_size();
    int lb = std::max<int>(2, static_cast<int>(greedy_clique(g).size()));

    for (int k = lb; k < ub; ++k) {
        decision_searcher s(g, k, node_budget);
        if (s.expand(0, 0)) {
            coloring witness(k, std::move(s.result));
            return {k, witness.canonical()};
        }
    }
    return {ub, upper.canonical()};
}

}  // namespace kempe
