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

#include "kempe/minor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kempe {

namespace {

struct grower {
    const graph& g;
    const kempe_clique& clique;
    std::vector<const backbone*> order;  // processing order
    std::vector<int> owner;              // vertex -> branch set (color-1), -1 free
    long long nodes = 0;
    long long node_limit;
    bool out_of_budget = false;

    bool sets_adjacent(int a, int b) const {
        for (vertex v = 0; v < g.vertex_count(); ++v) {
            if (owner[v] != a)
                continue;
            for (vertex w : g.neighbors(v))
                if (owner[w] == b)
                    return true;
        }
        return false;
    }

    bool grow(std::size_t level) {
        if (++nodes > node_limit) {
            out_of_budget = true;
            return false;
        }
        if (level == order.size())
            return true;
        const backbone& bb = *order[level];
        const int si = bb.pair.i - 1;
        const int sj = bb.pair.j - 1;
        if (sets_adjacent(si, sj))
            return grow(level + 1);

        // Interior vertices of the backbone, i-side first.
        const int m = static_cast<int>(bb.path.size()) - 2;
        // Contiguous reach from each side: a prefix may pass through vertices
        // already owned by set i but stops at anything owned elsewhere
        // (otherwise the grown set would disconnect).
        int reach_i = 0;
        while (reach_i < m && (owner[bb.path[1 + reach_i]] == -1 || owner[bb.path[1 + reach_i]] == si))
            ++reach_i;
        int reach_j = 0;
        while (reach_j < m &&
               (owner[bb.path[m - reach_j]] == -1 || owner[bb.path[m - reach_j]] == sj))
            ++reach_j;

        for (int split = 0; split <= m; ++split) {
            if (split > reach_i || m - split > reach_j)
                continue;
            std::vector<vertex> taken_i, taken_j;
            for (int t = 0; t < split; ++t) {
                vertex v = bb.path[1 + t];
                if (owner[v] == -1) {
                    owner[v] = si;
                    taken_i.push_back(v);
                }
            }
            for (int t = split; t < m; ++t) {
                vertex v = bb.path[1 + t];
                if (owner[v] == -1) {
                    owner[v] = sj;
                    taken_j.push_back(v);
                }
            }
            if (sets_adjacent(si, sj) && grow(level + 1))
                return true;
            for (vertex v : taken_i)
                owner[v] = -1;
            for (vertex v : taken_j)
                owner[v] = -1;
            if (out_of_budget)
                return false;
        }
        return false;
    }
};

}  // namespace

std::optional<minor_model> grow_minor_from_clique(const graph& g, const coloring& c,
                                                  const kempe_clique& clique,
                                                  long long node_limit) {
    if (clique.q != c.palette_size())
        throw std::invalid_argument("grow_minor_from_clique: clique palette disagrees with coloring");
    const int q = clique.q;
    grower gr{g, clique, {}, std::vector<int>(g.vertex_count(), -1), 0, node_limit};
    for (const backbone& bb : clique.backbones)
        gr.order.push_back(&bb);
    std::stable_sort(gr.order.begin(), gr.order.end(), [](const backbone* a, const backbone* b) {
        return a->length() < b->length();
    });
    for (int col = 1; col <= q; ++col)
        gr.owner[clique.anchors[col - 1]] = col - 1;

    // Shortest-first is the primary order; on failure, rotate the order while
    // budget remains (cheap deterministic stand-in for full order search).
    const std::size_t npairs = gr.order.size();
    for (std::size_t rot = 0; rot <= npairs; ++rot) {
        if (gr.grow(0)) {
            minor_model model;
            model.q = q;
            model.seeds = clique.anchors;
            model.branch_sets.assign(q, {});
            for (vertex v = 0; v < g.vertex_count(); ++v)
                if (gr.owner[v] != -1)
                    model.branch_sets[gr.owner[v]].push_back(v);
            return model;
        }
        if (gr.out_of_budget || npairs == 0)
            break;
        std::rotate(gr.order.begin(), gr.order.begin() + 1, gr.order.end());
    }
    return std::nullopt;
}

minor_report verify_minor_model(const graph& g, const minor_model& model) {
    minor_report report;
    auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    const int q = model.q;
    if (q < 1)
        fail("order q must be >= 1");
    if (static_cast<int>(model.branch_sets.size()) != q)
        fail("expected " + std::to_string(q) + " branch sets, got " +
             std::to_string(model.branch_sets.size()));
    if (static_cast<int>(model.seeds.size()) != q)
        fail("expected " + std::to_string(q) + " seeds, got " + std::to_string(model.seeds.size()));
    if (!report.violations.empty())
        return report;

    std::vector<int> owner(g.vertex_count(), -1);
    for (int s = 0; s < q; ++s) {
        if (model.branch_sets[s].empty())
            fail("branch set " + std::to_string(s + 1) + " is empty");
        for (vertex v : model.branch_sets[s]) {
            if (v < 0 || v >= g.vertex_count()) {
                fail("branch set " + std::to_string(s + 1) + " contains out-of-range vertex " +
                     std::to_string(v));
                continue;
            }
            if (owner[v] != -1)
                fail("vertex " + std::to_string(v) + " lies in branch sets " +
                     std::to_string(owner[v] + 1) + " and " + std::to_string(s + 1));
            owner[v] = s;
        }
    }
    for (int s = 0; s < q; ++s) {
        if (model.seeds[s] < 0 || model.seeds[s] >= g.vertex_count() || owner[model.seeds[s]] != s)
            fail("seed of branch set " + std::to_string(s + 1) + " is not a member");
        // Connectivity within the set.
        const auto& verts = model.branch_sets[s];
        if (verts.empty())
            continue;
        std::set<vertex> inside(verts.begin(), verts.end());
        std::vector<vertex> stack{verts.front()};
        std::set<vertex> seen{verts.front()};
        while (!stack.empty()) {
            vertex u = stack.back();
            stack.pop_back();
            for (vertex w : g.neighbors(u))
                if (inside.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        if (seen.size() != inside.size())
            fail("branch set " + std::to_string(s + 1) + " is disconnected");
    }
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            bool touch = false;
            for (vertex v : model.branch_sets[a]) {
                for (vertex w : g.neighbors(v))
                    if (owner[w] == b) {
                        touch = true;
                        break;
                    }
                if (touch)
                    break;
            }
            if (!touch)
                fail("no edge joins branch sets " + std::to_string(a + 1) + " and " +
                     std::to_string(b + 1));
        }

    report.valid = report.violations.empty();
    report.hadwiger_lower_bound = report.valid ? q : 0;
    return report;
}

}  // namespace kempe
