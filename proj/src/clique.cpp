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

#include "kempe/clique.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kempe {

const backbone& kempe_clique::backbone_for(color_pair pair) const {
    for (const backbone& bb : backbones)
        if (bb.pair == pair)
            return bb;
    throw std::out_of_range("kempe_clique: no backbone for requested pair");
}

namespace {

// Chain labels per color pair: chain_id[p][v] identifies the (i, j)-chain
// containing v, or -1 when v is not colored i or j. Two anchors are co-chain
// exactly when their labels match.
struct chain_labels {
    int q = 0;
    std::vector<std::vector<int>> chain_id;  // indexed by pair_index(i, j)

    static int pair_index(int i, int j, int q) {
        // (i, j) with 1 <= i < j <= q, row-major over i.
        return (i - 1) * q - (i * (i - 1)) / 2 + (j - i - 1);
    }

    int label(int i, int j, vertex v) const { return chain_id[pair_index(i, j, q)][v]; }
};

chain_labels label_chains(const graph& g, const coloring& c) {
    const int q = c.palette_size();
    const int n = g.vertex_count();
    chain_labels labels;
    labels.q = q;
    labels.chain_id.assign(q * (q - 1) / 2, std::vector<int>(n, -1));
    std::vector<vertex> stack;
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j) {
            auto& ids = labels.chain_id[chain_labels::pair_index(i, j, q)];
            int next_id = 0;
            for (vertex v = 0; v < n; ++v) {
                int cv = c.color(v);
                if (ids[v] != -1 || (cv != i && cv != j))
                    continue;
                ids[v] = next_id;
                stack.assign(1, v);
                while (!stack.empty()) {
                    vertex u = stack.back();
                    stack.pop_back();
                    for (vertex w : g.neighbors(u)) {
                        int cw = c.color(w);
                        if (ids[w] == -1 && (cw == i || cw == j)) {
                            ids[w] = next_id;
                            stack.push_back(w);
                        }
                    }
                }
                ++next_id;
            }
        }
    return labels;
}

struct transversal_search {
    const chain_labels& labels;
    const std::vector<std::vector<vertex>>& candidates;  // per color, index c-1
    std::vector<int> color_order;                        // colors, ascending candidate count
    std::vector<vertex> chosen;                          // chosen[c-1], -1 while unset

    bool assign(std::size_t depth) {
        if (depth == color_order.size())
            return true;
        int color = color_order[depth];
        for (vertex v : candidates[color - 1]) {
            bool compatible = true;
            for (std::size_t d = 0; d < depth; ++d) {
                int other = color_order[d];
                int i = std::min(color, other), j = std::max(color, other);
                if (labels.label(i, j, v) != labels.label(i, j, chosen[other - 1])) {
                    compatible = false;
                    break;
                }
            }
            if (!compatible)
                continue;
            chosen[color - 1] = v;
            if (assign(depth + 1))
                return true;
            chosen[color - 1] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<kempe_clique> find_kempe_clique(const graph& g, const coloring& c,
                                              const critical_set& crit) {
    const int q = c.palette_size();
    // A correct coloring needs one critical vertex per color, so an empty
    // candidate list settles the question immediately.
    if (!crit.covers_all_colors())
        return std::nullopt;
    if (q == 1)
        return kempe_clique{1, {crit.of_color(1).front()}, {}};

    chain_labels labels = label_chains(g, c);
    transversal_search search{labels, crit.by_color, {}, std::vector<vertex>(q, -1)};
    search.color_order.resize(q);
    std::iota(search.color_order.begin(), search.color_order.end(), 1);
    std::stable_sort(search.color_order.begin(), search.color_order.end(), [&](int a, int b) {
        return crit.of_color(a).size() < crit.of_color(b).size();
    });
    if (!search.assign(0))
        return std::nullopt;

    kempe_clique clique;
    clique.q = q;
    clique.anchors = search.chosen;
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j) {
            auto bb = find_backbone(g, c, clique.anchors[i - 1], clique.anchors[j - 1]);
            // Co-chain anchors always yield a path.
            clique.backbones.push_back(std::move(*bb));
        }
    return clique;
}

std::optional<kempe_clique> find_kempe_clique(const graph& g, const coloring& c) {
    if (!is_proper(g, c))
        throw std::invalid_argument("find_kempe_clique: coloring is not proper");
    const std::vector<int> sizes = c.class_sizes();
    for (int col = 1; col <= c.palette_size(); ++col)
        if (sizes[col - 1] == 0)
            throw std::invalid_argument("find_kempe_clique: color " + std::to_string(col) +
                                        " is unused; the coloring cannot be correct");
    return find_kempe_clique(g, c, critical_vertices(g, c));
}

immersion_report verify_strong_immersion(const graph& g, const kempe_clique& clique) {
    const int q = clique.q;
    if (q < 1 || static_cast<int>(clique.anchors.size()) != q)
        throw std::invalid_argument("verify_strong_immersion: malformed clique: anchor list");
    std::set<vertex> distinct(clique.anchors.begin(), clique.anchors.end());
    if (static_cast<int>(distinct.size()) != q)
        throw std::invalid_argument("verify_strong_immersion: malformed clique: repeated anchor");
    if (static_cast<int>(clique.backbones.size()) != q * (q - 1) / 2)
        throw std::invalid_argument("verify_strong_immersion: malformed clique: backbone count");
    std::set<std::pair<int, int>> pairs_seen;
    for (const backbone& bb : clique.backbones)
        if (!pairs_seen.insert({bb.pair.i, bb.pair.j}).second)
            throw std::invalid_argument("verify_strong_immersion: duplicate backbone pair");
    for (const backbone& bb : clique.backbones) {
        if (bb.pair.j > q || bb.path.empty() || bb.path.front() != bb.anchor_i ||
            bb.path.back() != bb.anchor_j)
            throw std::invalid_argument("verify_strong_immersion: malformed backbone endpoints");
        if (bb.anchor_i != clique.anchors[bb.pair.i - 1] ||
            bb.anchor_j != clique.anchors[bb.pair.j - 1])
            throw std::invalid_argument(
                "verify_strong_immersion: backbone anchors disagree with clique anchors");
        std::set<vertex> on_path(bb.path.begin(), bb.path.end());
        if (on_path.size() != bb.path.size())
            throw std::invalid_argument("verify_strong_immersion: backbone path is not simple");
        for (std::size_t i = 0; i + 1 < bb.path.size(); ++i)
            if (!g.adjacent(bb.path[i], bb.path[i + 1]))
                throw std::invalid_argument(
                    "verify_strong_immersion: backbone path uses a non-edge");
    }

    immersion_report report;
    report.edge_disjoint = true;
    report.anchors_internal_free = true;

    std::map<std::pair<vertex, vertex>, color_pair> edge_owner;
    for (const backbone& bb : clique.backbones) {
        for (std::size_t i = 0; i + 1 < bb.path.size(); ++i) {
            vertex a = std::min(bb.path[i], bb.path[i + 1]);
            vertex b = std::max(bb.path[i], bb.path[i + 1]);
            auto [it, inserted] = edge_owner.try_emplace({a, b}, bb.pair);
            if (!inserted && !(it->second == bb.pair)) {
                report.edge_disjoint = false;
                report.violations.push_back(
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") shared by pairs (" +
                    std::to_string(it->second.i) + "," + std::to_string(it->second.j) + ") and (" +
                    std::to_string(bb.pair.i) + "," + std::to_string(bb.pair.j) + ")");
            }
        }
    }
    for (const backbone& bb : clique.backbones)
        for (std::size_t i = 1; i + 1 < bb.path.size(); ++i)
            for (vertex anchor : clique.anchors)
                if (bb.path[i] == anchor) {
                    report.anchors_internal_free = false;
                    report.violations.push_back(
                        "anchor " + std::to_string(anchor) + " is internal to the (" +
                        std::to_string(bb.pair.i) + "," + std::to_string(bb.pair.j) +
                        ") backbone");
                }
    return report;
}

}  // namespace kempe
