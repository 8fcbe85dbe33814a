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

#include "kempe/generators.hpp"

#include <random>
#include <stdexcept>

namespace kempe {

namespace {

// mt19937_64 is fully specified by the standard; only the <random>
// distributions are implementation-defined, so uniform draws are hand-rolled.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

graph make_cycle(int n) {
    if (n < 1)
        throw std::invalid_argument("cycle: n must be >= 1");
    std::vector<std::pair<vertex, vertex>> edges;
    if (n == 2)
        edges.emplace_back(0, 1);
    else if (n >= 3)
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
    return graph::from_edges(n, edges);
}

graph make_complete(int k) {
    if (k < 1)
        throw std::invalid_argument("complete: k must be >= 1");
    std::vector<std::pair<vertex, vertex>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            edges.emplace_back(u, v);
    return graph::from_edges(k, edges);
}

graph make_path(int n) {
    if (n < 1)
        throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<vertex, vertex>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return graph::from_edges(n, edges);
}

graph make_wheel(int rim) {
    if (rim < 3)
        throw std::invalid_argument("wheel: rim must be >= 3");
    std::vector<std::pair<vertex, vertex>> edges;
    for (int i = 0; i < rim; ++i) {
        edges.emplace_back(i, (i + 1) % rim);
        edges.emplace_back(i, rim);  // hub
    }
    return graph::from_edges(rim + 1, edges);
}

graph make_random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_gnp: n must be >= 1");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_gnp: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<vertex, vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next_unit(rng) < p)
                edges.emplace_back(u, v);
    return graph::from_edges(n, edges);
}

graph make_random_tree(int n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_tree: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<vertex, vertex>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<vertex>(rng() % static_cast<std::uint64_t>(v)), v);
    return graph::from_edges(n, edges);
}

graph lexicographic_product(const graph& g, const graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("lexicographic_product: both factors must be nonempty");
    const int hn = h.vertex_count();
    std::vector<std::pair<vertex, vertex>> edges;
    for (vertex u = 0; u < g.vertex_count(); ++u) {
        for (vertex v : g.neighbors(u))
            if (u < v)
                for (int x = 0; x < hn; ++x)
                    for (int y = 0; y < hn; ++y)
                        edges.emplace_back(u * hn + x, v * hn + y);
        for (vertex x = 0; x < hn; ++x)
            for (vertex y : h.neighbors(x))
                if (x < y)
                    edges.emplace_back(u * hn + x, u * hn + y);
    }
    return graph::from_edges(g.vertex_count() * hn, edges);
}

graph make_catlin(int n, int k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("catlin: n and k must be >= 1");
    return lexicographic_product(make_cycle(2 * n + 1), make_complete(k));
}

graph generate(const family_params& params) {
    const std::string& f = params.family;
    if (f == "cycle")
        return make_cycle(params.n);
    if (f == "complete")
        return make_complete(params.k > 0 ? params.k : params.n);
    if (f == "path")
        return make_path(params.n);
    if (f == "wheel")
        return make_wheel(params.n);
    if (f == "random_gnp")
        return make_random_gnp(params.n, params.p, params.seed);
    if (f == "random_tree")
        return make_random_tree(params.n, params.seed);
    if (f == "catlin")
        return make_catlin(params.n, params.k);
    throw std::invalid_argument("unknown family: " + f);
}

std::string family_label(const family_params& params) {
    const std::string& f = params.family;
    if (f == "cycle" || f == "path" || f == "wheel")
        return f + "(" + std::to_string(params.n) + ")";
    if (f == "complete")
        return f + "(" + std::to_string(params.k > 0 ? params.k : params.n) + ")";
    if (f == "catlin")
        return f + "(" + std::to_string(params.n) + "," + std::to_string(params.k) + ")";
    if (f == "random_gnp")
        return f + "(" + std::to_string(params.n) + "," + std::to_string(params.p) + ",seed=" +
               std::to_string(params.seed) + ")";
    if (f == "random_tree")
        return f + "(" + std::to_string(params.n) + ",seed=" + std::to_string(params.seed) + ")";
    return f;
}

}  // namespace kempe
