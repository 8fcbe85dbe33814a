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

#include "kempe/graph.hpp"

#include <algorithm>
#include <string>

#include "kempe/fnv.hpp"

namespace kempe {

graph graph::from_edges(int n, const std::vector<std::pair<vertex, vertex>>& edges,
                        int* duplicates_out) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    graph g;
    g.n_ = n;
    g.adj_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range 0.." + std::to_string(n - 1));
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int duplicates = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        auto last = std::unique(nbrs.begin(), nbrs.end());
        duplicates += static_cast<int>(nbrs.end() - last);
        nbrs.erase(last, nbrs.end());
        g.m_ += static_cast<int>(nbrs.size());
    }
    g.m_ /= 2;
    duplicates /= 2;
    if (duplicates_out)
        *duplicates_out = duplicates;

    fnv1a h;
    h.mix_i32(n);
    for (vertex u = 0; u < n; ++u)
        for (vertex v : g.adj_[u])
            if (u < v) {
                h.mix_i32(u);
                h.mix_i32(v);
            }
    g.fingerprint_ = h.value();
    return g;
}

bool graph::adjacent(vertex u, vertex v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_)
        d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<std::pair<vertex, vertex>> graph::edges() const {
    std::vector<std::pair<vertex, vertex>> out;
    out.reserve(m_);
    for (vertex u = 0; u < n_; ++u)
        for (vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool graph::connected() const {
    if (n_ <= 1)
        return true;
    std::vector<char> seen(n_, 0);
    std::vector<vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        vertex u = stack.back();
        stack.pop_back();
        for (vertex v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n_;
}

bool graph::is_regular(int degree) const {
    for (vertex v = 0; v < n_; ++v)
        if (this->degree(v) != degree)
            return false;
    return true;
}

std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace kempe
