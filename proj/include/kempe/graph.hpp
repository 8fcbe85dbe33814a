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

#ifndef KEMPE_GRAPH_HPP
#define KEMPE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kempe {

using vertex = int;

/// Immutable simple undirected graph. Vertex ids are 0..n-1, neighbor lists
/// are kept sorted ascending so that every traversal order is deterministic.
/// Instances are safe to share across threads once constructed.
class graph {
public:
    graph() = default;

    /// Builds a graph from an edge list. Self-loops throw
    /// std::invalid_argument. Duplicate edges are collapsed; the number of
    /// collapsed duplicates is written to *duplicates_out when non-null.
    static graph from_edges(int n, const std::vector<std::pair<vertex, vertex>>& edges,
                            int* duplicates_out = nullptr);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const vertex> neighbors(vertex v) const { return adj_[v]; }
    int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(vertex u, vertex v) const;
    int max_degree() const;

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<vertex, vertex>> edges() const;

    bool connected() const;
    bool is_regular(int degree) const;

    /// Content hash of (n, edge list); stable across runs. Kempe chains carry
    /// this so that a chain computed against one graph cannot be swapped on
    /// another.
    std::uint64_t fingerprint() const { return fingerprint_; }

    bool operator==(const graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<vertex>> adj_;
    std::uint64_t fingerprint_ = 0;
};

}  // namespace kempe

#endif
