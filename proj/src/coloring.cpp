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

#include "kempe/coloring.hpp"

#include <stdexcept>
#include <string>

#include "kempe/fnv.hpp"
#include "kempe/kempe_structures.hpp"

namespace kempe {

coloring::coloring(int palette_size, std::vector<int> assignment)
    : q_(palette_size), assign_(std::move(assignment)) {
    if (q_ < 0)
        throw std::invalid_argument("coloring: negative palette size");
    for (std::size_t v = 0; v < assign_.size(); ++v) {
        int c = assign_[v];
        if (c < 1 || c > q_)
            throw std::invalid_argument("coloring: vertex " + std::to_string(v) + " has color " +
                                        std::to_string(c) + " outside 1.." + std::to_string(q_));
    }
}

std::vector<int> coloring::class_sizes() const {
    std::vector<int> sizes(q_, 0);
    for (int c : assign_)
        ++sizes[c - 1];
    return sizes;
}

int coloring::colors_used() const {
    int used = 0;
    for (int s : class_sizes())
        if (s > 0)
            ++used;
    return used;
}

bool coloring::uses_all_colors() const { return colors_used() == q_; }

coloring coloring::canonical() const {
    std::vector<int> relabel(q_ + 1, 0);
    int next = 0;
    std::vector<int> out(assign_.size());
    for (std::size_t v = 0; v < assign_.size(); ++v) {
        int c = assign_[v];
        if (relabel[c] == 0)
            relabel[c] = ++next;
        out[v] = relabel[c];
    }
    return coloring(q_, std::move(out));
}

bool coloring::is_canonical() const {
    int max_seen = 0;
    for (int c : assign_) {
        if (c > max_seen + 1)
            return false;
        max_seen = std::max(max_seen, c);
    }
    return true;
}

std::uint64_t coloring::fingerprint() const {
    fnv1a h;
    h.mix_i32(q_);
    for (int c : assign_)
        h.mix_i32(c);
    return h.value();
}

bool is_proper(const graph& g, const coloring& c) {
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("is_proper: assignment not total over V(g)");
    for (vertex u = 0; u < g.vertex_count(); ++u)
        for (vertex v : g.neighbors(u))
            if (u < v && c.color(u) == c.color(v))
                return false;
    return true;
}

coloring remove_color_class(const graph& g, const coloring& c, int a) {
    if (a < 1 || a > c.palette_size())
        throw std::invalid_argument("remove_color_class: color out of palette");
    if (!is_proper(g, c))
        throw std::invalid_argument("remove_color_class: coloring is not proper");
    critical_set crit = critical_vertices(g, c);
    if (!crit.of_color(a).empty())
        throw std::invalid_argument("remove_color_class: critical vertex " +
                                    std::to_string(crit.of_color(a).front()) + " has color " +
                                    std::to_string(a));

    // The a-class is an independent set and nothing else is touched, so the
    // vertices can be recolored one by one against the original neighborhood
    // colors. Ascending id order fixes the exact output.
    std::vector<int> out = c.assignment();
    const int q = c.palette_size();
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        if (out[v] != a)
            continue;
        std::vector<char> present(q + 1, 0);
        for (vertex w : g.neighbors(v))
            present[c.color(w)] = 1;
        int replacement = 0;
        for (int col = 1; col <= q; ++col)
            if (col != a && !present[col]) {
                replacement = col;
                break;
            }
        // A non-critical vertex misses at least one color other than its own.
        out[v] = replacement;
    }
    return coloring(q, std::move(out));
}

}  // namespace kempe
