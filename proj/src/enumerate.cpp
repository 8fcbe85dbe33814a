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

#include "kempe/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace kempe {

coloring_stream::coloring_stream(const graph& g, int q) : coloring_stream(g, q, {}) {}

coloring_stream::coloring_stream(const graph& g, int q, std::vector<int> prefix)
    : g_(&g), q_(q), n_(g.vertex_count()), base_(static_cast<int>(prefix.size())) {
    if (q_ < 0)
        throw std::invalid_argument("coloring_stream: q must be >= 0");
    if (base_ > n_)
        throw std::invalid_argument("coloring_stream: prefix longer than vertex count");
    assign_.assign(n_, 0);
    max_before_.assign(n_ + 1, 0);
    for (int i = 0; i < base_; ++i) {
        assign_[i] = prefix[i];
        max_before_[i + 1] = std::max(max_before_[i], prefix[i]);
    }
    pos_ = base_;
    if (n_ > base_ && q_ == 0)
        done_ = true;
}

bool coloring_stream::valid_at(int pos, int c) const {
    for (vertex w : g_->neighbors(pos)) {
        if (w >= pos)
            break;  // neighbors sorted; later vertices are uncolored
        if (assign_[w] == c)
            return false;
    }
    return true;
}

std::optional<coloring> coloring_stream::next() {
    if (done_)
        return std::nullopt;
    if (n_ == base_) {
        // Nothing to assign: the prefix itself is the single element.
        if (emitted_empty_) {
            done_ = true;
            return std::nullopt;
        }
        emitted_empty_ = true;
        ++yielded_;
        return coloring(q_, assign_);
    }

    // Resume the backtracking walk. pos_ == n_ means a coloring was just
    // yielded; stepping back to the last vertex continues the search.
    if (pos_ == n_)
        --pos_;

    while (pos_ >= base_) {
        const int limit = std::min(q_, max_before_[pos_] + 1);
        int c = assign_[pos_] + 1;
        while (c <= limit && !valid_at(pos_, c))
            ++c;
        if (c <= limit) {
            assign_[pos_] = c;
            max_before_[pos_ + 1] = std::max(max_before_[pos_], c);
            ++pos_;
            if (pos_ == n_) {
                ++yielded_;
                return coloring(q_, assign_);
            }
            assign_[pos_] = 0;
        } else {
            assign_[pos_] = 0;
            --pos_;
        }
    }
    done_ = true;
    return std::nullopt;
}

std::vector<std::vector<int>> canonical_prefixes(const graph& g, int q, int depth) {
    depth = std::min(depth, g.vertex_count());
    std::vector<std::vector<int>> out;
    if (q == 0) {
        if (depth == 0)
            out.push_back({});
        return out;
    }
    std::vector<int> assign(depth, 0);
    std::vector<int> max_before(depth + 1, 0);
    int pos = 0;
    if (depth == 0) {
        out.push_back({});
        return out;
    }
    while (pos >= 0) {
        const int limit = std::min(q, max_before[pos] + 1);
        int c = assign[pos] + 1;
        auto ok = [&](int col) {
            for (vertex w : g.neighbors(pos)) {
                if (w >= pos)
                    break;
                if (assign[w] == col)
                    return false;
            }
            return true;
        };
        while (c <= limit && !ok(c))
            ++c;
        if (c <= limit) {
            assign[pos] = c;
            max_before[pos + 1] = std::max(max_before[pos], c);
            ++pos;
            if (pos == depth) {
                out.push_back(assign);
                --pos;
            } else {
                assign[pos] = 0;
            }
        } else {
            assign[pos] = 0;
            --pos;
        }
    }
    return out;
}

long long count_canonical_colorings(const graph& g, int q, long long limit) {
    coloring_stream stream(g, q);
    long long count = 0;
    while (stream.next()) {
        ++count;
        if (limit >= 0 && count >= limit)
            break;
    }
    return count;
}

}  // namespace kempe
