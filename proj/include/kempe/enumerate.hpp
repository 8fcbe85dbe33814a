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

#ifndef KEMPE_ENUMERATE_HPP
#define KEMPE_ENUMERATE_HPP

#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Streams every canonical proper q-coloring of g exactly once, in the
/// deterministic order of the underlying backtracking: vertices are colored
/// in id order and color j+1 may first appear only after color j (one
/// representative per palette-permutation class). The stream is empty when
/// no proper q-coloring exists.
class coloring_stream {
public:
    coloring_stream(const graph& g, int q);

    /// Restricts the stream to completions of a fixed partial assignment of
    /// vertices 0..prefix.size()-1. Completions appear in the same relative
    /// order as in the full stream.
    coloring_stream(const graph& g, int q, std::vector<int> prefix);

    std::optional<coloring> next();
    long long yielded() const { return yielded_; }

private:
    const graph* g_;
    int q_;
    int n_;
    int base_;  // first free position
    bool done_ = false;
    bool emitted_empty_ = false;
    std::vector<int> assign_;
    std::vector<int> max_before_;  // max color among positions < i (prefix included)
    int pos_;
    long long yielded_ = 0;

    bool valid_at(int pos, int c) const;
};

/// Canonical proper partial assignments of vertices 0..depth-1, in stream
/// order. The full stream is the concatenation of the completion streams of
/// these prefixes.
std::vector<std::vector<int>> canonical_prefixes(const graph& g, int q, int depth);

/// Number of canonical proper q-colorings; stops early at `limit` when
/// nonnegative.
long long count_canonical_colorings(const graph& g, int q, long long limit = -1);

}  // namespace kempe

#endif
