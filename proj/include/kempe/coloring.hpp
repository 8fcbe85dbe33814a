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

#ifndef KEMPE_COLORING_HPP
#define KEMPE_COLORING_HPP

#include <cstdint>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Total assignment vertex -> color over a palette {1..q}. The assignment is
/// validated on construction (every value in range); properness is a separate
/// check because several operations legitimately handle improper candidates.
class coloring {
public:
    coloring() = default;
    coloring(int palette_size, std::vector<int> assignment);

    int palette_size() const { return q_; }
    int size() const { return static_cast<int>(assign_.size()); }
    int color(vertex v) const { return assign_[v]; }
    const std::vector<int>& assignment() const { return assign_; }

    /// Class sizes indexed by color - 1.
    std::vector<int> class_sizes() const;
    bool uses_all_colors() const;
    int colors_used() const;

    /// Relabels colors by first use in vertex-id order: the first occurrence
    /// of color j+1 comes after the first occurrence of color j. Kempe
    /// structure is invariant under palette permutation, so this is the
    /// canonical representative of the coloring's equivalence class.
    coloring canonical() const;
    bool is_canonical() const;

    std::uint64_t fingerprint() const;
    std::uint64_t canonical_fingerprint() const { return canonical().fingerprint(); }

    bool operator==(const coloring&) const = default;

private:
    int q_ = 0;
    std::vector<int> assign_;
};

/// True iff no edge of g joins two equally colored vertices.
/// Throws if the assignment is not total over V(g).
bool is_proper(const graph& g, const coloring& c);

/// Recolors every vertex of color a to the smallest other color absent from
/// its neighborhood, leaving color a unused. Requires c proper and no
/// critical vertex of color a (throws std::invalid_argument otherwise).
coloring remove_color_class(const graph& g, const coloring& c, int a);

}  // namespace kempe

#endif
