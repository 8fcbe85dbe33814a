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

#ifndef KEMPE_CLIQUE_HPP
#define KEMPE_CLIQUE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kempe/kempe_structures.hpp"

namespace kempe {

/// q critical anchors, one per color, pairwise joined by Kempe backbones:
/// the witness structure of a correct coloring.
struct kempe_clique {
    int q = 0;
    std::vector<vertex> anchors;     // anchors[c-1] is the color-c anchor
    std::vector<backbone> backbones; // all (q*q-q)/2 pairs, ordered by (i, j)

    const backbone& backbone_for(color_pair pair) const;
};

/// Searches for a Kempe clique in (g, c): a choice of one critical vertex per
/// color such that every pair lies in a common chain for its color pair.
/// Colors are tried in ascending candidate count, candidates in vertex-id
/// order, so the result is deterministic. Backbones come from find_backbone.
/// Throws std::invalid_argument when c is improper or some palette color is
/// unused (such a coloring cannot be correct).
std::optional<kempe_clique> find_kempe_clique(const graph& g, const coloring& c);

/// Same search against a precomputed critical set; used by the hot loops.
/// Assumes c proper and all colors used.
std::optional<kempe_clique> find_kempe_clique(const graph& g, const coloring& c,
                                              const critical_set& crit);

struct immersion_report {
    bool edge_disjoint = false;
    bool anchors_internal_free = false;
    std::vector<std::string> violations;

    bool strong() const { return edge_disjoint && anchors_internal_free; }
};

/// Checks the strong-immersion properties of a clique: no two backbones share
/// an edge, and no anchor appears as an internal vertex of any backbone.
/// Structural defects (wrong backbone count, mismatched endpoints, paths that
/// are not paths of g, ...) throw std::invalid_argument instead of producing
/// a verdict.
immersion_report verify_strong_immersion(const graph& g, const kempe_clique& clique);

}  // namespace kempe

#endif
