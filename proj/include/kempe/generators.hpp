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

#ifndef KEMPE_GENERATORS_HPP
#define KEMPE_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "kempe/graph.hpp"

namespace kempe {

graph make_cycle(int n);     // n >= 1; n == 1 is a lone vertex, n == 2 a single edge
graph make_complete(int k);  // k >= 1
graph make_path(int n);      // n >= 1
graph make_wheel(int rim);   // rim >= 3; hub is vertex `rim`

/// Erdos-Renyi G(n, p). Pairs (u, v), u < v, are drawn in lexicographic order
/// from a seeded generator, so a fixed (n, p, seed) always yields the same
/// graph on every platform.
graph make_random_gnp(int n, double p, std::uint64_t seed);

/// Uniform-ish random tree: vertex v >= 1 attaches to a seeded random earlier
/// vertex. Deterministic for a fixed (n, seed).
graph make_random_tree(int n, std::uint64_t seed);

/// Lexicographic product g[h]: vertices are pairs (u, x) flattened as
/// u * |V(h)| + x; (u, x) ~ (v, y) iff u ~ v in g, or u = v and x ~ y in h.
graph lexicographic_product(const graph& g, const graph& h);

/// Catlin's construction C_{2n+1}[K_k].
graph make_catlin(int n, int k);

/// Named-family dispatch used by the CLI and the source loader.
struct family_params {
    std::string family;  // cycle | complete | path | wheel | random_gnp | random_tree | catlin
    int n = 0;
    int k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

graph generate(const family_params& params);
std::string family_label(const family_params& params);

}  // namespace kempe

#endif
