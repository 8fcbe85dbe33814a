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

#include "oracles.hpp"

#include <functional>
#include <set>

namespace kempe::oracles {

namespace {

bool assignment_proper(const graph& g, const std::vector<int>& a) {
    for (vertex u = 0; u < g.vertex_count(); ++u)
        for (vertex v : g.neighbors(u))
            if (u < v && a[u] == a[v])
                return false;
    return true;
}

// Visits every assignment V -> {1..q} until fn returns true; returns whether
// fn ever did.
bool for_each_assignment(int n, int q, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> a(n, 1);
    if (n == 0)
        return fn(a);
    if (q == 0)
        return false;
    for (;;) {
        if (fn(a))
            return true;
        int pos = n - 1;
        while (pos >= 0 && a[pos] == q) {
            a[pos] = 1;
            --pos;
        }
        if (pos < 0)
            return false;
        ++a[pos];
    }
}

std::vector<int> canonical_form(const std::vector<int>& a, int q) {
    std::vector<int> relabel(q + 1, 0);
    std::vector<int> out(a.size());
    int next = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (relabel[a[i]] == 0)
            relabel[a[i]] = ++next;
        out[i] = relabel[a[i]];
    }
    return out;
}

bool naive_critical(const graph& g, const std::vector<int>& a, int q, vertex v) {
    std::set<int> others;
    for (vertex w : g.neighbors(v))
        if (a[w] != a[v])
            others.insert(a[w]);
    return static_cast<int>(others.size()) == q - 1;
}

// Component id of v inside the subgraph induced by colors {i, j}; naive BFS
// with a std::set frontier.
int naive_chain_id(const graph& g, const std::vector<int>& a, int i, int j, vertex v,
                   const std::vector<vertex>& representatives) {
    // representatives: all (i, j)-colored vertices; component id = index of the
    // smallest representative reachable from v.
    std::set<vertex> seen{v};
    std::vector<vertex> stack{v};
    while (!stack.empty()) {
        vertex u = stack.back();
        stack.pop_back();
        for (vertex w : g.neighbors(u))
            if ((a[w] == i || a[w] == j) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    for (std::size_t r = 0; r < representatives.size(); ++r)
        if (seen.count(representatives[r]))
            return static_cast<int>(r);
    return -1;
}

}  // namespace

int brute_chromatic_number(const graph& g) {
    if (g.vertex_count() == 0)
        return 0;
    for (int q = 1;; ++q) {
        if (for_each_assignment(g.vertex_count(), q,
                                [&](const std::vector<int>& a) { return assignment_proper(g, a); }))
            return q;
    }
}

long long brute_proper_assignment_count(const graph& g, int q) {
    long long count = 0;
    for_each_assignment(g.vertex_count(), q, [&](const std::vector<int>& a) {
        if (assignment_proper(g, a))
            ++count;
        return false;
    });
    return count;
}

long long brute_canonical_count(const graph& g, int q) {
    std::set<std::vector<int>> canon;
    for_each_assignment(g.vertex_count(), q, [&](const std::vector<int>& a) {
        if (assignment_proper(g, a))
            canon.insert(canonical_form(a, q));
        return false;
    });
    return static_cast<long long>(canon.size());
}

bool brute_is_correct(const graph& g, const std::vector<int>& a, int q) {
    if (!assignment_proper(g, a))
        return false;
    std::vector<std::vector<vertex>> criticals(q);
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (naive_critical(g, a, q, v))
            criticals[a[v] - 1].push_back(v);
    for (int c = 0; c < q; ++c)
        if (criticals[c].empty())
            return false;

    // All (i, j)-colored vertices, used as component representatives.
    auto class_of = [&](int i, int j) {
        std::vector<vertex> vs;
        for (vertex v = 0; v < g.vertex_count(); ++v)
            if (a[v] == i || a[v] == j)
                vs.push_back(v);
        return vs;
    };

    // Transversal search over every combination of one critical vertex per
    // color; plain nested recursion, no ordering tricks.
    std::vector<vertex> chosen(q, -1);
    std::function<bool(int)> pick = [&](int color) -> bool {
        if (color > q)
            return true;
        for (vertex v : criticals[color - 1]) {
            bool ok = true;
            for (int prev = 1; prev < color && ok; ++prev) {
                int i = prev, j = color;
                auto reps = class_of(i, j);
                if (naive_chain_id(g, a, i, j, v, reps) !=
                    naive_chain_id(g, a, i, j, chosen[prev - 1], reps))
                    ok = false;
            }
            if (!ok)
                continue;
            chosen[color - 1] = v;
            if (pick(color + 1))
                return true;
            chosen[color - 1] = -1;
        }
        return false;
    };
    return pick(1);
}

bool brute_correct_coloring_exists(const graph& g, int q) {
    return for_each_assignment(g.vertex_count(), q, [&](const std::vector<int>& a) {
        return assignment_proper(g, a) && brute_is_correct(g, a, q);
    });
}

bool brute_minor_exists(const graph& g, int q) {
    const int n = g.vertex_count();
    if (q < 1)
        return false;
    // owner in {0 (unused), 1..q}
    std::vector<int> owner(n, 0);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) {
            std::vector<std::vector<vertex>> sets(q);
            for (vertex u = 0; u < n; ++u)
                if (owner[u] > 0)
                    sets[owner[u] - 1].push_back(u);
            for (int s = 0; s < q; ++s) {
                if (sets[s].empty())
                    return false;
                std::set<vertex> inside(sets[s].begin(), sets[s].end());
                std::set<vertex> seen{sets[s].front()};
                std::vector<vertex> stack{sets[s].front()};
                while (!stack.empty()) {
                    vertex u = stack.back();
                    stack.pop_back();
                    for (vertex w : g.neighbors(u))
                        if (inside.count(w) && !seen.count(w)) {
                            seen.insert(w);
                            stack.push_back(w);
                        }
                }
                if (seen.size() != inside.size())
                    return false;
            }
            for (int s = 0; s < q; ++s)
                for (int t = s + 1; t < q; ++t) {
                    bool touch = false;
                    for (vertex u : sets[s]) {
                        for (vertex w : g.neighbors(u))
                            if (owner[w] == t + 1) {
                                touch = true;
                                break;
                            }
                        if (touch)
                            break;
                    }
                    if (!touch)
                        return false;
                }
            return true;
        }
        for (int o = 0; o <= q; ++o) {
            owner[v] = o;
            if (place(v + 1))
                return true;
        }
        owner[v] = 0;
        return false;
    };
    return place(0);
}

}  // namespace kempe::oracles
