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

#include "kempe/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <unordered_set>

#include "kempe/chromatic.hpp"
#include "kempe/enumerate.hpp"
#include "kempe/fnv.hpp"

namespace kempe {

namespace {

constexpr int split_target = 64;  // desired first-level subtree count, fixed
                                  // so that budgets and stats never depend on
                                  // the worker count

int choose_split_depth(const graph& g, int q, std::vector<std::vector<int>>& prefixes_out) {
    const int n = g.vertex_count();
    int depth = std::min(1, n);
    prefixes_out = canonical_prefixes(g, q, depth);
    while (depth < n && static_cast<int>(prefixes_out.size()) < split_target) {
        ++depth;
        prefixes_out = canonical_prefixes(g, q, depth);
    }
    return depth;
}

struct subtree_result {
    long long examined = 0;          // completions enumerated in this subtree
    bool truncated = false;          // per-subtree cap hit before exhaustion
    long long hit_index = -1;        // local index of the first clique, or -1
    std::optional<coloring> hit_coloring;
    std::optional<kempe_clique> hit_clique;
};

// Enumerates one subtree: completions of `prefix` in stream order, testing
// each coloring that uses the whole palette. Stops at the first hit, at the
// cap, or when `abort_before` says an earlier subtree already won.
subtree_result run_subtree(const graph& g, int q, const std::vector<int>& prefix, long long cap,
                           const std::atomic<long long>* winning_prefix, long long my_prefix) {
    subtree_result res;
    coloring_stream stream(g, q, prefix);
    while (res.examined < cap) {
        if (winning_prefix && (res.examined & 0x3ff) == 0 &&
            winning_prefix->load(std::memory_order_relaxed) < my_prefix)
            break;  // an earlier subtree already has a hit; this one is moot
        auto col = stream.next();
        if (!col) {
            return res;  // exhausted
        }
        ++res.examined;
        if (col->uses_all_colors()) {
            critical_set crit = critical_vertices(g, *col);
            if (auto clique = find_kempe_clique(g, *col, crit)) {
                res.hit_index = res.examined - 1;
                res.hit_coloring = std::move(col);
                res.hit_clique = std::move(clique);
                return res;
            }
        }
    }
    if (res.examined >= cap)
        res.truncated = stream.next().has_value();
    return res;
}

search_outcome reduce_exhaustive(const std::vector<subtree_result>& results) {
    search_outcome out;
    long long winner = -1;
    for (std::size_t p = 0; p < results.size(); ++p)
        if (results[p].hit_index >= 0) {
            winner = static_cast<long long>(p);
            break;
        }
    if (winner >= 0) {
        const subtree_result& w = results[winner];
        out.status = search_status::found;
        out.found_coloring = w.hit_coloring;
        out.clique = w.hit_clique;
        long long before = 0;
        for (long long p = 0; p < winner; ++p)
            before += results[p].examined;
        out.stats.colorings_examined = before + w.hit_index + 1;
    } else {
        bool truncated = false;
        long long total = 0;
        for (const auto& r : results) {
            total += r.examined;
            truncated = truncated || r.truncated;
        }
        out.status = truncated ? search_status::budget_exhausted
                               : search_status::proven_nonexistent;
        out.stats.colorings_examined = total;
    }
    out.stats.budget_consumed = out.stats.colorings_examined;
    return out;
}

search_outcome exhaustive_search(const graph& g, int q, const search_budget& budget, int workers,
                                 bool parallel) {
    if (q < 1)
        return {search_status::proven_nonexistent, std::nullopt, std::nullopt, {}};
    std::vector<std::vector<int>> prefixes;
    choose_split_depth(g, q, prefixes);
    const long long nprefix = static_cast<long long>(prefixes.size());
    if (nprefix == 0)
        return {search_status::proven_nonexistent, std::nullopt, std::nullopt, {}};
    const long long cap =
        std::max<long long>(1, (budget.max_colorings + nprefix - 1) / nprefix);

    std::vector<subtree_result> results(prefixes.size());
    if (!parallel) {
        for (std::size_t p = 0; p < prefixes.size(); ++p) {
            results[p] = run_subtree(g, q, prefixes[p], cap, nullptr, 0);
            if (results[p].hit_index >= 0)
                break;  // later subtrees cannot beat an earlier hit
        }
        return reduce_exhaustive(results);
    }

    std::atomic<long long> winning_prefix{std::numeric_limits<long long>::max()};
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (long long p = 0; p < nprefix; ++p) {
        if (winning_prefix.load(std::memory_order_relaxed) < p)
            continue;
        results[p] = run_subtree(g, q, prefixes[p], cap, &winning_prefix, p);
        if (results[p].hit_index >= 0) {
            long long cur = winning_prefix.load();
            while (p < cur && !winning_prefix.compare_exchange_weak(cur, p)) {
            }
        }
    }
    return reduce_exhaustive(results);
}

struct walk_result {
    bool found = false;
    long long swaps = 0;
    std::optional<coloring> hit_coloring;
    std::optional<kempe_clique> hit_clique;
};

// Proper q-coloring start: randomized DSATUR, padded onto palette q; when
// colors are left unused, singleton vertices are moved onto them so that a
// correct coloring is reachable at all (swaps never bring a dead color back).
std::optional<coloring> walk_start(const graph& g, int q, std::mt19937_64& rng) {
    const int n = g.vertex_count();
    for (int attempt = 0; attempt < 64; ++attempt) {
        coloring c = dsatur_randomized(g, rng());
        if (c.palette_size() > q)
            continue;
        std::vector<int> assign = c.assignment();
        coloring padded(q, std::move(assign));
        std::vector<int> sizes = padded.class_sizes();
        std::vector<int> out = padded.assignment();
        bool ok = true;
        for (int col = 1; col <= q && ok; ++col) {
            if (sizes[col - 1] > 0)
                continue;
            ok = false;
            for (vertex v = 0; v < n; ++v)
                if (sizes[out[v] - 1] >= 2) {
                    sizes[out[v] - 1]--;
                    out[v] = col;
                    sizes[col - 1]++;
                    ok = true;
                    break;
                }
        }
        if (ok)
            return coloring(q, std::move(out));
    }
    return std::nullopt;
}

// `winning_restart`, when given, lets a restart bail out once a lower index
// has already found a clique; such a restart can neither win nor contribute
// to the reported statistics.
walk_result run_walk_restart(const graph& g, int q, std::uint64_t restart_seed,
                             long long swap_budget, const std::atomic<int>* winning_restart,
                             int my_index) {
    walk_result res;
    const long long stagnation_limit = walk_stagnation_limit(g);
    const int npairs = q * (q - 1) / 2;
    std::mt19937_64 rng(restart_seed);

    auto start = walk_start(g, q, rng);
    if (!start)
        return res;
    coloring current = *start;

    std::unordered_set<std::uint64_t> visited;
    visited.insert(current.canonical_fingerprint());

    auto test = [&](const coloring& c) -> bool {
        critical_set crit = critical_vertices(g, c);
        if (!crit.covers_all_colors())
            return false;
        if (auto clique = find_kempe_clique(g, c, crit)) {
            res.found = true;
            res.hit_coloring = c;
            res.hit_clique = std::move(clique);
            return true;
        }
        return false;
    };
    if (test(current))
        return res;
    if (npairs == 0)
        return res;

    long long stale = 0;
    while (res.swaps < swap_budget) {
        if (winning_restart && (res.swaps & 0xff) == 0 &&
            winning_restart->load(std::memory_order_relaxed) < my_index)
            return res;
        // Uniform over pairs, then over that pair's chains.
        const int pair_idx = static_cast<int>(rng() % static_cast<std::uint64_t>(npairs));
        int i = 1, remaining = pair_idx;
        while (remaining >= q - i) {
            remaining -= q - i;
            ++i;
        }
        const color_pair pair(i, i + 1 + remaining);
        std::vector<kempe_chain> chains = kempe_chains(g, current, pair);
        ++res.swaps;
        if (chains.empty()) {
            if (++stale >= stagnation_limit)
                break;
            continue;
        }
        const kempe_chain& chain = chains[rng() % chains.size()];
        coloring candidate = kempe_swap(g, current, chain);
        if (!visited.insert(candidate.canonical_fingerprint()).second) {
            if (++stale >= stagnation_limit)
                break;  // revisits piling up: restart
            continue;
        }
        stale = 0;
        current = std::move(candidate);
        if (test(current))
            return res;
    }
    return res;
}

search_outcome reduce_walk(const std::vector<walk_result>& results, int restarts_launched) {
    search_outcome out;
    int winner = -1;
    for (int r = 0; r < restarts_launched; ++r)
        if (results[r].found) {
            winner = r;
            break;
        }
    const int last = winner >= 0 ? winner : restarts_launched - 1;
    for (int r = 0; r <= last; ++r)
        out.stats.swaps += results[r].swaps;
    out.stats.restarts = last + 1;
    out.stats.budget_consumed = out.stats.swaps;
    if (winner >= 0) {
        out.status = search_status::found;
        out.found_coloring = results[winner].hit_coloring;
        out.clique = results[winner].hit_clique;
    } else {
        out.status = search_status::budget_exhausted;
    }
    return out;
}

search_outcome walk_search(const graph& g, int q, const search_budget& budget,
                           std::uint64_t seed, int workers, bool parallel) {
    const int restarts = std::max(1, budget.max_restarts);
    const long long per_restart =
        std::max<long long>(1, (budget.max_swaps + restarts - 1) / restarts);
    std::vector<std::uint64_t> restart_seeds(restarts);
    std::uint64_t state = seed;
    for (int r = 0; r < restarts; ++r)
        restart_seeds[r] = splitmix64(state);

    std::vector<walk_result> results(restarts);
    if (!parallel) {
        int launched = 0;
        for (int r = 0; r < restarts; ++r) {
            results[r] = run_walk_restart(g, q, restart_seeds[r], per_restart, nullptr, r);
            ++launched;
            if (results[r].found)
                break;
        }
        return reduce_walk(results, launched);
    }

    std::atomic<int> best{std::numeric_limits<int>::max()};
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (int r = 0; r < restarts; ++r) {
        if (best.load(std::memory_order_relaxed) < r)
            continue;
        results[r] = run_walk_restart(g, q, restart_seeds[r], per_restart, &best, r);
        if (results[r].found) {
            int cur = best.load();
            while (r < cur && !best.compare_exchange_weak(cur, r)) {
            }
        }
    }
    return reduce_walk(results, restarts);
}

}  // namespace

long long walk_stagnation_limit(const graph& g) { return 50LL * std::max(1, g.vertex_count()); }

search_outcome search_correct_coloring(const graph& g, int q, search_strategy strategy,
                                       const search_budget& budget, std::uint64_t seed,
                                       int workers) {
    if (strategy == search_strategy::exhaustive)
        return exhaustive_search(g, q, budget, workers, true);
    return walk_search(g, q, budget, seed, workers, true);
}

search_outcome search_correct_coloring_serial(const graph& g, int q, search_strategy strategy,
                                              const search_budget& budget, std::uint64_t seed) {
    if (strategy == search_strategy::exhaustive)
        return exhaustive_search(g, q, budget, 1, false);
    return walk_search(g, q, budget, seed, 1, false);
}

}  // namespace kempe
