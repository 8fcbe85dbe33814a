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

// Benchmark: serial reference kernels against the OpenMP ones on the
// reproduction workloads. Run with no arguments; pass a repeat count to
// smooth the timings.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "kempe/generators.hpp"
#include "kempe/search.hpp"

using namespace kempe;

namespace {

using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int repeats) {
    double best = 1e100;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = clock_type::now();
        fn();
        auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

struct workload {
    std::string name;
    graph g;
    int q;
    search_strategy strategy;
    search_budget budget;
    std::uint64_t seed;
};

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    const int threads = omp_get_max_threads();

    std::vector<workload> workloads;
    workloads.push_back({"catlin(2,2) q=5 exhaustive (nonexistence proof)", make_catlin(2, 2), 5,
                         search_strategy::exhaustive, {}, 0});
    workloads.push_back({"catlin(2,2) q=6 exhaustive (full stream)", make_catlin(2, 2), 6,
                         search_strategy::exhaustive,
                         {.max_colorings = 10'000'000, .max_swaps = 0, .max_restarts = 1}, 0});
    workloads.push_back({"catlin(2,3) q=8 exhaustive (nonexistence proof)", make_catlin(2, 3), 8,
                         search_strategy::exhaustive, {}, 0});
    {
        search_budget walk;
        walk.max_swaps = 400'000;
        walk.max_restarts = 16;
        workloads.push_back({"catlin(2,2) q=5 kempe-walk (all restarts exhaust)",
                             make_catlin(2, 2), 5, search_strategy::kempe_walk, walk, 3});
        workloads.push_back({"gnp(24,0.5) q=9 kempe-walk (early find)",
                             make_random_gnp(24, 0.5, 12), 9, search_strategy::kempe_walk, walk,
                             3});
    }

    std::printf("threads available: %d, repeats per timing: %d\n\n", threads, repeats);
    std::printf("%-52s %12s %12s %8s\n", "workload", "serial ms", "parallel ms", "speedup");
    for (const auto& w : workloads) {
        search_outcome serial_out, par_out;
        double serial_ms = time_ms(
            [&] {
                serial_out =
                    search_correct_coloring_serial(w.g, w.q, w.strategy, w.budget, w.seed);
            },
            repeats);
        double par_ms = time_ms(
            [&] {
                par_out =
                    search_correct_coloring(w.g, w.q, w.strategy, w.budget, w.seed, threads);
            },
            repeats);
        const bool agree = serial_out.status == par_out.status &&
                           serial_out.stats.colorings_examined == par_out.stats.colorings_examined &&
                           serial_out.stats.swaps == par_out.stats.swaps;
        std::printf("%-52s %12.2f %12.2f %7.2fx %s\n", w.name.c_str(), serial_ms, par_ms,
                    serial_ms / par_ms, agree ? "" : "MISMATCH");
    }

    // A heavier synthetic stream: count-style exhaustive scan where the
    // subtree split has room to spread.
    {
        graph g = make_random_gnp(21, 0.45, 5);
        search_budget big;
        big.max_colorings = 2'000'000;
        search_outcome serial_out, par_out;
        double serial_ms = time_ms(
            [&] {
                serial_out = search_correct_coloring_serial(g, 4, search_strategy::exhaustive, big,
                                                            0);
            },
            repeats);
        double par_ms = time_ms(
            [&] {
                par_out = search_correct_coloring(g, 4, search_strategy::exhaustive, big, 0,
                                                  threads);
            },
            repeats);
        const bool agree = serial_out.status == par_out.status &&
                           serial_out.stats.colorings_examined == par_out.stats.colorings_examined;
        std::printf("%-52s %12.2f %12.2f %7.2fx %s\n", "gnp(21,0.45) q=4 exhaustive (capped scan)",
                    serial_ms, par_ms, serial_ms / par_ms, agree ? "" : "MISMATCH");
    }
    return 0;
}
