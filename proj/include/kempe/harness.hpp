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

#ifndef KEMPE_HARNESS_HPP
#define KEMPE_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace kempe {

/// One named reproduction check with its verdict.
struct harness_check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct harness_options {
    std::uint64_t seed = 0;
    int workers = 0;  // 0 = all
};

struct harness_result {
    std::vector<harness_check> checks;
    /// Per-instance records for the named graphs: name, chi, per-q search
    /// outcomes, clique summary, immersion and minor reports.
    nlohmann::ordered_json instances = nlohmann::ordered_json::array();

    bool all_passed() const;
};

/// Runs the desk-scale reproduction suite: the Catlin construction checks
/// (exact chromatic numbers, the q=5 / q=6 correct-coloring gap, the K6
/// minor), corpus validation plus the kempe-walk on the bundled 40-vertex
/// instance, the all-pairs backbone and swap-safety suites over seeded
/// random graphs, the
/// k-critical and uniquely-colorable families, and the strong-immersion
/// property over every clique the run produced. Prints one line per check to
/// `progress` when given.
harness_result run_harness(const harness_options& options, std::ostream* progress = nullptr);

nlohmann::ordered_json harness_report_json(const harness_result& result);

}  // namespace kempe

#endif
