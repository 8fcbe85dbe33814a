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

#ifndef KEMPE_CORPUS_HPP
#define KEMPE_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// One manifest row of the bundled instance corpus.
struct corpus_entry {
    std::string name;
    std::string file;
    std::string checksum;  // fnv1a-64 of the raw file bytes, hex
    int n = 0;
    std::optional<int> regular_degree;
    std::optional<int> chi;
};

/// Corpus directory resolution: $KEMPE_CORPUS_DIR when set, otherwise the
/// bundled data directory baked in at build time.
std::string corpus_dir();

std::vector<corpus_entry> corpus_manifest();

/// Loads a corpus graph by name, validating the checksum and every manifest
/// expectation (n, regularity, exact chromatic number). The matched manifest
/// row is copied to *entry_out when non-null.
graph load_corpus_graph(const std::string& name, corpus_entry* entry_out = nullptr);

/// Full validation of one entry: checksum, n, regularity and exact chromatic
/// number. Returns a list of failures, empty when the entry is good.
std::vector<std::string> corpus_check(const std::string& name);

}  // namespace kempe

#endif
