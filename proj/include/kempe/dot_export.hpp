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

#ifndef KEMPE_DOT_EXPORT_HPP
#define KEMPE_DOT_EXPORT_HPP

#include <iosfwd>

#include "kempe/clique.hpp"
#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/minor.hpp"

namespace kempe {

/// Graphviz export. Color classes are painted when a coloring is given;
/// backbone edges ride a thick purple ribbon when a clique is given, with
/// anchors boxed.
void write_dot(std::ostream& out, const graph& g, const coloring* c = nullptr,
               const kempe_clique* clique = nullptr);

/// Branch sets as colored clusters.
void write_dot_minor(std::ostream& out, const graph& g, const minor_model& model);

}  // namespace kempe

#endif
