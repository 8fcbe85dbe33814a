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

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "kempe/chromatic.hpp"
#include "kempe/corpus.hpp"
#include "kempe/dot_export.hpp"
#include "kempe/enumerate.hpp"
#include "kempe/generators.hpp"
#include "kempe/graph_io.hpp"
#include "kempe/harness.hpp"
#include "kempe/minor.hpp"
#include "kempe/reports.hpp"
#include "kempe/search.hpp"

namespace {

using namespace kempe;

// Exit codes shared across subcommands: 0 found/success, 1 budget exhausted
// (or property not satisfied), 2 input error, 3 proven nonexistent.
constexpr int exit_found = 0;
constexpr int exit_budget = 1;
constexpr int exit_input_error = 2;
constexpr int exit_nonexistent = 3;

struct common_opts {
    std::string graph_text;
    family_params family;
    std::string coloring_path;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    int workers = 0;
};

void add_graph_options(CLI::App* cmd, common_opts& opts) {
    auto* graph_opt = cmd->add_option("--graph", opts.graph_text,
                                      "graph source: DIMACS path, '-' (stdin), corpus:NAME, or "
                                      "edges:PATH");
    auto* family_opt =
        cmd->add_option("--family", opts.family.family,
                        "generator family (cycle, complete, path, wheel, random_gnp, "
                        "random_tree, catlin)");
    cmd->add_option("--n", opts.family.n, "family size parameter");
    cmd->add_option("--k", opts.family.k, "family order parameter (complete, catlin)");
    cmd->add_option("--p", opts.family.p, "edge probability (random_gnp)");
    cmd->add_option("--gen-seed", opts.family.seed, "generator seed (random families)");
    graph_opt->excludes(family_opt);
}

void add_output_options(CLI::App* cmd, common_opts& opts) {
    cmd->add_option("--format", opts.format, "output format: text, json, dot")
        ->envname("KEMPE_FORMAT")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--out", opts.out_path, "write the report to this path instead of stdout");
}

void add_run_options(CLI::App* cmd, common_opts& opts) {
    cmd->add_option("--seed", opts.seed, "master seed for randomized strategies")
        ->envname("KEMPE_SEED");
    cmd->add_option("--workers", opts.workers, "worker threads (0 = machine parallelism)")
        ->envname("KEMPE_WORKERS");
}

graph resolve_graph(const common_opts& opts, std::string& label) {
    if (!opts.family.family.empty()) {
        label = family_label(opts.family);
        return generate(opts.family);
    }
    if (opts.graph_text.empty())
        throw CLI::ValidationError("--graph or --family is required");
    graph_source src = parse_graph_source(opts.graph_text);
    label = src.label;
    return load_graph(src);
}

coloring resolve_coloring(const common_opts& opts, const graph& g, int q_override = 0) {
    if (opts.coloring_path.empty())
        throw CLI::ValidationError("--coloring FILE is required for this command");
    coloring c = load_coloring_file(opts.coloring_path, q_override);
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("coloring covers " + std::to_string(c.size()) +
                                    " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    return c;
}

// Writes to --out or stdout.
void emit(const common_opts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << "\n";
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out)
        throw std::runtime_error("cannot write " + opts.out_path);
    out << text;
    if (!text.empty() && text.back() != '\n')
        out << "\n";
}

std::pair<int, int> parse_int_pair(const std::string& text, const char* what) {
    std::istringstream in(text);
    int a, b;
    char comma;
    if (!(in >> a >> comma >> b) || comma != ',')
        throw std::invalid_argument(std::string(what) + " expects the form A,B");
    return {a, b};
}

int cmd_gen(const common_opts& opts) {
    std::string label;
    graph g = resolve_graph(opts, label);
    if (opts.format == "dot") {
        std::ostringstream out;
        write_dot(out, g);
        emit(opts, out.str());
    } else {
        emit(opts, dimacs_string(g));
    }
    return exit_found;
}

int cmd_chi(const common_opts& opts, long long node_budget) {
    std::string label;
    graph g = resolve_graph(opts, label);
    chromatic_result r = chromatic_number(g, node_budget);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = report_schema_version;
        j["graph"] = graph_json(g, label);
        j["chi"] = r.k;
        j["witness"] = coloring_json(r.witness);
        emit(opts, j.dump(2));
    } else if (opts.format == "dot") {
        std::ostringstream out;
        write_dot(out, g, &r.witness);
        emit(opts, out.str());
    } else {
        emit(opts, std::to_string(r.k));
    }
    return exit_found;
}

int cmd_critical(const common_opts& opts) {
    std::string label;
    graph g = resolve_graph(opts, label);
    coloring c = resolve_coloring(opts, g);
    critical_set crit = critical_vertices(g, c);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = report_schema_version;
        j["graph"] = graph_json(g, label);
        j["q"] = c.palette_size();
        j["critical"] = json::array();
        for (int col = 1; col <= crit.q; ++col)
            j["critical"].push_back({{"color", col}, {"vertices", crit.of_color(col)}});
        j["total"] = crit.total();
        emit(opts, j.dump(2));
    } else {
        std::ostringstream out;
        for (int col = 1; col <= crit.q; ++col) {
            out << "color " << col << ":";
            for (vertex v : crit.of_color(col))
                out << " " << v;
            out << "\n";
        }
        out << "total " << crit.total() << "\n";
        emit(opts, out.str());
    }
    return exit_found;
}

int cmd_chains(const common_opts& opts, const std::string& pair_text) {
    std::string label;
    graph g = resolve_graph(opts, label);
    coloring c = resolve_coloring(opts, g);
    auto [i, j] = parse_int_pair(pair_text, "--pair");
    color_pair pair(i, j);
    auto chains = kempe_chains(g, c, pair);
    if (opts.format == "json") {
        json out;
        out["schema_version"] = report_schema_version;
        out["graph"] = graph_json(g, label);
        out["pair"] = {pair.i, pair.j};
        out["chains"] = json::array();
        for (const auto& chain : chains)
            out["chains"].push_back(chain_json(chain));
        emit(opts, out.dump(2));
    } else {
        std::ostringstream out;
        out << chains.size() << " chain(s) for pair (" << pair.i << "," << pair.j << ")\n";
        for (const auto& chain : chains) {
            out << " ";
            for (vertex v : chain.members)
                out << " " << v;
            out << "\n";
        }
        emit(opts, out.str());
    }
    return exit_found;
}

int cmd_backbone(const common_opts& opts, const std::string& anchors_text) {
    std::string label;
    graph g = resolve_graph(opts, label);
    coloring c = resolve_coloring(opts, g);
    auto [u, v] = parse_int_pair(anchors_text, "--anchors");
    auto bb = find_backbone(g, c, u, v);
    if (!bb) {
        emit(opts, opts.format == "json" ? "{\"backbone\": null}"
                                         : "no backbone: anchors lie in different chains");
        return exit_nonexistent;
    }
    if (opts.format == "json") {
        json j;
        j["schema_version"] = report_schema_version;
        j["graph"] = graph_json(g, label);
        j["backbone"] = backbone_json(*bb);
        emit(opts, j.dump(2));
    } else {
        std::ostringstream out;
        out << "backbone (" << bb->pair.i << "," << bb->pair.j << ") length " << bb->length()
            << ":";
        for (vertex w : bb->path)
            out << " " << w;
        emit(opts, out.str());
    }
    return exit_found;
}

int cmd_eliminate(const common_opts& opts, const std::string& colors_text) {
    std::string label;
    graph g = resolve_graph(opts, label);
    coloring c = resolve_coloring(opts, g);
    auto [a, b] = parse_int_pair(colors_text, "--colors");
    eliminate_outcome out = eliminate_critical_color(g, c, a, b);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = report_schema_version;
        j["graph"] = graph_json(g, label);
        j["colors"] = {a, b};
        j["outcome"] = out.backbone_found ? "BackboneFound" : "AllEliminated";
        j["swaps"] = out.swaps;
        if (out.found)
            j["backbone"] = backbone_json(*out.found);
        j["final_coloring"] = coloring_json(out.final_coloring);
        emit(opts, j.dump(2));
    } else {
        std::ostringstream text;
        if (out.backbone_found) {
            text << "BackboneFound after " << out.swaps << " swap(s), length "
                 << out.found->length();
        } else {
            text << "AllEliminated after " << out.swaps << " swap(s)";
        }
        emit(opts, text.str());
    }
    return exit_found;
}

int cmd_clique(const common_opts& opts) {
    std::string label;
    graph g = resolve_graph(opts, label);
    coloring c = resolve_coloring(opts, g);
    auto clique = find_kempe_clique(g, c);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = report_schema_version;
        j["graph"] = graph_json(g, label);
        j["q"] = c.palette_size();
        j["found"] = clique.has_value();
        if (clique) {
            j["clique"] = clique_json(*clique);
            j["immersion"] = immersion_json(verify_strong_immersion(g, *clique));
        }
        emit(opts, j.dump(2));
    } else if (opts.format == "dot" && clique) {
        std::ostringstream out;
        write_dot(out, g, &c, &*clique);
        emit(opts, out.str());
    } else {
        if (clique) {
            std::ostringstream out;
            out << "clique found, anchors:";
            for (vertex v : clique->anchors)
                out << " " << v;
            out << ", " << clique->backbones.size() << " backbones";
            emit(opts, out.str());
        } else {
            emit(opts, "no Kempe clique in this coloring");
        }
    }
    return clique ? exit_found : exit_nonexistent;
}

int cmd_search(const common_opts& opts, int q, const std::string& q_range_text,
               const std::string& strategy_text, long long budget_value, int restarts) {
    std::string label;
    graph g = resolve_graph(opts, label);

    const search_strategy strategy = strategy_text == "kempe-walk" ? search_strategy::kempe_walk
                                                                   : search_strategy::exhaustive;

    int q_lo = q, q_hi = q;
    if (!q_range_text.empty()) {
        std::tie(q_lo, q_hi) = parse_int_pair(q_range_text, "--q-range");
        if (q_lo > q_hi || q_lo < 1)
            throw std::invalid_argument("--q-range A,B needs 1 <= A <= B");
    } else if (q < 1) {
        // Default probe range: chi(G) .. chi(G)+3, reported per q.
        const int chi_g = chromatic_number(g).k;
        q_lo = std::max(1, chi_g);
        q_hi = q_lo + 3;
    }

    search_budget budget;
    if (budget_value > 0) {
        budget.max_colorings = budget_value;
        budget.max_swaps = budget_value;
    }
    if (restarts > 0)
        budget.max_restarts = restarts;

    json runs = json::array();
    bool any_found = false, all_nonexistent = true;
    std::optional<search_outcome> first_found;
    for (int probe = q_lo; probe <= q_hi; ++probe) {
        search_outcome out =
            search_correct_coloring(g, probe, strategy, budget, opts.seed, opts.workers);
        any_found |= out.status == search_status::found;
        all_nonexistent &= out.status == search_status::proven_nonexistent;
        runs.push_back(
            search_report_json(g, label, probe, strategy, opts.seed, opts.workers, out));
        if (out.status == search_status::found && !first_found)
            first_found = std::move(out);
    }

    if (opts.format == "dot") {
        if (!first_found)
            throw std::runtime_error("dot output needs a Found outcome");
        std::ostringstream out;
        write_dot(out, g, &*first_found->found_coloring,
                  first_found->clique ? &*first_found->clique : nullptr);
        emit(opts, out.str());
    } else if (opts.format == "json") {
        if (runs.size() == 1)
            emit(opts, runs[0].dump(2));
        else {
            json j;
            j["schema_version"] = report_schema_version;
            j["runs"] = runs;
            emit(opts, j.dump(2));
        }
    } else {
        std::ostringstream out;
        for (const auto& run : runs)
            out << "q=" << run["q"] << " " << run["status"].get<std::string>() << " (examined "
                << run["stats"]["colorings_examined"] << " colorings, " << run["stats"]["swaps"]
                << " swaps)\n";
        emit(opts, out.str());
    }
    if (any_found)
        return exit_found;
    return all_nonexistent ? exit_nonexistent : exit_budget;
}

int cmd_immersion_verify(const common_opts& opts, const std::string& clique_path) {
    std::string label;
    graph g = resolve_graph(opts, label);
    std::ifstream in(clique_path);
    if (!in)
        throw std::runtime_error("cannot open " + clique_path);
    json cj = json::parse(in);
    if (cj.contains("clique"))
        cj = cj["clique"];
    kempe_clique clique = clique_from_json(cj);
    immersion_report rep = verify_strong_immersion(g, clique);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = report_schema_version;
        j["graph"] = graph_json(g, label);
        j["immersion"] = immersion_json(rep);
        emit(opts, j.dump(2));
    } else {
        std::ostringstream out;
        out << "edge_disjoint=" << (rep.edge_disjoint ? "true" : "false")
            << " anchors_internal_free=" << (rep.anchors_internal_free ? "true" : "false");
        for (const auto& v : rep.violations)
            out << "\nviolation: " << v;
        emit(opts, out.str());
    }
    return rep.strong() ? exit_found : exit_budget;
}

int cmd_minor(const common_opts& opts, long long node_limit) {
    std::string label;
    graph g = resolve_graph(opts, label);
    coloring c = resolve_coloring(opts, g);
    auto clique = find_kempe_clique(g, c);
    if (!clique) {
        emit(opts, "no Kempe clique in this coloring; nothing to grow");
        return exit_nonexistent;
    }
    auto model = grow_minor_from_clique(g, c, *clique, node_limit);
    if (!model) {
        emit(opts, "minor growth heuristic failed under the node limit");
        return exit_budget;
    }
    minor_report rep = verify_minor_model(g, *model);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = report_schema_version;
        j["graph"] = graph_json(g, label);
        j["minor"] = minor_json(*model, rep);
        emit(opts, j.dump(2));
    } else if (opts.format == "dot") {
        std::ostringstream out;
        write_dot_minor(out, g, *model);
        emit(opts, out.str());
    } else {
        std::ostringstream out;
        out << (rep.valid ? "valid" : "INVALID") << " K" << model->q
            << " model, hadwiger_lower_bound=" << rep.hadwiger_lower_bound << "\n";
        for (int s = 0; s < model->q; ++s) {
            out << "branch " << (s + 1) << ":";
            for (vertex v : model->branch_sets[s])
                out << " " << v;
            out << "\n";
        }
        emit(opts, out.str());
    }
    return rep.valid ? exit_found : exit_budget;
}

int cmd_corpus(const common_opts& opts, bool list_mode, const std::string& name) {
    if (list_mode) {
        std::ostringstream out;
        for (const auto& e : corpus_manifest()) {
            out << e.name << ": file=" << e.file << " n=" << e.n;
            if (e.regular_degree)
                out << " regular_degree=" << *e.regular_degree;
            if (e.chi)
                out << " chi=" << *e.chi;
            out << "\n";
        }
        emit(opts, out.str());
        return exit_found;
    }
    std::vector<std::string> names;
    if (!name.empty())
        names.push_back(name);
    else
        for (const auto& e : corpus_manifest())
            names.push_back(e.name);
    bool all_ok = true;
    std::ostringstream out;
    for (const auto& n : names) {
        auto failures = corpus_check(n);
        all_ok &= failures.empty();
        out << n << ": " << (failures.empty() ? "ok" : failures.front()) << "\n";
    }
    emit(opts, out.str());
    return all_ok ? exit_found : exit_budget;
}

int cmd_harness(const common_opts& opts) {
    harness_options hopts;
    hopts.seed = opts.seed;
    hopts.workers = opts.workers;
    harness_result result = run_harness(hopts, &std::cout);
    int passed = 0;
    for (const auto& c : result.checks)
        passed += c.passed ? 1 : 0;
    std::cout << passed << "/" << result.checks.size() << " checks passed\n";
    if (!opts.out_path.empty() || opts.format == "json") {
        common_opts jopts = opts;
        if (jopts.out_path.empty())
            jopts.format = "json";
        emit(jopts, harness_report_json(result).dump(2));
    }
    return result.all_passed() ? exit_found : exit_budget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kempe: a laboratory for Kempe chains, backbones, cliques and clique minors"};
    app.require_subcommand(1);

    common_opts opts;
    long long budget_value = 0;
    long long chi_budget = default_chi_node_budget;
    long long minor_nodes = default_minor_node_limit;
    int q = 0, restarts = 0;
    std::string q_range, strategy = "exhaustive", pair_text, anchors_text, colors_text;
    std::string clique_path, corpus_name;

    auto* gen = app.add_subcommand("gen", "emit a generated or loaded graph as DIMACS");
    add_graph_options(gen, opts);
    add_output_options(gen, opts);

    auto* chi = app.add_subcommand("chi", "exact chromatic number with witness");
    add_graph_options(chi, opts);
    add_output_options(chi, opts);
    chi->add_option("--node-budget", chi_budget, "search node budget for the exact solver");

    auto* critical = app.add_subcommand("critical", "critical vertices per color");
    add_graph_options(critical, opts);
    add_output_options(critical, opts);
    critical->add_option("--coloring", opts.coloring_path, "coloring JSON file")->required();

    auto* chains = app.add_subcommand("chains", "Kempe chains of one color pair");
    add_graph_options(chains, opts);
    add_output_options(chains, opts);
    chains->add_option("--coloring", opts.coloring_path, "coloring JSON file")->required();
    chains->add_option("--pair", pair_text, "color pair i,j")->required();

    auto* backbone_cmd = app.add_subcommand("backbone", "backbone between two critical anchors");
    add_graph_options(backbone_cmd, opts);
    add_output_options(backbone_cmd, opts);
    backbone_cmd->add_option("--coloring", opts.coloring_path, "coloring JSON file")->required();
    backbone_cmd->add_option("--anchors", anchors_text, "anchor vertices u,v")->required();

    auto* eliminate = app.add_subcommand("eliminate", "swap loop emptying one critical color");
    add_graph_options(eliminate, opts);
    add_output_options(eliminate, opts);
    eliminate->add_option("--coloring", opts.coloring_path, "coloring JSON file")->required();
    eliminate->add_option("--colors", colors_text, "colors a,b")->required();

    auto* clique_cmd = app.add_subcommand("clique", "find a Kempe clique in a given coloring");
    add_graph_options(clique_cmd, opts);
    add_output_options(clique_cmd, opts);
    clique_cmd->add_option("--coloring", opts.coloring_path, "coloring JSON file")->required();

    auto* search = app.add_subcommand("search", "search for a correct q-coloring");
    add_graph_options(search, opts);
    add_output_options(search, opts);
    add_run_options(search, opts);
    search->add_option("--q", q, "palette size to probe");
    search->add_option("--q-range", q_range, "probe palette sizes A,B inclusive");
    search->add_option("--strategy", strategy, "exhaustive or kempe-walk")
        ->check(CLI::IsMember({"exhaustive", "kempe-walk"}));
    search->add_option("--budget", budget_value,
                       "budget: canonical colorings (exhaustive) or swaps (kempe-walk)")
        ->envname("KEMPE_BUDGET");
    search->add_option("--restarts", restarts, "kempe-walk restart cap");

    auto* immersion = app.add_subcommand("immersion-verify", "strong-immersion check of a clique");
    add_graph_options(immersion, opts);
    add_output_options(immersion, opts);
    immersion->add_option("--clique", clique_path, "clique JSON file (or a search report)")
        ->required();

    auto* minor = app.add_subcommand("minor", "grow and verify a clique-seeded minor model");
    add_graph_options(minor, opts);
    add_output_options(minor, opts);
    minor->add_option("--coloring", opts.coloring_path, "coloring JSON file")->required();
    minor->add_option("--node-limit", minor_nodes, "growth backtracking node limit");

    auto* corpus = app.add_subcommand("corpus", "list or check bundled instances");
    auto* corpus_list = corpus->add_subcommand("list", "list corpus entries");
    auto* corpus_checkcmd = corpus->add_subcommand("check", "validate corpus entries");
    corpus_checkcmd->add_option("name", corpus_name, "entry to check (default: all)");
    corpus->require_subcommand(1);
    add_output_options(corpus_list, opts);
    add_output_options(corpus_checkcmd, opts);

    auto* harness = app.add_subcommand("harness", "run the full reproduction suite");
    add_output_options(harness, opts);
    add_run_options(harness, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;  // 0 is --help / --version
    }

    try {
        if (gen->parsed())
            return cmd_gen(opts);
        if (chi->parsed())
            return cmd_chi(opts, chi_budget);
        if (critical->parsed())
            return cmd_critical(opts);
        if (chains->parsed())
            return cmd_chains(opts, pair_text);
        if (backbone_cmd->parsed())
            return cmd_backbone(opts, anchors_text);
        if (eliminate->parsed())
            return cmd_eliminate(opts, colors_text);
        if (clique_cmd->parsed())
            return cmd_clique(opts);
        if (search->parsed())
            return cmd_search(opts, q, q_range, strategy, budget_value, restarts);
        if (immersion->parsed())
            return cmd_immersion_verify(opts, clique_path);
        if (minor->parsed())
            return cmd_minor(opts, minor_nodes);
        if (corpus->parsed())
            return cmd_corpus(opts, corpus_list->parsed(), corpus_name);
        if (harness->parsed())
            return cmd_harness(opts);
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
