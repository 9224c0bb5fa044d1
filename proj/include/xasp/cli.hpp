/*
 * Copyright 2026 The xasp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xasp/aspif.hpp"
#include "xasp/assumption.hpp"
#include "xasp/explanation.hpp"
#include "xasp/graphdoc.hpp"
#include "xasp/parse.hpp"
#include "xasp/solver.hpp"
#include "xasp/support.hpp"

namespace xasp::cli {

struct Options {
    std::string input;
    std::string format = "native";
    std::optional<int> answer_set_index;
    std::optional<std::string> answer_set_lits;
    bool all_answer_sets = false;
    std::string atom;
    std::string assumption_set = "all";
    std::string output = "text";
    std::string out_dir;
    std::optional<int> limit;
    int branching_cap = 30;
    long long selection_cap = 10000;
};

namespace detail {

inline std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InputError("cannot open input file '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

inline int edit_distance(const std::string& a, const std::string& b) {
    std::vector<int> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        int diagonal = row[0];
        row[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            int previous = row[j];
            int substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, substitute});
            diagonal = previous;
        }
    }
    return row[b.size()];
}

inline AtomId resolve_atom(const GroundProgram& p, const std::string& name) {
    if (std::optional<AtomId> id = p.find_atom(name)) return *id;
    std::vector<std::pair<int, std::string>> scored;
    for (const std::string& candidate : p.atom_names()) {
        int d = edit_distance(name, candidate);
        if (d <= 3) scored.emplace_back(d, candidate);
    }
    std::sort(scored.begin(), scored.end());
    std::string message = "unknown atom '" + name + "'";
    if (!scored.empty()) {
        message += "; closest matches:";
        for (std::size_t i = 0; i < scored.size() && i < 3; ++i)
            message += (i ? ", " : " ") + scored[i].second;
    }
    throw InputError(message);
}

inline bool color_enabled() {
    const char* value = std::getenv("XASP_COLOR");
    return value && std::string(value) == "1";
}

inline std::string bold(const std::string& s) {
    return color_enabled() ? "\033[1m" + s + "\033[0m" : s;
}

inline std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out.empty() ? "atom" : out;
}

inline GroundProgram load_program(const Options& opt, std::ostream& err) {
    std::string text = read_input(opt.input);
    if (opt.format == "aspif") {
        AspifDiagnostics diagnostics;
        GroundProgram p = parse_aspif(text, &diagnostics);
        for (const std::string& w : diagnostics.warnings) err << "warning: " << w << "\n";
        return p;
    }
    return parse_program(text);
}

inline std::vector<AtomSet> enumerate_all(const GroundProgram& p, const Options& opt) {
    SolveOptions options;
    options.branching_cap = opt.branching_cap;
    return enumerate_answer_sets(p, options);
}

// Indices into the full enumeration that the selection flags pick out.
inline std::vector<std::size_t> select_answer_sets(const GroundProgram& p,
                                                   const std::vector<AtomSet>& sets,
                                                   const Options& opt) {
    if (opt.answer_set_lits) {
        AtomSet candidate;
        candidate.reserve(p.atom_count());
        std::stringstream parts(*opt.answer_set_lits);
        std::string token;
        while (std::getline(parts, token, ',')) {
            while (!token.empty() && token.front() == ' ') token.erase(token.begin());
            while (!token.empty() && token.back() == ' ') token.pop_back();
            if (token.empty()) continue;
            candidate.insert(resolve_atom(p, token));
        }
        if (!is_answer_set(p, candidate))
            throw InputError("the literal list " + atom_set_text(p, candidate) +
                             " is not an answer set of the program");
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (sets[i] == candidate) return {i};
        throw InternalError("verified answer set missing from the enumeration");
    }
    if (sets.empty()) throw InputError("the program has no answer sets");
    if (opt.all_answer_sets) {
        std::vector<std::size_t> all(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) all[i] = i;
        return all;
    }
    int index = opt.answer_set_index.value_or(0);
    if (index < 0 || static_cast<std::size_t>(index) >= sets.size())
        throw InputError("answer set index " + std::to_string(index) +
                         " is out of range; the program has " + std::to_string(sets.size()));
    return {static_cast<std::size_t>(index)};
}

inline void cmd_solve(const GroundProgram& p, const Options& opt, std::ostream& out) {
    SolveOptions options;
    options.limit = opt.limit;
    options.branching_cap = opt.branching_cap;
    std::vector<AtomSet> sets = enumerate_answer_sets(p, options);
    for (const AtomSet& s : sets) out << atom_set_text(p, s) << "\n";
    out << sets.size() << " answer set(s)\n";
}

inline void cmd_cautious(const GroundProgram& p, const Options& opt, std::ostream& out) {
    CautiousConsequences c = cautious_consequences(p, opt.branching_cap);
    if (c.inconsistent) {
        out << "inconsistent\n";
        return;
    }
    out << "C+: " << atom_set_text(p, c.c_plus) << "\n";
    out << "C-: " << atom_set_text(p, c.c_minus) << "\n";
}

inline void cmd_wf(const GroundProgram& p, std::ostream& out) {
    WellFoundedModel wf = well_founded_model(p);
    out << "true: " << atom_set_text(p, wf.wf_true) << "\n";
    out << "false: " << atom_set_text(p, wf.wf_false) << "\n";
    out << "unknown: " << atom_set_text(p, wf.unknown) << "\n";
}

inline void cmd_supports(const GroundProgram& p, const Options& opt, std::ostream& out) {
    std::vector<AtomSet> sets = enumerate_all(p, opt);
    std::vector<std::size_t> chosen = select_answer_sets(p, sets, opt);
    for (std::size_t n = 0; n < chosen.size(); ++n) {
        if (opt.all_answer_sets) {
            if (n) out << "\n";
            out << bold("answer set " + std::to_string(chosen[n]) + ": " +
                        atom_set_text(p, sets[chosen[n]])) << "\n";
        }
        out << to_text(build_support_table(p, sets[chosen[n]]));
    }
}

inline void cmd_assumptions(const GroundProgram& p, const Options& opt, std::ostream& out,
                            std::ostream& err) {
    std::vector<AtomSet> sets = enumerate_all(p, opt);
    std::vector<std::size_t> chosen = select_answer_sets(p, sets, opt);
    CautiousConsequences cautious = cautious_from_sets(p, sets);
    for (std::size_t n = 0; n < chosen.size(); ++n) {
        const AtomSet& ans = sets[chosen[n]];
        if (opt.all_answer_sets) {
            if (n) out << "\n";
            out << bold("answer set " + std::to_string(chosen[n]) + ": " +
                        atom_set_text(p, ans)) << "\n";
        }
        SupportTable table = build_support_table(p, ans);
        AssumptionAnalysis analysis =
            analyze_assumptions(p, ans, cautious, table, opt.selection_cap);
        if (analysis.selections_truncated)
            err << "warning: selection cap of " << opt.selection_cap
                << " reached while checking derivation paths; results may be conservative\n";
        out << "TA: " << atom_set_text(p, analysis.tentative) << "\n";
        out << "T: " << atom_set_text(p, analysis.must_assume) << "\n";
        out << "DA:\n";
        std::vector<std::pair<std::string, AtomId>> keys;
        for (const auto& [a, deps] : analysis.dependencies) keys.emplace_back(p.name(a), a);
        std::sort(keys.begin(), keys.end());
        for (const auto& [name, a] : keys)
            out << "  " << name << " -> " << atom_set_text(p, analysis.dependencies.at(a))
                << "\n";
        for (std::size_t i = 0; i < analysis.minimal_sets.size(); ++i)
            out << "U[" << i << "]: " << atom_set_text(p, analysis.minimal_sets[i]) << "\n";
        for (std::size_t i = 0; i < analysis.minimal_sets.size(); ++i) {
            ReducedWfDiagnostic d = reduced_wf_diagnostic(p, ans, analysis.minimal_sets[i]);
            out << "wf-diagnostic U[" << i << "]: total=" << (d.wf_total ? "yes" : "no")
                << " true-part-matches=" << (d.wf_true_matches ? "yes" : "no") << "\n";
        }
    }
}

inline void cmd_explain(const GroundProgram& p, const Options& opt, std::ostream& out,
                        std::ostream& err) {
    AtomId atom = resolve_atom(p, opt.atom);
    std::vector<AtomSet> sets = enumerate_all(p, opt);
    std::vector<std::size_t> chosen = select_answer_sets(p, sets, opt);
    CautiousConsequences cautious = cautious_from_sets(p, sets);

    std::string extension = opt.output == "dot" ? ".dot"
                            : opt.output == "structured" ? ".json"
                                                         : ".txt";
    if (!opt.out_dir.empty()) std::filesystem::create_directories(opt.out_dir);

    for (std::size_t n = 0; n < chosen.size(); ++n) {
        const AtomSet& ans = sets[chosen[n]];
        SupportTable table = build_support_table(p, ans);
        AssumptionAnalysis analysis =
            analyze_assumptions(p, ans, cautious, table, opt.selection_cap);
        if (analysis.selections_truncated)
            err << "warning: selection cap of " << opt.selection_cap
                << " reached while checking derivation paths\n";

        std::vector<std::size_t> u_indices;
        if (opt.assumption_set == "all") {
            for (std::size_t i = 0; i < analysis.minimal_sets.size(); ++i) u_indices.push_back(i);
        } else {
            int u;
            try {
                u = std::stoi(opt.assumption_set);
            } catch (const std::exception&) {
                throw InputError("--assumption-set takes an index or 'all', got '" +
                                 opt.assumption_set + "'");
            }
            if (u < 0 || static_cast<std::size_t>(u) >= analysis.minimal_sets.size())
                throw InputError("assumption set index " + std::to_string(u) +
                                 " is out of range; there are " +
                                 std::to_string(analysis.minimal_sets.size()));
            u_indices.push_back(static_cast<std::size_t>(u));
        }

        for (std::size_t ui : u_indices) {
            const AtomSet& u = analysis.minimal_sets[ui];
            bool truncated = false;
            std::vector<ExplanationGraph> graphs =
                explanation_graphs(atom, table, u, opt.selection_cap, &truncated);
            if (truncated)
                err << "warning: selection cap of " << opt.selection_cap
                    << " reached while enumerating graphs of " << p.name(atom) << "\n";
            for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
                if (std::optional<Violation> v =
                        validate_explanation_graph(graphs[gi], p, ans, u))
                    throw InternalError("generated graph failed validation: " + v->message);
                GraphDocument doc = make_document(p, ans, u, graphs[gi]);
                std::string body = opt.output == "dot"          ? emit_dot(doc)
                                   : opt.output == "structured" ? to_structured_text(doc)
                                                                : render_text(doc);
                if (opt.out_dir.empty()) {
                    std::string header = "# atom=" + p.name(atom) + " answer-set=" +
                                         std::to_string(chosen[n]) + " assumption-set=" +
                                         std::to_string(ui) + " graph=" + std::to_string(gi);
                    out << bold(header) << "\n" << body;
                } else {
                    std::string name = "explain_" + sanitize(p.name(atom));
                    if (opt.all_answer_sets) name += "_as" + std::to_string(chosen[n]);
                    name += "_" + std::to_string(ui) + "_" + std::to_string(gi) + extension;
                    std::filesystem::path path = std::filesystem::path(opt.out_dir) / name;
                    std::ofstream file(path, std::ios::binary);
                    if (!file) throw InputError("cannot write '" + path.string() + "'");
                    file << body;
                    out << "wrote " << path.string() << "\n";
                }
            }
        }
    }
}

} // namespace detail

// Whole command-line surface; returns the process exit code. Kept separate
// from main() so tests can drive it with captured streams.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"answer set solving with supported-set and explanation output"};
    app.name("xasp");
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "input file, or - for stdin")->required();
        sub->add_option("--format", opt.format, "input syntax")
            ->check(CLI::IsMember({"native", "aspif"}))
            ->capture_default_str();
    };
    auto add_selection = [&](CLI::App* sub) {
        CLI::Option* idx =
            sub->add_option("--answer-set", opt.answer_set_index, "0-based answer set index");
        CLI::Option* lits = sub->add_option("--answer-set-lits", opt.answer_set_lits,
                                            "comma-separated atoms of an answer set");
        CLI::Option* all = sub->add_flag("--all", opt.all_answer_sets, "use every answer set");
        idx->excludes(lits)->excludes(all);
        lits->excludes(idx)->excludes(all);
        all->excludes(idx)->excludes(lits);
    };
    auto add_branching = [&](CLI::App* sub) {
        sub->add_option("--branching-cap", opt.branching_cap,
                        "largest tolerated count of atoms under default negation")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    auto add_selection_cap = [&](CLI::App* sub) {
        sub->add_option("--selection-cap", opt.selection_cap,
                        "largest tolerated count of support selections per atom")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* solve = app.add_subcommand("solve", "enumerate answer sets");
    add_io(solve);
    add_branching(solve);
    solve->add_option("--limit", opt.limit, "print at most this many answer sets")
        ->check(CLI::NonNegativeNumber);

    CLI::App* cautious = app.add_subcommand("cautious", "atoms shared by all answer sets");
    add_io(cautious);
    add_branching(cautious);

    CLI::App* wf = app.add_subcommand("wf", "well-founded model partitions");
    add_io(wf);

    CLI::App* supports = app.add_subcommand("supports", "supported sets of every atom");
    add_io(supports);
    add_selection(supports);
    add_branching(supports);

    CLI::App* assumptions =
        app.add_subcommand("assumptions", "minimal assumption sets and their derivation data");
    add_io(assumptions);
    add_selection(assumptions);
    add_branching(assumptions);
    add_selection_cap(assumptions);

    CLI::App* explain = app.add_subcommand("explain", "explanation graphs of one atom");
    add_io(explain);
    add_selection(explain);
    add_branching(explain);
    add_selection_cap(explain);
    explain->add_option("--atom", opt.atom, "atom to explain")->required();
    explain->add_option("--assumption-set", opt.assumption_set, "0-based index or 'all'")
        ->capture_default_str();
    explain->add_option("--output", opt.output, "document form")
        ->check(CLI::IsMember({"dot", "structured", "text"}))
        ->capture_default_str();
    explain->add_option("--out-dir", opt.out_dir, "write one file per graph into this directory");

    CLI::App* externalize =
        app.add_subcommand("externalize", "re-emit the program as aspif with facts external");
    add_io(externalize);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        GroundProgram p = detail::load_program(opt, err);
        if (solve->parsed()) {
            detail::cmd_solve(p, opt, out);
        } else if (cautious->parsed()) {
            detail::cmd_cautious(p, opt, out);
        } else if (wf->parsed()) {
            detail::cmd_wf(p, out);
        } else if (supports->parsed()) {
            detail::cmd_supports(p, opt, out);
        } else if (assumptions->parsed()) {
            detail::cmd_assumptions(p, opt, out, err);
        } else if (explain->parsed()) {
            detail::cmd_explain(p, opt, out, err);
        } else if (externalize->parsed()) {
            out << emit_aspif(p);
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace xasp::cli
