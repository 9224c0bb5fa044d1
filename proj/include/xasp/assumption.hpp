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
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "xasp/digraph.hpp"
#include "xasp/solver.hpp"
#include "xasp/support.hpp"
#include "xasp/traverse.hpp"

namespace xasp {

// Atoms that are false in the answer set, appear under default negation
// somewhere, and are not settled by the cautious consequences. These are the
// only candidates for being assumed false.
inline AtomSet tentative_assumptions(const GroundProgram& p, const AtomSet& answer_set,
                                     const CautiousConsequences& cautious) {
    AtomSet settled = cautious.combined();
    AtomSet ta;
    ta.reserve(p.atom_count());
    for (AtomId a : p.nant().to_sorted_ids())
        if (!answer_set.contains(a) && !settled.contains(a)) ta.insert(a);
    return ta;
}

// Walk state for one derivation check. The stack holds the path currently
// being expanded; active_edge maps each stack node to the child it is
// expanding right now, so a closing cycle can be replayed node by node.
struct DerivationCheckState {
    std::set<Node> visited;
    std::vector<Node> stack;
    std::set<Node> on_stack;
    std::map<Node, Node> active_edge;
    AtomSet deps;
};

// Replays the chain s -> active_edge[s] -> ... and reports whether it closes
// at e having passed through negative nodes only. A positive node, a missing
// entry, or a chain that walks longer than the map has entries (a loop that
// misses e) all answer no.
inline bool cycle_identification(const std::map<Node, Node>& active_edge, Node s, Node e) {
    std::size_t steps = 0;
    Node current = s;
    while (steps++ <= active_edge.size()) {
        auto it = active_edge.find(current);
        if (it == active_edge.end()) return false;
        Node next = it->second;
        if (current.kind != Node::neg || next.kind != Node::neg) return false;
        if (next == e) return true;
        current = next;
    }
    return false;
}

// Depth-first check that one selection of supports derives `start` without
// an unacceptable cycle. A negative child whose atom lies in `others` is
// recorded as a dependency and not expanded. Revisiting a positive node on
// the stack fails outright; revisiting a negative one fails unless the
// closing cycle is all-negative. Nodes finished earlier are trusted.
inline bool check_derivation_path(Node start, const Selection& selection, const AtomSet& others,
                                  DerivationCheckState& state) {
    state.visited.insert(start);
    state.stack.push_back(start);
    state.on_stack.insert(start);

    std::vector<Node> children;
    if (start.kind == Node::pos || start.kind == Node::neg) {
        auto it = selection.find(SignedLit{start.atom, start.kind == Node::neg});
        if (it != selection.end()) {
            const SupportSet& chosen = it->second;
            if (chosen.marker != Marker::none)
                children.push_back(node_of(chosen.marker));
            else
                for (SignedLit l : chosen.lits) children.push_back(node_of(l));
        }
    }

    bool safe = true;
    for (Node child : children) {
        state.active_edge[start] = child;
        if (child.kind == Node::neg && others.contains(child.atom)) {
            state.deps.insert(child.atom);
            continue;
        }
        if (!state.visited.count(child)) {
            if (!check_derivation_path(child, selection, others, state)) {
                safe = false;
                break;
            }
        } else if (state.on_stack.count(child)) {
            if (child.kind != Node::neg ||
                !cycle_identification(state.active_edge, child, child)) {
                safe = false;
                break;
            }
        }
    }

    state.stack.pop_back();
    state.on_stack.erase(start);
    state.active_edge.erase(start);
    return safe;
}

struct DerivationPathsResult {
    AtomSet must_assume;                // tentative atoms with no acceptable derivation
    std::map<AtomId, AtomSet> deps;     // per derivable atom, the tentative atoms it leans on
    bool selections_truncated = false;  // some atom had more selections than the cap
};

// Tries, for every tentative atom, the support sets of its negation and all
// full selections underneath each, in table order; the first safe selection
// settles the atom and contributes its recorded dependencies. Atoms with no
// safe selection must be assumed.
inline DerivationPathsResult derivation_paths(const AtomSet& ta, const SupportTable& table,
                                              long long selection_cap = 10000) {
    DerivationPathsResult result;
    result.must_assume.reserve(table.program().atom_count());

    for (AtomId a : ta.to_sorted_ids()) {
        AtomSet others = ta;
        others.erase(a);
        bool safe_found = false;
        for (const SupportSet& s : table.at(neg_lit(a))) {
            LocalTable local;
            local.add(neg_lit(a), {s});
            get_connection(s, table, local);
            SelectionCursor cursor(local, selection_cap);
            if (cursor.truncated()) result.selections_truncated = true;
            while (auto selection = cursor.next()) {
                DerivationCheckState state;
                state.deps.reserve(table.program().atom_count());
                if (check_derivation_path(node_of(neg_lit(a)), *selection, others, state)) {
                    result.deps[a] = state.deps;
                    safe_found = true;
                    break;
                }
            }
            if (safe_found) break;
        }
        if (!safe_found) result.must_assume.insert(a);
    }
    return result;
}

struct AssumptionAnalysis {
    AtomSet tentative;
    AtomSet must_assume;
    std::map<AtomId, AtomSet> dependencies;
    std::vector<AtomSet> minimal_sets;
    bool selections_truncated = false;
};

namespace detail {

// Minimum-cardinality sets choosing at least one member from every cycle.
// Plain search by increasing size; the pools involved are tiny.
inline std::vector<std::vector<int>> minimum_hitting_sets(
    const std::vector<std::vector<int>>& cycles) {
    std::set<int> pool_set;
    for (const std::vector<int>& c : cycles) pool_set.insert(c.begin(), c.end());
    std::vector<int> pool(pool_set.begin(), pool_set.end());

    std::vector<std::vector<int>> hits;
    std::vector<int> chosen;
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from,
                                                               std::size_t remaining) {
        if (remaining == 0) {
            for (const std::vector<int>& c : cycles) {
                bool hit = false;
                for (int v : c)
                    if (std::binary_search(chosen.begin(), chosen.end(), v)) {
                        hit = true;
                        break;
                    }
                if (!hit) return;
            }
            hits.push_back(chosen);
            return;
        }
        for (std::size_t i = from; i + remaining <= pool.size(); ++i) {
            chosen.push_back(pool[i]);
            choose(i + 1, remaining - 1);
            chosen.pop_back();
        }
    };

    for (std::size_t size = 1; size <= pool.size(); ++size) {
        choose(0, size);
        if (!hits.empty()) break;
    }
    return hits;
}

} // namespace detail

// Full assumption computation: the tentative set, the derivability split,
// the dependency digraph's cycles, and the resulting minimal assumption
// sets (each a minimum set of cycle breakers united with the must-assume
// atoms). With no dependency cycles the must-assume atoms alone qualify.
inline AssumptionAnalysis analyze_assumptions(const GroundProgram& p, const AtomSet& answer_set,
                                              const CautiousConsequences& cautious,
                                              const SupportTable& table,
                                              long long selection_cap = 10000) {
    AssumptionAnalysis out;
    out.tentative = tentative_assumptions(p, answer_set, cautious);
    DerivationPathsResult dp = derivation_paths(out.tentative, table, selection_cap);
    out.must_assume = dp.must_assume;
    out.dependencies = std::move(dp.deps);
    out.selections_truncated = dp.selections_truncated;

    std::vector<AtomId> ta_atoms = out.tentative.to_sorted_ids();
    std::map<AtomId, int> index_of;
    for (std::size_t i = 0; i < ta_atoms.size(); ++i)
        index_of.emplace(ta_atoms[i], static_cast<int>(i));

    std::vector<std::vector<int>> adj(ta_atoms.size());
    for (const auto& [a, targets] : out.dependencies)
        for (AtomId b : targets.to_sorted_ids())
            adj[static_cast<std::size_t>(index_of.at(a))].push_back(index_of.at(b));

    std::set<std::vector<int>> cycle_sets;
    for (std::vector<int>& cycle : elementary_cycles(adj)) {
        std::sort(cycle.begin(), cycle.end());
        cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
        cycle_sets.insert(std::move(cycle));
    }

    std::vector<AtomSet> sets;
    if (cycle_sets.empty()) {
        sets.push_back(out.must_assume);
    } else {
        std::vector<std::vector<int>> cycles(cycle_sets.begin(), cycle_sets.end());
        for (const std::vector<int>& hit : detail::minimum_hitting_sets(cycles)) {
            AtomSet u = out.must_assume;
            for (int i : hit) u.insert(ta_atoms[static_cast<std::size_t>(i)]);
            sets.push_back(std::move(u));
        }
    }

    std::sort(sets.begin(), sets.end(), [](const AtomSet& a, const AtomSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return AtomSet::lex_less(a, b);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    out.minimal_sets = std::move(sets);
    return out;
}

inline std::vector<AtomSet> minimal_assumption_sets(const GroundProgram& p,
                                                    const AtomSet& answer_set,
                                                    const CautiousConsequences& cautious,
                                                    const SupportTable& table,
                                                    long long selection_cap = 10000) {
    return analyze_assumptions(p, answer_set, cautious, table, selection_cap).minimal_sets;
}

struct ReducedWfDiagnostic {
    bool wf_total;
    bool wf_true_matches;  // true part of the reduced program's model equals the answer set
};

// Drops every rule whose head is assumed and inspects the well-founded model
// of what remains. For a sound assumption set the model comes out total with
// exactly the answer set as its true part; this is reported, not asserted.
inline ReducedWfDiagnostic reduced_wf_diagnostic(const GroundProgram& p, const AtomSet& answer_set,
                                                 const AtomSet& u) {
    ProgramBuilder builder;
    for (AtomId a = 0; a < p.atom_count(); ++a) builder.intern(p.name(a));
    for (const Rule& r : p.rules()) {
        if (r.head && u.contains(*r.head)) continue;
        builder.add_rule(r.head, r.pos, r.neg);
    }
    GroundProgram reduced = std::move(builder).build();
    WellFoundedModel wf = well_founded_model(reduced);
    return ReducedWfDiagnostic{wf.total(), wf.wf_true == answer_set};
}

} // namespace xasp
