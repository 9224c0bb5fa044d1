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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xasp/program.hpp"

namespace xasp {

namespace detail {

// Least model of the positive projections of the rules `keep` admits.
// Headless rules never contribute. The loop is a plain Kleene iteration;
// programs here are small enough that indexing would not pay for itself.
template <class KeepRule>
AtomSet least_model_over(const GroundProgram& p, KeepRule keep) {
    AtomSet m;
    m.reserve(p.atom_count());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : p.rules()) {
            if (!r.head || m.contains(*r.head) || !keep(r)) continue;
            bool satisfied = true;
            for (AtomId a : r.pos)
                if (!m.contains(a)) {
                    satisfied = false;
                    break;
                }
            if (satisfied) {
                m.insert(*r.head);
                changed = true;
            }
        }
    }
    return m;
}

// Least model of the rules that survive dividing out `interpretation`:
// a rule survives when none of its negated atoms lie in that set.
inline AtomSet least_model_surviving(const GroundProgram& p, const AtomSet& interpretation) {
    return least_model_over(
        p, [&](const Rule& r) { return !interpretation.intersects_vector(r.neg); });
}

} // namespace detail

// Program divided by an interpretation: rules whose negated atoms touch the
// interpretation are dropped, the rest keep only their positive bodies.
// Atom identities carry over unchanged; transformed constraints are kept.
inline GroundProgram reduct(const GroundProgram& p, const AtomSet& interpretation) {
    ProgramBuilder builder;
    for (AtomId a = 0; a < p.atom_count(); ++a) builder.intern(p.name(a));
    for (const Rule& r : p.rules()) {
        if (interpretation.intersects_vector(r.neg)) continue;
        builder.add_rule(r.head, r.pos, {});
    }
    return std::move(builder).build();
}

// Least model of a negation-free program. Headless rules are ignored; atoms
// under default negation make the least model undefined, so they are refused.
// When `trace` is given it records the bottom-up iterates, starting from the
// empty set, one entry per application of the one-step consequence operator
// up to and including the fixpoint.
inline AtomSet least_model(const GroundProgram& p, std::vector<AtomSet>* trace = nullptr) {
    if (!p.nant().empty())
        throw InputError("least_model requires a negation-free program; atoms "
                         "under default negation: " +
                         atom_set_text(p, p.nant()));
    if (!trace) return detail::least_model_over(p, [](const Rule&) { return true; });

    AtomSet current;
    current.reserve(p.atom_count());
    trace->clear();
    trace->push_back(current);
    for (;;) {
        AtomSet next;
        next.reserve(p.atom_count());
        for (const Rule& r : p.rules()) {
            if (!r.head) continue;
            bool satisfied = true;
            for (AtomId a : r.pos)
                if (!current.contains(a)) {
                    satisfied = false;
                    break;
                }
            if (satisfied) next.insert(*r.head);
        }
        if (next == current) return current;
        trace->push_back(next);
        current = std::move(next);
    }
}

// Stability check: `candidate` must equal the least model of the program
// divided by itself, and no constraint body may hold under it.
inline bool is_answer_set(const GroundProgram& p, const AtomSet& candidate) {
    AtomSet m = detail::least_model_surviving(p, candidate);
    if (!(m == candidate)) return false;
    for (const Rule& r : p.rules()) {
        if (r.head) continue;
        bool fires = !candidate.intersects_vector(r.neg);
        if (fires)
            for (AtomId a : r.pos)
                if (!candidate.contains(a)) {
                    fires = false;
                    break;
                }
        if (fires) return false;
    }
    return true;
}

struct SolveOptions {
    // Keep at most this many answer sets (the first ones in canonical order).
    std::optional<int> limit;
    // Refuse programs with more atoms under default negation than this.
    int branching_cap = 30;
};

// All answer sets, sorted by their characteristic vectors over atom ids
// (atom 0 is the most significant position, absent before present).
//
// Search branches only on atoms under default negation: the division of the
// program is a function of that slice of the candidate, so each guess pins
// down at most one answer set. Two bounds prune partial guesses; both are
// least models over rule subsets monotone in the guess.
inline std::vector<AtomSet> enumerate_answer_sets(const GroundProgram& p,
                                                  const SolveOptions& options = {}) {
    std::vector<AtomId> branch_atoms = p.nant().to_sorted_ids();
    if (static_cast<int>(branch_atoms.size()) > options.branching_cap)
        throw ResourceError("program has " + std::to_string(branch_atoms.size()) +
                            " atoms under default negation, above the branching cap of " +
                            std::to_string(options.branching_cap));

    enum : std::int8_t { UNSET = 0, TRUE = 1, FALSE = 2 };
    std::vector<std::int8_t> assignment(static_cast<std::size_t>(p.atom_count()), UNSET);

    std::vector<AtomSet> found;

    // Lower bound: rules kept under every completion of the current guess
    // (every negated atom already guessed false). Upper bound: rules kept
    // under some completion (no negated atom guessed true).
    auto lower_keep = [&](const Rule& r) {
        for (AtomId a : r.neg)
            if (assignment[static_cast<std::size_t>(a)] != FALSE) return false;
        return true;
    };
    auto upper_keep = [&](const Rule& r) {
        for (AtomId a : r.neg)
            if (assignment[static_cast<std::size_t>(a)] == TRUE) return false;
        return true;
    };

    // Returns false when the current partial guess cannot extend to an
    // answer set; otherwise tightens the guess until nothing more follows.
    auto propagate = [&]() {
        for (;;) {
            AtomSet lower = detail::least_model_over(p, lower_keep);
            AtomSet upper = detail::least_model_over(p, upper_keep);
            bool changed = false;
            for (AtomId a : branch_atoms) {
                std::int8_t& slot = assignment[static_cast<std::size_t>(a)];
                bool in_lower = lower.contains(a);
                bool in_upper = upper.contains(a);
                if (in_lower && !in_upper) return false;
                if (slot == TRUE && !in_upper) return false;
                if (slot == FALSE && in_lower) return false;
                if (slot == UNSET && in_lower) {
                    slot = TRUE;
                    changed = true;
                }
                if (slot == UNSET && !in_upper) {
                    slot = FALSE;
                    changed = true;
                }
            }
            if (!changed) return true;
        }
    };

    auto check_leaf = [&]() {
        AtomSet guessed_true;
        guessed_true.reserve(p.atom_count());
        for (AtomId a : branch_atoms)
            if (assignment[static_cast<std::size_t>(a)] == TRUE) guessed_true.insert(a);
        AtomSet m = detail::least_model_surviving(p, guessed_true);
        AtomSet m_nant = m;
        m_nant.intersect_with(p.nant());
        if (!(m_nant == guessed_true)) return;
        if (is_answer_set(p, m)) found.push_back(std::move(m));
    };

    auto search = [&](auto&& self, std::size_t depth) -> void {
        if (!propagate()) return;
        std::size_t next = depth;
        while (next < branch_atoms.size() &&
               assignment[static_cast<std::size_t>(branch_atoms[next])] != UNSET)
            ++next;
        if (next == branch_atoms.size()) {
            check_leaf();
            return;
        }
        std::vector<std::int8_t> saved = assignment;
        AtomId pick = branch_atoms[next];
        assignment[static_cast<std::size_t>(pick)] = FALSE;
        self(self, next + 1);
        assignment = saved;
        assignment[static_cast<std::size_t>(pick)] = TRUE;
        self(self, next + 1);
        assignment = std::move(saved);
    };
    search(search, 0);

    std::sort(found.begin(), found.end(), AtomSet::lex_less);
    if (options.limit && static_cast<int>(found.size()) > *options.limit)
        found.resize(static_cast<std::size_t>(std::max(0, *options.limit)));
    return found;
}

struct CautiousConsequences {
    AtomSet c_plus;   // atoms holding in every answer set
    AtomSet c_minus;  // atoms holding in no answer set
    bool inconsistent = false;

    AtomSet combined() const {
        AtomSet both = c_plus;
        both.insert_all(c_minus);
        return both;
    }
};

// Cautious consequences computed from an already enumerated complete list
// of answer sets.
inline CautiousConsequences cautious_from_sets(const GroundProgram& p,
                                               const std::vector<AtomSet>& sets) {
    CautiousConsequences result;
    if (sets.empty()) {
        result.inconsistent = true;
        result.c_plus = p.herbrand();
        result.c_minus = p.herbrand();
        return result;
    }
    AtomSet in_all = sets.front();
    AtomSet in_any = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) {
        in_all.intersect_with(sets[i]);
        in_any.insert_all(sets[i]);
    }
    result.c_plus = std::move(in_all);
    result.c_minus = p.herbrand();
    result.c_minus.erase_all(in_any);
    return result;
}

// Atoms shared by all answer sets, split by polarity. A program without
// answer sets cautiously entails everything; that degenerate case is flagged
// and both parts carry the whole atom base.
inline CautiousConsequences cautious_consequences(const GroundProgram& p, int branching_cap = 30) {
    SolveOptions options;
    options.branching_cap = branching_cap;
    return cautious_from_sets(p, enumerate_answer_sets(p, options));
}

struct WellFoundedModel {
    AtomSet wf_true;
    AtomSet wf_false;
    AtomSet unknown;

    bool total() const { return unknown.empty(); }
};

// Alternating fixpoint: divide by an over-approximation to get a sound true
// part, divide by that to get the next over-approximation, repeat until the
// over-approximation stops shrinking.
inline WellFoundedModel well_founded_model(const GroundProgram& p) {
    AtomSet upper = p.herbrand();
    AtomSet truths;
    for (;;) {
        truths = detail::least_model_surviving(p, upper);
        AtomSet next_upper = detail::least_model_surviving(p, truths);
        if (next_upper == upper) break;
        upper = std::move(next_upper);
    }
    WellFoundedModel wf;
    wf.wf_true = truths;
    wf.wf_false = p.herbrand();
    wf.wf_false.erase_all(upper);
    wf.unknown = upper;
    wf.unknown.erase_all(truths);
    return wf;
}

} // namespace xasp
