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
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "xasp/program.hpp"
#include "xasp/solver.hpp"

namespace xasp {

// Terminal markers a support set can carry instead of literals:
//   fact_top      the atom is a fact, nothing further to justify
//   no_rule_bot   the atom heads no rule, so it is false outright
//   assume_marker the atom's falsity is taken as an assumption
enum class Marker { none, fact_top, no_rule_bot, assume_marker };

// One way to justify a literal: either a set of literals that must hold in
// turn, or a single terminal marker. Exactly one of the two is populated.
struct SupportSet {
    std::vector<SignedLit> lits;
    Marker marker = Marker::none;

    friend bool operator==(const SupportSet&, const SupportSet&) = default;
    friend auto operator<=>(const SupportSet& a, const SupportSet& b) {
        if (auto c = a.lits <=> b.lits; c != 0) return c;
        return a.marker <=> b.marker;
    }
};

inline SupportSet marker_set(Marker m) {
    SupportSet s;
    s.marker = m;
    return s;
}

// Sorts, dedupes, and rejects sets naming an atom in both polarities.
inline void normalize(SupportSet& s) {
    if (s.marker != Marker::none) {
        if (!s.lits.empty())
            throw InternalError("support set carries both a marker and literals");
        return;
    }
    std::sort(s.lits.begin(), s.lits.end());
    s.lits.erase(std::unique(s.lits.begin(), s.lits.end()), s.lits.end());
    for (std::size_t i = 1; i < s.lits.size(); ++i)
        if (s.lits[i].atom == s.lits[i - 1].atom)
            throw InternalError("support set names one atom in both polarities");
}

// Vertex of a justification structure. Atom vertices carry a polarity;
// marker vertices close a branch.
struct Node {
    enum Kind { pos, neg, top, bot, assume } kind;
    AtomId atom = -1;  // meaningful for pos/neg only

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node& a, const Node& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.atom <=> b.atom;
    }
};

inline Node node_of(SignedLit l) { return Node{l.negated ? Node::neg : Node::pos, l.atom}; }

inline Node node_of(Marker m) {
    switch (m) {
    case Marker::fact_top: return Node{Node::top, -1};
    case Marker::no_rule_bot: return Node{Node::bot, -1};
    case Marker::assume_marker: return Node{Node::assume, -1};
    case Marker::none: break;
    }
    throw InternalError("marker carries no vertex");
}

inline std::string node_text(const GroundProgram& p, Node n) {
    switch (n.kind) {
    case Node::pos: return p.name(n.atom);
    case Node::neg: return "~" + p.name(n.atom);
    case Node::top: return "T";
    case Node::bot: return "F";
    case Node::assume: return "assume";
    }
    throw InternalError("unreachable node kind");
}

// Support drawn from one rule for an atom that holds: the whole body, when
// the answer set satisfies it. A satisfied empty body yields the fact marker.
inline std::optional<SupportSet> support_true(AtomId a, const Rule& r, const AtomSet& answer_set) {
    if (!r.head || *r.head != a) return std::nullopt;
    if (!answer_set.contains_all(r.pos)) return std::nullopt;
    if (answer_set.intersects_vector(r.neg)) return std::nullopt;
    if (r.pos.empty() && r.neg.empty()) return marker_set(Marker::fact_top);
    SupportSet s;
    for (AtomId b : r.pos) s.lits.push_back(pos_lit(b));
    for (AtomId b : r.neg) s.lits.push_back(neg_lit(b));
    normalize(s);
    return s;
}

// The ways one rule for a false atom fails: each body literal the answer set
// falsifies is a choice on its own. Unsatisfied positive atoms come first,
// then negated atoms that actually hold, both in body order.
inline std::vector<SupportSet> support_false_choices(AtomId a, const Rule& r,
                                                     const AtomSet& answer_set) {
    if (!r.head || *r.head != a)
        throw InternalError("rule does not define the requested atom");
    std::vector<SupportSet> choices;
    for (AtomId b : r.pos)
        if (!answer_set.contains(b)) choices.push_back(SupportSet{{neg_lit(b)}, Marker::none});
    for (AtomId b : r.neg)
        if (answer_set.contains(b)) choices.push_back(SupportSet{{pos_lit(b)}, Marker::none});
    if (choices.empty())
        throw InternalError("rule for a false atom has a satisfied body");
    return choices;
}

// Justifications for every atom of a program relative to one of its answer
// sets, keyed by the literal each atom induces: the atom itself when it
// holds, its negation otherwise.
class SupportTable {
public:
    SupportTable(const GroundProgram& p, AtomSet answer_set)
        : program_(&p),
          answer_set_(std::move(answer_set)),
          entries_(static_cast<std::size_t>(p.atom_count())) {}

    const GroundProgram& program() const { return *program_; }
    const AtomSet& answer_set() const { return answer_set_; }

    SignedLit key_for(AtomId a) const {
        return answer_set_.contains(a) ? pos_lit(a) : neg_lit(a);
    }

    std::vector<SignedLit> keys() const {
        std::vector<SignedLit> out;
        for (AtomId a = 0; a < program_->atom_count(); ++a) out.push_back(key_for(a));
        return out;
    }

    const std::vector<SupportSet>& at(SignedLit l) const {
        check_key(l);
        return entries_[static_cast<std::size_t>(l.atom)];
    }

    void set_entry(SignedLit l, std::vector<SupportSet> sets) {
        check_key(l);
        entries_[static_cast<std::size_t>(l.atom)] = std::move(sets);
    }

private:
    void check_key(SignedLit l) const {
        if (l.atom < 0 || l.atom >= program_->atom_count())
            throw InternalError("support lookup for an atom outside the program");
        if (l.negated == answer_set_.contains(l.atom))
            throw InternalError("support lookup for " + lit_text(*program_, l) +
                                " disagrees with the answer set on its polarity");
    }

    const GroundProgram* program_;
    AtomSet answer_set_;
    std::vector<std::vector<SupportSet>> entries_;
};

// Builds the full table for `answer_set`, which must be an answer set of `p`.
//
// Atoms that hold get one entry per satisfied rule (first occurrence wins on
// duplicates, rule order preserved). Atoms that fail get the combinations of
// per-rule failure choices: every rule for the atom must fail, so the entry
// list is the unionwise product over its rules, deduplicated and ordered by
// literal sequence. A false atom heading no rule gets the single marker F.
inline SupportTable build_support_table(const GroundProgram& p, const AtomSet& answer_set) {
    if (!is_answer_set(p, answer_set))
        throw InputError("the given interpretation " + atom_set_text(p, answer_set) +
                         " is not an answer set of the program");
    SupportTable table(p, answer_set);
    for (AtomId a = 0; a < p.atom_count(); ++a) {
        const std::vector<int>& defining = p.rules_with_head(a);
        if (answer_set.contains(a)) {
            std::vector<SupportSet> sets;
            for (int ri : defining) {
                auto s = support_true(a, p.rules()[static_cast<std::size_t>(ri)], answer_set);
                if (!s) continue;
                if (std::find(sets.begin(), sets.end(), *s) == sets.end())
                    sets.push_back(std::move(*s));
            }
            if (sets.empty())
                throw InternalError("atom " + p.name(a) +
                                    " holds in the answer set but no rule supports it");
            table.set_entry(pos_lit(a), std::move(sets));
            continue;
        }
        if (defining.empty()) {
            table.set_entry(neg_lit(a), {marker_set(Marker::no_rule_bot)});
            continue;
        }
        std::vector<SupportSet> sets{SupportSet{}};
        for (int ri : defining) {
            std::vector<SupportSet> choices =
                support_false_choices(a, p.rules()[static_cast<std::size_t>(ri)], answer_set);
            std::vector<SupportSet> merged;
            for (const SupportSet& base : sets)
                for (const SupportSet& choice : choices) {
                    SupportSet u = base;
                    u.lits.insert(u.lits.end(), choice.lits.begin(), choice.lits.end());
                    normalize(u);
                    if (std::find(merged.begin(), merged.end(), u) == merged.end())
                        merged.push_back(std::move(u));
                }
            sets = std::move(merged);
        }
        std::sort(sets.begin(), sets.end());
        table.set_entry(neg_lit(a), std::move(sets));
    }
    return table;
}

inline std::string support_set_text(const GroundProgram& p, const SupportSet& s) {
    if (s.marker != Marker::none) return "{" + node_text(p, node_of(s.marker)) + "}";
    std::string out = "{";
    for (std::size_t i = 0; i < s.lits.size(); ++i) {
        if (i) out += ", ";
        out += lit_text(p, s.lits[i]);
    }
    return out + "}";
}

// One line per atom, in atom id order:  `~a : [{~k}, {b}]`
inline std::string to_text(const SupportTable& table) {
    const GroundProgram& p = table.program();
    std::string out;
    for (AtomId a = 0; a < p.atom_count(); ++a) {
        SignedLit key = table.key_for(a);
        out += lit_text(p, key) + " : [";
        const std::vector<SupportSet>& sets = table.at(key);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (i) out += ", ";
            out += support_set_text(p, sets[i]);
        }
        out += "]\n";
    }
    return out;
}

} // namespace xasp
