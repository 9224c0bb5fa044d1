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
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xasp/atomset.hpp"
#include "xasp/errors.hpp"

namespace xasp {

// Literal over a ground atom: `a` or `~a`. The default ordering (atom id,
// then polarity with positive first) is the canonical literal order used for
// every serialized literal sequence.
struct SignedLit {
    AtomId atom = 0;
    bool negated = false;

    auto operator<=>(const SignedLit&) const = default;
};

inline SignedLit pos_lit(AtomId a) { return {a, false}; }
inline SignedLit neg_lit(AtomId a) { return {a, true}; }

// Ground normal rule `head :- pos, not neg`. head == nullopt is a constraint.
// pos and neg are sorted, duplicate-free atom-id lists; they may overlap, in
// which case the rule can never fire but is kept verbatim.
struct Rule {
    std::optional<AtomId> head;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
    int index = 0;

    bool is_constraint() const { return !head.has_value(); }
    bool is_fact() const { return head.has_value() && pos.empty() && neg.empty(); }
};

namespace detail {

inline bool valid_atom_name(std::string_view name) {
    if (name.empty() || name.front() == '~') return false;
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

inline std::vector<AtomId> sorted_unique(std::vector<AtomId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

} // namespace detail

class ProgramBuilder;

// Immutable ground program: interned atoms (dense ids in first-occurrence
// order), rules in source order, and cached fact/herbrand/negation sets.
class GroundProgram {
public:
    int atom_count() const { return static_cast<int>(names_.size()); }

    const std::string& name(AtomId a) const { return names_.at(static_cast<std::size_t>(a)); }

    std::optional<AtomId> find_atom(std::string_view name) const {
        auto it = ids_.find(std::string(name));
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<std::string>& atom_names() const { return names_; }
    const std::vector<Rule>& rules() const { return rules_; }

    // Heads of fact rules.
    const AtomSet& facts() const { return facts_; }
    // Atoms occurring anywhere in a rule.
    const AtomSet& herbrand() const { return herbrand_; }
    // Atoms occurring under default negation in some rule body.
    const AtomSet& nant() const { return nant_; }

    const std::vector<int>& rules_with_head(AtomId a) const {
        return rules_by_head_.at(static_cast<std::size_t>(a));
    }

private:
    friend class ProgramBuilder;

    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> ids_;
    std::vector<Rule> rules_;
    AtomSet facts_;
    AtomSet herbrand_;
    AtomSet nant_;
    std::vector<std::vector<int>> rules_by_head_;
};

class ProgramBuilder {
public:
    AtomId intern(std::string_view name) {
        auto it = program_.ids_.find(std::string(name));
        if (it != program_.ids_.end()) return it->second;
        if (!detail::valid_atom_name(name))
            throw InputError("invalid atom name: '" + std::string(name) + "'");
        AtomId id = static_cast<AtomId>(program_.names_.size());
        program_.names_.emplace_back(name);
        program_.ids_.emplace(program_.names_.back(), id);
        return id;
    }

    void add_rule(std::optional<AtomId> head, std::vector<AtomId> pos, std::vector<AtomId> neg) {
        Rule r;
        r.head = head;
        r.pos = detail::sorted_unique(std::move(pos));
        r.neg = detail::sorted_unique(std::move(neg));
        r.index = static_cast<int>(program_.rules_.size());
        program_.rules_.push_back(std::move(r));
    }

    GroundProgram build() && {
        GroundProgram p = std::move(program_);
        int n = p.atom_count();
        p.facts_.reserve(n);
        p.herbrand_.reserve(n);
        p.nant_.reserve(n);
        p.rules_by_head_.assign(static_cast<std::size_t>(n), {});
        for (const Rule& r : p.rules_) {
            if (r.head) {
                p.herbrand_.insert(*r.head);
                p.rules_by_head_[static_cast<std::size_t>(*r.head)].push_back(r.index);
                if (r.is_fact()) p.facts_.insert(*r.head);
            }
            for (AtomId a : r.pos) p.herbrand_.insert(a);
            for (AtomId a : r.neg) {
                p.herbrand_.insert(a);
                p.nant_.insert(a);
            }
        }
        return p;
    }

private:
    GroundProgram program_;
};

// Atoms under default negation; same set the program caches, exposed as the
// standalone operation.
inline AtomSet nant(const GroundProgram& p) { return p.nant(); }

inline std::string render_rule(const GroundProgram& p, const Rule& r) {
    std::string out;
    if (r.head) out += p.name(*r.head);
    if (!r.pos.empty() || !r.neg.empty() || r.is_constraint()) {
        if (r.head) out += " ";
        out += ":- ";
        bool first = true;
        for (AtomId a : r.pos) {
            if (!first) out += ", ";
            out += p.name(a);
            first = false;
        }
        for (AtomId a : r.neg) {
            if (!first) out += ", ";
            out += "not " + p.name(a);
            first = false;
        }
    }
    out += ".";
    return out;
}

// Native text for the whole program, one statement per line, in rule order.
inline std::string render(const GroundProgram& p) {
    std::string out;
    for (const Rule& r : p.rules()) {
        out += render_rule(p, r);
        out += "\n";
    }
    return out;
}

// Native text with each fact `f.` replaced by `#external f.`; every other
// rule verbatim. Producer-only interop format for external grounders; this
// library does not re-ingest it (use the grounder's aspif output instead).
inline std::string externalize_facts(const GroundProgram& p) {
    std::string out;
    for (const Rule& r : p.rules()) {
        if (r.is_fact())
            out += "#external " + p.name(*r.head) + ".\n";
        else
            out += render_rule(p, r) + "\n";
    }
    return out;
}

// FNV-1a over the canonical rendering; stable across runs and platforms.
inline std::string program_digest(const GroundProgram& p) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : render(p)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a:";
    for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xf];
    return out;
}

// Display helpers shared by the serializers.

inline std::string lit_text(const GroundProgram& p, SignedLit l) {
    return l.negated ? "~" + p.name(l.atom) : p.name(l.atom);
}

// `{a,c,e,k}`: atom names, alphabetical, no spaces. The standard rendering
// for atom sets in human-facing listings.
inline std::string atom_set_text(const GroundProgram& p, const AtomSet& set) {
    std::vector<std::string> names;
    for (AtomId a : set.to_sorted_ids()) names.push_back(p.name(a));
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i];
    }
    out += "}";
    return out;
}

} // namespace xasp
