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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "xasp/program.hpp"

namespace xasp {

// aspif (version 1) reader covering the fragment produced for ground normal
// programs:
//
//   asp 1 0 0
//   1 0 n [head] 0 k lit...     normal rule, n in {0,1}, negative lit = not
//   4 m name 1 atom             symbol table entry
//   5 atom 2                    external atom fixed to true; becomes a fact
//   0                           terminator
//
// Anything else (choice heads, disjunctions, weight bodies, minimize lines,
// other external value codes) is rejected. Atoms without a symbol table entry
// get synthetic names `_x<id>`.

struct AspifDiagnostics {
    std::vector<std::string> warnings;
};

namespace detail {

class AspifLine {
public:
    AspifLine(std::string_view text, int number) : text_(text), number_(number) {}

    int number() const { return number_; }

    bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }

    long next_int(const char* what) {
        skip_spaces();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '-'))
            fail(std::string("expected ") + what);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    // Length-prefixed name: the previous token gave the byte count.
    std::string read_name(long length) {
        if (length <= 0) fail("symbol name length must be positive");
        skip_spaces();
        if (pos_ + static_cast<std::size_t>(length) > text_.size())
            fail("symbol name is shorter than its declared length");
        std::string name(text_.substr(pos_, static_cast<std::size_t>(length)));
        pos_ += static_cast<std::size_t>(length);
        return name;
    }

    void expect_end() {
        if (!at_end()) fail("unexpected trailing tokens");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(number_, static_cast<int>(pos_) + 1, message);
    }

private:
    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int number_;
};

inline std::vector<std::pair<std::string_view, int>> aspif_lines(std::string_view text) {
    std::vector<std::pair<std::string_view, int>> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        bool blank = true;
        for (char c : line)
            if (c != ' ' && c != '\t') blank = false;
        if (!blank) lines.emplace_back(line, number);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

} // namespace detail

inline GroundProgram parse_aspif(std::string_view text, AspifDiagnostics* diagnostics = nullptr) {
    auto lines = detail::aspif_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "malformed aspif header: empty input");
    {
        detail::AspifLine header(lines[0].first, lines[0].second);
        long a = 0, b = 0, c = 0;
        std::string_view raw = lines[0].first;
        if (raw.substr(0, 4) != "asp ")
            header.fail("malformed aspif header: expected 'asp 1 0 0'");
        detail::AspifLine version(raw.substr(4), lines[0].second);
        a = version.next_int("major version");
        b = version.next_int("minor version");
        c = version.next_int("revision");
        version.expect_end();
        if (a != 1 || b != 0 || c != 0)
            header.fail("unsupported aspif version (only 1 0 0 is handled)");
    }

    // Locate the terminator so dangling content can be reported.
    std::size_t terminator = 0;
    bool found_terminator = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::string_view trimmed = lines[i].first;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
            trimmed.remove_prefix(1);
        while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t'))
            trimmed.remove_suffix(1);
        if (trimmed == "0") {
            terminator = i;
            found_terminator = true;
            break;
        }
    }
    if (!found_terminator)
        throw ParseError(lines.back().second, 1, "missing aspif terminator line '0'");
    if (terminator + 1 != lines.size())
        throw ParseError(lines[terminator + 1].second, 1,
                         "dangling content after the aspif terminator");

    // Pass 1: symbol table.
    std::map<long, std::string> symbols;
    for (std::size_t i = 1; i < terminator; ++i) {
        detail::AspifLine line(lines[i].first, lines[i].second);
        long type = line.next_int("statement type");
        if (type != 4) continue;
        long length = line.next_int("name length");
        std::string name = line.read_name(length);
        long count = line.next_int("condition size");
        if (count != 1) line.fail("symbol statements must name exactly one atom");
        long atom = line.next_int("atom id");
        line.expect_end();
        if (atom < 1) line.fail("atom identifiers must be positive");
        if (!detail::valid_atom_name(name)) line.fail("invalid atom name '" + name + "'");
        if (symbols.count(atom)) line.fail("duplicate symbol for atom " + std::to_string(atom));
        for (const auto& [id, existing] : symbols)
            if (existing == name) line.fail("duplicate atom name '" + name + "'");
        symbols.emplace(atom, name);
    }

    // Pass 2: rules and externals, in statement order.
    ProgramBuilder builder;
    std::map<long, AtomId> atom_ids;
    std::map<AtomId, long> claimed_by;
    std::map<long, int> head_lines;    // aspif id -> first line it headed
    std::map<long, int> body_lines;    // aspif id -> first line it appeared in a body

    auto lookup = [&](long aspif_id, detail::AspifLine& line) -> AtomId {
        if (aspif_id < 1) line.fail("atom identifiers must be positive");
        auto it = atom_ids.find(aspif_id);
        if (it != atom_ids.end()) return it->second;
        auto sym = symbols.find(aspif_id);
        std::string name = sym != symbols.end() ? sym->second : "_x" + std::to_string(aspif_id);
        AtomId id = builder.intern(name);
        auto claim = claimed_by.find(id);
        if (claim != claimed_by.end() && claim->second != aspif_id)
            line.fail("name '" + name + "' is shared by aspif atoms " +
                      std::to_string(claim->second) + " and " + std::to_string(aspif_id));
        atom_ids.emplace(aspif_id, id);
        claimed_by.emplace(id, aspif_id);
        return id;
    };

    for (std::size_t i = 1; i < terminator; ++i) {
        detail::AspifLine line(lines[i].first, lines[i].second);
        long type = line.next_int("statement type");
        switch (type) {
        case 1: {
            long head_kind = line.next_int("head type");
            if (head_kind != 0) line.fail("only disjunctive heads are supported");
            long head_count = line.next_int("head size");
            if (head_count != 0 && head_count != 1)
                line.fail("normal rules carry at most one head atom");
            std::optional<AtomId> head;
            long head_aspif = 0;
            if (head_count == 1) {
                head_aspif = line.next_int("head atom");
                head = lookup(head_aspif, line);
            }
            long body_kind = line.next_int("body type");
            if (body_kind != 0) line.fail("only normal bodies are supported");
            long body_count = line.next_int("body size");
            if (body_count < 0) line.fail("body size cannot be negative");
            std::vector<AtomId> pos, neg;
            for (long k = 0; k < body_count; ++k) {
                long lit = line.next_int("body literal");
                if (lit == 0) line.fail("body literal 0 is not a valid atom reference");
                long magnitude = lit < 0 ? -lit : lit;
                AtomId a = lookup(magnitude, line);
                (lit < 0 ? neg : pos).push_back(a);
                body_lines.try_emplace(magnitude, lines[i].second);
            }
            line.expect_end();
            if (head_count == 1) head_lines.try_emplace(head_aspif, lines[i].second);
            builder.add_rule(head, std::move(pos), std::move(neg));
            break;
        }
        case 4: {
            // Consumed in pass 1; skip the payload here.
            long length = line.next_int("name length");
            (void)line.read_name(length);
            (void)line.next_int("condition size");
            (void)line.next_int("atom id");
            line.expect_end();
            break;
        }
        case 5: {
            long atom = line.next_int("external atom");
            long value = line.next_int("external value code");
            line.expect_end();
            if (value != 2)
                line.fail("external value code " + std::to_string(value) +
                          " is not supported (only code 2, fixed true)");
            AtomId a = lookup(atom, line);
            builder.add_rule(a, {}, {});
            head_lines.try_emplace(atom, lines[i].second);
            break;
        }
        default:
            line.fail("unknown aspif statement type " + std::to_string(type));
        }
    }

    if (diagnostics) {
        for (const auto& [aspif_id, first_line] : body_lines) {
            if (!symbols.count(aspif_id) && !head_lines.count(aspif_id))
                diagnostics->warnings.push_back(
                    "line " + std::to_string(first_line) + ": atom " + std::to_string(aspif_id) +
                    " occurs only in rule bodies and has no symbol; named _x" +
                    std::to_string(aspif_id));
        }
    }

    return std::move(builder).build();
}

// Inverse of parse_aspif for programs this library builds: every fact is
// written as an external fixed to true (in rule position, so a later parse
// reproduces the rule order), every other rule as a type-1 statement.
inline std::string emit_aspif(const GroundProgram& p) {
    std::string out = "asp 1 0 0\n";
    for (const Rule& r : p.rules()) {
        if (r.is_fact()) {
            out += "5 " + std::to_string(*r.head + 1) + " 2\n";
            continue;
        }
        out += "1 0 ";
        if (r.head)
            out += "1 " + std::to_string(*r.head + 1);
        else
            out += "0";
        out += " 0 " + std::to_string(r.pos.size() + r.neg.size());
        for (AtomId a : r.pos) out += " " + std::to_string(a + 1);
        for (AtomId a : r.neg) out += " -" + std::to_string(a + 1);
        out += "\n";
    }
    for (AtomId a = 0; a < p.atom_count(); ++a) {
        const std::string& name = p.name(a);
        out += "4 " + std::to_string(name.size()) + " " + name + " 1 " + std::to_string(a + 1) +
               "\n";
    }
    out += "0\n";
    return out;
}

} // namespace xasp
