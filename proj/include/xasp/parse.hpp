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

#include <cctype>
#include <string>
#include <string_view>

#include "xasp/program.hpp"

namespace xasp {

// Recursive-descent parser for ground normal programs:
//
//   statement := atom "." | atom ":-" body "." | ":-" body "."
//   body      := literal { "," literal }
//   literal   := ["not"] atom
//   atom      := ident [ "(" term { "," term } ")" ]
//   term      := number | ident [ "(" term { "," term } ")" ]
//   ident     := [a-z_][A-Za-z0-9_]*
//
// `%` starts a line comment. Uppercase-initial identifiers are variables and
// make the input non-ground, which is rejected. `not` is reserved.
class ProgramParser {
public:
    explicit ProgramParser(std::string_view text) : text_(text) {}

    GroundProgram run() {
        ProgramBuilder builder;
        skip_trivia();
        while (!at_end()) {
            parse_statement(builder);
            skip_trivia();
        }
        return std::move(builder).build();
    }

private:
    [[noreturn]] void fail(int line, int col, const std::string& message) const {
        throw ParseError(line, col, message);
    }

    [[noreturn]] void fail_here(const std::string& message) const { fail(line_, col_, message); }

    bool at_end() const { return pos_ >= text_.size(); }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    bool consume(char expected) {
        if (peek() != expected) return false;
        advance();
        return true;
    }

    void expect(char expected, const char* what) {
        if (!consume(expected)) fail_here(std::string("expected '") + expected + "' " + what);
    }

    static bool ident_start(char c) {
        return c == '_' || (c >= 'a' && c <= 'z');
    }

    static bool ident_char(char c) {
        return c == '_' || std::isalnum(static_cast<unsigned char>(c));
    }

    std::string read_ident() {
        std::string out;
        while (!at_end() && ident_char(peek())) out += advance();
        return out;
    }

    // Canonical atom text: identifier plus optional parenthesized ground-term
    // list, rendered without internal whitespace.
    std::string parse_atom_text() {
        skip_trivia();
        int line = line_, col = col_;
        char c = peek();
        if (std::isupper(static_cast<unsigned char>(c))) {
            std::string var = read_ident();
            fail(line, col, "non-ground input: variable '" + var + "' is not allowed");
        }
        if (!ident_start(c)) fail(line, col, "expected an atom");
        std::string name = read_ident();
        if (name == "not") fail(line, col, "reserved word 'not' cannot be used as an atom");
        skip_trivia();
        if (peek() == '(') {
            advance();
            name += '(';
            name += parse_term_text();
            skip_trivia();
            while (consume(',')) {
                name += ',';
                name += parse_term_text();
                skip_trivia();
            }
            expect(')', "to close the term list");
            name += ')';
        }
        return name;
    }

    std::string parse_term_text() {
        skip_trivia();
        int line = line_, col = col_;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) num += advance();
            return num;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            std::string var = read_ident();
            fail(line, col, "non-ground input: variable '" + var + "' is not allowed");
        }
        if (!ident_start(c)) fail(line, col, "expected a ground term");
        std::string term = read_ident();
        skip_trivia();
        if (peek() == '(') {
            advance();
            term += '(';
            term += parse_term_text();
            skip_trivia();
            while (consume(',')) {
                term += ',';
                term += parse_term_text();
                skip_trivia();
            }
            expect(')', "to close the term list");
            term += ')';
        }
        return term;
    }

    // Returns (atom text, negated).
    std::pair<std::string, bool> parse_body_literal() {
        skip_trivia();
        std::size_t mark_pos = pos_;
        int mark_line = line_, mark_col = col_;
        if (ident_start(peek())) {
            std::string word = read_ident();
            if (word == "not") {
                skip_trivia();
                if (!ident_start(peek()) && !std::isupper(static_cast<unsigned char>(peek())))
                    fail_here("expected an atom after 'not'");
                return {parse_atom_text(), true};
            }
            // Not the keyword: rewind and parse as an atom.
            pos_ = mark_pos;
            line_ = mark_line;
            col_ = mark_col;
        }
        return {parse_atom_text(), false};
    }

    void parse_statement(ProgramBuilder& builder) {
        skip_trivia();
        int line = line_, col = col_;
        if (peek() == '#') {
            std::size_t end = text_.find('.', pos_);
            std::string directive(text_.substr(pos_, end == std::string_view::npos ? 9 : end - pos_));
            if (directive.rfind("#external", 0) == 0)
                fail(line, col,
                     "#external statements are producer-only interop text; "
                     "feed the grounder's aspif output to this tool instead");
            fail(line, col, "unsupported directive");
        }

        std::optional<AtomId> head;
        bool saw_arrow = false;
        if (peek() == ':') {
            advance();
            expect('-', "after ':' to form ':-'");
            saw_arrow = true;
        } else {
            head = builder.intern(parse_atom_text());
            skip_trivia();
            if (consume('.')) {
                builder.add_rule(head, {}, {});
                return;
            }
            if (peek() == ':') {
                advance();
                expect('-', "after ':' to form ':-'");
                saw_arrow = true;
            } else {
                fail_here("expected '.' or ':-' after the head atom");
            }
        }

        (void)saw_arrow;
        std::vector<AtomId> pos, neg;
        while (true) {
            auto [text, negated] = parse_body_literal();
            AtomId a = builder.intern(text);
            (negated ? neg : pos).push_back(a);
            skip_trivia();
            if (consume(',')) continue;
            if (consume('.')) break;
            fail_here("expected ',' or '.' after a body literal");
        }
        builder.add_rule(head, std::move(pos), std::move(neg));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

inline GroundProgram parse_program(std::string_view text) {
    return ProgramParser(text).run();
}

} // namespace xasp
