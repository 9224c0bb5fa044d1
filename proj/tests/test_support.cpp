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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "testutil.hpp"
#include "xasp/solver.hpp"
#include "xasp/support.hpp"

using namespace xasp;

namespace {

// The table references the program, so keep both alive together.
struct BasicFixture {
    GroundProgram p = tu::load_corpus("basic.lp");
    SupportTable table = build_support_table(p, tu::ids(p, {"b", "e", "f"}));
};

} // namespace

TEST_CASE("support table golden on the basic program") {
    BasicFixture fx;
    SupportTable& table = fx.table;
    const GroundProgram& p = table.program();
    auto entry = [&](const std::string& lit) { return table.at(tu::lit_of(p, lit)); };

    CHECK(entry("f") == std::vector<SupportSet>{tu::sset(p, {"e", "~k", "~c"})});
    CHECK(entry("b") == std::vector<SupportSet>{tu::sset(p, {"~a"})});
    CHECK(entry("e") == std::vector<SupportSet>{marker_set(Marker::fact_top)});
    CHECK(entry("~c") == std::vector<SupportSet>{tu::sset(p, {"~a", "~k"})});
    CHECK(entry("~k") == std::vector<SupportSet>{tu::sset(p, {"b"})});
    CHECK(entry("~a") == std::vector<SupportSet>{tu::sset(p, {"~k"}), tu::sset(p, {"b"})});
}

TEST_CASE("support table text rendering is canonical") {
    BasicFixture fx;
    CHECK(to_text(fx.table) ==
          "~a : [{~k}, {b}]\n"
          "~k : [{b}]\n"
          "b : [{~a}]\n"
          "e : [{T}]\n"
          "~c : [{~a, ~k}]\n"
          "f : [{~k, e, ~c}]\n");
}

TEST_CASE("keys carry the answer set's polarity") {
    BasicFixture fx;
    SupportTable& table = fx.table;
    const GroundProgram& p = table.program();
    CHECK(table.key_for(tu::id_of(p, "a")) == neg_lit(tu::id_of(p, "a")));
    CHECK(table.key_for(tu::id_of(p, "b")) == pos_lit(tu::id_of(p, "b")));
    CHECK(table.keys().size() == 6);
    CHECK_THROWS_AS(table.at(pos_lit(tu::id_of(p, "a"))), InternalError);
    CHECK_THROWS_AS(table.at(neg_lit(tu::id_of(p, "b"))), InternalError);
    CHECK_THROWS_AS(table.at(pos_lit(99)), InternalError);
}

TEST_CASE("only genuine answer sets are accepted") {
    GroundProgram p = tu::load_corpus("basic.lp");
    CHECK_THROWS_MATCHES(build_support_table(p, tu::ids(p, {"e"})), InputError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("not an answer set")));
}

TEST_CASE("atoms heading no rule close with bottom") {
    GroundProgram p = tu::mk("q :- not p.\n");
    SupportTable table = build_support_table(p, tu::ids(p, {"q"}));
    CHECK(table.at(tu::lit_of(p, "~p")) ==
          std::vector<SupportSet>{marker_set(Marker::no_rule_bot)});
}

TEST_CASE("false atoms multiply falsifier choices across rules") {
    GroundProgram p = tu::mk("x :- y, z.\nx :- w.\n");
    AtomSet empty;
    empty.reserve(p.atom_count());
    SupportTable table = build_support_table(p, empty);
    CHECK(table.at(tu::lit_of(p, "~x")) ==
          std::vector<SupportSet>{tu::sset(p, {"~y", "~w"}), tu::sset(p, {"~z", "~w"})});
}

TEST_CASE("both falsifier kinds appear as separate choices") {
    GroundProgram p = tu::mk("x :- y, not z.\nz.\n");
    SupportTable table = build_support_table(p, tu::ids(p, {"z"}));
    const std::vector<SupportSet>& sets = table.at(tu::lit_of(p, "~x"));
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == tu::sset(p, {"~y"}));
    CHECK(sets[1] == tu::sset(p, {"z"}));
}

TEST_CASE("duplicate rules do not duplicate support sets") {
    GroundProgram p = tu::mk("x :- y.\nx :- y.\ny.\n");
    SupportTable table = build_support_table(p, tu::ids(p, {"x", "y"}));
    CHECK(table.at(tu::lit_of(p, "x")) == std::vector<SupportSet>{tu::sset(p, {"y"})});
    GroundProgram q = tu::mk("x :- y.\nx :- y.\n");
    AtomSet empty;
    empty.reserve(q.atom_count());
    SupportTable negative = build_support_table(q, empty);
    CHECK(negative.at(tu::lit_of(q, "~x")) == std::vector<SupportSet>{tu::sset(q, {"~y"})});
}

TEST_CASE("true facts may also have rule-based support") {
    GroundProgram p = tu::mk("e.\ne :- d.\nd.\n");
    SupportTable table = build_support_table(p, tu::ids(p, {"e", "d"}));
    CHECK(table.at(tu::lit_of(p, "e")) ==
          std::vector<SupportSet>{marker_set(Marker::fact_top), tu::sset(p, {"d"})});
}

TEST_CASE("support sets only cite literals that hold") {
    std::mt19937 rng(0xBADA55);
    int programs_checked = 0;
    while (programs_checked < 60) {
        GroundProgram p = tu::random_program(rng, 8, 10, 4);
        std::vector<AtomSet> sets = enumerate_answer_sets(p);
        if (sets.empty()) continue;
        ++programs_checked;
        for (const AtomSet& ans : sets) {
            SupportTable table = build_support_table(p, ans);
            for (SignedLit key : table.keys()) {
                for (const SupportSet& s : table.at(key)) {
                    for (SignedLit l : s.lits) {
                        CHECK(ans.contains(l.atom) == !l.negated);
                    }
                }
            }
        }
    }
}

TEST_CASE("every support set of a false atom refutes every rule for it") {
    std::mt19937 rng(0x5EED);
    int programs_checked = 0;
    while (programs_checked < 60) {
        GroundProgram p = tu::random_program(rng, 8, 10, 4);
        std::vector<AtomSet> sets = enumerate_answer_sets(p);
        if (sets.empty()) continue;
        ++programs_checked;
        const AtomSet& ans = sets[0];
        SupportTable table = build_support_table(p, ans);
        for (AtomId a = 0; a < p.atom_count(); ++a) {
            if (ans.contains(a)) continue;
            for (const SupportSet& s : table.at(neg_lit(a))) {
                if (s.marker == Marker::no_rule_bot) {
                    CHECK(p.rules_with_head(a).empty());
                    continue;
                }
                for (int ri : p.rules_with_head(a)) {
                    const Rule& r = p.rules()[ri];
                    bool refuted = std::any_of(s.lits.begin(), s.lits.end(), [&](SignedLit l) {
                        if (l.negated)
                            return std::binary_search(r.pos.begin(), r.pos.end(), l.atom);
                        return std::binary_search(r.neg.begin(), r.neg.end(), l.atom);
                    });
                    CHECK(refuted);
                }
            }
        }
    }
}

TEST_CASE("true-atom support sets are exactly the satisfied rule bodies") {
    GroundProgram p = tu::load_corpus("lens.lp");
    std::vector<AtomSet> sets = enumerate_answer_sets(p);
    REQUIRE(sets.size() == 1);
    SupportTable table = build_support_table(p, sets[0]);
    CHECK(table.at(tu::lit_of(p, "correctiveLens")) ==
          std::vector<SupportSet>{tu::sset(p, {"shortSighted", "~laserSurgery"})});
    CHECK(table.at(tu::lit_of(p, "~laserSurgery")) ==
          std::vector<SupportSet>{tu::sset(p, {"tightOnMoney"}), tu::sset(p, {"correctiveLens"})});
}
