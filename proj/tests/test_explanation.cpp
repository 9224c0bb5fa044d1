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
#include <set>

#include "testutil.hpp"
#include "xasp/assumption.hpp"
#include "xasp/explanation.hpp"

using namespace xasp;

namespace {

struct Explained {
    GroundProgram p;
    AtomSet ans;
    SupportTable table;

    Explained(const std::string& corpus, const std::vector<std::string>& answer)
        : p(tu::load_corpus(corpus)),
          ans(tu::ids(p, answer)),
          table(build_support_table(p, ans)) {}

    std::vector<ExplanationGraph> graphs(const std::string& atom,
                                         const std::vector<std::string>& u_names) {
        return explanation_graphs(tu::id_of(p, atom), table, tu::ids(p, u_names));
    }

    Node node(const std::string& text) const {
        if (!text.empty() && text[0] == '~')
            return Node{Node::neg, tu::id_of(p, text.substr(1))};
        return Node{Node::pos, tu::id_of(p, text)};
    }
};

} // namespace

TEST_CASE("edge labels are forced by their endpoints") {
    Node pa{Node::pos, 0}, pb{Node::pos, 1}, na{Node::neg, 0}, nb{Node::neg, 1};
    Node top{Node::top}, bot{Node::bot}, assume{Node::assume};
    CHECK(edge_label(pa, pb) == '+');
    CHECK(edge_label(pa, top) == '+');
    CHECK(edge_label(pa, nb) == '-');
    CHECK(edge_label(na, pb) == '-');
    CHECK(edge_label(na, nb) == '+');
    CHECK(edge_label(na, bot) == '+');
    CHECK(edge_label(na, assume) == 'o');
    CHECK_THROWS_AS(edge_label(pa, bot), InternalError);
    CHECK_THROWS_AS(edge_label(pa, assume), InternalError);
    CHECK_THROWS_AS(edge_label(na, top), InternalError);
    CHECK_THROWS_AS(edge_label(top, pa), InternalError);
}

TEST_CASE("explanation graph of f under the first assumption set") {
    Explained fx("basic.lp", {"b", "e", "f"});
    std::vector<ExplanationGraph> graphs = fx.graphs("f", {"a"});
    REQUIRE(graphs.size() == 1);
    const ExplanationGraph& g = graphs[0];
    CHECK(g.root == fx.node("f"));
    CHECK(g.nodes.size() == 8);
    REQUIRE(g.edges.size() == 9);
    CHECK(g.has_edge(fx.node("f"), fx.node("e"), '+'));
    CHECK(g.has_edge(fx.node("f"), fx.node("~k"), '-'));
    CHECK(g.has_edge(fx.node("f"), fx.node("~c"), '-'));
    CHECK(g.has_edge(fx.node("~k"), fx.node("b"), '-'));
    CHECK(g.has_edge(fx.node("b"), fx.node("~a"), '-'));
    CHECK(g.has_edge(fx.node("~a"), Node{Node::assume}, 'o'));
    CHECK(g.has_edge(fx.node("e"), Node{Node::top}, '+'));
    CHECK(g.has_edge(fx.node("~c"), fx.node("~a"), '+'));
    CHECK(g.has_edge(fx.node("~c"), fx.node("~k"), '+'));
}

TEST_CASE("explanation graph of f under the second assumption set") {
    Explained fx("basic.lp", {"b", "e", "f"});
    std::vector<ExplanationGraph> graphs = fx.graphs("f", {"k"});
    REQUIRE(graphs.size() == 1);
    const ExplanationGraph& g = graphs[0];
    CHECK(g.nodes.size() == 7);
    CHECK_FALSE(g.has_node(fx.node("b")));
    CHECK(g.has_edge(fx.node("~k"), Node{Node::assume}, 'o'));
    CHECK(g.has_edge(fx.node("~a"), fx.node("~k"), '+'));
    CHECK(g.has_edge(fx.node("f"), fx.node("e"), '+'));
    CHECK(g.has_edge(fx.node("f"), fx.node("~k"), '-'));
    CHECK(g.has_edge(fx.node("f"), fx.node("~c"), '-'));
}

TEST_CASE("false atoms are explained from their negative literal") {
    Explained fx("basic.lp", {"b", "e", "f"});
    std::vector<ExplanationGraph> graphs = fx.graphs("c", {"k"});
    REQUIRE_FALSE(graphs.empty());
    for (const ExplanationGraph& g : graphs) CHECK(g.root == fx.node("~c"));
}

TEST_CASE("assumed atoms explain themselves by assumption") {
    Explained fx("basic.lp", {"b", "e", "f"});
    std::vector<ExplanationGraph> graphs = fx.graphs("a", {"a"});
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].root == fx.node("~a"));
    CHECK(graphs[0].edges ==
          std::vector<Edge>{Edge{fx.node("~a"), Node{Node::assume}, 'o'}});
}

TEST_CASE("without assumptions the loop atoms have no explanation") {
    Explained fx("basic.lp", {"b", "e", "f"});
    CHECK(fx.graphs("f", {}).empty());
    CHECK(fx.graphs("a", {}).empty());
    // Atoms outside every loop keep their explanations.
    CHECK_FALSE(fx.graphs("e", {}).empty());
}

TEST_CASE("oversized assumption sets still explain") {
    Explained fx("basic.lp", {"b", "e", "f"});
    std::vector<ExplanationGraph> graphs = fx.graphs("f", {"a", "k"});
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].has_edge(fx.node("~k"), Node{Node::assume}, 'o'));
    CHECK_FALSE(graphs[0].has_node(fx.node("b")));
}

TEST_CASE("bad explanation queries are rejected") {
    Explained fx("basic.lp", {"b", "e", "f"});
    CHECK_THROWS_AS(explanation_graphs(99, fx.table, AtomSet{}), InputError);
    CHECK_THROWS_MATCHES(fx.graphs("f", {"b"}), InputError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("holds in the answer set")));
}

TEST_CASE("all-negative cycles are legitimate explanations") {
    GroundProgram p = tu::mk("x :- not p, not q.\np :- q.\nq :- p.\n");
    AtomSet ans = tu::ids(p, {"x"});
    SupportTable table = build_support_table(p, ans);
    AtomSet empty;
    empty.reserve(p.atom_count());
    std::vector<ExplanationGraph> graphs = explanation_graphs(tu::id_of(p, "x"), table, empty);
    REQUIRE(graphs.size() == 1);
    const ExplanationGraph& g = graphs[0];
    Node np{Node::neg, tu::id_of(p, "p")}, nq{Node::neg, tu::id_of(p, "q")};
    CHECK(g.has_edge(np, nq, '+'));
    CHECK(g.has_edge(nq, np, '+'));
    CHECK_FALSE(validate_explanation_graph(g, p, ans, empty).has_value());
}

TEST_CASE("selections reaching the same graph are reported once") {
    GroundProgram p = tu::mk("x :- y.\ny.\ny :- z.\nz :- w1.\nz :- w2.\nw1.\nw2.\n");
    std::vector<AtomSet> sets = enumerate_answer_sets(p);
    REQUIRE(sets.size() == 1);
    SupportTable table = build_support_table(p, sets[0]);
    AtomSet empty;
    empty.reserve(p.atom_count());
    std::vector<ExplanationGraph> graphs = explanation_graphs(tu::id_of(p, "x"), table, empty);
    CHECK(graphs.size() == 3);
}

TEST_CASE("graph enumeration respects the selection cap") {
    GroundProgram p = tu::mk("x :- y.\ny.\ny :- z.\nz :- w1.\nz :- w2.\nw1.\nw2.\n");
    std::vector<AtomSet> sets = enumerate_answer_sets(p);
    SupportTable table = build_support_table(p, sets[0]);
    AtomSet empty;
    empty.reserve(p.atom_count());
    bool truncated = false;
    std::vector<ExplanationGraph> graphs =
        explanation_graphs(tu::id_of(p, "x"), table, empty, 1, &truncated);
    CHECK(truncated);
    CHECK(graphs.size() == 1);
}

TEST_CASE("generated graphs satisfy the validator across the corpus") {
    for (const char* name : {"basic.lp", "oddloop.lp", "stratified.lp", "lens.lp"}) {
        GroundProgram p = tu::load_corpus(name);
        for (const AtomSet& ans : enumerate_answer_sets(p)) {
            SupportTable table = build_support_table(p, ans);
            CautiousConsequences cautious = cautious_consequences(p);
            for (const AtomSet& u : minimal_assumption_sets(p, ans, cautious, table)) {
                for (AtomId a = 0; a < p.atom_count(); ++a) {
                    for (const ExplanationGraph& g : explanation_graphs(a, table, u)) {
                        std::optional<Violation> v = validate_explanation_graph(g, p, ans, u);
                        if (v) FAIL("validator rejected a generated graph: " << v->message);
                    }
                }
            }
        }
    }
}

TEST_CASE("graph enumeration is deterministic") {
    Explained fx("basic.lp", {"b", "e", "f"});
    CHECK(fx.graphs("f", {"k"}) == fx.graphs("f", {"k"}));
    CHECK(fx.graphs("c", {"a"}) == fx.graphs("c", {"a"}));
}

TEST_CASE("the validator pinpoints specific defects") {
    Explained fx("basic.lp", {"b", "e", "f"});
    std::vector<ExplanationGraph> graphs = fx.graphs("f", {"k"});
    REQUIRE(graphs.size() == 1);
    const ExplanationGraph& good = graphs[0];
    AtomSet u = tu::ids(fx.p, {"k"});

    auto message_of = [&](const ExplanationGraph& g) {
        std::optional<Violation> v = validate_explanation_graph(g, fx.p, fx.ans, u);
        REQUIRE(v.has_value());
        return v->message;
    };

    SECTION("flipped edge label") {
        ExplanationGraph g = good;
        g.edges[0].label = g.edges[0].label == '+' ? '-' : '+';
        CHECK(message_of(g).find("label") != std::string::npos);
    }
    SECTION("dangling edge endpoint") {
        ExplanationGraph g = good;
        g.nodes.erase(std::find(g.nodes.begin(), g.nodes.end(), fx.node("e")));
        CHECK_FALSE(message_of(g).empty());
    }
    SECTION("root polarity contradicts the answer set") {
        ExplanationGraph g = good;
        g.root = fx.node("~f");
        CHECK_FALSE(message_of(g).empty());
    }
    SECTION("unreachable extra component") {
        ExplanationGraph g = good;
        g.nodes.push_back(fx.node("b"));
        g.nodes.push_back(fx.node("~a"));
        // b's only rule body is {~a}, so the component is internally sound.
        g.edges.push_back(Edge{fx.node("b"), fx.node("~a"), '-'});
        g.edges.push_back(Edge{fx.node("~a"), fx.node("~k"), '+'});
        CHECK(message_of(g).find("unreachable") != std::string::npos);
    }
    SECTION("positive node with a foreign body") {
        ExplanationGraph g = good;
        g.edges.push_back(Edge{fx.node("e"), fx.node("~k"), '-'});
        CHECK(message_of(g).find("mixes in a marker") != std::string::npos);
    }
    SECTION("assumed literal pointing anywhere else") {
        ExplanationGraph g = good;
        for (Edge& e : g.edges)
            if (e.from == fx.node("~k")) {
                e.to = Node{Node::bot};
                e.label = '+';
            }
        CHECK_FALSE(message_of(g).empty());
    }
    SECTION("positive cycle smuggled into the graph") {
        GroundProgram p = tu::mk("x :- y.\ny :- x.\nx.\n");
        AtomSet ans = tu::ids(p, {"x", "y"});
        AtomSet none;
        none.reserve(p.atom_count());
        ExplanationGraph g;
        Node nx{Node::pos, tu::id_of(p, "x")}, ny{Node::pos, tu::id_of(p, "y")};
        g.root = nx;
        g.nodes = {nx, ny};
        std::sort(g.nodes.begin(), g.nodes.end());
        g.edges = {Edge{nx, ny, '+'}, Edge{ny, nx, '+'}};
        std::sort(g.edges.begin(), g.edges.end());
        std::optional<Violation> v = validate_explanation_graph(g, p, ans, none);
        REQUIRE(v.has_value());
        CHECK(v->message.find("cycle") != std::string::npos);
    }
}
