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

#include "testutil.hpp"
#include "xasp/graphdoc.hpp"

using namespace xasp;

namespace {

struct DocFixture {
    GroundProgram p = tu::load_corpus("basic.lp");
    AtomSet ans = tu::ids(p, {"b", "e", "f"});
    AtomSet u = tu::ids(p, {"k"});
    SupportTable table = build_support_table(p, ans);
    std::vector<ExplanationGraph> graphs =
        explanation_graphs(tu::id_of(p, "f"), table, u);

    GraphDocument doc() const { return make_document(p, ans, u, graphs.at(0)); }
};

} // namespace

TEST_CASE("documents carry dense ids and sorted context") {
    DocFixture fx;
    GraphDocument doc = fx.doc();
    CHECK(doc.program_digest == program_digest(fx.p));
    CHECK(doc.answer_set == std::vector<std::string>{"b", "e", "f"});
    CHECK(doc.assumption_set == std::vector<std::string>{"k"});
    REQUIRE(doc.nodes.size() == 7);
    for (std::size_t i = 0; i < doc.nodes.size(); ++i)
        CHECK(doc.nodes[i].id == static_cast<int>(i));
    CHECK(doc.nodes[static_cast<std::size_t>(doc.root)].display == "f");
    for (std::size_t i = 1; i < doc.edges.size(); ++i) {
        const auto& a = doc.edges[i - 1];
        const auto& b = doc.edges[i];
        CHECK(std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label));
    }
}

TEST_CASE("dot output is byte-stable") {
    DocFixture fx;
    CHECK(emit_dot(fx.doc()) ==
          "digraph explanation {\n"
          "  n0 [label=\"e\"];\n"
          "  n1 [label=\"f\"];\n"
          "  n2 [label=\"~a\"];\n"
          "  n3 [label=\"~k\"];\n"
          "  n4 [label=\"~c\"];\n"
          "  n5 [label=\"T\", shape=box];\n"
          "  n6 [label=\"assume\", shape=box];\n"
          "  n0 -> n5 [label=\"+\"];\n"
          "  n1 -> n0 [label=\"+\"];\n"
          "  n1 -> n3 [label=\"-\"];\n"
          "  n1 -> n4 [label=\"-\"];\n"
          "  n2 -> n3 [label=\"+\"];\n"
          "  n3 -> n6 [label=\"o\"];\n"
          "  n4 -> n2 [label=\"+\"];\n"
          "  n4 -> n3 [label=\"+\"];\n"
          "}\n");
}

TEST_CASE("a fact graph renders as two nodes and one edge") {
    DocFixture fx;
    std::vector<ExplanationGraph> graphs = explanation_graphs(tu::id_of(fx.p, "e"), fx.table, fx.u);
    REQUIRE(graphs.size() == 1);
    GraphDocument doc = make_document(fx.p, fx.ans, fx.u, graphs[0]);
    CHECK(emit_dot(doc) ==
          "digraph explanation {\n"
          "  n0 [label=\"e\"];\n"
          "  n1 [label=\"T\", shape=box];\n"
          "  n0 -> n1 [label=\"+\"];\n"
          "}\n");
}

TEST_CASE("an edgeless document still renders its root") {
    GraphDocument doc;
    doc.program_digest = "fnv1a:0000000000000000";
    doc.root = 0;
    doc.nodes.push_back(GraphDocument::NodeDoc{0, "pos", "x"});
    CHECK(emit_dot(doc) ==
          "digraph explanation {\n"
          "  n0 [label=\"x\"];\n"
          "}\n");
    CHECK(render_text(doc) == "root: x\n");
}

TEST_CASE("structured output round-trips") {
    DocFixture fx;
    GraphDocument doc = fx.doc();
    CHECK(from_json(to_json(doc)) == doc);
    std::string text = to_structured_text(doc);
    CHECK(text.back() == '\n');
    CHECK(from_json(nlohmann::json::parse(text)) == doc);
    nlohmann::json j = to_json(doc);
    for (const char* key :
         {"program_digest", "answer_set", "assumption_set", "root", "nodes", "edges"})
        CHECK(j.contains(key));
}

TEST_CASE("text rendering lists the root then the edges") {
    DocFixture fx;
    CHECK(render_text(fx.doc()) ==
          "root: f\n"
          "e -> T [+]\n"
          "f -> e [+]\n"
          "f -> ~k [-]\n"
          "f -> ~c [-]\n"
          "~a -> ~k [+]\n"
          "~k -> assume [o]\n"
          "~c -> ~a [+]\n"
          "~c -> ~k [+]\n");
}

TEST_CASE("documents of distinct graphs differ") {
    DocFixture fx;
    std::vector<ExplanationGraph> one = explanation_graphs(tu::id_of(fx.p, "e"), fx.table, fx.u);
    GraphDocument other = make_document(fx.p, fx.ans, fx.u, one.at(0));
    CHECK_FALSE(other == fx.doc());
}
