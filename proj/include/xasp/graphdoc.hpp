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
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "xasp/explanation.hpp"
#include "xasp/program.hpp"

namespace xasp {

// Serialization-friendly flattening of an explanation graph: nodes become
// dense integer ids (the position in the sorted node list), atoms become
// display strings, and the context (program digest, answer set, assumption
// set) rides along so a document is interpretable on its own.
struct GraphDocument {
    struct NodeDoc {
        int id;
        std::string kind;  // pos | neg | top | bot | assume
        std::string display;

        friend bool operator==(const NodeDoc&, const NodeDoc&) = default;
    };
    struct EdgeDoc {
        int from;
        int to;
        std::string label;  // + | - | o

        friend bool operator==(const EdgeDoc&, const EdgeDoc&) = default;
    };

    std::string program_digest;
    std::vector<std::string> answer_set;      // atom names, alphabetical
    std::vector<std::string> assumption_set;  // atom names, alphabetical
    int root = 0;
    std::vector<NodeDoc> nodes;
    std::vector<EdgeDoc> edges;

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

namespace detail {

inline std::string node_kind_text(Node n) {
    switch (n.kind) {
    case Node::pos: return "pos";
    case Node::neg: return "neg";
    case Node::top: return "top";
    case Node::bot: return "bot";
    case Node::assume: return "assume";
    }
    throw InternalError("unreachable node kind");
}

inline std::vector<std::string> sorted_names(const GroundProgram& p, const AtomSet& set) {
    std::vector<std::string> names;
    for (AtomId a : set.to_sorted_ids()) names.push_back(p.name(a));
    std::sort(names.begin(), names.end());
    return names;
}

} // namespace detail

inline GraphDocument make_document(const GroundProgram& p, const AtomSet& answer_set,
                                   const AtomSet& u, const ExplanationGraph& g) {
    GraphDocument doc;
    doc.program_digest = program_digest(p);
    doc.answer_set = detail::sorted_names(p, answer_set);
    doc.assumption_set = detail::sorted_names(p, u);

    auto id_of = [&](Node n) {
        auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), n);
        if (it == g.nodes.end() || !(*it == n))
            throw InternalError("edge endpoint missing from the node list");
        return static_cast<int>(it - g.nodes.begin());
    };

    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        doc.nodes.push_back(GraphDocument::NodeDoc{static_cast<int>(i),
                                                   detail::node_kind_text(g.nodes[i]),
                                                   node_text(p, g.nodes[i])});
    doc.root = id_of(g.root);
    for (const Edge& e : g.edges)
        doc.edges.push_back(
            GraphDocument::EdgeDoc{id_of(e.from), id_of(e.to), std::string(1, e.label)});
    std::sort(doc.edges.begin(), doc.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
    });
    return doc;
}

// DOT rendering. Literal nodes are default ellipses (negative ones show a ~
// prefix in the label); marker nodes are boxes. Statements are emitted in
// sorted order so equal documents give byte-equal output.
inline std::string emit_dot(const GraphDocument& doc) {
    std::string out = "digraph explanation {\n";
    for (const auto& n : doc.nodes) {
        out += "  n" + std::to_string(n.id) + " [label=\"" + n.display + "\"";
        if (n.kind == "top" || n.kind == "bot" || n.kind == "assume") out += ", shape=box";
        out += "];\n";
    }
    for (const auto& e : doc.edges)
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
               e.label + "\"];\n";
    out += "}\n";
    return out;
}

inline nlohmann::json to_json(const GraphDocument& doc) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : doc.nodes)
        nodes.push_back({{"id", n.id}, {"kind", n.kind}, {"display", n.display}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : doc.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
    return nlohmann::json{{"program_digest", doc.program_digest},
                          {"answer_set", doc.answer_set},
                          {"assumption_set", doc.assumption_set},
                          {"root", doc.root},
                          {"nodes", nodes},
                          {"edges", edges}};
}

inline GraphDocument from_json(const nlohmann::json& j) {
    GraphDocument doc;
    doc.program_digest = j.at("program_digest").get<std::string>();
    doc.answer_set = j.at("answer_set").get<std::vector<std::string>>();
    doc.assumption_set = j.at("assumption_set").get<std::vector<std::string>>();
    doc.root = j.at("root").get<int>();
    for (const auto& n : j.at("nodes"))
        doc.nodes.push_back(GraphDocument::NodeDoc{n.at("id").get<int>(),
                                                   n.at("kind").get<std::string>(),
                                                   n.at("display").get<std::string>()});
    for (const auto& e : j.at("edges"))
        doc.edges.push_back(GraphDocument::EdgeDoc{e.at("from").get<int>(), e.at("to").get<int>(),
                                                   e.at("label").get<std::string>()});
    return doc;
}

inline std::string to_structured_text(const GraphDocument& doc) {
    return to_json(doc).dump(2) + "\n";
}

// Terse human rendering: the root line, then one line per edge.
inline std::string render_text(const GraphDocument& doc) {
    std::string out = "root: " + doc.nodes[static_cast<std::size_t>(doc.root)].display + "\n";
    for (const auto& e : doc.edges)
        out += doc.nodes[static_cast<std::size_t>(e.from)].display + " -> " +
               doc.nodes[static_cast<std::size_t>(e.to)].display + " [" + e.label + "]\n";
    return out;
}

} // namespace xasp
