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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xasp/assumption.hpp"
#include "xasp/digraph.hpp"
#include "xasp/support.hpp"
#include "xasp/traverse.hpp"

namespace xasp {

struct Edge {
    Node from;
    Node to;
    char label;  // '+', '-', or 'o'

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Rooted labeled digraph justifying one literal. Nodes and edges are kept
// sorted so structural equality is plain container equality.
struct ExplanationGraph {
    Node root;
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    friend bool operator==(const ExplanationGraph&, const ExplanationGraph&) = default;

    bool has_node(Node n) const { return std::binary_search(nodes.begin(), nodes.end(), n); }

    bool has_edge(Node from, Node to, char label) const {
        return std::binary_search(edges.begin(), edges.end(), Edge{from, to, label});
    }
};

// The label is a function of the endpoint kinds: truth flowing between atoms
// of equal polarity counts positive, across polarities negative, into the
// assume sink the neutral circle.
inline char edge_label(Node from, Node to) {
    if (from.kind == Node::pos) {
        if (to.kind == Node::pos || to.kind == Node::top) return '+';
        if (to.kind == Node::neg) return '-';
    } else if (from.kind == Node::neg) {
        if (to.kind == Node::pos) return '-';
        if (to.kind == Node::neg || to.kind == Node::bot) return '+';
        if (to.kind == Node::assume) return 'o';
    }
    throw InternalError("no edge label fits this endpoint pair");
}

namespace detail {

struct GraphBuildState {
    std::set<Node> visited;
    std::set<Node> on_stack;
    std::map<Node, Node> active_edge;
    std::set<Node> nodes;
    std::vector<Edge> edges;
};

// One depth-first attempt to realize a selection as a graph. Fails on a
// cycle through a positive node, as judged against the active path; a final
// whole-graph screen catches the cycles this walk cannot see (those closed
// through nodes that already finished).
inline bool build_graph_walk(Node k, const Selection& selection, GraphBuildState& st) {
    st.visited.insert(k);
    st.on_stack.insert(k);

    std::vector<Node> children;
    if (k.kind == Node::pos || k.kind == Node::neg) {
        auto it = selection.find(SignedLit{k.atom, k.kind == Node::neg});
        if (it != selection.end()) {
            if (it->second.marker != Marker::none)
                children.push_back(node_of(it->second.marker));
            else
                for (SignedLit l : it->second.lits) children.push_back(node_of(l));
        }
    }

    for (Node child : children) {
        st.active_edge[k] = child;
        st.nodes.insert(child);
        st.edges.push_back(Edge{k, child, edge_label(k, child)});
        if (!st.visited.count(child)) {
            if (!build_graph_walk(child, selection, st)) return false;
        } else if (st.on_stack.count(child)) {
            if (child.kind != Node::neg || !cycle_identification(st.active_edge, child, child))
                return false;
        }
    }

    st.on_stack.erase(k);
    st.active_edge.erase(k);
    return true;
}

inline std::vector<std::vector<int>> graph_adjacency(const ExplanationGraph& g) {
    std::vector<std::vector<int>> adj(g.nodes.size());
    for (const Edge& e : g.edges) {
        auto from = std::lower_bound(g.nodes.begin(), g.nodes.end(), e.from);
        auto to = std::lower_bound(g.nodes.begin(), g.nodes.end(), e.to);
        adj[static_cast<std::size_t>(from - g.nodes.begin())].push_back(
            static_cast<int>(to - g.nodes.begin()));
    }
    return adj;
}

// True when every cycle runs through negative nodes only: each strongly
// connected component that actually carries a cycle must be all-negative.
inline bool cycles_all_negative(const ExplanationGraph& g) {
    std::vector<std::vector<int>> adj = graph_adjacency(g);
    for (const std::vector<int>& component : strongly_connected_components(adj)) {
        bool carries_cycle = component.size() > 1 ||
                             has_edge(adj, component[0], component[0]);
        if (!carries_cycle) continue;
        for (int v : component)
            if (g.nodes[static_cast<std::size_t>(v)].kind != Node::neg) return false;
    }
    return true;
}

} // namespace detail

// All explanation graphs of `atom` under the assumption set `u`, rooted at
// the atom when it holds in the answer set and at its negation otherwise.
//
// The table is copied with every assumed atom's entry replaced by the single
// assume marker, so assumed atoms terminate branches. Graphs come out in
// (root support index, selection index) order, deduplicated by structure.
inline std::vector<ExplanationGraph> explanation_graphs(AtomId atom, const SupportTable& table,
                                                        const AtomSet& u,
                                                        long long selection_cap = 10000,
                                                        bool* truncated = nullptr) {
    const GroundProgram& p = table.program();
    if (atom < 0 || atom >= p.atom_count())
        throw InputError("atom id " + std::to_string(atom) + " is outside the program");
    for (AtomId x : u.to_sorted_ids()) {
        if (x < 0 || x >= p.atom_count())
            throw InputError("assumption atom id " + std::to_string(x) +
                             " is outside the program");
        if (table.answer_set().contains(x))
            throw InputError("assumption atom " + p.name(x) + " holds in the answer set");
    }

    SupportTable rewritten = table;
    for (AtomId x : u.to_sorted_ids())
        rewritten.set_entry(neg_lit(x), {marker_set(Marker::assume_marker)});

    SignedLit root = rewritten.key_for(atom);
    std::vector<ExplanationGraph> out;
    for (const SupportSet& s : rewritten.at(root)) {
        LocalTable local;
        local.add(root, {s});
        get_connection(s, rewritten, local);
        SelectionCursor cursor(local, selection_cap);
        if (cursor.truncated() && truncated) *truncated = true;
        while (auto selection = cursor.next()) {
            detail::GraphBuildState st;
            Node root_node = node_of(root);
            st.nodes.insert(root_node);
            if (!detail::build_graph_walk(root_node, *selection, st)) continue;

            ExplanationGraph g;
            g.root = root_node;
            g.nodes.assign(st.nodes.begin(), st.nodes.end());
            g.edges = std::move(st.edges);
            std::sort(g.edges.begin(), g.edges.end());
            if (!detail::cycles_all_negative(g)) continue;
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
        }
    }
    return out;
}

struct Violation {
    std::string message;
};

// Checks a graph against the defining conditions, independently of how it
// was produced: root identity, node polarities against the answer set,
// reachability, sink discipline of the marker nodes, label consistency, the
// per-node encoding of rule support or rule failure, assume usage, and the
// all-negative cycle requirement. Returns the first violation found.
inline std::optional<Violation> validate_explanation_graph(const ExplanationGraph& graph,
                                                           const GroundProgram& p,
                                                           const AtomSet& answer_set,
                                                           const AtomSet& u) {
    auto fail = [](std::string m) { return std::optional<Violation>(Violation{std::move(m)}); };

    ExplanationGraph g = graph;
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

    // Nodes must be well formed and consistent with the answer set.
    for (Node n : g.nodes) {
        if (n.kind == Node::pos || n.kind == Node::neg) {
            if (n.atom < 0 || n.atom >= p.atom_count())
                return fail("node names an atom outside the program");
            bool holds = answer_set.contains(n.atom);
            if (n.kind == Node::pos && !holds)
                return fail("positive node " + p.name(n.atom) + " is false in the answer set");
            if (n.kind == Node::neg && holds)
                return fail("negative node ~" + p.name(n.atom) + " is true in the answer set");
        } else if (n.atom != -1) {
            return fail("marker node carries an atom id");
        }
    }

    if (g.root.kind != Node::pos && g.root.kind != Node::neg)
        return fail("root is not a literal node");
    if (!g.has_node(g.root)) return fail("root node is missing from the node set");
    if ((g.root.kind == Node::pos) != answer_set.contains(g.root.atom))
        return fail("root polarity disagrees with the answer set");

    for (const Edge& e : g.edges) {
        if (!g.has_node(e.from) || !g.has_node(e.to))
            return fail("edge endpoint is missing from the node set");
        char expected;
        try {
            expected = edge_label(e.from, e.to);
        } catch (const InternalError&) {
            return fail("edge connects an impossible endpoint pair");
        }
        if (e.label != expected)
            return fail(std::string("edge label '") + e.label + "' should be '" + expected + "'");
    }

    // Reachability from the root.
    {
        std::set<Node> reached{g.root};
        std::vector<Node> frontier{g.root};
        while (!frontier.empty()) {
            Node n = frontier.back();
            frontier.pop_back();
            for (const Edge& e : g.edges)
                if (e.from == n && !reached.count(e.to)) {
                    reached.insert(e.to);
                    frontier.push_back(e.to);
                }
        }
        for (Node n : g.nodes)
            if (!reached.count(n)) return fail("node " + node_text(p, n) + " is unreachable");
    }

    // Per-node out-edge discipline.
    for (Node n : g.nodes) {
        std::vector<Node> out;
        for (const Edge& e : g.edges)
            if (e.from == n) out.push_back(e.to);
        std::sort(out.begin(), out.end());

        if (n.kind == Node::top || n.kind == Node::bot || n.kind == Node::assume) {
            if (!out.empty()) return fail("marker node " + node_text(p, n) + " has out-edges");
            continue;
        }

        if (n.kind == Node::pos) {
            if (out.empty()) return fail("positive node " + p.name(n.atom) + " has no support");
            if (out.size() == 1 && out[0].kind == Node::top) {
                bool is_fact = false;
                for (int ri : p.rules_with_head(n.atom))
                    if (p.rules()[static_cast<std::size_t>(ri)].is_fact()) is_fact = true;
                if (!is_fact)
                    return fail("node " + p.name(n.atom) + " claims to be a fact but is not");
                continue;
            }
            for (Node c : out)
                if (c.kind != Node::pos && c.kind != Node::neg)
                    return fail("support of " + p.name(n.atom) + " mixes in a marker");
            bool matches_rule = false;
            for (int ri : p.rules_with_head(n.atom)) {
                const Rule& r = p.rules()[static_cast<std::size_t>(ri)];
                std::vector<Node> body;
                for (AtomId b : r.pos) body.push_back(Node{Node::pos, b});
                for (AtomId b : r.neg) body.push_back(Node{Node::neg, b});
                std::sort(body.begin(), body.end());
                body.erase(std::unique(body.begin(), body.end()), body.end());
                if (body == out) {
                    matches_rule = true;
                    break;
                }
            }
            if (!matches_rule)
                return fail("out-neighbors of " + p.name(n.atom) +
                            " encode no rule body for it");
            continue;
        }

        // Negative literal node.
        if (u.contains(n.atom)) {
            if (out.size() != 1 || out[0].kind != Node::assume)
                return fail("assumed atom ~" + p.name(n.atom) +
                            " must point at assume and nothing else");
            continue;
        }
        const std::vector<int>& defining = p.rules_with_head(n.atom);
        if (defining.empty()) {
            if (out.size() != 1 || out[0].kind != Node::bot)
                return fail("atom ~" + p.name(n.atom) +
                            " heads no rule and must point at F alone");
            continue;
        }
        if (out.empty()) return fail("negative node ~" + p.name(n.atom) + " has no support");
        for (Node c : out)
            if (c.kind != Node::pos && c.kind != Node::neg)
                return fail("failure support of ~" + p.name(n.atom) + " mixes in a marker");
        for (int ri : defining) {
            const Rule& r = p.rules()[static_cast<std::size_t>(ri)];
            bool falsified = false;
            for (Node c : out) {
                if (c.kind == Node::neg &&
                    std::find(r.pos.begin(), r.pos.end(), c.atom) != r.pos.end())
                    falsified = true;
                if (c.kind == Node::pos &&
                    std::find(r.neg.begin(), r.neg.end(), c.atom) != r.neg.end())
                    falsified = true;
            }
            if (!falsified)
                return fail("out-neighbors of ~" + p.name(n.atom) +
                            " leave one of its rules unrefuted");
        }
        for (Node c : out) {
            bool useful = false;
            for (int ri : defining) {
                const Rule& r = p.rules()[static_cast<std::size_t>(ri)];
                if (c.kind == Node::neg &&
                    std::find(r.pos.begin(), r.pos.end(), c.atom) != r.pos.end())
                    useful = true;
                if (c.kind == Node::pos &&
                    std::find(r.neg.begin(), r.neg.end(), c.atom) != r.neg.end())
                    useful = true;
            }
            if (!useful)
                return fail("out-neighbor " + node_text(p, c) + " of ~" + p.name(n.atom) +
                            " refutes none of its rules");
        }
    }

    if (!detail::cycles_all_negative(g)) return fail("a cycle passes through a positive node");

    return std::nullopt;
}

} // namespace xasp
