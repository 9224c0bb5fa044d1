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
#include <functional>
#include <vector>

#include "xasp/errors.hpp"

namespace xasp {

// Every elementary cycle of the digraph, each reported once, as the node
// sequence starting from its smallest node. Roots are tried in increasing
// order and each search stays inside nodes at least as large as the root, so
// a cycle is only reachable from the rooted search of its minimum.
//
// Path enumeration is exhaustive (nodes may be revisited across branches,
// never within one path). The dependency graphs this runs on are small; for
// them clarity beats the bookkeeping of blocked-set algorithms.
inline std::vector<std::vector<int>> elementary_cycles(const std::vector<std::vector<int>>& adj,
                                                       std::size_t cycle_cap = 100000) {
    int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> cycles;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;

    std::function<void(int, int)> extend = [&](int root, int v) {
        path.push_back(v);
        on_path[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w < root) continue;
            if (w == root) {
                cycles.push_back(path);
                if (cycles.size() > cycle_cap)
                    throw ResourceError("dependency graph has more than " +
                                        std::to_string(cycle_cap) + " elementary cycles");
            } else if (!on_path[static_cast<std::size_t>(w)]) {
                extend(root, w);
            }
        }
        on_path[static_cast<std::size_t>(v)] = 0;
        path.pop_back();
    };

    for (int s = 0; s < n; ++s) extend(s, s);
    return cycles;
}

// Strongly connected components, one sorted node list each. A component is a
// genuine cycle carrier when it has more than one node or its single node
// loops onto itself.
inline std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;

    std::function<void(int)> connect = [&](int v) {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
        stack.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (index[static_cast<std::size_t>(w)] < 0) {
                connect(w);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
            } else if (on_stack[static_cast<std::size_t>(w)]) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
        }
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
            std::vector<int> component;
            for (;;) {
                int w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = 0;
                component.push_back(w);
                if (w == v) break;
            }
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
    };

    for (int v = 0; v < n; ++v)
        if (index[static_cast<std::size_t>(v)] < 0) connect(v);
    return components;
}

inline bool has_edge(const std::vector<std::vector<int>>& adj, int from, int to) {
    const std::vector<int>& out = adj[static_cast<std::size_t>(from)];
    return std::find(out.begin(), out.end(), to) != out.end();
}

} // namespace xasp
