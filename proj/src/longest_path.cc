// Copyright 2026 The pnmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pnmem/longest_path.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pnmem {

LongestPaths longest_path_weights(const CommutativityGraph &g) {
    const std::size_t vertex_count = g.vertex_count();
    const auto &edges = g.edges();

    // Incoming adjacency in CSR form. Edges are sorted by source ordinal, so
    // each bucket lists predecessors in ascending order.
    std::vector<std::size_t> offsets(vertex_count + 1, 0);
    for (const auto &e : edges) {
        offsets[e.to + 1]++;
    }
    for (std::size_t v = 0; v < vertex_count; v++) {
        offsets[v + 1] += offsets[v];
    }
    std::vector<std::size_t> incoming(edges.size());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t k = 0; k < edges.size(); k++) {
        incoming[fill[edges[k].to]++] = k;
    }

    constexpr std::int64_t unreached = std::numeric_limits<std::int64_t>::min();
    std::vector<std::int64_t> best(vertex_count, unreached);
    std::vector<Vertex> parent(vertex_count, g.start());
    LongestPaths result;

    best[g.start()] = 0;
    for (Vertex v = 0; v < vertex_count; v++) {
        result.vertices_visited++;
        for (std::size_t k = offsets[v]; k < offsets[v + 1]; k++) {
            const Edge &e = edges[incoming[k]];
            result.edges_relaxed++;
            if (best[e.from] == unreached) {
                continue;
            }
            std::int64_t candidate = best[e.from] + e.weight;
            if (candidate > best[v]) {
                best[v] = candidate;
                parent[v] = e.from;
            }
        }
    }

    result.weights.assign(best.begin() + 1, best.end() - 1);
    result.end_weight = best[g.end()] == unreached ? 0 : best[g.end()];
    // With no gates END is unreachable; parent[END] still defaults to START.
    for (Vertex v = g.end(); v != g.start(); v = parent[v]) {
        result.path.push_back(v);
    }
    result.path.push_back(g.start());
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

std::int64_t minimal_memory(const PearlNecklace &enc) {
    return longest_path_weights(build_graph(enc)).end_weight;
}

bool satisfies_constraints(const PearlNecklace &enc, const FrameAssignment &fa) {
    if (fa.gates.size() != enc.size()) {
        return false;
    }
    for (std::size_t k = 1; k <= enc.size(); k++) {
        const auto &f = fa.gate(k);
        if (f.sigma != f.tau + enc.gate(k).degree) {
            return false;
        }
        if (f.sigma < 0 || f.tau < 0 || f.sigma > fa.memory || f.tau > fa.memory) {
            return false;
        }
    }
    for (const auto &c : constraint_set(enc)) {
        const auto &earlier = fa.gate(c.earlier);
        const auto &later = fa.gate(c.later);
        bool ok = c.kind == ConstraintKind::SourceTarget ? earlier.sigma <= later.tau : earlier.tau <= later.sigma;
        if (!ok) {
            return false;
        }
    }
    return true;
}

FrameAssignment frame_assignment(const PearlNecklace &enc) {
    auto paths = longest_path_weights(build_graph(enc));
    FrameAssignment fa;
    fa.gates.reserve(enc.size());
    for (std::size_t k = 1; k <= enc.size(); k++) {
        const auto &g = enc.gate(k);
        std::int64_t w = paths.weights[k - 1];
        if (g.non_negative()) {
            fa.gates.push_back({w + g.degree, w, w});
        } else {
            fa.gates.push_back({w, w + g.abs_degree(), w});
        }
    }
    fa.memory = paths.end_weight;
    fa.memory_qubits = fa.memory * enc.frame_width();

    std::int64_t highest = 0;
    for (const auto &f : fa.gates) {
        highest = std::max({highest, f.sigma, f.tau});
    }
    if (highest != fa.memory || !satisfies_constraints(enc, fa)) {
        throw std::logic_error("frame assignment violates its own constraints");
    }
    return fa;
}

std::vector<ConvGate> conv_encoder_gates(const PearlNecklace &enc, const FrameAssignment &fa) {
    std::vector<ConvGate> result;
    result.reserve(enc.size());
    for (std::size_t k = 1; k <= enc.size(); k++) {
        result.push_back({enc.gate(k).source, enc.gate(k).target, fa.gate(k).sigma, fa.gate(k).tau});
    }
    return result;
}

}  // namespace pnmem
