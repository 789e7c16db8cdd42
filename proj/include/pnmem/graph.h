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

#ifndef PNMEM_GRAPH_H
#define PNMEM_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pnmem/encoder.h"

namespace pnmem {

/// Vertex ordinals: 0 is START, 1..N are the gate strings, N + 1 is END.
using Vertex = std::size_t;

struct Edge {
    Vertex from;
    Vertex to;
    std::int64_t weight;  // frames

    bool operator==(const Edge &other) const = default;
    auto operator<=>(const Edge &other) const = default;
};

enum class GraphMode {
    /// Built by the non-negative-degree construction only.
    Positive,
    /// Built by the negative-degree construction only.
    Negative,
    /// Built by the general construction (any sign).
    Mixed,
};

const char *mode_name(GraphMode mode);

/// Weighted DAG whose longest START -> END path is the minimal encoder memory.
/// Edges are kept sorted by (from, to, weight); parallel edges are allowed.
class CommutativityGraph {
   public:
    CommutativityGraph(std::size_t gate_count, std::vector<Edge> edges, GraphMode mode,
                       std::size_t pair_inspections);

    std::size_t gate_count() const {
        return gate_count_;
    }
    std::size_t vertex_count() const {
        return gate_count_ + 2;
    }
    Vertex start() const {
        return 0;
    }
    Vertex end() const {
        return gate_count_ + 1;
    }
    GraphMode mode() const {
        return mode_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    /// Edges with both endpoints on gate vertices.
    std::vector<Edge> gate_edges() const;
    /// Number of (i, j) gate pairs examined while building the graph.
    std::size_t pair_inspections() const {
        return pair_inspections_;
    }

    /// Every edge strictly increases the vertex ordinal.
    bool is_topologically_ordered() const;

   private:
    std::size_t gate_count_;
    std::vector<Edge> edges_;
    GraphMode mode_;
    std::size_t pair_inspections_;
};

/// General construction, valid for gate strings of any degree sign. A degree
/// of zero goes through the non-negative branch.
CommutativityGraph build_graph(const PearlNecklace &enc);

/// Construction restricted to encoders whose degrees are all >= 0. Throws
/// std::invalid_argument otherwise.
CommutativityGraph build_positive_graph(const PearlNecklace &enc);

/// Construction restricted to encoders whose degrees are all < 0. Throws
/// std::invalid_argument otherwise.
CommutativityGraph build_negative_graph(const PearlNecklace &enc);

/// Structural witness of the quadratic size bound.
bool edge_count_bound_check(const CommutativityGraph &g, std::size_t gate_count);

/// Graphviz digraph with one labeled vertex per gate string. Byte-deterministic.
std::string to_dot(const CommutativityGraph &g, const PearlNecklace &enc);

}  // namespace pnmem

#endif
