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

#include "pnmem/graph.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pnmem {

const char *mode_name(GraphMode mode) {
    switch (mode) {
        case GraphMode::Positive:
            return "positive";
        case GraphMode::Negative:
            return "negative";
        case GraphMode::Mixed:
            return "mixed";
    }
    return "?";
}

CommutativityGraph::CommutativityGraph(std::size_t gate_count, std::vector<Edge> edges, GraphMode mode,
                                       std::size_t pair_inspections)
    : gate_count_(gate_count), edges_(std::move(edges)), mode_(mode), pair_inspections_(pair_inspections) {
    std::sort(edges_.begin(), edges_.end());
    if (!is_topologically_ordered()) {
        throw std::invalid_argument("commutativity graph edge does not increase the vertex ordinal");
    }
}

std::vector<Edge> CommutativityGraph::gate_edges() const {
    std::vector<Edge> result;
    for (const auto &e : edges_) {
        if (e.from != start() && e.to != end()) {
            result.push_back(e);
        }
    }
    return result;
}

bool CommutativityGraph::is_topologically_ordered() const {
    return std::all_of(edges_.begin(), edges_.end(), [&](const Edge &e) {
        return e.from < e.to && e.to <= end();
    });
}

namespace {

// Shared frame of all three constructions: START -> j (0), j -> END (|l_j|),
// and one call of `pair_edges(i, j, out)` for every i < j.
template <typename PairEdges>
CommutativityGraph build_with(const PearlNecklace &enc, GraphMode mode, PairEdges pair_edges) {
    const std::size_t n = enc.size();
    std::vector<Edge> edges;
    std::size_t inspections = 0;
    for (Vertex j = 1; j <= n; j++) {
        edges.push_back({0, j, 0});
        for (Vertex i = 1; i < j; i++) {
            inspections++;
            pair_edges(enc.gate(i), enc.gate(j), i, j, edges);
        }
    }
    for (Vertex j = 1; j <= n; j++) {
        edges.push_back({j, n + 1, enc.gate(j).abs_degree()});
    }
    return CommutativityGraph(n, std::move(edges), mode, inspections);
}

}  // namespace

CommutativityGraph build_graph(const PearlNecklace &enc) {
    return build_with(enc, GraphMode::Mixed,
                      [](const GateString &gi, const GateString &gj, Vertex i, Vertex j, std::vector<Edge> &out) {
                          const bool st = source_target(gi, gj);
                          const bool ts = target_source(gi, gj);
                          const std::int64_t li = gi.degree;
                          const std::int64_t lj = gj.degree;
                          if (li >= 0 && lj >= 0) {
                              if (st) {
                                  out.push_back({i, j, li});
                              } else if (ts) {
                                  out.push_back({i, j, -lj});
                              }
                          } else if (li < 0 && lj >= 0) {
                              if (st) {
                                  out.push_back({i, j, 0});
                              }
                              if (ts) {
                                  out.push_back({i, j, gi.abs_degree() - lj});
                              }
                          } else if (li >= 0 && lj < 0) {
                              if (st) {
                                  out.push_back({i, j, li - gj.abs_degree()});
                              }
                              if (ts) {
                                  out.push_back({i, j, 0});
                              }
                          } else {
                              if (ts) {
                                  out.push_back({i, j, gi.abs_degree()});
                              } else if (st) {
                                  out.push_back({i, j, -gj.abs_degree()});
                              }
                          }
                      });
}

CommutativityGraph build_positive_graph(const PearlNecklace &enc) {
    for (const auto &g : enc.strings()) {
        if (g.degree < 0) {
            throw std::invalid_argument("positive construction requires all degrees >= 0, got " + g.str());
        }
    }
    return build_with(enc, GraphMode::Positive,
                      [](const GateString &gi, const GateString &gj, Vertex i, Vertex j, std::vector<Edge> &out) {
                          if (source_target(gi, gj)) {
                              out.push_back({i, j, gi.degree});
                          } else if (target_source(gi, gj)) {
                              out.push_back({i, j, -static_cast<std::int64_t>(gj.degree)});
                          }
                      });
}

CommutativityGraph build_negative_graph(const PearlNecklace &enc) {
    for (const auto &g : enc.strings()) {
        if (g.degree >= 0) {
            throw std::invalid_argument("negative construction requires all degrees < 0, got " + g.str());
        }
    }
    return build_with(enc, GraphMode::Negative,
                      [](const GateString &gi, const GateString &gj, Vertex i, Vertex j, std::vector<Edge> &out) {
                          if (target_source(gi, gj)) {
                              out.push_back({i, j, gi.abs_degree()});
                          } else if (source_target(gi, gj)) {
                              out.push_back({i, j, -gj.abs_degree()});
                          }
                      });
}

bool edge_count_bound_check(const CommutativityGraph &g, std::size_t gate_count) {
    const std::size_t pairs = gate_count * (gate_count == 0 ? 0 : gate_count - 1) / 2;
    return g.gate_edges().size() <= 2 * pairs && g.edges().size() <= 2 * pairs + 2 * gate_count;
}

std::string to_dot(const CommutativityGraph &g, const PearlNecklace &enc) {
    std::ostringstream out;
    out << "digraph commutativity {\n";
    out << "  rankdir=LR;\n";
    out << "  " << g.start() << " [label=\"START\"];\n";
    for (Vertex k = 1; k <= g.gate_count(); k++) {
        out << "  " << k << " [label=\"" << k << ": " << enc.gate(k).str() << "\"];\n";
    }
    out << "  " << g.end() << " [label=\"END\"];\n";
    for (const auto &e : g.edges()) {
        out << "  " << e.from << " -> " << e.to << " [label=\"" << e.weight << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace pnmem
