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

#include "pnmem/report.h"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include "pnmem/gf2.h"
#include "pnmem/parser.h"

namespace pnmem {

bool BruteForceCheck::ok() const {
    if (brute.has_value()) {
        return *brute == graph || (*brute > graph && bound < graph);
    }
    return bound < graph;
}

bool BruteForceCheck::inconclusive() const {
    return ok() && !(brute.has_value() && *brute == graph);
}

std::string BruteForceCheck::summary() const {
    std::ostringstream out;
    out << "graph=" << graph << " brute=";
    if (brute.has_value()) {
        out << *brute;
    } else {
        out << "none(bound=" << bound << ")";
    }
    if (!ok()) {
        out << " MISMATCH";
    } else if (inconclusive()) {
        out << " INCONCLUSIVE";
    } else {
        out << " OK";
    }
    return out.str();
}

AnalysisReport analyze(const PearlNecklace &enc) {
    auto graph = build_graph(enc);
    AnalysisReport report{enc, frame_assignment(enc), longest_path_weights(graph), graph.vertex_count(),
                          graph.edges().size(), std::nullopt, std::nullopt};
    return report;
}

EquivalenceCheck check_equivalence(const PearlNecklace &enc, const FrameAssignment &fa, std::size_t frames,
                                   std::optional<std::size_t> margin) {
    EquivalenceCheck check;
    check.margin = margin.value_or(default_margin(enc, fa.memory));
    check.frames = frames;
    auto gates = conv_encoder_gates(enc, fa);
    auto pearl = pearl_matrix(enc, check.frames);
    auto conv = conv_matrix(enc, gates, fa.memory, check.frames);
    check.interior_equal = interior_equal(pearl, conv, check.margin);
    check.pearl_invertible = pearl.matrix().invertible();
    check.conv_invertible = conv.matrix().invertible();
    return check;
}

BruteForceCheck check_brute_force(const PearlNecklace &enc, std::int64_t graph_memory,
                                  std::optional<std::int64_t> bound) {
    BruteForceCheck check;
    check.graph = graph_memory;
    check.bound = bound.value_or(graph_memory + 1);
    check.brute = brute_force_min_memory(enc, check.bound);
    return check;
}

namespace {

std::string vertex_label(const AnalysisReport &report, Vertex v) {
    if (v == 0) {
        return "START";
    }
    if (v == report.input.size() + 1) {
        return "END";
    }
    return std::to_string(v);
}

}  // namespace

nlohmann::json to_json(const AnalysisReport &report) {
    using nlohmann::json;
    json out;
    json strings = json::array();
    for (const auto &g : report.input.strings()) {
        strings.push_back(g.str());
    }
    out["input"] = {{"frame_width", report.input.frame_width()}, {"gate_strings", strings}};
    out["memory_frames"] = report.assignment.memory;
    out["memory_qubits"] = report.assignment.memory_qubits;

    json gates = json::array();
    for (std::size_t k = 1; k <= report.input.size(); k++) {
        const auto &g = report.input.gate(k);
        const auto &f = report.assignment.gate(k);
        gates.push_back(
            {{"k", k}, {"a", g.source}, {"b", g.target}, {"l", g.degree}, {"sigma", f.sigma}, {"tau", f.tau}, {"w", f.w}});
    }
    out["gates"] = gates;

    json vertices = json::array();
    for (Vertex v : report.paths.path) {
        vertices.push_back(vertex_label(report, v));
    }
    out["longest_path"] = {{"vertices", vertices}, {"weight", report.paths.end_weight}};
    out["graph"] = {{"vertex_count", report.vertex_count}, {"edge_count", report.edge_count}};

    if (report.equivalence || report.brute_force) {
        json verification = json::object();
        if (const auto &eq = report.equivalence) {
            verification["equivalence"] = {{"frames", eq->frames},
                                           {"margin", eq->margin},
                                           {"interior_equal", eq->interior_equal},
                                           {"pearl_invertible", eq->pearl_invertible},
                                           {"conv_invertible", eq->conv_invertible},
                                           {"ok", eq->ok()}};
        }
        if (const auto &bf = report.brute_force) {
            verification["brute_force"] = {{"bound", bf->bound},
                                           {"brute", bf->brute ? json(*bf->brute) : json(nullptr)},
                                           {"graph", bf->graph},
                                           {"ok", bf->ok()},
                                           {"inconclusive", bf->inconclusive()}};
        }
        out["verification"] = verification;
    }
    return out;
}

std::string to_text(const AnalysisReport &report) {
    std::ostringstream out;
    const auto &fa = report.assignment;
    out << "pearl-necklace encoder: " << report.input.size() << " gate strings, " << report.input.frame_width()
        << " qubits per frame\n";
    out << "minimal memory: " << fa.memory << " frames (" << fa.memory_qubits << " qubits)\n";
    out << "longest path:";
    for (std::size_t k = 0; k < report.paths.path.size(); k++) {
        out << (k == 0 ? " " : " -> ") << vertex_label(report, report.paths.path[k]);
    }
    out << " (weight " << report.paths.end_weight << ")\n";
    out << "graph: " << report.vertex_count << " vertices, " << report.edge_count << " edges\n";

    if (!report.input.empty()) {
        std::size_t name_width = 4;
        for (const auto &g : report.input.strings()) {
            name_width = std::max(name_width, g.str().size());
        }
        out << "\n"
            << std::setw(4) << "k" << "  " << std::left << std::setw(static_cast<int>(name_width)) << "gate"
            << std::right << std::setw(5) << "l" << std::setw(7) << "sigma" << std::setw(6) << "tau" << std::setw(6)
            << "w" << "\n";
        for (std::size_t k = 1; k <= report.input.size(); k++) {
            const auto &g = report.input.gate(k);
            const auto &f = fa.gate(k);
            out << std::setw(4) << k << "  " << std::left << std::setw(static_cast<int>(name_width)) << g.str()
                << std::right << std::setw(5) << g.degree << std::setw(7) << f.sigma << std::setw(6) << f.tau
                << std::setw(6) << f.w << "\n";
        }
    }

    if (const auto &eq = report.equivalence) {
        out << "\nequivalence: frames=" << eq->frames << " margin=" << eq->margin
            << " interior_equal=" << (eq->interior_equal ? "TRUE" : "FALSE")
            << " invertible=" << (eq->pearl_invertible && eq->conv_invertible ? "TRUE" : "FALSE")
            << (eq->ok() ? " OK" : " MISMATCH") << "\n";
    }
    if (const auto &bf = report.brute_force) {
        out << (report.equivalence ? "" : "\n") << "brute force: " << bf->summary() << "\n";
    }
    return out.str();
}

PearlNecklace random_encoder(std::mt19937_64 &rng, const RandomEncoderParams &params) {
    std::uniform_int_distribution<std::size_t> count_dist(0, params.max_strings);
    int min_width = params.allow_self_strings ? 1 : 2;
    std::uniform_int_distribution<int> width_dist(min_width, std::max(min_width, params.max_frame_width));
    int lo = -params.max_abs_degree;
    int hi = params.max_abs_degree;
    if (params.sign == 0) {
        lo = 0;
    } else if (params.sign == 1) {
        hi = -1;
    }

    const std::size_t count = count_dist(rng);
    const int width = width_dist(rng);
    std::uniform_int_distribution<int> qubit_dist(1, width);
    std::uniform_int_distribution<int> degree_dist(lo, hi);
    std::vector<GateString> strings;
    while (strings.size() < count) {
        int a = qubit_dist(rng);
        int b = qubit_dist(rng);
        int l = degree_dist(rng);
        if (a == b && (l == 0 || !params.allow_self_strings)) {
            continue;
        }
        strings.emplace_back(a, b, l);
    }
    return PearlNecklace(std::move(strings), width);
}

namespace {

struct InstanceOutcome {
    bool optimal = true;
    bool feasible = true;
    bool equivalent = true;
    bool specialized = true;
    std::string rendered;
};

InstanceOutcome run_instance(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    RandomEncoderParams params;
    // Alternate between mixed, all-non-negative and all-negative families.
    params.sign = static_cast<int>(index % 3) - 1;
    auto enc = random_encoder(rng, params);

    InstanceOutcome outcome;
    outcome.rendered = render(enc).content;
    FrameAssignment fa;
    try {
        fa = frame_assignment(enc);
    } catch (const std::logic_error &) {
        outcome.feasible = false;
        return outcome;
    }
    auto brute = brute_force_min_memory(enc, fa.memory + 1);
    outcome.optimal = brute.has_value() && *brute == fa.memory;

    std::size_t margin = default_margin(enc, fa.memory);
    outcome.equivalent = check_equivalence(enc, fa, 3 * margin, margin).ok();

    auto mixed = build_graph(enc);
    if (params.sign == 0) {
        outcome.specialized = build_positive_graph(enc).edges() == mixed.edges();
    } else if (params.sign == 1) {
        outcome.specialized = build_negative_graph(enc).edges() == mixed.edges();
    }
    return outcome;
}

}  // namespace

SelftestResult selftest(std::uint64_t seed, std::size_t count, std::size_t threads) {
    std::vector<InstanceOutcome> outcomes(count);
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    {
        std::vector<std::jthread> workers;
        for (std::size_t t = 0; t < threads; t++) {
            workers.emplace_back([&, t] {
                for (std::size_t k = t; k < count; k += threads) {
                    outcomes[k] = run_instance(seed, k);
                }
            });
        }
    }

    SelftestResult result;
    result.instances = count;
    for (std::size_t k = 0; k < count; k++) {
        const auto &o = outcomes[k];
        result.optimality_mismatches += !o.optimal;
        result.infeasible_assignments += !o.feasible;
        result.equivalence_failures += !o.equivalent;
        result.specialization_mismatches += !o.specialized;
        if (!o.optimal || !o.feasible || !o.equivalent || !o.specialized) {
            result.failures.push_back("instance " + std::to_string(k) + ":\n" + o.rendered);
        }
    }
    return result;
}

}  // namespace pnmem
