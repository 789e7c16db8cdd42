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

#ifndef PNMEM_REPORT_H
#define PNMEM_REPORT_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "pnmem/encoder.h"
#include "pnmem/graph.h"
#include "pnmem/longest_path.h"

namespace pnmem {

struct EquivalenceCheck {
    std::size_t frames = 0;
    std::size_t margin = 0;
    bool interior_equal = false;
    bool pearl_invertible = false;
    bool conv_invertible = false;

    bool ok() const {
        return interior_equal && pearl_invertible && conv_invertible;
    }
};

struct BruteForceCheck {
    std::int64_t bound = 0;
    std::optional<std::int64_t> brute;  // nullopt: no feasible assignment within bound
    std::int64_t graph = 0;

    bool ok() const;
    /// The bound was below the graph answer, so nothing was compared.
    bool inconclusive() const;
    /// e.g. "graph=3 brute=3 OK"
    std::string summary() const;
};

struct AnalysisReport {
    PearlNecklace input;
    FrameAssignment assignment;
    LongestPaths paths;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::optional<EquivalenceCheck> equivalence;
    std::optional<BruteForceCheck> brute_force;
};

AnalysisReport analyze(const PearlNecklace &enc);

/// margin defaults to default_margin. Throws std::invalid_argument when the
/// window cannot hold the unitary or the margin leaves no interior.
EquivalenceCheck check_equivalence(const PearlNecklace &enc, const FrameAssignment &fa, std::size_t frames,
                                   std::optional<std::size_t> margin = std::nullopt);

/// bound defaults to the graph answer + 1.
BruteForceCheck check_brute_force(const PearlNecklace &enc, std::int64_t graph_memory,
                                  std::optional<std::int64_t> bound = std::nullopt);

/// Sorted keys; byte-identical for identical input.
nlohmann::json to_json(const AnalysisReport &report);
std::string to_text(const AnalysisReport &report);

struct RandomEncoderParams {
    std::size_t max_strings = 6;
    int max_abs_degree = 3;
    int max_frame_width = 4;
    /// -1: any sign, 0: all degrees >= 0, 1: all degrees < 0.
    int sign = -1;
    bool allow_self_strings = true;
};

PearlNecklace random_encoder(std::mt19937_64 &rng, const RandomEncoderParams &params);

struct SelftestResult {
    std::size_t instances = 0;
    std::size_t optimality_mismatches = 0;
    std::size_t infeasible_assignments = 0;
    std::size_t equivalence_failures = 0;
    std::size_t specialization_mismatches = 0;
    std::vector<std::string> failures;  // rendered encoders that failed, by instance index

    bool ok() const {
        return optimality_mismatches == 0 && infeasible_assignments == 0 && equivalence_failures == 0 &&
               specialization_mismatches == 0;
    }
};

/// Random-instance cross-check of the graph answer against the brute-force
/// and GF(2) oracles. Deterministic for a given seed regardless of `threads`.
SelftestResult selftest(std::uint64_t seed, std::size_t count, std::size_t threads = 1);

}  // namespace pnmem

#endif
