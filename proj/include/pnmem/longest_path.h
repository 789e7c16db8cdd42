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

#ifndef PNMEM_LONGEST_PATH_H
#define PNMEM_LONGEST_PATH_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pnmem/encoder.h"
#include "pnmem/graph.h"

namespace pnmem {

struct LongestPaths {
    /// weights[k - 1] is the longest START -> k path weight for gate vertex k.
    std::vector<std::int64_t> weights;
    std::int64_t end_weight = 0;
    /// One maximizing START -> END vertex sequence (ties go to the lowest
    /// predecessor ordinal).
    std::vector<Vertex> path;

    std::size_t vertices_visited = 0;
    std::size_t edges_relaxed = 0;
};

/// Single pass over vertices in ordinal order, relaxing each incoming edge
/// exactly once.
LongestPaths longest_path_weights(const CommutativityGraph &g);

/// Frame indices of one gate in the repeated convolutional unitary. Frames
/// inside the unitary are numbered from the bottom, starting at zero.
struct GateFrames {
    std::int64_t sigma = 0;  // source frame
    std::int64_t tau = 0;    // target frame
    std::int64_t w = 0;      // longest-path weight of the gate vertex

    bool operator==(const GateFrames &other) const = default;
};

struct FrameAssignment {
    std::vector<GateFrames> gates;  // gates[k - 1] for gate string k
    std::int64_t memory = 0;        // frames
    std::int64_t memory_qubits = 0;

    const GateFrames &gate(std::size_t k) const {
        return gates[k - 1];
    }
};

std::int64_t minimal_memory(const PearlNecklace &enc);

/// Minimal-memory frame placement. Throws std::logic_error if the result
/// violates any pair constraint (that would be an internal bug).
FrameAssignment frame_assignment(const PearlNecklace &enc);

/// Checks sigma = tau + l, 0 <= sigma, tau <= memory and every pair constraint.
bool satisfies_constraints(const PearlNecklace &enc, const FrameAssignment &fa);

/// CNOT(source, target)(sigma, tau) inside the repeated unitary.
struct ConvGate {
    int source;
    int target;
    std::int64_t sigma;
    std::int64_t tau;

    bool operator==(const ConvGate &other) const = default;
};

/// The gates of one application of the convolutional unitary, in gate-string
/// order.
std::vector<ConvGate> conv_encoder_gates(const PearlNecklace &enc, const FrameAssignment &fa);

}  // namespace pnmem

#endif
