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

#ifndef PNMEM_ENCODER_H
#define PNMEM_ENCODER_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pnmem {

/// One infinite CNOT gate string: a CNOT from qubit `source` of every frame s
/// to qubit `target` of frame s + degree. Qubit indices are 1-based within a
/// frame.
struct GateString {
    int source = 1;
    int target = 2;
    int degree = 0;

    GateString() = default;
    /// Throws std::invalid_argument if an index is < 1 or if the string would
    /// act on a single physical qubit (source == target with degree 0).
    GateString(int source, int target, int degree);

    bool non_negative() const {
        return degree >= 0;
    }
    std::int64_t abs_degree() const {
        return degree < 0 ? -static_cast<std::int64_t>(degree) : degree;
    }

    /// Renders as `CNOT(a,b)(1)`, `CNOT(a,b)(D)` or `CNOT(a,b)(D^k)`.
    std::string str() const;

    bool operator==(const GateString &other) const = default;
};

/// Ordered succession of gate strings acting on frames of `frame_width`
/// qubits. Gate k of the public API is 1-based; `strings()[k - 1]` holds it.
class PearlNecklace {
   public:
    PearlNecklace() = default;
    /// Throws std::invalid_argument if frame_width < 1 or any string references
    /// a qubit beyond frame_width.
    PearlNecklace(std::vector<GateString> strings, int frame_width);

    const std::vector<GateString> &strings() const {
        return strings_;
    }
    int frame_width() const {
        return frame_width_;
    }
    std::size_t size() const {
        return strings_.size();
    }
    bool empty() const {
        return strings_.empty();
    }
    /// 1-based access.
    const GateString &gate(std::size_t k) const {
        return strings_[k - 1];
    }
    std::int64_t max_abs_degree() const;

    bool operator==(const PearlNecklace &other) const = default;

   private:
    std::vector<GateString> strings_;
    int frame_width_ = 1;
};

/// Earlier string's source qubit is the later string's target qubit.
constexpr bool source_target(const GateString &first, const GateString &second) {
    return first.source == second.target;
}

/// Earlier string's target qubit is the later string's source qubit.
constexpr bool target_source(const GateString &first, const GateString &second) {
    return first.target == second.source;
}

enum class ConstraintKind {
    /// sigma_earlier <= tau_later in convolutional-encoder frame numbering.
    SourceTarget,
    /// tau_earlier <= sigma_later in convolutional-encoder frame numbering.
    TargetSource,
};

const char *kind_name(ConstraintKind kind);

struct PairConstraint {
    std::size_t earlier;  // 1-based
    std::size_t later;    // 1-based, > earlier
    ConstraintKind kind;

    bool operator==(const PairConstraint &other) const = default;
};

/// Every ordering constraint a correct convolutional encoder must honor: one
/// entry per (pair, kind) with the corresponding non-commutativity. Ordered by
/// (earlier, later), SourceTarget before TargetSource.
std::vector<PairConstraint> constraint_set(const PearlNecklace &enc);

}  // namespace pnmem

#endif
