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

#include "pnmem/encoder.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pnmem {

GateString::GateString(int source, int target, int degree) : source(source), target(target), degree(degree) {
    if (source < 1 || target < 1) {
        throw std::invalid_argument("qubit indices are 1-based; got CNOT(" + std::to_string(source) + "," +
                                    std::to_string(target) + ")");
    }
    if (source == target && degree == 0) {
        throw std::invalid_argument("CNOT(" + std::to_string(source) + "," + std::to_string(target) +
                                    ")(1) acts on a single physical qubit");
    }
}

std::string GateString::str() const {
    std::ostringstream out;
    out << "CNOT(" << source << "," << target << ")(";
    if (degree == 0) {
        out << "1";
    } else if (degree == 1) {
        out << "D";
    } else {
        out << "D^" << degree;
    }
    out << ")";
    return out.str();
}

PearlNecklace::PearlNecklace(std::vector<GateString> strings, int frame_width)
    : strings_(std::move(strings)), frame_width_(frame_width) {
    if (frame_width_ < 1) {
        throw std::invalid_argument("frame width must be at least 1, got " + std::to_string(frame_width_));
    }
    for (std::size_t k = 0; k < strings_.size(); k++) {
        const auto &g = strings_[k];
        if (g.source > frame_width_ || g.target > frame_width_) {
            throw std::invalid_argument("gate string " + std::to_string(k + 1) + " " + g.str() +
                                        " references a qubit beyond frame width " + std::to_string(frame_width_));
        }
    }
}

std::int64_t PearlNecklace::max_abs_degree() const {
    std::int64_t result = 0;
    for (const auto &g : strings_) {
        result = std::max(result, g.abs_degree());
    }
    return result;
}

const char *kind_name(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::SourceTarget:
            return "source-target";
        case ConstraintKind::TargetSource:
            return "target-source";
    }
    return "?";
}

std::vector<PairConstraint> constraint_set(const PearlNecklace &enc) {
    std::vector<PairConstraint> result;
    for (std::size_t i = 1; i <= enc.size(); i++) {
        for (std::size_t j = i + 1; j <= enc.size(); j++) {
            if (source_target(enc.gate(i), enc.gate(j))) {
                result.push_back({i, j, ConstraintKind::SourceTarget});
            }
            if (target_source(enc.gate(i), enc.gate(j))) {
                result.push_back({i, j, ConstraintKind::TargetSource});
            }
        }
    }
    return result;
}

}  // namespace pnmem
