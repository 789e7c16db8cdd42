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

#include "pnmem/gf2.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace pnmem {

BitMatrix::BitMatrix(std::size_t dim) : dim_(dim), stride_((dim + 63) / 64), words_(dim * ((dim + 63) / 64), 0) {
}

BitMatrix BitMatrix::identity(std::size_t dim) {
    BitMatrix m(dim);
    for (std::size_t k = 0; k < dim; k++) {
        m.set(k, k, true);
    }
    return m;
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
    std::uint64_t &word = words_[row * stride_ + col / 64];
    std::uint64_t mask = std::uint64_t{1} << (col % 64);
    word = value ? (word | mask) : (word & ~mask);
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    auto s = row_words(src);
    auto d = row_words(dst);
    for (std::size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

bool BitMatrix::invertible() const {
    BitMatrix work = *this;
    for (std::size_t col = 0; col < dim_; col++) {
        std::size_t pivot = col;
        while (pivot < dim_ && !work.get(pivot, col)) {
            pivot++;
        }
        if (pivot == dim_) {
            return false;
        }
        if (pivot != col) {
            auto a = work.row_words(pivot);
            auto b = work.row_words(col);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        for (std::size_t row = 0; row < dim_; row++) {
            if (row != col && work.get(row, col)) {
                work.xor_row_into(col, row);
            }
        }
    }
    return true;
}

Gf2Circuit::Gf2Circuit(std::size_t frames, int frame_width)
    : frames_(frames), frame_width_(frame_width), matrix_(BitMatrix::identity(frames * frame_width)) {
    if (frame_width < 1) {
        throw std::invalid_argument("frame width must be at least 1");
    }
}

void Gf2Circuit::apply_cnot(int source, std::int64_t source_frame, int target, std::int64_t target_frame) {
    if (!contains_frame(source_frame) || !contains_frame(target_frame)) {
        throw std::out_of_range("CNOT frame outside the simulated window");
    }
    std::size_t s = global_index(source_frame, source);
    std::size_t t = global_index(target_frame, target);
    if (s == t) {
        throw std::invalid_argument("CNOT source and target are the same physical qubit");
    }
    matrix_.xor_row_into(s, t);
    applied_++;
}

Gf2Circuit pearl_matrix(const PearlNecklace &enc, std::size_t frames) {
    if (frames < 1) {
        throw std::invalid_argument("need at least one frame");
    }
    Gf2Circuit circuit(frames, enc.frame_width());
    for (const auto &g : enc.strings()) {
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(frames); s++) {
            std::int64_t t = s + g.degree;
            if (circuit.contains_frame(t)) {
                circuit.apply_cnot(g.source, s, g.target, t);
            }
        }
    }
    return circuit;
}

Gf2Circuit conv_matrix(const PearlNecklace &enc, std::span<const ConvGate> gates, std::int64_t memory,
                       std::size_t frames) {
    if (memory < 0 || static_cast<std::int64_t>(frames) <= memory) {
        throw std::invalid_argument("a " + std::to_string(frames) + "-frame window cannot hold a unitary with memory " +
                                    std::to_string(memory));
    }
    Gf2Circuit circuit(frames, enc.frame_width());
    const std::int64_t applications = static_cast<std::int64_t>(frames) - memory;
    for (std::int64_t p = 0; p < applications; p++) {
        for (const auto &g : gates) {
            circuit.apply_cnot(g.source, p + (memory - g.sigma), g.target, p + (memory - g.tau));
        }
    }
    return circuit;
}

std::size_t default_margin(const PearlNecklace &enc, std::int64_t memory) {
    return static_cast<std::size_t>(std::max(memory, enc.max_abs_degree()) + 1);
}

bool interior_equal(const Gf2Circuit &a, const Gf2Circuit &b, std::size_t margin) {
    if (a.frames() != b.frames() || a.frame_width() != b.frame_width()) {
        throw std::invalid_argument("circuits have different dimensions");
    }
    if (2 * margin >= a.frames()) {
        throw std::invalid_argument("margin " + std::to_string(margin) + " leaves no interior in " +
                                    std::to_string(a.frames()) + " frames");
    }
    const std::size_t width = static_cast<std::size_t>(a.frame_width());
    const std::size_t lo = margin * width;
    const std::size_t hi = (a.frames() - margin) * width;
    for (std::size_t row = lo; row < hi; row++) {
        for (std::size_t col = lo; col < hi; col++) {
            if (a.matrix().get(row, col) != b.matrix().get(row, col)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct BruteForce {
    const PearlNecklace &enc;
    std::int64_t bound;
    // incoming[j] lists the constraints whose later gate is j (0-based).
    std::vector<std::vector<PairConstraint>> incoming;
    std::vector<std::int64_t> sigma;
    std::vector<std::int64_t> tau;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();

    void search(std::size_t k, std::int64_t current) {
        if (k == enc.size()) {
            best = std::min(best, current);
            return;
        }
        const auto &g = enc.strings()[k];
        for (std::int64_t w = 0; w <= bound; w++) {
            sigma[k] = g.non_negative() ? w + g.degree : w;
            tau[k] = g.non_negative() ? w : w + g.abs_degree();
            std::int64_t reach = std::max({current, sigma[k], tau[k]});
            if (reach >= best) {
                // Larger offsets only move this gate further up.
                break;
            }
            bool feasible = true;
            for (const auto &c : incoming[k]) {
                std::size_t i = c.earlier - 1;
                if (c.kind == ConstraintKind::SourceTarget ? sigma[i] > tau[k] : tau[i] > sigma[k]) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                search(k + 1, reach);
            }
        }
    }
};

}  // namespace

std::optional<std::int64_t> brute_force_min_memory(const PearlNecklace &enc, std::int64_t bound) {
    if (bound < 0) {
        return std::nullopt;
    }
    BruteForce bf{enc, bound, std::vector<std::vector<PairConstraint>>(enc.size()),
                  std::vector<std::int64_t>(enc.size()), std::vector<std::int64_t>(enc.size())};
    for (const auto &c : constraint_set(enc)) {
        bf.incoming[c.later - 1].push_back(c);
    }
    bf.search(0, 0);
    if (bf.best == std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return bf.best;
}

}  // namespace pnmem
