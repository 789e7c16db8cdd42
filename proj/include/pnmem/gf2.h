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

#ifndef PNMEM_GF2_H
#define PNMEM_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pnmem/encoder.h"
#include "pnmem/longest_path.h"

namespace pnmem {

/// Square matrix over GF(2), one bit-packed row per output bit.
class BitMatrix {
   public:
    explicit BitMatrix(std::size_t dim = 0);
    static BitMatrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    bool get(std::size_t row, std::size_t col) const {
        return (words_[row * stride_ + col / 64] >> (col % 64)) & 1;
    }
    void set(std::size_t row, std::size_t col, bool value);
    /// row[dst] ^= row[src]
    void xor_row_into(std::size_t src, std::size_t dst);

    bool invertible() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    std::span<std::uint64_t> row_words(std::size_t row) {
        return {words_.data() + row * stride_, stride_};
    }

    std::size_t dim_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Truncated, frame-indexed CNOT circuit as a linear map over basis states.
/// Global qubit index = frame * frame_width + (qubit - 1).
class Gf2Circuit {
   public:
    Gf2Circuit(std::size_t frames, int frame_width);

    std::size_t frames() const {
        return frames_;
    }
    int frame_width() const {
        return frame_width_;
    }
    std::size_t total_qubits() const {
        return frames_ * static_cast<std::size_t>(frame_width_);
    }
    const BitMatrix &matrix() const {
        return matrix_;
    }
    std::size_t global_index(std::int64_t frame, int qubit) const {
        return static_cast<std::size_t>(frame) * static_cast<std::size_t>(frame_width_) +
               static_cast<std::size_t>(qubit - 1);
    }
    bool contains_frame(std::int64_t frame) const {
        return frame >= 0 && frame < static_cast<std::int64_t>(frames_);
    }

    /// x[target] ^= x[source]. Both frames must lie inside the window.
    void apply_cnot(int source, std::int64_t source_frame, int target, std::int64_t target_frame);

    std::size_t applied_gates() const {
        return applied_;
    }

   private:
    std::size_t frames_;
    int frame_width_;
    BitMatrix matrix_;
    std::size_t applied_ = 0;
};

/// The pearl-necklace encoder on `frames` frames: every string in order, each
/// over ascending source frames, dropping gates that leave the window.
Gf2Circuit pearl_matrix(const PearlNecklace &enc, std::size_t frames);

/// The repeated unitary applied at offsets 0 .. frames - memory - 1. Window
/// frame f of application p is global frame p + (memory - f). Throws
/// std::invalid_argument if frames <= memory.
Gf2Circuit conv_matrix(const PearlNecklace &enc, std::span<const ConvGate> gates, std::int64_t memory,
                       std::size_t frames);

/// max(memory, max |degree|) + 1. Boundary effects of truncating either
/// circuit stay within max(memory, max |degree|) frames of the window edge.
std::size_t default_margin(const PearlNecklace &enc, std::int64_t memory);

/// Compares the rows of every qubit in frames [margin, frames - margin) on the
/// columns of the same frame range. Throws std::invalid_argument on shape
/// mismatch or when the interior is empty.
bool interior_equal(const Gf2Circuit &a, const Gf2Circuit &b, std::size_t margin);

/// Exhaustive minimum of max(sigma, tau) over assignments with one offset
/// w_k in [0, bound] per gate that satisfy every pair constraint. Returns
/// nullopt when no assignment in that box is feasible.
std::optional<std::int64_t> brute_force_min_memory(const PearlNecklace &enc, std::int64_t bound);

}  // namespace pnmem

#endif
