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

#include <random>

#include "gtest/gtest.h"
#include "pnmem/report.h"
#include "test_util.h"

using namespace pnmem;
using namespace pnmem::testing;

namespace {

bool equivalent(const PearlNecklace &enc, const FrameAssignment &fa, std::size_t frames) {
    auto gates = conv_encoder_gates(enc, fa);
    return interior_equal(pearl_matrix(enc, frames), conv_matrix(enc, gates, fa.memory, frames),
                          default_margin(enc, fa.memory));
}

}  // namespace

TEST(bit_matrix, identity_and_row_ops) {
    auto m = BitMatrix::identity(70);
    ASSERT_TRUE(m.get(69, 69));
    ASSERT_FALSE(m.get(69, 3));
    m.xor_row_into(3, 69);
    ASSERT_TRUE(m.get(69, 3));
    ASSERT_TRUE(m.invertible());
    m.xor_row_into(3, 69);
    ASSERT_EQ(m, BitMatrix::identity(70));
}

TEST(bit_matrix, singular) {
    auto m = BitMatrix::identity(4);
    m.set(2, 2, false);
    ASSERT_FALSE(m.invertible());
    m.set(2, 1, true);
    ASSERT_FALSE(m.invertible());
    m.set(2, 2, true);
    ASSERT_TRUE(m.invertible());
}

TEST(pearl_matrix, frame_local_string) {
    auto c = pearl_matrix(PearlNecklace({GateString(1, 2, 0)}, 2), 2);
    auto expected = BitMatrix::identity(4);
    expected.set(1, 0, true);  // x2 ^= x1 in frame 0
    expected.set(3, 2, true);  // and in frame 1
    ASSERT_EQ(c.matrix(), expected);
    ASSERT_EQ(c.applied_gates(), 2u);
}

TEST(pearl_matrix, truncation_drops_straddling_gates) {
    auto c = pearl_matrix(PearlNecklace({GateString(1, 3, 1)}, 3), 1);
    ASSERT_EQ(c.matrix(), BitMatrix::identity(3));
    ASSERT_EQ(c.applied_gates(), 0u);
    ASSERT_THROW(pearl_matrix(PearlNecklace(), 0), std::invalid_argument);
}

TEST(pearl_matrix, string_order_within_frames) {
    // x1 of frame s+1 picks up x1 of frame s, in ascending s: prefix sums.
    auto c = pearl_matrix(PearlNecklace({GateString(1, 1, 1)}, 1), 4);
    for (std::size_t row = 0; row < 4; row++) {
        for (std::size_t col = 0; col < 4; col++) {
            ASSERT_EQ(c.matrix().get(row, col), col <= row);
        }
    }
}

TEST(conv_matrix, degenerate_window_matches_pearl) {
    auto enc = PearlNecklace({GateString(1, 2, 0)}, 2);
    std::vector<ConvGate> block{{1, 2, 0, 0}};
    ASSERT_EQ(conv_matrix(enc, block, 0, 3).matrix(), pearl_matrix(enc, 3).matrix());
}

TEST(conv_matrix, rejects_window_too_small) {
    auto enc = fig3();
    auto gates = conv_encoder_gates(enc, frame_assignment(enc));
    ASSERT_THROW(conv_matrix(enc, gates, 1, 1), std::invalid_argument);
    ASSERT_NO_THROW(conv_matrix(enc, gates, 1, 2));
}

TEST(conv_matrix, window_orientation) {
    // Window frame f of application p lands on global frame p + (L - f).
    PearlNecklace enc({GateString(1, 2, 2)}, 2);
    std::vector<ConvGate> block{{1, 2, 2, 0}};
    auto c = conv_matrix(enc, block, 2, 3);
    auto expected = BitMatrix::identity(6);
    expected.set(5, 0, true);  // qubit 2 of frame 2 ^= qubit 1 of frame 0
    ASSERT_EQ(c.matrix(), expected);
}

TEST(interior_equal, basics) {
    auto enc = PearlNecklace({GateString(1, 2, 0)}, 2);
    auto a = pearl_matrix(enc, 6);
    ASSERT_TRUE(interior_equal(a, a, 0));
    ASSERT_TRUE(interior_equal(a, a, 2));
    Gf2Circuit identity(6, 2);
    ASSERT_FALSE(interior_equal(a, identity, 1));
    ASSERT_THROW(interior_equal(a, Gf2Circuit(5, 2), 1), std::invalid_argument);
    ASSERT_THROW(interior_equal(a, a, 3), std::invalid_argument);
}

TEST(interior_equal, detects_wrong_order) {
    // Placing the second gate before the first one it depends on.
    auto enc = from_text("CNOT(2,3)(D) CNOT(1,2)(D)");
    auto fa = frame_assignment(enc);
    ASSERT_TRUE(equivalent(enc, fa, 12));
    FrameAssignment wrong = fa;
    wrong.gates[1] = {1, 0, 0};
    wrong.memory = 1;
    ASSERT_FALSE(satisfies_constraints(enc, wrong));
    ASSERT_FALSE(equivalent(enc, wrong, 12));
}

TEST(equivalence, worked_examples) {
    for (const auto &enc : {fig3(), example1(), example2(), example3()}) {
        auto fa = frame_assignment(enc);
        ASSERT_TRUE(equivalent(enc, fa, 12)) << render(enc).content;
        ASSERT_TRUE(equivalent(enc, fa, 10)) << render(enc).content;
    }
    auto f3 = fig3();
    ASSERT_TRUE(equivalent(f3, frame_assignment(f3), 6));
}

// Derived encoder is equivalent on the interior for every random instance,
// and both circuits are invertible.
TEST(equivalence, random_encoders) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 300; k++) {
        auto enc = random_encoder(rng, {});
        auto fa = frame_assignment(enc);
        std::size_t frames = 3 * (fa.memory + enc.max_abs_degree() + 1);
        auto gates = conv_encoder_gates(enc, fa);
        auto pearl = pearl_matrix(enc, frames);
        auto conv = conv_matrix(enc, gates, fa.memory, frames);
        ASSERT_TRUE(interior_equal(pearl, conv, default_margin(enc, fa.memory))) << render(enc).content;
        ASSERT_TRUE(pearl.matrix().invertible());
        ASSERT_TRUE(conv.matrix().invertible());
    }
}

// Every assignment the constraints accept is an equivalent encoder, not just
// the minimal one. Exhaustive over the offset box for small encoders.
TEST(equivalence, every_feasible_assignment) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; trial++) {
        auto enc = random_encoder(rng, {.max_strings = 3, .max_abs_degree = 2, .max_frame_width = 3});
        const std::int64_t bound = minimal_memory(enc) + 1;
        std::vector<std::int64_t> w(enc.size(), 0);
        while (true) {
            FrameAssignment fa;
            for (std::size_t k = 0; k < enc.size(); k++) {
                const auto &g = enc.strings()[k];
                fa.gates.push_back(g.non_negative() ? GateFrames{w[k] + g.degree, w[k], w[k]}
                                                    : GateFrames{w[k], w[k] + g.abs_degree(), w[k]});
                fa.memory = std::max({fa.memory, fa.gates.back().sigma, fa.gates.back().tau});
            }
            if (satisfies_constraints(enc, fa)) {
                ASSERT_TRUE(equivalent(enc, fa, 3 * default_margin(enc, fa.memory) + 2)) << render(enc).content;
            }
            std::size_t k = 0;
            while (k < w.size() && ++w[k] > bound) {
                w[k++] = 0;
            }
            if (k == w.size()) {
                break;
            }
        }
    }
}

TEST(brute_force_min_memory, examples) {
    ASSERT_EQ(brute_force_min_memory(example1(), 4), 3);
    ASSERT_EQ(brute_force_min_memory(fig3(), 2), 1);
    ASSERT_EQ(brute_force_min_memory(from_text("CNOT(1,2)(D^3)"), 4), 3);
    ASSERT_EQ(brute_force_min_memory(PearlNecklace(), 0), 0);
}

TEST(brute_force_min_memory, exceeds_bound) {
    // Gate 2 needs offset 2 (tau_2 >= sigma_1 = 2).
    auto enc = from_text("CNOT(2,3)(D^2) CNOT(1,2)(D^3)");
    ASSERT_EQ(brute_force_min_memory(enc, 1), std::nullopt);
    ASSERT_EQ(brute_force_min_memory(enc, 2), 5);
    ASSERT_EQ(brute_force_min_memory(enc, -1), std::nullopt);
}
