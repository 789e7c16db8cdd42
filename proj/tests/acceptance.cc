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

// Acceptance suite. One line per criterion; exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pnmem/cli.h"
#include "pnmem/gf2.h"
#include "pnmem/graph.h"
#include "pnmem/longest_path.h"
#include "pnmem/report.h"
#include "test_util.h"

using namespace pnmem;
using namespace pnmem::testing;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const std::string &id, const std::function<Outcome()> &check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << id << (o.pass ? " PASS " : " FAIL ") << o.detail << std::endl;
    failures += o.pass ? 0 : 1;
}

std::string join(const std::vector<std::int64_t> &v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); k++) {
        s += (k ? "," : "") + std::to_string(v[k]);
    }
    return s + ")";
}

Outcome ac1() {
    auto enc = load_corpus("example1.pne");
    auto t0 = Clock::now();
    auto fa = frame_assignment(enc);
    double ms = elapsed_ms(t0);
    std::vector<std::int64_t> tau;
    for (const auto &g : fa.gates) {
        tau.push_back(g.tau);
    }
    bool ok = fa.memory == 3 && tau == std::vector<std::int64_t>{0, 1, 0, 2, 2} && ms < 1.0;
    std::ostringstream d;
    d << "memory_frames=" << fa.memory << " tau=" << join(tau) << " time=" << ms << "ms";
    return {ok, d.str()};
}

Outcome ac2() {
    auto enc = load_corpus("example3.pne");
    auto t0 = Clock::now();
    auto fa = frame_assignment(enc);
    double ms = elapsed_ms(t0);
    std::vector<std::int64_t> got{fa.gate(1).tau, fa.gate(2).sigma, fa.gate(3).sigma, fa.gate(4).tau, fa.gate(5).tau};
    bool ok = fa.memory == 3 && got == std::vector<std::int64_t>{0, 0, 1, 1, 1} && ms < 1.0;
    std::ostringstream d;
    d << "memory_frames=" << fa.memory << " (tau1,sigma2,sigma3,tau4,tau5)=" << join(got) << " time=" << ms << "ms";
    return {ok, d.str()};
}

Outcome ac3() {
    auto enc = load_corpus("example2.pne");
    auto fa = frame_assignment(enc);
    std::vector<std::int64_t> sigma;
    for (const auto &g : fa.gates) {
        sigma.push_back(g.sigma);
    }
    auto eq = check_equivalence(enc, fa, 12);
    bool ok = fa.memory == 3 && sigma == std::vector<std::int64_t>{0, 0, 1, 1, 1} && satisfies_constraints(enc, fa) &&
              eq.ok();
    std::ostringstream d;
    d << "memory_frames=" << fa.memory << " sigma=" << join(sigma) << " constraints=" << satisfies_constraints(enc, fa)
      << " interior_equal=" << eq.interior_equal;
    return {ok, d.str()};
}

Outcome ac4() {
    bool ok = true;
    std::ostringstream d;
    for (const char *name : {"fig3.pne", "example1.pne", "example2.pne", "example3.pne"}) {
        std::istringstream in;
        std::ostringstream out, err;
        auto t0 = Clock::now();
        int code = run_cli({"verify", "--frames", "12", "--json", corpus_path(name)}, in, out, err);
        double ms = elapsed_ms(t0);
        bool eq = false;
        if (code == kExitOk) {
            eq = nlohmann::json::parse(out.str())["verification"]["equivalence"]["interior_equal"].get<bool>();
        }
        ok &= code == kExitOk && eq && ms < 1000.0;
        d << name << ":" << (eq ? "TRUE" : "FALSE") << "/" << ms << "ms ";
    }
    return {ok, d.str()};
}

Outcome ac5() {
    std::mt19937_64 rng(20261018);
    const RandomEncoderParams params{.max_strings = 6, .max_abs_degree = 3, .max_frame_width = 4};
    std::size_t mismatches = 0, infeasible = 0;
    const std::size_t count = 600;
    auto t0 = Clock::now();
    for (std::size_t k = 0; k < count; k++) {
        auto enc = random_encoder(rng, params);
        auto fa = frame_assignment(enc);
        infeasible += satisfies_constraints(enc, fa) ? 0 : 1;
        mismatches += brute_force_min_memory(enc, fa.memory + 1) == fa.memory ? 0 : 1;
    }
    double s = elapsed_ms(t0) / 1000.0;
    std::ostringstream d;
    d << "instances=" << count << " mismatches=" << mismatches << " infeasible=" << infeasible << " time=" << s << "s";
    return {mismatches == 0 && infeasible == 0 && s < 60.0, d.str()};
}

Outcome ac6() {
    std::mt19937_64 rng(6);
    std::size_t pos = 0, neg = 0, mismatches = 0;
    for (int sign : {0, 1}) {
        for (int k = 0; k < 250; k++) {
            auto enc = random_encoder(rng, {.max_strings = 8, .max_abs_degree = 4, .max_frame_width = 4, .sign = sign});
            auto mixed = build_graph(enc);
            auto direct = sign == 0 ? build_positive_graph(enc) : build_negative_graph(enc);
            mismatches += mixed.edges() == direct.edges() ? 0 : 1;
            (sign == 0 ? pos : neg)++;
        }
    }
    std::ostringstream d;
    d << "non_negative=" << pos << " negative=" << neg << " mismatches=" << mismatches;
    return {mismatches == 0, d.str()};
}

Outcome ac7() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> qubit(1, 4), degree(-3, 3);
    bool ok = true;
    std::ostringstream d;
    for (std::size_t n : {10u, 100u, 1000u}) {
        std::vector<GateString> strings;
        while (strings.size() < n) {
            int a = qubit(rng), b = qubit(rng), l = degree(rng);
            if (a != b || l != 0) {
                strings.emplace_back(a, b, l);
            }
        }
        PearlNecklace enc(strings, 4);
        auto t0 = Clock::now();
        auto g = build_graph(enc);
        auto lp = longest_path_weights(g);
        double ms = elapsed_ms(t0);
        bool shape = g.pair_inspections() == n * (n - 1) / 2 && lp.edges_relaxed == g.edges().size();
        ok &= shape && (n != 1000 || ms < 1000.0);
        d << "N=" << n << ":inspections=" << g.pair_inspections() << ",relaxed=" << lp.edges_relaxed << "/"
          << g.edges().size() << "," << ms << "ms ";
    }
    return {ok, d.str()};
}

Outcome ac8() {
    bool ok = true;
    std::ostringstream d;
    for (const char *name : {"fig3.pne", "example1.pne", "example2.pne", "example3.pne"}) {
        auto enc = load_corpus(name);
        bool round_trip = parse(render(enc)) == enc;
        std::string json[2], dot[2];
        for (int r = 0; r < 2; r++) {
            std::istringstream in;
            std::ostringstream out, dout, err;
            run_cli({"verify", "--json", corpus_path(name)}, in, out, err);
            run_cli({"dot", corpus_path(name)}, in, dout, err);
            json[r] = out.str();
            dot[r] = dout.str();
        }
        bool same = json[0] == json[1] && dot[0] == dot[1] && !json[0].empty() && !dot[0].empty();
        ok &= round_trip && same;
        d << name << ":" << (round_trip ? "roundtrip" : "ROUNDTRIP-FAIL") << "," << (same ? "stable" : "UNSTABLE")
          << " ";
    }
    return {ok, d.str()};
}

}  // namespace

int main() {
    report("AC-1", ac1);
    report("AC-2", ac2);
    report("AC-3", ac3);
    report("AC-4", ac4);
    report("AC-5", ac5);
    report("AC-6", ac6);
    report("AC-7", ac7);
    report("AC-8", ac8);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
