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

#include "pnmem/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pnmem/graph.h"
#include "pnmem/parser.h"
#include "pnmem/report.h"

namespace pnmem {

namespace {

struct Options {
    std::string input;
    bool json = false;
    std::string dot_path;
    std::size_t frames = 12;
    std::optional<std::size_t> margin;
    std::optional<std::int64_t> bound;
    std::uint64_t seed = 1;
    std::size_t count = 500;
    std::size_t threads = 1;
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

PearlNecklace load(const std::string &path, std::istream &in) {
    SourceText src;
    if (path == "-") {
        src.name = "<stdin>";
        src.content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            throw InputError(path + ": cannot open file");
        }
        src.name = path;
        src.content.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return parse(src);
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw InputError(path + ": cannot open for writing");
    }
    file << content;
}

void emit(const AnalysisReport &report, bool json, std::ostream &out) {
    if (json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << to_text(report);
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Minimal-memory analysis of CNOT pearl-necklace encoders", "pnmem"};
    app.require_subcommand(1);
    Options opt;

    auto *analyze_cmd = app.add_subcommand("analyze", "Report the minimal memory and a frame assignment");
    auto *dot_cmd = app.add_subcommand("dot", "Write the commutativity graph in Graphviz DOT");
    auto *verify_cmd = app.add_subcommand("verify", "Check GF(2) equivalence of the derived encoder");
    auto *brute_cmd = app.add_subcommand("brute-check", "Compare against exhaustive minimal-memory search");
    auto *selftest_cmd = app.add_subcommand("selftest", "Cross-check random encoders against the oracles");

    for (auto *cmd : {analyze_cmd, dot_cmd, verify_cmd, brute_cmd}) {
        cmd->add_option("input", opt.input, "Encoder file, or - for standard input")->required();
    }
    for (auto *cmd : {analyze_cmd, verify_cmd, brute_cmd}) {
        cmd->add_flag("--json", opt.json, "Print the report as JSON");
    }
    analyze_cmd->add_option("--dot", opt.dot_path, "Also write the DOT graph to this path");
    dot_cmd->add_option("-o,--output,--dot", opt.dot_path, "Output path (default: standard output)");
    verify_cmd->add_option("--frames", opt.frames, "Truncation window in frames")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--margin", opt.margin, "Boundary frames excluded from the comparison");
    brute_cmd->add_option("--bound", opt.bound, "Largest per-gate offset to enumerate")->check(CLI::NonNegativeNumber);
    selftest_cmd->add_option("--seed", opt.seed, "Random seed");
    selftest_cmd->add_option("--count", opt.count, "Number of random encoders");
    selftest_cmd->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (selftest_cmd->parsed()) {
            auto result = selftest(opt.seed, opt.count, opt.threads);
            out << "instances=" << result.instances << " optimality_mismatches=" << result.optimality_mismatches
                << " infeasible=" << result.infeasible_assignments
                << " equivalence_failures=" << result.equivalence_failures
                << " specialization_mismatches=" << result.specialization_mismatches << "\n";
            for (const auto &f : result.failures) {
                err << "FAILED " << f << "\n";
            }
            out << (result.ok() ? "OK" : "MISMATCH") << "\n";
            return result.ok() ? kExitOk : kExitMismatch;
        }

        auto enc = load(opt.input, in);

        if (dot_cmd->parsed()) {
            auto dot = to_dot(build_graph(enc), enc);
            if (opt.dot_path.empty() || opt.dot_path == "-") {
                out << dot;
            } else {
                write_file(opt.dot_path, dot);
            }
            return kExitOk;
        }

        auto report = analyze(enc);
        if (analyze_cmd->parsed()) {
            if (!opt.dot_path.empty()) {
                write_file(opt.dot_path, to_dot(build_graph(enc), enc));
            }
            emit(report, opt.json, out);
            return kExitOk;
        }

        bool ok = true;
        if (verify_cmd->parsed()) {
            report.equivalence = check_equivalence(enc, report.assignment, opt.frames, opt.margin);
            ok = report.equivalence->ok();
        } else {
            report.brute_force = check_brute_force(enc, report.assignment.memory, opt.bound);
            ok = report.brute_force->ok();
        }
        if (opt.json) {
            emit(report, true, out);
        } else if (report.brute_force) {
            out << report.brute_force->summary() << "\n";
        } else {
            emit(report, false, out);
        }
        if (!ok) {
            err << "error: " << opt.input << ": derived convolutional encoder failed the "
                << (report.brute_force ? "brute-force" : "equivalence") << " check\n";
            return kExitMismatch;
        }
        return kExitOk;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << opt.input << ": " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace pnmem
