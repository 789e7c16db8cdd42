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

#ifndef PNMEM_CLI_H
#define PNMEM_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace pnmem {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitMismatch = 2;

/// Entry point of the `pnmem` tool, minus the program name in `args`.
/// Subcommands: analyze, dot, verify, brute-check, selftest.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace pnmem

#endif
