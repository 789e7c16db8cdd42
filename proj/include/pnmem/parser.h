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

#ifndef PNMEM_PARSER_H
#define PNMEM_PARSER_H

#include <stdexcept>
#include <string>

#include "pnmem/encoder.h"

namespace pnmem {

struct SourceText {
    std::string content;
    std::string name = "<input>";
};

/// Raised for both syntax and semantic errors. `what()` is formatted as
/// `name:line:column: message`.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &name, std::size_t line, std::size_t column, const std::string &message);

    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }
    const std::string &message() const {
        return message_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Parses the pearl-necklace text format:
///
///     # comment
///     qubits 3                 (optional; defaults to the largest index used)
///     CNOT(2,3)(D) CNOT(1,2)(1) CNOT(2,3)(D^-2)
///
/// Delays are `1` (degree 0), `D` (degree 1) or `D^k` for any signed k.
PearlNecklace parse(const SourceText &src);

/// Inverse of parse: a `qubits n` header followed by one gate string per line.
/// No trailing newline.
SourceText render(const PearlNecklace &enc);

}  // namespace pnmem

#endif
