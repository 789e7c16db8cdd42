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

#include "pnmem/parser.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace pnmem {

ParseError::ParseError(const std::string &name, std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(name + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {
}

namespace {

enum class TokenKind { Ident, Int, Punct, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;

    std::string describe() const {
        if (kind == TokenKind::End) {
            return "end of input";
        }
        return "'" + text + "'";
    }
};

bool is_ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

std::vector<Token> tokenize(const SourceText &src) {
    std::vector<Token> tokens;
    const std::string &s = src.content;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; k++) {
            if (s[i] == '\n') {
                line++;
                column = 1;
            } else {
                column++;
            }
            i++;
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') {
                advance(1);
            }
            continue;
        }
        std::size_t start = i;
        Token tok{TokenKind::Punct, "", line, column};
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && (is_ident_start(s[j]) || is_digit(s[j]))) {
                j++;
            }
            tok.kind = TokenKind::Ident;
            tok.text = s.substr(start, j - start);
            advance(j - start);
        } else if (is_digit(c)) {
            std::size_t j = i;
            while (j < s.size() && is_digit(s[j])) {
                j++;
            }
            tok.kind = TokenKind::Int;
            tok.text = s.substr(start, j - start);
            advance(j - start);
        } else if (c == '(' || c == ')' || c == ',' || c == '^' || c == '-' || c == '+') {
            tok.text = std::string(1, c);
            advance(1);
        } else {
            std::ostringstream msg;
            msg << "unexpected character ";
            if (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f) {
                msg << "'" << c << "'";
            } else {
                msg << "byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
            }
            throw ParseError(src.name, line, column, msg.str());
        }
        tokens.push_back(std::move(tok));
    }
    tokens.push_back({TokenKind::End, "", line, column});
    return tokens;
}

class Parser {
   public:
    explicit Parser(const SourceText &src) : src_(src), tokens_(tokenize(src)) {
    }

    PearlNecklace run() {
        int declared_width = 0;
        if (peek_ident("qubits")) {
            next();
            const Token &tok = expect_int("frame width after 'qubits'");
            declared_width = to_int(tok);
            if (declared_width < 1) {
                fail(tok, "frame width must be at least 1");
            }
        }

        struct Located {
            GateString gate;
            const Token *at;
        };
        std::vector<Located> gates;
        while (peek().kind != TokenKind::End) {
            const Token &tok = peek();
            if (tok.kind == TokenKind::Ident && tok.text == "CNOT") {
                gates.push_back({parse_gate(), &tok});
            } else if (tok.kind == TokenKind::Ident && (tok.text == "H" || tok.text == "P" || tok.text == "CPHASE")) {
                fail(tok, "gate '" + tok.text + "' is not supported; see non-CSS extension");
            } else if (tok.kind == TokenKind::Ident && tok.text == "qubits") {
                fail(tok, "'qubits' header must come before the first gate string");
            } else {
                fail(tok, "expected 'CNOT', found " + tok.describe());
            }
        }

        int width = declared_width;
        if (width == 0) {
            width = 1;
            for (const auto &g : gates) {
                width = std::max({width, g.gate.source, g.gate.target});
            }
        }
        std::vector<GateString> strings;
        strings.reserve(gates.size());
        for (const auto &g : gates) {
            if (g.gate.source > width || g.gate.target > width) {
                fail(*g.at, "qubit index exceeds declared frame width " + std::to_string(width));
            }
            strings.push_back(g.gate);
        }
        return PearlNecklace(std::move(strings), width);
    }

   private:
    const SourceText &src_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const Token &tok, const std::string &message) const {
        throw ParseError(src_.name, tok.line, tok.column, message);
    }

    const Token &peek() const {
        return tokens_[pos_];
    }
    const Token &next() {
        const Token &tok = tokens_[pos_];
        if (tok.kind != TokenKind::End) {
            pos_++;
        }
        return tok;
    }
    bool peek_ident(const char *text) const {
        return peek().kind == TokenKind::Ident && peek().text == text;
    }
    bool peek_punct(char c) const {
        return peek().kind == TokenKind::Punct && peek().text[0] == c;
    }

    const Token &expect_punct(char c) {
        if (!peek_punct(c)) {
            fail(peek(), std::string("expected '") + c + "', found " + peek().describe());
        }
        return next();
    }
    const Token &expect_int(const std::string &what) {
        if (peek().kind != TokenKind::Int) {
            fail(peek(), "expected " + what + ", found " + peek().describe());
        }
        return next();
    }

    int to_int(const Token &tok, bool negate = false) const {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
            fail(tok, "integer " + tok.describe() + " is out of range");
        }
        if (negate) {
            value = -value;
        }
        if (value > std::numeric_limits<int>::max() || value < std::numeric_limits<int>::min()) {
            fail(tok, "integer " + tok.describe() + " is out of range");
        }
        return static_cast<int>(value);
    }

    int parse_qubit() {
        const Token &tok = expect_int("qubit index");
        int value = to_int(tok);
        if (value < 1) {
            fail(tok, "qubit indices are 1-based; got " + tok.text);
        }
        return value;
    }

    int parse_delay() {
        const Token &tok = peek();
        if (tok.kind == TokenKind::Int) {
            if (tok.text != "1") {
                fail(tok, "expected delay '1', 'D' or 'D^k', found " + tok.describe());
            }
            next();
            return 0;
        }
        if (tok.kind != TokenKind::Ident || tok.text != "D") {
            fail(tok, "expected delay '1', 'D' or 'D^k', found " + tok.describe());
        }
        next();
        if (!peek_punct('^')) {
            return 1;
        }
        next();
        bool negate = false;
        if (peek_punct('-') || peek_punct('+')) {
            negate = next().text[0] == '-';
        }
        return to_int(expect_int("exponent after 'D^'"), negate);
    }

    GateString parse_gate() {
        const Token &head = next();
        expect_punct('(');
        int source = parse_qubit();
        expect_punct(',');
        int target = parse_qubit();
        expect_punct(')');
        expect_punct('(');
        int degree = parse_delay();
        expect_punct(')');
        if (source == target && degree == 0) {
            fail(head, "CNOT(" + std::to_string(source) + "," + std::to_string(target) +
                           ")(1) acts on a single physical qubit");
        }
        return GateString(source, target, degree);
    }
};

}  // namespace

PearlNecklace parse(const SourceText &src) {
    return Parser(src).run();
}

SourceText render(const PearlNecklace &enc) {
    std::string out = "qubits " + std::to_string(enc.frame_width());
    for (const auto &g : enc.strings()) {
        out += "\n";
        out += g.str();
    }
    return {out, "<rendered>"};
}

}  // namespace pnmem
