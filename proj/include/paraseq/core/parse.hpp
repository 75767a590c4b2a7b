/*
 *  Copyright (C) 2026  The paraseq authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#pragma once

#include <cctype>
#include <charconv>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paraseq/core/program.hpp"

namespace paraseq {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

struct ParseOptions {
    // Accept generated names (k_, lambda_, gamma_, cstr_) and recover their
    // kind. Off for user input.
    bool allow_reserved = false;
    // Signature to intern into; a fresh one when null.
    std::shared_ptr<Signature> signature;
};

namespace detail {

enum class Tok {
    ident, variable, number, string, if_, weak, dot, comma, bar, lparen, rparen,
    lbrack, rbrack, at, colon, other, end,
};

struct Token {
    Tok kind = Tok::end;
    std::string_view text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blank();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) return t;
        const std::size_t start = pos_;
        const char c = src_[pos_];
        auto single = [&](Tok k) {
            advance();
            t.kind = k;
            t.text = src_.substr(start, 1);
            return t;
        };
        if (std::islower(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && is_word(src_[pos_])) advance();
            t.kind = Tok::ident;
        } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && is_word(src_[pos_])) advance();
            t.kind = Tok::variable;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            t.kind = Tok::number;
        } else if (c == '"') {
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
                advance();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') throw ParseError(t.line, t.column, "unterminated string");
            advance();
            t.kind = Tok::string;
        } else if (c == ':') {
            advance();
            if (pos_ < src_.size() && src_[pos_] == '-') {
                advance();
                t.kind = Tok::if_;
            } else if (pos_ < src_.size() && src_[pos_] == '~') {
                advance();
                t.kind = Tok::weak;
            } else {
                t.kind = Tok::colon;
            }
        } else {
            switch (c) {
                case '.': return single(Tok::dot);
                case ',': return single(Tok::comma);
                case '|': return single(Tok::bar);
                case '(': return single(Tok::lparen);
                case ')': return single(Tok::rparen);
                case '[': return single(Tok::lbrack);
                case ']': return single(Tok::rbrack);
                case '@': return single(Tok::at);
                default: return single(Tok::other);
            }
        }
        t.text = src_.substr(start, pos_ - start);
        return t;
    }

private:
    static bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, const ParseOptions& opts)
        : lex_(src), opts_(opts),
          sig_(opts.signature ? opts.signature : std::make_shared<Signature>()),
          out_(Program(sig_)) {
        tok_ = lex_.next();
    }

    WeightedProgram parse() {
        while (tok_.kind != Tok::end) statement();
        return std::move(out_);
    }

private:
    void statement() {
        if (tok_.kind == Tok::if_) {
            shift();
            Rule r;
            body(r.pos, r.neg);
            expect(Tok::dot, "'.'");
            out_.program.add(std::move(r));
            return;
        }
        if (tok_.kind == Tok::weak) {
            shift();
            WeakConstraint w;
            body(w.pos, w.neg);
            expect(Tok::dot, "'.'");
            weight_level(w);
            detail::dedup_in_order(w.pos);
            detail::dedup_in_order(w.neg);
            out_.add(std::move(w));
            return;
        }
        Rule r;
        r.head.push_back(atom());
        while (tok_.kind == Tok::bar) {
            shift();
            r.head.push_back(atom());
        }
        if (tok_.kind == Tok::if_) {
            shift();
            body(r.pos, r.neg);
        }
        expect(Tok::dot, "'.' or ':-'");
        out_.program.add(std::move(r));
    }

    void body(std::vector<AtomId>& pos, std::vector<AtomId>& neg) {
        if (tok_.kind == Tok::dot) return;
        for (;;) {
            if (tok_.kind == Tok::ident && tok_.text == "not") {
                shift();
                neg.push_back(atom());
            } else {
                pos.push_back(atom());
            }
            if (tok_.kind != Tok::comma) break;
            shift();
        }
    }

    void weight_level(WeakConstraint& w) {
        expect(Tok::lbrack, "'[' after weak constraint");
        w.weight = natural("weight");
        w.level = 0;
        if (tok_.kind == Tok::at || tok_.kind == Tok::colon) {
            shift();
            w.level = natural("level");
        }
        // ASP-Core-2 tuple terms; every weak constraint is counted on its own here.
        while (tok_.kind == Tok::comma) {
            shift();
            term();
        }
        expect(Tok::rbrack, "']'");
    }

    std::uint64_t natural(const char* what) {
        if (tok_.kind != Tok::number) {
            fail(std::string(what) + " must be a nonnegative integer");
        }
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), v);
        if (ec != std::errc()) fail(std::string(what) + " out of range");
        shift();
        return v;
    }

    AtomId atom() {
        Token start = tok_;
        if (tok_.kind == Tok::ident && tok_.text == "not") fail("expected atom after 'not'");
        if (tok_.kind != Tok::ident) unexpected("atom");
        std::string name(tok_.text);
        shift();
        if (tok_.kind == Tok::lparen) name += arguments();
        if (!opts_.allow_reserved && is_reserved_name(name)) {
            throw ParseError(start.line, start.column,
                             "atom '" + name + "' uses a reserved prefix (k_, lambda_, gamma_, cstr_)");
        }
        try {
            return opts_.allow_reserved ? sig_->intern(name) : sig_->objective(name);
        } catch (const std::invalid_argument& e) {
            throw ParseError(start.line, start.column, e.what());
        }
    }

    std::string arguments() {
        std::string text = "(";
        shift();
        text += term();
        while (tok_.kind == Tok::comma) {
            shift();
            text += ",";
            text += term();
        }
        expect(Tok::rparen, "')'");
        return text + ")";
    }

    std::string term() {
        std::string text;
        switch (tok_.kind) {
            case Tok::ident:
                text = tok_.text;
                shift();
                if (tok_.kind == Tok::lparen) text += arguments();
                return text;
            case Tok::number:
            case Tok::string:
                text = tok_.text;
                shift();
                return text;
            default:
                unexpected("ground term");
        }
    }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind) unexpected(what);
        shift();
    }

    [[noreturn]] void unexpected(const std::string& what) {
        switch (tok_.kind) {
            case Tok::end: fail("unexpected end of input, expected " + what);
            case Tok::variable:
                fail("variable '" + std::string(tok_.text) + "': only ground programs are supported");
            case Tok::other:
                if (tok_.text == "{" || tok_.text == "}") fail("choice rules are not supported");
                if (tok_.text == "#") fail("aggregates and directives are not supported");
                if (tok_.text == "-" || tok_.text == "+" || tok_.text == "*" || tok_.text == "/" ||
                    tok_.text == "=" || tok_.text == "<" || tok_.text == ">" || tok_.text == "!") {
                    fail("arithmetic, comparisons and strong negation are not supported");
                }
                fail("unexpected character '" + std::string(tok_.text) + "', expected " + what);
            default: fail("unexpected '" + std::string(tok_.text) + "', expected " + what);
        }
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(tok_.line, tok_.column, msg); }

    void shift() { tok_ = lex_.next(); }

    Lexer lex_;
    const ParseOptions& opts_;
    std::shared_ptr<Signature> sig_;
    WeightedProgram out_;
    Token tok_;
};

}  // namespace detail

/// Parses rules, constraints and weak constraints.
inline WeightedProgram parse_weighted_program(std::string_view text, const ParseOptions& opts = {}) {
    return detail::Parser(text, opts).parse();
}

/// Parses a plain program; weak constraints are rejected since the
/// paracoherent semantics is defined for programs without them.
inline Program parse_program(std::string_view text, const ParseOptions& opts = {}) {
    auto wp = parse_weighted_program(text, opts);
    if (!wp.weaks.empty()) {
        // Locate the first ":~" for the error position.
        detail::Lexer lex(text);
        for (auto t = lex.next(); t.kind != detail::Tok::end; t = lex.next()) {
            if (t.kind == detail::Tok::weak)
                throw ParseError(t.line, t.column, "weak constraints are not supported in input programs");
        }
    }
    return std::move(wp.program);
}

}  // namespace paraseq
