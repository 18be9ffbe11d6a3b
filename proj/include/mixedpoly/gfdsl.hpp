#ifndef MIXEDPOLY_GFDSL_HPP
#define MIXEDPOLY_GFDSL_HPP

// A small expression language for generating functions in t and x.
//
//   expr     = term { ("+" | "-") term } ;
//   term     = unary { ("*" | "/") unary } ;
//   unary    = "-" unary | power ;
//   power    = atom [ "^" exponent ] ;
//   exponent = integer | "x" | "(" [ "-" ] integer ")" | "(" "x" ")" ;
//   atom     = integer | "t" | "x" | ("log" | "exp") "(" expr ")" | "(" expr ")" ;
//
// See docs/grammar.ebnf for the full description and evaluation rules.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixedpoly/series.hpp"

namespace mixedpoly::dsl {

/// Byte offsets [begin, end) plus the 1-based line/column of begin.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

enum class TokenKind { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

std::string_view token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;
    Span span;
};

class DslError : public std::runtime_error {
public:
    DslError(const std::string& kind, const Span& span, const std::string& detail);

    const Span& span() const { return span_; }
    const std::string& kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    std::string kind_;
    Span span_;
    std::string detail_;
};

class LexError : public DslError {
public:
    LexError(const Span& span, std::string found);
    const std::string& found() const { return found_; }

private:
    std::string found_;
};

class ParseError : public DslError {
public:
    ParseError(const Span& span, std::string expected, std::string found);
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::string expected_;
    std::string found_;
};

enum class SemanticReason {
    NonUnitDivisor,
    LogArgNotOne,
    ExpArgNotZero,
    PowXBaseNotOne,
    TByTDivisionImpossible,
    ResourceLimit,
};

std::string_view semantic_reason_name(SemanticReason reason);

class SemanticError : public DslError {
public:
    SemanticError(const Span& span, SemanticReason reason, const std::string& detail);
    SemanticReason reason() const { return reason_; }

private:
    SemanticReason reason_;
};

/// Longest-match lexing; the result always ends with an End token.
std::vector<Token> tokenize(std::string_view src);

enum class NodeKind { Const, VarT, VarX, Add, Sub, Mul, Div, PowInt, PowX, Log, Exp };

struct Node;
using Ast = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    Span span;
    Rat value;          // Const
    long exponent = 0;  // PowInt
    Ast lhs;            // binary operands, power base, function argument
    Ast rhs;
};

/// Structural equality, ignoring spans.
bool same_structure(const Ast& a, const Ast& b);

Ast parse(const std::vector<Token>& tokens);
inline Ast parse(std::string_view src) { return parse(tokenize(src)); }

/// Fully parenthesized text that parses back to the same structure.
std::string render(const Ast& ast);

struct EvalLimits {
    std::size_t max_coeff_bits = 1U << 16;
    long max_x_degree = 512;
    std::size_t max_extra_order = 64;
};

TSeries eval_ast(const Ast& ast, std::size_t trunc, const EvalLimits& limits = {});
inline TSeries evaluate(std::string_view src, std::size_t trunc) {
    return eval_ast(parse(src), trunc);
}

} // namespace mixedpoly::dsl

#endif
