#include "mixedpoly/gfdsl.hpp"

#include <cctype>
#include <climits>
#include <cstdio>

namespace mixedpoly::dsl {

namespace {

std::string position_prefix(const Span& span) {
    return std::to_string(span.line) + ":" + std::to_string(span.column);
}

std::string printable(unsigned char c) {
    if (std::isprint(c) != 0) {
        return std::string(1, static_cast<char>(c));
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", c);
    return buf;
}

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) != 0 || c == '_';
}

bool is_ident_char(unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
}

Ast make(NodeKind kind, const Span& span, Ast lhs = nullptr, Ast rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->span = span;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

Ast make_const(const Span& span, Rat v) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Const;
    n->span = span;
    n->value = std::move(v);
    return n;
}

std::string describe(const Token& tok) {
    if (tok.kind == TokenKind::End) {
        return "end of input";
    }
    return "'" + tok.text + "'";
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
        if (toks_.empty() || toks_.back().kind != TokenKind::End) {
            throw std::invalid_argument("token stream must end with an End token");
        }
    }

    Ast parse_all() {
        Ast e = parse_binary(0);
        if (peek().kind != TokenKind::End) {
            fail("operator or end of input");
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) {
            ++pos_;
        }
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(peek().span, expected, describe(peek()));
    }

    void expect(TokenKind kind, const std::string& what) {
        if (peek().kind != kind) {
            fail(what);
        }
        next();
    }

    static int precedence(TokenKind kind) {
        switch (kind) {
        case TokenKind::Plus:
        case TokenKind::Minus: return 1;
        case TokenKind::Star:
        case TokenKind::Slash: return 2;
        default: return -1;
        }
    }

    // Precedence climbing over the left-associative binary operators.
    Ast parse_binary(int min_prec) {
        Ast lhs = parse_unary();
        for (;;) {
            const Token& op = peek();
            const int prec = precedence(op.kind);
            if (prec < 0 || prec < min_prec) {
                return lhs;
            }
            const Span span = op.span;
            const TokenKind kind = op.kind;
            next();
            Ast rhs = parse_binary(prec + 1);
            lhs = combine(kind, span, std::move(lhs), std::move(rhs));
        }
    }

    static Ast combine(TokenKind op, const Span& span, Ast lhs, Ast rhs) {
        switch (op) {
        case TokenKind::Plus: return make(NodeKind::Add, span, std::move(lhs), std::move(rhs));
        case TokenKind::Minus: return make(NodeKind::Sub, span, std::move(lhs), std::move(rhs));
        case TokenKind::Star: return make(NodeKind::Mul, span, std::move(lhs), std::move(rhs));
        case TokenKind::Slash:
            // Integer literals divide into a rational constant here.
            if (lhs->kind == NodeKind::Const && rhs->kind == NodeKind::Const && !rhs->value.is_zero()) {
                return make_const(lhs->span, lhs->value / rhs->value);
            }
            return make(NodeKind::Div, span, std::move(lhs), std::move(rhs));
        default: break;
        }
        throw std::logic_error("not a binary operator");
    }

    Ast parse_unary() {
        if (peek().kind == TokenKind::Minus) {
            const Span span = next().span;
            Ast operand = parse_unary();
            if (operand->kind == NodeKind::Const) {
                return make_const(span, -operand->value);
            }
            return make(NodeKind::Sub, span, make_const(span, Rat()), std::move(operand));
        }
        return parse_power();
    }

    Ast parse_power() {
        Ast base = parse_atom();
        if (peek().kind != TokenKind::Caret) {
            return base;
        }
        const Span span = next().span;
        Ast out = parse_exponent(span, std::move(base));
        if (peek().kind == TokenKind::Caret) {
            fail("end of power (exponents must be an integer literal or x; parenthesize the base to chain powers)");
        }
        return out;
    }

    long integer_exponent(const Token& tok, bool negate) const {
        const BigInt v(tok.text, 10);
        const BigInt signed_v = negate ? BigInt(-v) : v;
        if (!signed_v.fits_slong_p()) {
            throw ParseError(tok.span, "exponent within the range of a 64-bit integer", "'" + tok.text + "'");
        }
        return signed_v.get_si();
    }

    Ast parse_exponent(const Span& caret, Ast base) {
        const std::string expected = "integer literal, x, or a parenthesized signed integer after '^'";
        const Token& tok = peek();
        if (tok.kind == TokenKind::Int) {
            auto n = std::make_shared<Node>(*make(NodeKind::PowInt, caret, std::move(base)));
            n->exponent = integer_exponent(next(), false);
            return n;
        }
        if (tok.kind == TokenKind::Ident && tok.text == "x") {
            next();
            return make(NodeKind::PowX, caret, std::move(base));
        }
        if (tok.kind == TokenKind::LParen) {
            next();
            if (peek().kind == TokenKind::Ident && peek().text == "x") {
                next();
                expect(TokenKind::RParen, "')'");
                return make(NodeKind::PowX, caret, std::move(base));
            }
            bool negate = false;
            if (peek().kind == TokenKind::Minus) {
                negate = true;
                next();
            }
            if (peek().kind != TokenKind::Int) {
                fail("integer literal inside a parenthesized exponent");
            }
            auto n = std::make_shared<Node>(*make(NodeKind::PowInt, caret, std::move(base)));
            n->exponent = integer_exponent(next(), negate);
            expect(TokenKind::RParen, "')'");
            return n;
        }
        fail(expected);
    }

    Ast parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
        case TokenKind::Int: {
            const Span span = tok.span;
            Rat v(BigInt(next().text, 10));
            return make_const(span, std::move(v));
        }
        case TokenKind::Ident: {
            const Span span = tok.span;
            const std::string name = next().text;
            if (name == "t") {
                return make(NodeKind::VarT, span);
            }
            if (name == "x") {
                return make(NodeKind::VarX, span);
            }
            expect(TokenKind::LParen, "'(' after " + name);
            Ast arg = parse_binary(0);
            expect(TokenKind::RParen, "')'");
            return make(name == "log" ? NodeKind::Log : NodeKind::Exp, span, std::move(arg));
        }
        case TokenKind::LParen: {
            next();
            Ast inner = parse_binary(0);
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        default:
            fail("number, t, x, log, exp or '('");
        }
    }

    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
};

void render_into(const Ast& a, std::string& out) {
    switch (a->kind) {
    case NodeKind::Const:
        if (a->value.is_integer() && a->value.sign() >= 0) {
            out += a->value.to_string();
        } else {
            out += "(" + a->value.to_string() + ")";
        }
        return;
    case NodeKind::VarT: out += "t"; return;
    case NodeKind::VarX: out += "x"; return;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
        const char* op = a->kind == NodeKind::Add ? " + "
                         : a->kind == NodeKind::Sub ? " - "
                         : a->kind == NodeKind::Mul ? " * " : " / ";
        out += "(";
        render_into(a->lhs, out);
        out += op;
        render_into(a->rhs, out);
        out += ")";
        return;
    }
    case NodeKind::PowInt:
        out += "(";
        render_into(a->lhs, out);
        out += ")^";
        out += a->exponent < 0 ? "(" + std::to_string(a->exponent) + ")" : std::to_string(a->exponent);
        return;
    case NodeKind::PowX:
        out += "(";
        render_into(a->lhs, out);
        out += ")^x";
        return;
    case NodeKind::Log:
    case NodeKind::Exp:
        out += a->kind == NodeKind::Log ? "log(" : "exp(";
        render_into(a->lhs, out);
        out += ")";
        return;
    }
}

} // namespace

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Ident: return "Ident";
    case TokenKind::Int: return "Int";
    case TokenKind::Plus: return "Plus";
    case TokenKind::Minus: return "Minus";
    case TokenKind::Star: return "Star";
    case TokenKind::Slash: return "Slash";
    case TokenKind::Caret: return "Caret";
    case TokenKind::LParen: return "LParen";
    case TokenKind::RParen: return "RParen";
    case TokenKind::End: return "End";
    }
    return "?";
}

DslError::DslError(const std::string& kind, const Span& span, const std::string& detail)
    : std::runtime_error(position_prefix(span) + ": " + kind + ": " + detail),
      kind_(kind), span_(span), detail_(detail) {}

LexError::LexError(const Span& span, std::string found)
    : DslError("LexError", span, "unexpected character " + found), found_(std::move(found)) {}

ParseError::ParseError(const Span& span, std::string expected, std::string found)
    : DslError("ParseError", span, "expected " + expected + ", found " + found),
      expected_(std::move(expected)), found_(std::move(found)) {}

std::string_view semantic_reason_name(SemanticReason reason) {
    switch (reason) {
    case SemanticReason::NonUnitDivisor: return "NonUnitDivisor";
    case SemanticReason::LogArgNotOne: return "LogArgNotOne";
    case SemanticReason::ExpArgNotZero: return "ExpArgNotZero";
    case SemanticReason::PowXBaseNotOne: return "PowXBaseNotOne";
    case SemanticReason::TByTDivisionImpossible: return "TByTDivisionImpossible";
    case SemanticReason::ResourceLimit: return "ResourceLimit";
    }
    return "?";
}

SemanticError::SemanticError(const Span& span, SemanticReason reason, const std::string& detail)
    : DslError(std::string(semantic_reason_name(reason)), span, detail), reason_(reason) {}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t line = 1;
    std::size_t col = 1;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const auto c = static_cast<unsigned char>(src[i]);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        Span span{i, i, line, col};
        std::size_t len = 1;
        TokenKind kind{};
        if (std::isdigit(c) != 0) {
            while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len])) != 0) {
                ++len;
            }
            kind = TokenKind::Int;
        } else if (is_ident_start(c)) {
            while (i + len < src.size() && is_ident_char(static_cast<unsigned char>(src[i + len]))) {
                ++len;
            }
            const std::string_view word = src.substr(i, len);
            if (word != "t" && word != "x" && word != "log" && word != "exp") {
                span.end = i + len;
                throw LexError(span, "'" + std::string(word) + "'");
            }
            kind = TokenKind::Ident;
        } else {
            switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '/': kind = TokenKind::Slash; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            default:
                span.end = i + 1;
                throw LexError(span, "'" + printable(c) + "'");
            }
        }
        span.end = i + len;
        out.push_back({kind, std::string(src.substr(i, len)), span});
        advance(len);
    }
    out.push_back({TokenKind::End, "", Span{i, i, line, col}});
    return out;
}

bool same_structure(const Ast& a, const Ast& b) {
    if (!a || !b) {
        return !a && !b;
    }
    if (a->kind != b->kind) {
        return false;
    }
    if (a->kind == NodeKind::Const && a->value != b->value) {
        return false;
    }
    if (a->kind == NodeKind::PowInt && a->exponent != b->exponent) {
        return false;
    }
    return same_structure(a->lhs, b->lhs) && same_structure(a->rhs, b->rhs);
}

Ast parse(const std::vector<Token>& tokens) {
    return Parser(tokens).parse_all();
}

std::string render(const Ast& ast) {
    std::string out;
    render_into(ast, out);
    return out;
}

} // namespace mixedpoly::dsl
