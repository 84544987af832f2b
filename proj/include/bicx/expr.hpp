// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/involution.hpp"
#include "bicx/scalar.hpp"

/*!
 * \file
 * A small expression language over bicomplex numbers.
 *
 * \verbatim
   expr    := term (('+' | '-') term)*
   term    := unary ('*' unary)*
   unary   := '-' unary | power
   power   := primary ('^' '-'? INTEGER)*
   primary := NUMBER | UNIT | FUNC '(' expr ')' | '(' expr ')'
   NUMBER  := INTEGER | INTEGER '/' INTEGER | INTEGER '.' INTEGER
   UNIT    := i1 | i2 | j1 | e1 | e2            (case-insensitive)
   FUNC    := dag0..dag5 | pdag6 | pdag7 | inv | idem | vec
 * \endverbatim
 *
 * "p/q" is a single token: there is no division operator, inverses go
 * through inv(). idem() and vec() only select how the result is displayed
 * and must be the outermost call.
 */
namespace bicx::expr {

enum class UnitSymbol { I1, I2, J1, E1, E2 };
enum class Function { Dag0, Dag1, Dag2, Dag3, Dag4, Dag5, Pdag6, Pdag7, Inv, Idem, Vec };
enum class BinaryOp { Add, Sub, Mul };
enum class LiteralKind { Integer, Fraction, Decimal };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Literal {
    Rational value;
    LiteralKind kind = LiteralKind::Integer;
    std::string text;

    friend bool operator==(const Literal& a, const Literal& b) { return a.kind == b.kind && a.value == b.value; }
};

struct Unit {
    UnitSymbol symbol;
    friend bool operator==(const Unit&, const Unit&) = default;
};

struct Negate {
    ExprPtr operand;
};

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Power {
    ExprPtr base;
    std::int64_t exponent = 1;
};

struct Call {
    Function fn;
    ExprPtr arg;
};

struct Expr {
    std::variant<Literal, Unit, Negate, Binary, Power, Call> node;
};

//! Structural equality. Literals compare by kind and value.
inline bool operator==(const Expr& a, const Expr& b);

inline bool same(const ExprPtr& a, const ExprPtr& b)
{
    return a && b && *a == *b;
}

inline bool operator==(const Expr& a, const Expr& b)
{
    if (a.node.index() != b.node.index()) {
        return false;
    }
    return std::visit(
        [&](const auto& x) -> bool {
            using N = std::decay_t<decltype(x)>;
            const auto& y = std::get<N>(b.node);
            if constexpr (std::is_same_v<N, Literal> || std::is_same_v<N, Unit>) {
                return x == y;
            } else if constexpr (std::is_same_v<N, Negate>) {
                return same(x.operand, y.operand);
            } else if constexpr (std::is_same_v<N, Binary>) {
                return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<N, Power>) {
                return x.exponent == y.exponent && same(x.base, y.base);
            } else {
                return x.fn == y.fn && same(x.arg, y.arg);
            }
        },
        a.node);
}

//---------------------------------------------------------------------------//
// ERRORS
//---------------------------------------------------------------------------//
//! Parse failure at a byte offset, with the set of tokens that would have been accepted.
class SyntaxError : public std::runtime_error {
  public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
        : std::runtime_error(make_message(offset, expected, found)), offset_(offset), expected_(std::move(expected))
    {
    }

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

  private:
    static std::string make_message(std::size_t offset, const std::vector<std::string>& expected,
                                    const std::string& found)
    {
        std::string msg = "syntax error at offset " + std::to_string(offset) + ": found " + found + ", expected ";
        for (std::size_t k = 0; k < expected.size(); ++k) {
            msg += (k ? ", " : "") + expected[k];
        }
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

//! Well-formed input that cannot be evaluated as written (misplaced display transform, huge exponent).
class EvalError : public std::runtime_error {
  public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

//---------------------------------------------------------------------------//
// NAMES
//---------------------------------------------------------------------------//
inline std::string_view unit_name(UnitSymbol u)
{
    constexpr std::string_view names[] = {"i1", "i2", "j1", "e1", "e2"};
    return names[static_cast<std::size_t>(u)];
}

inline std::string_view function_name(Function f)
{
    constexpr std::string_view names[] = {"dag0", "dag1", "dag2", "dag3", "dag4", "dag5",
                                          "pdag6", "pdag7", "inv", "idem", "vec"};
    return names[static_cast<std::size_t>(f)];
}

inline std::optional<ConjTag> conjugation_of(Function f)
{
    if (static_cast<std::size_t>(f) < all_tags.size()) {
        return all_tags[static_cast<std::size_t>(f)];
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
// LEXER
//---------------------------------------------------------------------------//
namespace detail {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t offset;
    LiteralKind literal = LiteralKind::Integer;
};

inline std::string describe(const Token& t)
{
    return t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
}

inline std::vector<Token> tokenize(std::string_view input)
{
    std::vector<Token> tokens;
    std::size_t pos = 0;
    auto is_digit = [&](std::size_t p) { return p < input.size() && std::isdigit(static_cast<unsigned char>(input[p])); };
    while (pos < input.size()) {
        const char c = input[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        const std::size_t start = pos;
        if (is_digit(pos)) {
            while (is_digit(pos)) {
                ++pos;
            }
            LiteralKind kind = LiteralKind::Integer;
            if (pos < input.size() && (input[pos] == '/' || input[pos] == '.')) {
                if (!is_digit(pos + 1)) {
                    throw SyntaxError(pos + 1, {"digit"},
                                      pos + 1 < input.size() ? "'" + std::string(1, input[pos + 1]) + "'"
                                                             : "end of input");
                }
                kind = input[pos] == '/' ? LiteralKind::Fraction : LiteralKind::Decimal;
                ++pos;
                while (is_digit(pos)) {
                    ++pos;
                }
            }
            tokens.push_back({TokenKind::Number, std::string(input.substr(start, pos - start)), start, kind});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos < input.size() && std::isalnum(static_cast<unsigned char>(input[pos]))) {
                ++pos;
            }
            tokens.push_back({TokenKind::Ident, std::string(input.substr(start, pos - start)), start});
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            default:
                throw SyntaxError(pos, {"number", "unit symbol", "function", "operator", "'('", "')'"},
                                  "'" + std::string(1, c) + "'");
        }
        tokens.push_back({kind, std::string(1, c), start});
        ++pos;
    }
    tokens.push_back({TokenKind::End, "", input.size()});
    return tokens;
}

inline std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

inline std::optional<UnitSymbol> lookup_unit(std::string_view name)
{
    for (auto u : {UnitSymbol::I1, UnitSymbol::I2, UnitSymbol::J1, UnitSymbol::E1, UnitSymbol::E2}) {
        if (lower(name) == unit_name(u)) {
            return u;
        }
    }
    return std::nullopt;
}

inline std::optional<Function> lookup_function(std::string_view name)
{
    for (int k = 0; k <= static_cast<int>(Function::Vec); ++k) {
        auto f = static_cast<Function>(k);
        if (lower(name) == function_name(f)) {
            return f;
        }
    }
    return std::nullopt;
}

inline ExprPtr make(Expr e)
{
    return std::make_shared<const Expr>(std::move(e));
}

class Parser {
  public:
    explicit Parser(std::string_view input) : tokens_(tokenize(input)) {}

    ExprPtr parse()
    {
        ExprPtr e = expr();
        if (peek().kind != TokenKind::End) {
            fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
        }
        return e;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        throw SyntaxError(peek().offset, std::move(expected), describe(peek()));
    }

    ExprPtr expr()
    {
        ExprPtr lhs = term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const BinaryOp op = advance().kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
            lhs = make({Binary{op, lhs, term()}});
        }
        return lhs;
    }

    ExprPtr term()
    {
        ExprPtr lhs = unary();
        while (peek().kind == TokenKind::Star) {
            advance();
            lhs = make({Binary{BinaryOp::Mul, lhs, unary()}});
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (peek().kind == TokenKind::Minus) {
            advance();
            return make({Negate{unary()}});
        }
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = primary();
        while (peek().kind == TokenKind::Caret) {
            advance();
            bool negative = false;
            if (peek().kind == TokenKind::Minus) {
                advance();
                negative = true;
            }
            if (peek().kind != TokenKind::Number || peek().literal != LiteralKind::Integer) {
                fail({"integer exponent"});
            }
            const Token& tok = peek();
            if (tok.text.size() > 18) {
                throw SyntaxError(tok.offset, {"integer exponent"}, "exponent too large");
            }
            const std::int64_t n = std::stoll(advance().text);
            base = make({Power{base, negative ? -n : n}});
        }
        return base;
    }

    ExprPtr primary()
    {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::Number: {
                advance();
                Rational value;
                if (tok.literal == LiteralKind::Fraction) {
                    const auto slash = tok.text.find('/');
                    const Integer den(tok.text.substr(slash + 1));
                    if (den == 0) {
                        throw SyntaxError(tok.offset + slash + 1, {"nonzero denominator"}, "'0'");
                    }
                    value = Rational(Integer(tok.text.substr(0, slash)), den);
                } else {
                    value = *parse_decimal(tok.text);
                }
                return make({Literal{value, tok.literal, tok.text}});
            }
            case TokenKind::Ident: {
                if (auto u = lookup_unit(tok.text)) {
                    advance();
                    return make({Unit{*u}});
                }
                if (auto f = lookup_function(tok.text)) {
                    advance();
                    if (peek().kind != TokenKind::LParen) {
                        fail({"'('"});
                    }
                    advance();
                    ExprPtr arg = expr();
                    if (peek().kind != TokenKind::RParen) {
                        fail({"')'", "'+'", "'-'", "'*'", "'^'"});
                    }
                    advance();
                    return make({Call{*f, arg}});
                }
                fail({"unit symbol (i1, i2, j1, e1, e2)", "function (dag0..dag5, pdag6, pdag7, inv, idem, vec)"});
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr inner = expr();
                if (peek().kind != TokenKind::RParen) {
                    fail({"')'", "'+'", "'-'", "'*'", "'^'"});
                }
                advance();
                return inner;
            }
            default:
                fail({"number", "unit symbol", "function", "'('", "'-'"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(std::string_view input)
{
    return detail::Parser(input).parse();
}

//---------------------------------------------------------------------------//
// PRINTER
//---------------------------------------------------------------------------//
namespace detail {

inline int precedence(const Expr& e)
{
    return std::visit(
        [](const auto& n) -> int {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Binary>) {
                return n.op == BinaryOp::Mul ? 2 : 1;
            } else if constexpr (std::is_same_v<N, Negate>) {
                return 3;
            } else if constexpr (std::is_same_v<N, Power>) {
                return 4;
            } else {
                return 5;
            }
        },
        e.node);
}

inline std::string print(const Expr& e, int min_prec);

inline std::string print_child(const Expr& e, int min_prec)
{
    std::string s = print(e, min_prec);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

inline std::string print(const Expr& e, int)
{
    return std::visit(
        [](const auto& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Literal>) {
                return n.text;
            } else if constexpr (std::is_same_v<N, Unit>) {
                return std::string(unit_name(n.symbol));
            } else if constexpr (std::is_same_v<N, Negate>) {
                return "-" + print_child(*n.operand, 3);
            } else if constexpr (std::is_same_v<N, Binary>) {
                const int p = n.op == BinaryOp::Mul ? 2 : 1;
                const char* op = n.op == BinaryOp::Add ? " + " : n.op == BinaryOp::Sub ? " - " : "*";
                return print_child(*n.lhs, p) + op + print_child(*n.rhs, p + 1);
            } else if constexpr (std::is_same_v<N, Power>) {
                return print_child(*n.base, 5) + "^" + std::to_string(n.exponent);
            } else {
                return std::string(function_name(n.fn)) + "(" + print(*n.arg, 0) + ")";
            }
        },
        e.node);
}

}  // namespace detail

//! Canonical text that parses back to an equal tree.
inline std::string to_string(const Expr& e)
{
    return detail::print(e, 0);
}

//---------------------------------------------------------------------------//
// EVALUATION
//---------------------------------------------------------------------------//
enum class Display { Cartesian, Idempotent, Vector };

template<Scalar T>
struct Evaluation {
    Bicomplex<T> value;
    Display display = Display::Cartesian;
};

inline constexpr std::int64_t max_exponent = 4096;

namespace detail {

template<Scalar T>
Bicomplex<T> checked(Bicomplex<T> s)
{
    for (const T& x : to_vec4(s).c) {
        scalar_traits<T>::check(x);
    }
    return s;
}

template<Scalar T>
Bicomplex<T> eval(const Expr& e)
{
    using B = Bicomplex<T>;
    return std::visit(
        [](const auto& n) -> B {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Literal>) {
                return checked(B::real(scalar_traits<T>::from_rational(n.value)));
            } else if constexpr (std::is_same_v<N, Unit>) {
                switch (n.symbol) {
                    case UnitSymbol::I1: return B::i1();
                    case UnitSymbol::I2: return B::i2();
                    case UnitSymbol::J1: return B::j1();
                    case UnitSymbol::E1: return B::e1();
                    case UnitSymbol::E2: return B::e2();
                }
                throw EvalError("unknown unit");
            } else if constexpr (std::is_same_v<N, Negate>) {
                return -eval<T>(*n.operand);
            } else if constexpr (std::is_same_v<N, Binary>) {
                const B lhs = eval<T>(*n.lhs);
                const B rhs = eval<T>(*n.rhs);
                switch (n.op) {
                    case BinaryOp::Add: return checked(lhs + rhs);
                    case BinaryOp::Sub: return checked(lhs - rhs);
                    case BinaryOp::Mul: return checked(lhs * rhs);
                }
                throw EvalError("unknown operator");
            } else if constexpr (std::is_same_v<N, Power>) {
                if (n.exponent > max_exponent || n.exponent < -max_exponent) {
                    throw EvalError("exponent magnitude exceeds " + std::to_string(max_exponent));
                }
                B base = eval<T>(*n.base);
                if (n.exponent < 0) {
                    base = inverse_idempotent(base);
                }
                return checked(pow(base, static_cast<std::uint64_t>(std::llabs(n.exponent))));
            } else {
                if (n.fn == Function::Idem || n.fn == Function::Vec) {
                    throw EvalError(std::string(function_name(n.fn)) + "() is a display transform and must be outermost");
                }
                const B arg = eval<T>(*n.arg);
                if (n.fn == Function::Inv) {
                    return checked(inverse_idempotent(arg));
                }
                return conjugate(*conjugation_of(n.fn), arg);
            }
        },
        e.node);
}

}  // namespace detail

template<Scalar T>
Evaluation<T> evaluate(const Expr& e)
{
    if (const auto* call = std::get_if<Call>(&e.node)) {
        if (call->fn == Function::Idem) {
            return {detail::eval<T>(*call->arg), Display::Idempotent};
        }
        if (call->fn == Function::Vec) {
            return {detail::eval<T>(*call->arg), Display::Vector};
        }
    }
    return {detail::eval<T>(e), Display::Cartesian};
}

template<Scalar T>
Evaluation<T> evaluate(std::string_view input)
{
    return evaluate<T>(*parse(input));
}

}  // namespace bicx::expr
