#pragma once

#include <cmath>
#include <cstdio>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ostrowski/errors.hpp"

// Closed expression grammar over a single variable x:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')? power
//   power  := atom ('^' factor)?
//   atom   := number | 'x' | fname '(' expr ')' | '(' expr ')'
//   fname  := ln | exp | sin | cos | sqrt | abs
//
// Trees are immutable after construction and every operation here is a pure
// function, so the same tree may be evaluated from many threads at once.

namespace ostrowski::expr {

enum class token_kind { number, identifier, op, paren };

struct token {
    token_kind kind;
    std::string lexeme;
    std::size_t position;
};

inline std::vector<token> tokenize(std::string_view source) {
    if (source.empty())
        throw parse_error("empty expression", 0);
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };

    std::vector<token> out;
    std::size_t i = 0;
    while (i < source.size()) {
        const char c = source[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c) || (c == '.' && i + 1 < source.size() && is_digit(source[i + 1]))) {
            while (i < source.size() && is_digit(source[i])) ++i;
            if (i < source.size() && source[i] == '.') {
                ++i;
                while (i < source.size() && is_digit(source[i])) ++i;
            }
            if (i < source.size() && (source[i] == 'e' || source[i] == 'E')) {
                // exponent only if it is actually followed by digits;
                // otherwise the 'e' starts an identifier
                std::size_t j = i + 1;
                if (j < source.size() && (source[j] == '+' || source[j] == '-')) ++j;
                if (j < source.size() && is_digit(source[j])) {
                    ++j;
                    while (j < source.size() && is_digit(source[j])) ++j;
                    i = j;
                }
            }
            out.push_back({token_kind::number, std::string(source.substr(start, i - start)), start});
        } else if (is_alpha(c)) {
            while (i < source.size() && is_alpha(source[i])) ++i;
            out.push_back({token_kind::identifier, std::string(source.substr(start, i - start)), start});
        } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            ++i;
            out.push_back({token_kind::op, std::string(1, c), start});
        } else if (c == '(' || c == ')') {
            ++i;
            out.push_back({token_kind::paren, std::string(1, c), start});
        } else {
            throw parse_error(std::string("unexpected character '") + c + "'", i);
        }
    }
    return out;
}

enum class node_kind { constant, variable, negate, add, subtract, multiply, divide, power, call };

// 'sign' never comes out of the parser; differentiate() emits it for abs,
// with the convention sign(0) = 0.
enum class builtin_fn { ln, exp, sin, cos, sqrt, abs, sign };

struct node;
using node_ptr = std::shared_ptr<const node>;

struct node {
    node_kind kind;
    double constant = 0.0;               // kind == constant
    builtin_fn fn = builtin_fn::ln;      // kind == call
    node_ptr first{};
    node_ptr second{};
};

inline node_ptr make_constant(double v) {
    return std::make_shared<const node>(node{node_kind::constant, v, builtin_fn::ln, {}, {}});
}
inline node_ptr make_variable() {
    return std::make_shared<const node>(node{node_kind::variable, 0.0, builtin_fn::ln, {}, {}});
}
inline node_ptr make_negate(node_ptr u) {
    return std::make_shared<const node>(node{node_kind::negate, 0.0, builtin_fn::ln, std::move(u), {}});
}
inline node_ptr make_binary(node_kind kind, node_ptr lhs, node_ptr rhs) {
    return std::make_shared<const node>(node{kind, 0.0, builtin_fn::ln, std::move(lhs), std::move(rhs)});
}
inline node_ptr make_call(builtin_fn fn, node_ptr arg) {
    return std::make_shared<const node>(node{node_kind::call, 0.0, fn, std::move(arg), {}});
}

inline std::string_view fn_name(builtin_fn f) {
    switch (f) {
        case builtin_fn::ln: return "ln";
        case builtin_fn::exp: return "exp";
        case builtin_fn::sin: return "sin";
        case builtin_fn::cos: return "cos";
        case builtin_fn::sqrt: return "sqrt";
        case builtin_fn::abs: return "abs";
        case builtin_fn::sign: return "sign";
    }
    return "?";
}

/// Fully parenthesized rendering; parses back to a structurally equal tree.
inline std::string to_string(const node& n) {
    switch (n.kind) {
        case node_kind::constant: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", n.constant);
            return buf;
        }
        case node_kind::variable: return "x";
        case node_kind::negate: return "(-" + to_string(*n.first) + ")";
        case node_kind::add: return "(" + to_string(*n.first) + "+" + to_string(*n.second) + ")";
        case node_kind::subtract: return "(" + to_string(*n.first) + "-" + to_string(*n.second) + ")";
        case node_kind::multiply: return "(" + to_string(*n.first) + "*" + to_string(*n.second) + ")";
        case node_kind::divide: return "(" + to_string(*n.first) + "/" + to_string(*n.second) + ")";
        case node_kind::power: return "(" + to_string(*n.first) + "^" + to_string(*n.second) + ")";
        case node_kind::call:
            return std::string(fn_name(n.fn)) + "(" + to_string(*n.first) + ")";
    }
    return "?";
}
inline std::string to_string(const node_ptr& n) { return to_string(*n); }

inline bool structurally_equal(const node& a, const node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case node_kind::constant: return a.constant == b.constant;
        case node_kind::variable: return true;
        case node_kind::call:
            return a.fn == b.fn && structurally_equal(*a.first, *b.first);
        case node_kind::negate:
            return structurally_equal(*a.first, *b.first);
        default:
            return structurally_equal(*a.first, *b.first) && structurally_equal(*a.second, *b.second);
    }
}
inline bool structurally_equal(const node_ptr& a, const node_ptr& b) {
    return structurally_equal(*a, *b);
}

namespace detail {

class parser {
public:
    explicit parser(std::span<const token> toks) : toks_(toks) {}

    node_ptr parse_all() {
        node_ptr e = parse_expr();
        if (pos_ < toks_.size())
            throw parse_error("unexpected trailing input '" + toks_[pos_].lexeme + "'",
                              toks_[pos_].position);
        return e;
    }

private:
    std::span<const token> toks_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= toks_.size(); }
    std::size_t end_position() const {
        return toks_.empty() ? 0 : toks_.back().position + toks_.back().lexeme.size();
    }
    const token& peek() const {
        if (at_end())
            throw parse_error("unexpected end of input", end_position());
        return toks_[pos_];
    }
    bool match_op(char c) {
        if (!at_end() && toks_[pos_].kind == token_kind::op && toks_[pos_].lexeme[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool match_paren(char c) {
        if (!at_end() && toks_[pos_].kind == token_kind::paren && toks_[pos_].lexeme[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    node_ptr parse_expr() {
        node_ptr lhs = parse_term();
        for (;;) {
            if (match_op('+')) lhs = make_binary(node_kind::add, lhs, parse_term());
            else if (match_op('-')) lhs = make_binary(node_kind::subtract, lhs, parse_term());
            else return lhs;
        }
    }

    node_ptr parse_term() {
        node_ptr lhs = parse_factor();
        for (;;) {
            if (match_op('*')) lhs = make_binary(node_kind::multiply, lhs, parse_factor());
            else if (match_op('/')) lhs = make_binary(node_kind::divide, lhs, parse_factor());
            else return lhs;
        }
    }

    node_ptr parse_factor() {
        if (match_op('-')) return make_negate(parse_power());
        return parse_power();
    }

    node_ptr parse_power() {
        node_ptr base = parse_atom();
        if (match_op('^')) return make_binary(node_kind::power, base, parse_factor());
        return base;
    }

    node_ptr parse_atom() {
        const token& t = peek();
        if (t.kind == token_kind::number) {
            ++pos_;
            return make_constant(std::strtod(t.lexeme.c_str(), nullptr));
        }
        if (t.kind == token_kind::identifier) {
            ++pos_;
            if (t.lexeme == "x") return make_variable();
            builtin_fn fn;
            if (t.lexeme == "ln") fn = builtin_fn::ln;
            else if (t.lexeme == "exp") fn = builtin_fn::exp;
            else if (t.lexeme == "sin") fn = builtin_fn::sin;
            else if (t.lexeme == "cos") fn = builtin_fn::cos;
            else if (t.lexeme == "sqrt") fn = builtin_fn::sqrt;
            else if (t.lexeme == "abs") fn = builtin_fn::abs;
            else
                throw parse_error("unknown name '" + t.lexeme + "'", t.position);
            if (!match_paren('('))
                throw parse_error("function '" + t.lexeme + "' requires a parenthesized argument",
                                  at_end() ? end_position() : peek().position);
            node_ptr arg = parse_expr();
            if (!match_paren(')'))
                throw parse_error("unbalanced parenthesis",
                                  at_end() ? end_position() : peek().position);
            return make_call(fn, arg);
        }
        if (t.kind == token_kind::paren && t.lexeme[0] == '(') {
            ++pos_;
            node_ptr inner = parse_expr();
            if (!match_paren(')'))
                throw parse_error("unbalanced parenthesis",
                                  at_end() ? end_position() : peek().position);
            return inner;
        }
        throw parse_error("unexpected token '" + t.lexeme + "'", t.position);
    }
};

} // namespace detail

inline node_ptr parse(std::span<const token> tokens) {
    return detail::parser(tokens).parse_all();
}

inline node_ptr parse(std::string_view source) {
    const std::vector<token> toks = tokenize(source);
    return parse(std::span<const token>(toks));
}

namespace detail {

// x^k for integral k by repeated multiplication, so negative bases work
inline double integer_power(double base, long long k, const node& ctx) {
    if (base == 0.0) {
        if (k < 0)
            throw ostrowski::domain_error("zero raised to a negative power in '" + to_string(ctx) + "'");
        return k == 0 ? 1.0 : 0.0;
    }
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
                                 : static_cast<unsigned long long>(k);
    double r = 1.0, b = base;
    while (e != 0) {
        if (e & 1ULL) r *= b;
        b *= b;
        e >>= 1;
    }
    return k < 0 ? 1.0 / r : r;
}

} // namespace detail

inline double eval(const node& n, double x) {
    switch (n.kind) {
        case node_kind::constant: return n.constant;
        case node_kind::variable: return x;
        case node_kind::negate: return -eval(*n.first, x);
        case node_kind::add: return eval(*n.first, x) + eval(*n.second, x);
        case node_kind::subtract: return eval(*n.first, x) - eval(*n.second, x);
        case node_kind::multiply: return eval(*n.first, x) * eval(*n.second, x);
        case node_kind::divide: {
            const double den = eval(*n.second, x);
            if (den == 0.0)
                throw ostrowski::domain_error("division by zero in '" + to_string(n) + "'");
            return eval(*n.first, x) / den;
        }
        case node_kind::power: {
            const double base = eval(*n.first, x);
            const double expo = eval(*n.second, x);
            if (std::rint(expo) == expo && std::abs(expo) < 9.0e15)
                return detail::integer_power(base, static_cast<long long>(expo), n);
            if (base <= 0.0)
                throw ostrowski::domain_error(
                    "non-integer power of a non-positive base in '" + to_string(n) + "'");
            return std::pow(base, expo);
        }
        case node_kind::call: {
            const double u = eval(*n.first, x);
            switch (n.fn) {
                case builtin_fn::ln:
                    if (u <= 0.0)
                        throw ostrowski::domain_error(
                            "ln of a non-positive argument in '" + to_string(n) + "'");
                    return std::log(u);
                case builtin_fn::exp: return std::exp(u);
                case builtin_fn::sin: return std::sin(u);
                case builtin_fn::cos: return std::cos(u);
                case builtin_fn::sqrt:
                    if (u < 0.0)
                        throw ostrowski::domain_error(
                            "sqrt of a negative argument in '" + to_string(n) + "'");
                    return std::sqrt(u);
                case builtin_fn::abs: return std::abs(u);
                case builtin_fn::sign: return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
            }
            return 0.0;
        }
    }
    return 0.0;
}
inline double eval(const node_ptr& n, double x) { return eval(*n, x); }

/// Exact structural derivative; no simplification is attempted.
inline node_ptr differentiate(const node_ptr& n) {
    using nk = node_kind;
    switch (n->kind) {
        case nk::constant: return make_constant(0.0);
        case nk::variable: return make_constant(1.0);
        case nk::negate: return make_negate(differentiate(n->first));
        case nk::add: return make_binary(nk::add, differentiate(n->first), differentiate(n->second));
        case nk::subtract:
            return make_binary(nk::subtract, differentiate(n->first), differentiate(n->second));
        case nk::multiply:
            return make_binary(nk::add,
                               make_binary(nk::multiply, differentiate(n->first), n->second),
                               make_binary(nk::multiply, n->first, differentiate(n->second)));
        case nk::divide:
            return make_binary(
                nk::divide,
                make_binary(nk::subtract,
                            make_binary(nk::multiply, differentiate(n->first), n->second),
                            make_binary(nk::multiply, n->first, differentiate(n->second))),
                make_binary(nk::multiply, n->second, n->second));
        case nk::power: {
            const node_ptr& u = n->first;
            const node_ptr& v = n->second;
            if (v->kind == nk::constant) {
                // c * u^(c-1) * u'
                const double c = v->constant;
                return make_binary(
                    nk::multiply,
                    make_binary(nk::multiply, make_constant(c),
                                make_binary(nk::power, u, make_constant(c - 1.0))),
                    differentiate(u));
            }
            // u^v * (v' ln u + v u'/u)
            return make_binary(
                nk::multiply, n,
                make_binary(nk::add,
                            make_binary(nk::multiply, differentiate(v), make_call(builtin_fn::ln, u)),
                            make_binary(nk::divide,
                                        make_binary(nk::multiply, v, differentiate(u)), u)));
        }
        case nk::call: {
            const node_ptr& u = n->first;
            const node_ptr du = differentiate(u);
            switch (n->fn) {
                case builtin_fn::ln: return make_binary(nk::divide, du, u);
                case builtin_fn::exp:
                    return make_binary(nk::multiply, make_call(builtin_fn::exp, u), du);
                case builtin_fn::sin:
                    return make_binary(nk::multiply, make_call(builtin_fn::cos, u), du);
                case builtin_fn::cos:
                    return make_negate(make_binary(nk::multiply, make_call(builtin_fn::sin, u), du));
                case builtin_fn::sqrt:
                    return make_binary(nk::divide, du,
                                       make_binary(nk::multiply, make_constant(2.0),
                                                   make_call(builtin_fn::sqrt, u)));
                case builtin_fn::abs:
                    return make_binary(nk::multiply, make_call(builtin_fn::sign, u), du);
                case builtin_fn::sign: return make_constant(0.0);
            }
            return make_constant(0.0);
        }
    }
    return make_constant(0.0);
}

} // namespace ostrowski::expr
