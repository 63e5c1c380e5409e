#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "ostrowski/expr.hpp"

using namespace ostrowski;
using namespace ostrowski::expr;

namespace {

double central_diff(const node_ptr& e, double x, double h = 1e-6) {
    return (eval(e, x + h) - eval(e, x - h)) / (2.0 * h);
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out += c;
    return out;
}

} // namespace

TEST_CASE("tokenizer splits the closed grammar", "[expr]") {
    SECTION("x^2") {
        const auto toks = tokenize("x^2");
        REQUIRE(toks.size() == 3);
        CHECK(toks[0].kind == token_kind::identifier);
        CHECK(toks[0].lexeme == "x");
        CHECK(toks[1].kind == token_kind::op);
        CHECK(toks[1].lexeme == "^");
        CHECK(toks[2].kind == token_kind::number);
        CHECK(toks[2].lexeme == "2");
    }
    SECTION("-ln(x+1)") {
        const auto toks = tokenize("-ln(x+1)");
        REQUIRE(toks.size() == 7);
        CHECK(toks[0].kind == token_kind::op);
        CHECK(toks[1].kind == token_kind::identifier);
        CHECK(toks[1].lexeme == "ln");
        CHECK(toks[2].kind == token_kind::paren);
        CHECK(toks[3].lexeme == "x");
        CHECK(toks[4].lexeme == "+");
        CHECK(toks[5].kind == token_kind::number);
        CHECK(toks[6].lexeme == ")");
    }
    SECTION("positions strictly increase and lexemes rebuild the source") {
        for (const std::string src : {"2*x + 1", " sin( x )^2 ", "1.5e-3*x", "sqrt(x)/(x+2)"}) {
            const auto toks = tokenize(src);
            std::string glued;
            std::size_t last = 0;
            bool first = true;
            for (const auto& t : toks) {
                if (!first) CHECK(t.position > last);
                CHECK(!t.lexeme.empty());
                CHECK(src.substr(t.position, t.lexeme.size()) == t.lexeme);
                last = t.position;
                first = false;
                glued += t.lexeme;
            }
            CHECK(glued == strip_spaces(src));
        }
    }
    SECTION("rejections carry positions") {
        try {
            tokenize("x @ 2");
            FAIL("expected a lexical error");
        } catch (const parse_error& e) {
            CHECK(e.position() == 2);
        }
        CHECK_THROWS_AS(tokenize(""), parse_error);
        CHECK_THROWS_AS(tokenize("x # 1"), parse_error);
    }
}

TEST_CASE("parser follows precedence and rejects malformed input", "[expr]") {
    CHECK(to_string(parse("2*x+1")) == "((2*x)+1)");
    CHECK(to_string(parse("1+2*x^3")) == "(1+(2*(x^3)))");
    CHECK(to_string(parse("-x^2")) == "(-(x^2))");
    CHECK(to_string(parse("2-3-4")) == "((2-3)-4)");
    CHECK(to_string(parse("x^2^3")) == "(x^(2^3))");
    CHECK(eval(parse("2-3-4"), 0.0) == -5.0);
    CHECK(eval(parse("x^3"), 2.0) == 8.0);
    CHECK(eval(parse("2^-3"), 0.0) == 0.125);

    // hand-built tree for 2*x+1
    const node_ptr by_hand = make_binary(
        node_kind::add, make_binary(node_kind::multiply, make_constant(2.0), make_variable()),
        make_constant(1.0));
    CHECK(structurally_equal(parse("2*x+1"), by_hand));

    CHECK_THROWS_AS(parse("ln("), parse_error);
    CHECK_THROWS_AS(parse("x+"), parse_error);
    CHECK_THROWS_AS(parse("(x"), parse_error);
    CHECK_THROWS_AS(parse("x)"), parse_error);
    CHECK_THROWS_AS(parse("foo(x)"), parse_error);
    CHECK_THROWS_AS(parse("ln x"), parse_error);
    CHECK_THROWS_AS(parse("x x"), parse_error);
    CHECK_THROWS_AS(parse("--x"), parse_error);

    try {
        parse("1+foo(x)");
        FAIL("expected a syntax error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("foo") != std::string::npos);
    }
}

TEST_CASE("round trip through the printer is structurally stable", "[expr]") {
    const std::vector<std::string> corpus = {
        "x^2",           "-ln(x+1)",      "2*x+1",         "x^2^3",
        "sin(x)*cos(x)", "sqrt(x+1)/2",   "exp(-x)",       "abs(x-1)",
        "1.5e-3*x+2.25", "x/(x+1)",       "-(x+2)^4",      "ln(exp(x))",
        "x^(1/3)",       "2^x",           "cos(x^2)-sin(2*x)",
    };
    for (const auto& src : corpus) {
        const node_ptr once = parse(src);
        const node_ptr twice = parse(to_string(once));
        INFO(src << " printed as " << to_string(once));
        CHECK(structurally_equal(once, twice));
    }
}

TEST_CASE("evaluation semantics and domain errors", "[expr]") {
    CHECK(eval(parse("x^2"), 3.0) == 9.0);
    CHECK(eval(parse("-ln(x+1)"), 0.0) == 0.0);
    CHECK(eval(parse("(0-2)^3"), 0.0) == -8.0);
    CHECK(eval(parse("x^x"), 2.0) == 4.0);
    CHECK(eval(parse("abs(x-1)"), 0.25) == 0.75);

    CHECK_THROWS_AS(eval(parse("ln(x)"), -1.0), ostrowski::domain_error);
    CHECK_THROWS_AS(eval(parse("ln(x)"), 0.0), ostrowski::domain_error);
    CHECK_THROWS_AS(eval(parse("1/x"), 0.0), ostrowski::domain_error);
    CHECK_THROWS_AS(eval(parse("sqrt(x)"), -4.0), ostrowski::domain_error);
    CHECK_THROWS_AS(eval(parse("x^0.5"), -2.0), ostrowski::domain_error);
    CHECK_THROWS_AS(eval(parse("x^-1"), 0.0), ostrowski::domain_error);

    try {
        eval(parse("2*ln(x)"), -1.0);
        FAIL("expected a domain error");
    } catch (const ostrowski::domain_error& e) {
        CHECK(std::string(e.what()).find("ln(x)") != std::string::npos);
    }

    SECTION("bit-identical determinism") {
        const node_ptr e = parse("sin(x)*exp(x)-x^3/7");
        for (double x : {0.1, 0.77, 2.5}) {
            const double v1 = eval(e, x);
            const double v2 = eval(e, x);
            CHECK(std::memcmp(&v1, &v2, sizeof v1) == 0);
        }
    }
}

TEST_CASE("symbolic derivatives match closed forms and finite differences", "[expr]") {
    CHECK(eval(differentiate(parse("x^3")), 2.0) == 12.0);
    CHECK_THAT(eval(differentiate(parse("-ln(x+1)")), 1.0),
               Catch::Matchers::WithinAbs(-0.5, 1e-15));

    SECTION("power rule against n*x^(n-1)") {
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> pick(0.1, 3.0);
        for (int n : {2, 3, 5, 7}) {
            const node_ptr d = differentiate(parse("x^" + std::to_string(n)));
            for (int i = 0; i < 20; ++i) {
                const double x = pick(rng);
                const double exact = n * std::pow(x, n - 1);
                CHECK_THAT(eval(d, x), Catch::Matchers::WithinRel(exact, 1e-12));
                CHECK_THAT(eval(d, x), Catch::Matchers::WithinAbs(
                                           central_diff(parse("x^" + std::to_string(n)), x),
                                           1e-6 * (1.0 + std::abs(exact))));
            }
        }
    }

    SECTION("finite differences across the corpus") {
        const std::vector<std::string> corpus = {
            "x^2",         "x^3",           "-ln(x+1)",   "exp(x)",     "sin(x)*cos(x)",
            "sqrt(x+1)",   "x^2*exp(x)",    "ln(x+1)/(x+1)", "2*x+1",   "x^2.5",
            "abs(x-1)",    "exp(-x^2)",     "x^x",
        };
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> pick(0.05, 2.0);
        for (const auto& src : corpus) {
            const node_ptr e = parse(src);
            const node_ptr d = differentiate(e);
            int used = 0;
            while (used < 100) {
                const double x = pick(rng);
                if (src == "abs(x-1)" && std::abs(x - 1.0) < 1e-3) continue;
                ++used;
                const double fd = central_diff(e, x);
                INFO(src << " at x=" << x);
                CHECK(std::abs(eval(d, x) - fd) <= 1e-5 * (1.0 + std::abs(fd)));
            }
        }
    }

    SECTION("abs uses the sign convention with sign(0)=0") {
        const node_ptr d = differentiate(parse("abs(x-1)"));
        CHECK(eval(d, 0.5) == -1.0);
        CHECK(eval(d, 2.0) == 1.0);
        CHECK(eval(d, 1.0) == 0.0);
    }
}

namespace {

// grammar-directed source generator for the property sweep below
std::string gen_source(std::mt19937& rng, int depth);

// every rng draw lands in a named local first, so the stream is consumed in
// the same order under every compiler
std::string gen_atom(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 3);
    const int k = kind(rng);
    switch (k) {
        case 0: {
            std::uniform_int_distribution<int> num(1, 16);
            return std::to_string(num(rng) * 0.25).substr(0, 6);
        }
        case 1: return "x";
        case 2: {
            static const char* fns[] = {"ln", "exp", "sin", "cos", "sqrt", "abs"};
            std::uniform_int_distribution<int> pick(0, 5);
            const int fn = pick(rng);
            const std::string inner = gen_source(rng, depth - 1);
            return std::string(fns[fn]) + "(" + inner + ")";
        }
        default: return "(" + gen_source(rng, depth - 1) + ")";
    }
}

std::string gen_power(std::mt19937& rng, int depth) {
    std::string out = gen_atom(rng, depth);
    std::uniform_int_distribution<int> roll(0, 3);
    if (const int r = roll(rng); depth > 0 && r == 0) {
        static const char* exponents[] = {"2", "3", "0.5", "1.5"};
        std::uniform_int_distribution<int> pick(0, 3);
        const int e = pick(rng);
        out += "^";
        out += exponents[e];
    }
    return out;
}

std::string gen_factor(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> roll(0, 4);
    const int r = roll(rng);
    return r == 0 ? "-" + gen_power(rng, depth) : gen_power(rng, depth);
}

std::string gen_term(std::mt19937& rng, int depth) {
    std::string out = gen_factor(rng, depth);
    std::uniform_int_distribution<int> roll(0, 2);
    if (const int r = roll(rng); depth > 0 && r == 0) {
        std::uniform_int_distribution<int> pick(0, 1);
        const int op = pick(rng);
        out += op ? "*" : "/";
        out += gen_factor(rng, depth - 1);
    }
    return out;
}

std::string gen_source(std::mt19937& rng, int depth) {
    std::string out = gen_term(rng, depth);
    std::uniform_int_distribution<int> roll(0, 2);
    if (const int r = roll(rng); depth > 0 && r == 0) {
        std::uniform_int_distribution<int> pick(0, 1);
        const int op = pick(rng);
        out += op ? "+" : "-";
        out += gen_term(rng, depth - 1);
    }
    return out;
}

} // namespace

TEST_CASE("generated grammar sweep: lexing, round trip, determinism, derivatives", "[expr]") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> point(0.1, 2.0);
    int derivative_points = 0;
    for (int i = 0; i < 250; ++i) {
        const std::string src = gen_source(rng, 4);
        INFO("source: " << src);

        const auto toks = tokenize(src);
        std::string glued;
        for (const auto& t : toks) glued += t.lexeme;
        CHECK(glued == src);

        const node_ptr tree = parse(src);
        CHECK(structurally_equal(tree, parse(to_string(tree))));

        const node_ptr deriv = differentiate(tree);
        const bool has_kink = src.find("abs") != std::string::npos;
        for (int k = 0; k < 5; ++k) {
            const double x = point(rng);
            try {
                const double v1 = eval(tree, x);
                const double v2 = eval(tree, x);
                CHECK(std::memcmp(&v1, &v2, sizeof v1) == 0);
                // central differences carry eps*|value|/h cancellation noise,
                // so only values of moderate magnitude make a usable oracle
                if (has_kink || !std::isfinite(v1) || std::abs(v1) > 1e5) continue;
                const double fd = central_diff(tree, x);
                const double fd_half = central_diff(tree, x, 5e-7);
                const double sym = eval(deriv, x);
                if (!std::isfinite(fd) || !std::isfinite(sym) || std::abs(fd) > 1e6) continue;
                // the two step sizes must agree well inside the assertion band,
                // otherwise truncation makes the difference quotient useless
                // as an oracle at this point (near-poles, fast oscillation)
                if (std::abs(fd - fd_half) > 2e-5 * (1.0 + std::abs(fd))) continue;
                ++derivative_points;
                CHECK(std::abs(sym - fd) <= 1e-4 * (1.0 + std::abs(fd)));
            } catch (const ostrowski::domain_error&) {
                // generated ln/sqrt/division arguments may leave the domain
            }
        }
    }
    CHECK(derivative_points > 300);
}
