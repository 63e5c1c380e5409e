#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ostrowski/errors.hpp"
#include "ostrowski/expr.hpp"

namespace ostrowski {

/// Default absolute tolerance of the integration oracle. Slack assertions
/// elsewhere use 1e-9, one order looser.
inline constexpr double default_oracle_tolerance = 1e-10;

/// Half-open validity interval [lo, hi), lo >= 0, hi may be +infinity.
struct domain_range {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();

    domain_range() = default;
    domain_range(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo >= 0.0) || !(lo < hi))
            throw std::invalid_argument("domain requires 0 <= lo < hi");
    }
    bool contains(double x) const { return x >= lo && x < hi; }
};

/// Closed interval [a, b] with 0 <= a < b, as required by every bound here.
/// The degenerate case a == b is rejected because everything divides by b-a.
class interval {
public:
    interval(double a, double b) : a_(a), b_(b) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(a >= 0.0) || !(a < b))
            throw std::invalid_argument("interval requires finite 0 <= a < b");
    }
    double a() const { return a_; }
    double b() const { return b_; }
    double length() const { return b_ - a_; }
    double midpoint() const { return 0.5 * (a_ + b_); }

private:
    double a_;
    double b_;
};

struct quadrature_estimate {
    double value = 0.0;
    double absolute_error = 0.0;
    long evaluations = 0;
};

namespace detail {

struct adaptive_state {
    const std::function<double(double)>& f;
    long evaluations = 0;
    long max_evaluations;
    double error_sum = 0.0;

    double eval(double x) {
        if (++evaluations > max_evaluations)
            throw integration_error("adaptive integration exceeded " +
                                    std::to_string(max_evaluations) + " evaluations");
        return f(x);
    }
};

inline double adaptive_simpson(adaptive_state& st, double a, double b, double fa, double fm,
                               double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.eval(lm);
    const double frm = st.eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
        st.error_sum += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive bisection with an embedded higher-order (Richardson) estimate.
/// Subdivides until the summed per-panel error estimate is below the absolute
/// tolerance; throws integration_error past the evaluation budget.
inline quadrature_estimate integrate(const std::function<double(double)>& f, double a, double b,
                                     double tolerance,
                                     long max_evaluations = 1'000'000) {
    if (!(tolerance > 0.0))
        throw std::invalid_argument("integration tolerance must be positive");
    if (a == b) return {0.0, 0.0, 0};
    detail::adaptive_state st{f, 0, max_evaluations, 0.0};
    const double fa = st.eval(a);
    const double fm = st.eval(0.5 * (a + b));
    const double fb = st.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double value = detail::adaptive_simpson(st, a, b, fa, fm, fb, whole, tolerance, 52);
    return {value, st.error_sum, st.evaluations};
}

/// An evaluable real function with an evaluable derivative, an optional exact
/// antiderivative, and an explicit validity domain. Instances are immutable
/// and safe to share across threads.
class function_1d {
public:
    function_1d(std::string name, std::function<double(double)> value,
                std::function<double(double)> derivative,
                std::function<double(double)> antiderivative = {}, domain_range domain = {})
        : name_(std::move(name)),
          value_(std::move(value)),
          derivative_(std::move(derivative)),
          antiderivative_(std::move(antiderivative)),
          domain_(domain) {
        if (!value_ || !derivative_)
            throw std::invalid_argument("function_1d requires value and derivative");
        if (antiderivative_) check_antiderivative();
    }

    const std::string& name() const { return name_; }
    const domain_range& domain() const { return domain_; }
    bool has_antiderivative() const { return static_cast<bool>(antiderivative_); }

    double value(double x) const {
        require_inside(x);
        return value_(x);
    }
    double derivative(double x) const {
        require_inside(x);
        return derivative_(x);
    }
    double antiderivative(double x) const {
        if (!antiderivative_)
            throw std::logic_error("function '" + name_ + "' has no antiderivative");
        require_inside(x);
        return antiderivative_(x);
    }

private:
    void require_inside(double x) const {
        if (!domain_.contains(x)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            throw domain_error("function '" + name_ + "' evaluated at " + std::string(buf) +
                               " outside its domain");
        }
    }

    // spot check at registration: d/dx antiderivative must reproduce value
    void check_antiderivative() const {
        const double span = std::min(domain_.hi - domain_.lo, 4.0);
        for (int k = 1; k <= 9; ++k) {
            const double x = domain_.lo + span * k / 10.0;
            const double h = 1e-6 * (1.0 + std::abs(x));
            const double fd = (antiderivative_(x + h) - antiderivative_(x - h)) / (2.0 * h);
            const double v = value_(x);
            if (!std::isfinite(v) || !std::isfinite(derivative_(x)))
                throw std::logic_error("function '" + name_ + "' is not finite inside its domain");
            if (std::abs(fd - v) > 1e-8 * (1.0 + std::abs(v)))
                throw std::logic_error("antiderivative of '" + name_ +
                                       "' does not match its value");
        }
    }

    std::string name_;
    std::function<double(double)> value_;
    std::function<double(double)> derivative_;
    std::function<double(double)> antiderivative_;
    domain_range domain_;
};

/// Exact value if a closed-form antiderivative is registered, otherwise the
/// adaptive oracle at the given absolute tolerance.
inline quadrature_estimate integrate(const function_1d& f, const interval& iv,
                                     double tolerance = default_oracle_tolerance) {
    if (!f.domain().contains(iv.a()) || !f.domain().contains(iv.b()))
        throw domain_error("integration interval leaves the domain of '" + f.name() + "'");
    if (f.has_antiderivative())
        return {f.antiderivative(iv.b()) - f.antiderivative(iv.a()), 0.0, 0};
    return integrate([&f](double u) { return f.value(u); }, iv.a(), iv.b(), tolerance);
}

inline double mean_value(const function_1d& f, const interval& iv,
                         double tolerance = default_oracle_tolerance) {
    return integrate(f, iv, tolerance * iv.length()).value / iv.length();
}

// ---- builtin families ------------------------------------------------------

inline std::string format_exponent(double q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", q);
    return buf;
}

inline function_1d power_function(int n) {
    if (n < 2) throw std::invalid_argument("power family requires integer n >= 2");
    return function_1d(
        "x^" + std::to_string(n), [n](double x) { return std::pow(x, n); },
        [n](double x) { return n * std::pow(x, n - 1); },
        [n](double x) { return std::pow(x, n + 1) / (n + 1); }, domain_range{});
}

inline function_1d scaled_power_function(double c, int n) {
    if (n < 0) throw std::invalid_argument("scaled power requires integer n >= 0");
    if (c == 0.0) throw std::invalid_argument("scaled power requires c != 0");
    char head[40];
    std::snprintf(head, sizeof head, "%.15g*x^%d", c, n);
    return function_1d(
        head, [c, n](double x) { return c * std::pow(x, n); },
        [c, n](double x) { return n == 0 ? 0.0 : c * n * std::pow(x, n - 1); },
        [c, n](double x) { return c * std::pow(x, n + 1) / (n + 1); }, domain_range{});
}

inline function_1d neg_log1p_function() {
    return function_1d(
        "-ln(x+1)", [](double x) { return -std::log1p(x); },
        [](double x) { return -1.0 / (1.0 + x); },
        [](double x) { return x - (1.0 + x) * std::log1p(x); }, domain_range{});
}

inline function_1d exp_function() {
    return function_1d(
        "exp", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
        [](double x) { return std::exp(x); }, domain_range{});
}

/// |f'|^q as a function of its own, the hypothesis profile certified before
/// trusting the q-powered bounds. Its derivative is a central-difference
/// stand-in; grid certification only reads values.
inline function_1d abs_derivative_power(const function_1d& f, double q = 1.0) {
    if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1");
    auto value = [f, q](double x) { return std::pow(std::abs(f.derivative(x)), q); };
    auto derivative = [value](double x) {
        const double h = 1e-6 * (1.0 + std::abs(x));
        return (value(x + h) - value(x - h)) / (2.0 * h);
    };
    const std::string label = q == 1.0 ? "|d/dx " + f.name() + "|"
                                       : "|d/dx " + f.name() + "|^" + format_exponent(q);
    return function_1d(label, value, derivative, {}, f.domain());
}

/// Value through eval, derivative through the symbolic derivative tree.
/// No antiderivative; integration falls back to the adaptive oracle.
inline function_1d from_expression(std::string_view source, domain_range domain = {}) {
    const expr::node_ptr tree = expr::parse(source);
    const expr::node_ptr deriv = expr::differentiate(tree);
    return function_1d(
        std::string(source), [tree](double x) { return expr::eval(tree, x); },
        [deriv](double x) { return expr::eval(deriv, x); }, {}, domain);
}

// ---- textual function specs ("builtin:power:n=3", "expr:-ln(x+1)") ---------

namespace detail {

inline double parse_spec_number(const std::string& text) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad number '" + text + "' in function spec");
    return v;
}

} // namespace detail

/// Parses the CLI function spec format:
///   builtin:power:n=3 | builtin:scaled_power:c=2,n=3 | builtin:neg_log1p |
///   builtin:exp | expr:<expression>
/// with an optional trailing ":domain=lo,hi" (hi may be "inf").
inline function_1d parse_function_spec(std::string_view spec) {
    std::string body(spec);
    std::optional<domain_range> dom;
    if (const std::size_t at = body.rfind(":domain="); at != std::string::npos) {
        const std::string args = body.substr(at + 8);
        body.resize(at);
        const std::size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("domain spec needs 'lo,hi'");
        dom = domain_range(detail::parse_spec_number(args.substr(0, comma)),
                           detail::parse_spec_number(args.substr(comma + 1)));
    }
    auto with_domain = [&](function_1d f) {
        if (!dom) return f;
        return function_1d(
            f.name(), [f](double x) { return f.value(x); },
            [f](double x) { return f.derivative(x); },
            f.has_antiderivative()
                ? std::function<double(double)>([f](double x) { return f.antiderivative(x); })
                : std::function<double(double)>{},
            *dom);
    };
    if (body.rfind("expr:", 0) == 0)
        return from_expression(body.substr(5), dom.value_or(domain_range{}));
    if (body.rfind("builtin:", 0) != 0)
        throw std::invalid_argument("function spec must start with 'builtin:' or 'expr:'");
    std::string rest = body.substr(8);
    std::string family = rest, params;
    if (const std::size_t colon = rest.find(':'); colon != std::string::npos) {
        family = rest.substr(0, colon);
        params = rest.substr(colon + 1);
    }
    auto param = [&](std::string_view key) -> std::string {
        const std::string needle = std::string(key) + "=";
        std::size_t at = 0;
        while (at < params.size()) {
            const std::size_t end = params.find(',', at);
            const std::string piece =
                params.substr(at, end == std::string::npos ? std::string::npos : end - at);
            if (piece.rfind(needle, 0) == 0) return piece.substr(needle.size());
            if (end == std::string::npos) break;
            at = end + 1;
        }
        throw std::invalid_argument("family '" + family + "' needs parameter '" +
                                    std::string(key) + "='");
    };
    if (family == "power")
        return with_domain(power_function(static_cast<int>(detail::parse_spec_number(param("n")))));
    if (family == "scaled_power")
        return with_domain(scaled_power_function(detail::parse_spec_number(param("c")),
                                                 static_cast<int>(detail::parse_spec_number(param("n")))));
    if (family == "neg_log1p") return with_domain(neg_log1p_function());
    if (family == "exp") return with_domain(exp_function());
    throw std::invalid_argument("unknown builtin family '" + family + "'");
}

} // namespace ostrowski
