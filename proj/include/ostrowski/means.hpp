#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ostrowski/bounds.hpp"

// Special means of positive reals and the two mean-discrepancy checks that
// specialize the midpoint bounds to f = x^n and f = -ln(x+1).

namespace ostrowski {

inline double arithmetic_mean(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("arithmetic mean requires a, b > 0");
    return 0.5 * (a + b);
}

/// L_p(a,b) = [(b^(p+1) - a^(p+1)) / ((p+1)(b-a))]^(1/p); L_p(a,a) = a.
inline double p_logarithmic_mean(double a, double b, double p) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("p-logarithmic mean requires a, b > 0");
    if (p == 0.0 || p == -1.0)
        throw std::invalid_argument("p-logarithmic mean excludes p in {0, -1}");
    if (a == b) return a;
    return std::pow((std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / ((p + 1.0) * (b - a)),
                    1.0 / p);
}

/// I(a,b) = (1/e)(b^b / a^a)^(1/(b-a)); I(a,a) = a. Evaluated in log space,
/// b^b overflows already for moderate b.
inline double identric_mean(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("identric mean requires a, b > 0");
    if (a == b) return a;
    return std::exp((b * std::log(b) - a * std::log(a)) / (b - a) - 1.0);
}

struct mean_check_result {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;  // lhs <= rhs + 1e-9*(1+rhs)
    std::vector<std::pair<std::string, double>> components{};
};

inline mean_check_result make_mean_check(double lhs, double rhs) {
    mean_check_result r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = lhs <= rhs + holds_tolerance_scale * (1.0 + rhs);
    return r;
}

/// |A^n(a,b) - L_n^n(a,b)| against the midpoint kernel bound for f = x^n.
/// a = 0 is allowed here (L_n^n stays finite for n >= 2) even though the
/// means themselves require positive arguments.
inline mean_check_result prop31_check(double a, double b, int n, double m) {
    if (!(a >= 0.0) || !(a < b)) throw std::invalid_argument("prop31 requires 0 <= a < b");
    if (n < 2) throw std::invalid_argument("prop31 requires integer n >= 2");
    if (!(m > 0.0 && m <= 1.0)) throw std::invalid_argument("m must lie in (0, 1]");

    const double A = 0.5 * (a + b);
    const double Lnn = (std::pow(b, n + 1.0) - std::pow(a, n + 1.0)) / ((n + 1.0) * (b - a));
    const double lhs = std::abs(std::pow(A, n) - Lnn);

    // 2*A(u, v) = u + v
    const double arg1 = std::pow(a, n - 1.0) + m * std::pow(b / m, n - 1.0);
    const double arg2 = std::pow(b, n - 1.0) + m * std::pow(a / m, n - 1.0);
    const double rhs = n * (b - a) / 8.0 * std::min(arg1, arg2);

    mean_check_result r = make_mean_check(lhs, rhs);
    r.components.emplace_back("minArg1", arg1);
    r.components.emplace_back("minArg2", arg2);
    return r;
}

/// |ln( I(a+1,b+1) / (A(a,b)+1) )| against the midpoint pair bound for
/// f = -ln(x+1): rhs = (b-a)/4 * (eta1^(1/q) + eta2^(1/q)), eta as the
/// displayed mins (min first, then the 1/q power).
inline mean_check_result prop32_check(double a, double b, double m, double q) {
    if (!(a >= 0.0) || !(a < b)) throw std::invalid_argument("prop32 requires 0 <= a < b");
    if (!(m > 0.0 && m <= 1.0)) throw std::invalid_argument("m must lie in (0, 1]");
    if (!(q > 1.0)) throw std::invalid_argument("prop32 requires q > 1");

    const double alpha = a + 1.0;
    const double beta = b + 1.0;
    const double log_identric =
        (beta * std::log(beta) - alpha * std::log(alpha)) / (beta - alpha) - 1.0;
    const double lhs = std::abs(log_identric - std::log(0.5 * (a + b) + 1.0));

    auto pw = [q](double u) { return std::pow(u, q); };
    const double mid_scaled = 2.0 * m / (a + b + 2.0 * m);  // |f'((a+b)/(2m))|
    const double mid = 2.0 / (a + b + 2.0);                 // |f'((a+b)/2)|
    const double eta1 = std::min(0.5 * (pw(1.0 / beta) + m * pw(mid_scaled)),
                                 0.5 * (pw(mid) + m * pw(m / (b + m))));
    const double eta2 = std::min(0.5 * (pw(1.0 / alpha) + m * pw(mid_scaled)),
                                 0.5 * (pw(mid) + m * pw(m / (a + m))));
    const double rhs = (b - a) / 4.0 * (std::pow(eta1, 1.0 / q) + std::pow(eta2, 1.0 / q));

    mean_check_result r = make_mean_check(lhs, rhs);
    r.components.emplace_back("eta1", eta1);
    r.components.emplace_back("eta2", eta2);
    return r;
}

} // namespace ostrowski
