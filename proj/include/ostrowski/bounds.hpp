#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ostrowski/function.hpp"

// Evaluators for the Ostrowski-type bounds on |f(x) - mean of f over [a,b]|
// under m-convexity hypotheses on |f'| or |f'|^q, the related midpoint and
// trapezoid reference bounds, and sweep verification over a grid of x.
//
// Conventions shared by every evaluator:
//   lambda = (b-x)/(b-a), rho = (x-a)/(b-a), computed directly from x so the
//   endpoint cases x=a (lambda=1) and x=b (lambda=0) are exact;
//   a min-branch whose scaled point (a/m, b/m, x/m, ...) leaves the function's
//   domain is treated as +infinity, i.e. dropped; if every branch of a bound
//   is dropped the evaluator throws;
//   "holds" allows slack down to -1e-9*(1+rhs), tied to the oracle tolerance.

namespace ostrowski {

inline constexpr double holds_tolerance_scale = 1e-9;

/// Parameter tuple (a, b, x, m, p, q, M) shared by the bound evaluators.
/// p and q are tied by q = p/(p-1); setting one checks the other.
struct bound_params {
    interval iv;
    double x;
    double m = 1.0;
    std::optional<double> p{};
    std::optional<double> q{};
    std::optional<double> M{};

    bound_params(interval iv_, double x_, double m_ = 1.0) : iv(iv_), x(x_), m(m_) {
        if (!(x >= iv.a() && x <= iv.b()))
            throw std::invalid_argument("x must lie in [a, b]");
        if (!(m > 0.0 && m <= 1.0))
            throw std::invalid_argument("m must lie in (0, 1]");
    }

    bound_params& with_hoelder_p(double p_) {
        if (!(p_ > 1.0)) throw std::invalid_argument("p must be > 1");
        const double conjugate = p_ / (p_ - 1.0);
        if (q && std::abs(*q - conjugate) > 1e-12)
            throw std::invalid_argument("q must equal p/(p-1)");
        p = p_;
        q = conjugate;
        return *this;
    }
    bound_params& with_power_q(double q_) {
        if (!(q_ >= 1.0)) throw std::invalid_argument("q must be >= 1");
        if (p && std::abs(*p / (*p - 1.0) - q_) > 1e-12)
            throw std::invalid_argument("q must equal p/(p-1)");
        q = q_;
        return *this;
    }
    bound_params& with_derivative_bound(double M_) {
        if (!(M_ >= 0.0)) throw std::invalid_argument("M must be >= 0");
        M = M_;
        return *this;
    }

    double require_p() const {
        if (!p) throw std::invalid_argument("this bound requires the Hoelder exponent p");
        return *p;
    }
    double require_q() const {
        if (!q) throw std::invalid_argument("this bound requires the exponent q");
        return *q;
    }
    double require_M() const {
        if (!M) throw std::invalid_argument("this bound requires the derivative bound M");
        return *M;
    }

    double lambda() const { return (iv.b() - x) / iv.length(); }
    double rho() const { return (x - iv.a()) / iv.length(); }
};

enum class min_branch { first, second, not_applicable };

inline std::string_view to_string(min_branch b) {
    switch (b) {
        case min_branch::first: return "first";
        case min_branch::second: return "second";
        case min_branch::not_applicable: return "notApplicable";
    }
    return "?";
}

struct bound_result {
    double lhs = 0.0;
    double rhs = 0.0;
    min_branch branch = min_branch::not_applicable;
    double slack = 0.0;   // rhs - lhs
    bool holds = false;   // slack >= -1e-9*(1+rhs)
    std::vector<std::pair<std::string, double>> details{};
};

inline bound_result make_bound_result(double lhs, double rhs,
                                      min_branch branch = min_branch::not_applicable) {
    bound_result r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.branch = branch;
    r.slack = rhs - lhs;
    r.holds = r.slack >= -holds_tolerance_scale * (1.0 + rhs);
    return r;
}

/// The piecewise weight whose integral against f'(ta+(1-t)b) reproduces the
/// deviation f(x) - mean: t on [0, lambda], t-1 on (lambda, 1].
struct montgomery_kernel {
    double breakpoint;  // lambda = (b-x)/(b-a), in [0, 1]
    double operator()(double t) const { return t <= breakpoint ? t : t - 1.0; }
};

inline montgomery_kernel kernel_for(const bound_params& prm) { return {prm.lambda()}; }

/// |f(x) - (1/(b-a)) * integral of f over [a,b]|.
inline double ostrowski_lhs(const function_1d& f, const bound_params& prm,
                            double tol = default_oracle_tolerance) {
    return std::abs(f.value(prm.x) - mean_value(f, prm.iv, tol));
}

/// Self-test of the kernel identity: the deviation f(x) - mean must equal
/// (a-b) * integral over [0,1] of p(t) f'(ta+(1-t)b) dt. Both sides go
/// through the oracle (one numeric integration per kernel piece); the
/// returned residual is expected to sit at oracle accuracy.
inline double kernel_identity_residual(const function_1d& f, const bound_params& prm,
                                       double tol = default_oracle_tolerance) {
    const double a = prm.iv.a();
    const double b = prm.iv.b();
    const double lambda = prm.lambda();
    auto deriv_on_chord = [&](double t) { return f.derivative(t * a + (1.0 - t) * b); };

    double left = 0.0, right = 0.0;
    if (lambda > 0.0)
        left = integrate([&](double t) { return t * deriv_on_chord(t); }, 0.0, lambda, tol).value;
    if (lambda < 1.0)
        right = integrate([&](double t) { return (t - 1.0) * deriv_on_chord(t); }, lambda, 1.0, tol)
                    .value;
    const double kernel_side = (a - b) * (left + right);
    const double direct = f.value(prm.x) - mean_value(f, prm.iv, tol);
    return std::abs(direct - kernel_side);
}

/// M/(b-a) * ((x-a)^2 + (b-x)^2)/2 for |f'| <= M.
inline double classical_ostrowski_bound(const bound_params& prm) {
    const double M = prm.require_M();
    const double da = prm.x - prm.iv.a();
    const double db = prm.iv.b() - prm.x;
    return M / prm.iv.length() * 0.5 * (da * da + db * db);
}

/// M(b-a)/4 for an M-Lipschitz f at the midpoint.
inline double lipschitz_midpoint_bound(const bound_params& prm) {
    return prm.require_M() * prm.iv.length() / 4.0;
}

namespace detail {

inline constexpr double infeasible = std::numeric_limits<double>::infinity();

inline bool scaled_point_ok(const function_1d& f, double point) {
    return f.domain().contains(point);
}

struct rhs_eval {
    double rhs = 0.0;
    min_branch branch = min_branch::not_applicable;
    std::vector<std::pair<std::string, double>> details{};
};

// kernel moments against t and 1-t: c1 multiplies the endpoint derivative,
// c2 the m-scaled one, on the first branch; they swap roles on the second
inline double kernel_c1(double lambda) {
    return 1.0 / 6.0 - 0.5 * lambda * lambda + 2.0 / 3.0 * lambda * lambda * lambda;
}
inline double kernel_c2(double lambda, double rho) {
    return 0.5 * lambda * lambda - lambda * lambda * lambda / 3.0 + rho * rho * rho / 3.0;
}

inline rhs_eval thm21_rhs(const function_1d& f, const bound_params& prm) {
    const double a = prm.iv.a();
    const double b = prm.iv.b();
    const double m = prm.m;
    const double lambda = prm.lambda();
    const double rho = prm.rho();
    const double c1 = kernel_c1(lambda);
    const double c2 = kernel_c2(lambda, rho);

    double first = infeasible, second = infeasible;
    if (scaled_point_ok(f, b / m))
        first = c1 * std::abs(f.derivative(a)) + m * c2 * std::abs(f.derivative(b / m));
    if (scaled_point_ok(f, a / m))
        second = c2 * std::abs(f.derivative(b)) + m * c1 * std::abs(f.derivative(a / m));
    if (first == infeasible && second == infeasible)
        throw domain_error("both branches need scaled points outside the domain of '" +
                           f.name() + "'");

    rhs_eval r;
    r.branch = first <= second ? min_branch::first : min_branch::second;
    r.rhs = prm.iv.length() * std::min(first, second);
    if (first != infeasible) r.details.emplace_back("branch1", prm.iv.length() * first);
    if (second != infeasible) r.details.emplace_back("branch2", prm.iv.length() * second);
    return r;
}

// min over the two admissible m-convex splits of the mean of |f'|^q over a
// subinterval [u, v]; candidates with infeasible scaled points are dropped
struct half_mean_min {
    double value;
    double branch;  // 1 or 2
};

inline half_mean_min dq_pair_min(const function_1d& f, double q, double m, double end,
                                 double inner) {
    auto dq = [&](double u) { return std::pow(std::abs(f.derivative(u)), q); };
    double cand1 = infeasible, cand2 = infeasible;
    if (scaled_point_ok(f, inner / m)) cand1 = 0.5 * (dq(end) + m * dq(inner / m));
    if (scaled_point_ok(f, end / m)) cand2 = 0.5 * (dq(inner) + m * dq(end / m));
    if (cand1 == infeasible && cand2 == infeasible)
        throw domain_error("both min arguments need scaled points outside the domain of '" +
                           f.name() + "'");
    return cand1 <= cand2 ? half_mean_min{cand1, 1.0} : half_mean_min{cand2, 2.0};
}

inline rhs_eval thm22_rhs(const function_1d& f, const bound_params& prm) {
    const double p = prm.require_p();
    const double q = prm.require_q();
    const double a = prm.iv.a();
    const double b = prm.iv.b();
    const double x = prm.x;
    const double factor = std::pow(p + 1.0, -1.0 / p);

    rhs_eval r;
    double sum = 0.0;
    const double wb = (b - x) * (b - x);
    if (wb > 0.0) {
        const half_mean_min mu1 = dq_pair_min(f, q, prm.m, b, x);
        sum += wb * std::pow(mu1.value, 1.0 / q);
        r.details.emplace_back("mu1", mu1.value);
        r.details.emplace_back("mu1Branch", mu1.branch);
    }
    const double wa = (x - a) * (x - a);
    if (wa > 0.0) {
        const half_mean_min mu2 = dq_pair_min(f, q, prm.m, a, x);
        sum += wa * std::pow(mu2.value, 1.0 / q);
        r.details.emplace_back("mu2", mu2.value);
        r.details.emplace_back("mu2Branch", mu2.branch);
    }
    r.rhs = factor * sum / prm.iv.length();
    return r;
}

inline rhs_eval thm23_rhs(const function_1d& f, const bound_params& prm) {
    const double q = prm.require_q();
    const double a = prm.iv.a();
    const double b = prm.iv.b();
    const double x = prm.x;
    const double m = prm.m;
    if (!scaled_point_ok(f, b / m))
        throw domain_error("b/m lies outside the domain of '" + f.name() + "'");
    const double lambda = prm.lambda();
    const double rho = prm.rho();
    const double len = prm.iv.length();
    const double A = std::pow(std::abs(f.derivative(a)), q);
    const double B = std::pow(std::abs(f.derivative(b / m)), q);

    const double len3 = len * len * len;
    const double c1 = lambda * lambda * lambda / 3.0;
    const double c2 = (b - x) * (b - x) * (b - 3.0 * a + 2.0 * x) / (6.0 * len3);
    const double c3 = 1.0 / 6.0 + (b - x) * (b - x) * (3.0 * a - b - 2.0 * x) / (6.0 * len3);
    const double c4 = rho * rho * rho / 3.0;
    // both brackets are nonnegative in exact arithmetic; clamp rounding dust
    const double bracket1 = std::max(c1 * A + m * c2 * B, 0.0);
    const double bracket2 = std::max(c3 * A + m * c4 * B, 0.0);
    const double e = 2.0 * (1.0 - 1.0 / q);

    rhs_eval r;
    r.rhs = len * std::pow(0.5, 1.0 - 1.0 / q) *
            (std::pow(lambda, e) * std::pow(bracket1, 1.0 / q) +
             std::pow(rho, e) * std::pow(bracket2, 1.0 / q));
    r.details.emplace_back("bracket1", bracket1);
    r.details.emplace_back("bracket2", bracket2);
    return r;
}

} // namespace detail

/// Kernel-moment bound for m-convex |f'|: rhs = (b-a) * min over the two
/// admissible endpoint splits. Both branch values are recorded in details.
inline bound_result thm21_bound(const function_1d& f, const bound_params& prm,
                                double tol = default_oracle_tolerance) {
    const detail::rhs_eval rhs = detail::thm21_rhs(f, prm);
    bound_result r = make_bound_result(ostrowski_lhs(f, prm, tol), rhs.rhs, rhs.branch);
    r.details = rhs.details;
    return r;
}

/// Hoelder-type bound for m-convex |f'|^q with q = p/(p-1). The two mins are
/// selected independently per term; choices land in details.
inline bound_result thm22_bound(const function_1d& f, const bound_params& prm,
                                double tol = default_oracle_tolerance) {
    const detail::rhs_eval rhs = detail::thm22_rhs(f, prm);
    bound_result r = make_bound_result(ostrowski_lhs(f, prm, tol), rhs.rhs, rhs.branch);
    r.details = rhs.details;
    return r;
}

/// Power-mean bound for m-convex |f'|^q, q >= 1. Asymmetric by construction
/// (only |f'(a)| and |f'(b/m)| enter); there is no outer min.
inline bound_result thm23_bound(const function_1d& f, const bound_params& prm,
                                double tol = default_oracle_tolerance) {
    const detail::rhs_eval rhs = detail::thm23_rhs(f, prm);
    bound_result r = make_bound_result(ostrowski_lhs(f, prm, tol), rhs.rhs, rhs.branch);
    r.details = rhs.details;
    return r;
}

/// Uniform-derivative corollary of the Hoelder bound:
/// (p+1)^(-1/p) * ((1+m)/2)^(1/q) * M * ((b-x)^2+(x-a)^2)/(b-a).
inline double corollary21_bound(const bound_params& prm) {
    const double p = prm.require_p();
    const double q = prm.require_q();
    const double M = prm.require_M();
    const double da = prm.x - prm.iv.a();
    const double db = prm.iv.b() - prm.x;
    return std::pow(p + 1.0, -1.0 / p) * std::pow(0.5 * (1.0 + prm.m), 1.0 / q) * M *
           (db * db + da * da) / prm.iv.length();
}

/// Midpoint form of the Hoelder bound with the (p+1)^(-1/p) factor replaced
/// by its upper bound 1: rhs = (b-a)/4 * (mu1^(1/q) + mu2^(1/q)). Evaluated
/// at x = (a+b)/2 regardless of prm.x.
inline bound_result corollary22_bound(const function_1d& f, const bound_params& prm,
                                      double tol = default_oracle_tolerance) {
    const double q = prm.require_q();
    const double a = prm.iv.a();
    const double b = prm.iv.b();
    const double mid = prm.iv.midpoint();
    const detail::half_mean_min mu1 = detail::dq_pair_min(f, q, prm.m, b, mid);
    const detail::half_mean_min mu2 = detail::dq_pair_min(f, q, prm.m, a, mid);
    const double rhs =
        prm.iv.length() / 4.0 * (std::pow(mu1.value, 1.0 / q) + std::pow(mu2.value, 1.0 / q));
    const double lhs = std::abs(f.value(mid) - mean_value(f, prm.iv, tol));
    bound_result r = make_bound_result(lhs, rhs);
    r.details.emplace_back("mu1", mu1.value);
    r.details.emplace_back("mu1Branch", mu1.branch);
    r.details.emplace_back("mu2", mu2.value);
    r.details.emplace_back("mu2Branch", mu2.branch);
    return r;
}

/// Upper bound on the mean of an m-convex f itself:
/// mean <= min{ (f(a)+m f(b/m))/2, (f(b)+m f(a/m))/2 }.
/// lhs is the (signed) mean, rhs the min; holds checks mean <= min.
inline bound_result hadamard_right_bound(const function_1d& f, const interval& iv, double m,
                                         double tol = default_oracle_tolerance) {
    if (!(m > 0.0 && m <= 1.0)) throw std::invalid_argument("m must lie in (0, 1]");
    double first = detail::infeasible, second = detail::infeasible;
    if (detail::scaled_point_ok(f, iv.b() / m))
        first = 0.5 * (f.value(iv.a()) + m * f.value(iv.b() / m));
    if (detail::scaled_point_ok(f, iv.a() / m))
        second = 0.5 * (f.value(iv.b()) + m * f.value(iv.a() / m));
    if (first == detail::infeasible && second == detail::infeasible)
        throw domain_error("both branches need scaled points outside the domain of '" +
                           f.name() + "'");
    const min_branch branch = first <= second ? min_branch::first : min_branch::second;
    bound_result r =
        make_bound_result(mean_value(f, iv, tol), std::min(first, second), branch);
    if (first != detail::infeasible) r.details.emplace_back("branch1", first);
    if (second != detail::infeasible) r.details.emplace_back("branch2", second);
    return r;
}

namespace detail {

inline double midpoint_lhs(const function_1d& f, const bound_params& prm, double tol) {
    return std::abs(f.value(prm.iv.midpoint()) - mean_value(f, prm.iv, tol));
}

} // namespace detail

/// Reference midpoint bound for m-convex |f'|^q:
/// (b-a) * 3^(1-1/q)/8 * (|f'(a)| + m^(1/q) |f'(b/m)|).
inline bound_result midpoint_power_q_bound(const function_1d& f, const bound_params& prm,
                                           double tol = default_oracle_tolerance) {
    const double q = prm.require_q();
    if (!detail::scaled_point_ok(f, prm.iv.b() / prm.m))
        throw domain_error("b/m lies outside the domain of '" + f.name() + "'");
    const double rhs =
        prm.iv.length() * std::pow(3.0, 1.0 - 1.0 / q) / 8.0 *
        (std::abs(f.derivative(prm.iv.a())) +
         std::pow(prm.m, 1.0 / q) * std::abs(f.derivative(prm.iv.b() / prm.m)));
    return make_bound_result(detail::midpoint_lhs(f, prm, tol), rhs);
}

/// Reference midpoint bound for convex |f'|: (b-a)/8 * (|f'(a)| + |f'(b)|).
inline bound_result midpoint_convex_bound(const function_1d& f, const bound_params& prm,
                                          double tol = default_oracle_tolerance) {
    const double rhs = prm.iv.length() / 8.0 *
                       (std::abs(f.derivative(prm.iv.a())) + std::abs(f.derivative(prm.iv.b())));
    return make_bound_result(detail::midpoint_lhs(f, prm, tol), rhs);
}

/// Reference midpoint bound for m-convex |f'|^q:
/// (b-a)/4 * min of the two endpoint power means of |f'|^q.
inline bound_result midpoint_power_min_bound(const function_1d& f, const bound_params& prm,
                                             double tol = default_oracle_tolerance) {
    const double q = prm.require_q();
    const double a = prm.iv.a();
    const double b = prm.iv.b();
    const double m = prm.m;
    auto dq = [&](double u) { return std::pow(std::abs(f.derivative(u)), q); };
    double first = detail::infeasible, second = detail::infeasible;
    if (detail::scaled_point_ok(f, b / m))
        first = std::pow(0.5 * (dq(a) + m * dq(b / m)), 1.0 / q);
    if (detail::scaled_point_ok(f, a / m))
        second = std::pow(0.5 * (m * dq(a / m) + dq(b)), 1.0 / q);
    if (first == detail::infeasible && second == detail::infeasible)
        throw domain_error("both branches need scaled points outside the domain of '" +
                           f.name() + "'");
    const min_branch branch = first <= second ? min_branch::first : min_branch::second;
    return make_bound_result(detail::midpoint_lhs(f, prm, tol),
                             prm.iv.length() / 4.0 * std::min(first, second), branch);
}

/// All three reference midpoint bounds; they share the same lhs.
struct midpoint_reference_bounds {
    bound_result power_q;
    bound_result convex;
    bound_result power_min;
};

inline midpoint_reference_bounds intro_midpoint_bounds(const function_1d& f,
                                                       const bound_params& prm,
                                                       double tol = default_oracle_tolerance) {
    return {midpoint_power_q_bound(f, prm, tol), midpoint_convex_bound(f, prm, tol),
            midpoint_power_min_bound(f, prm, tol)};
}

/// Trapezoid-side analog: lhs = |(f(a)+f(b))/2 - mean|,
/// rhs = (b-a)/4 * (mu1^(1/q) + mu2^(1/q)) with the midpoint-coupled mins.
inline bound_result trapezoid_bound(const function_1d& f, const bound_params& prm,
                                    double tol = default_oracle_tolerance) {
    const double q = prm.require_q();
    const double a = prm.iv.a();
    const double b = prm.iv.b();
    const double mid = prm.iv.midpoint();
    const double m = prm.m;
    auto dq = [&](double u) { return std::pow(std::abs(f.derivative(u)), q); };

    auto side_min = [&](double end) -> detail::half_mean_min {
        double cand1 = detail::infeasible, cand2 = detail::infeasible;
        if (detail::scaled_point_ok(f, mid / m)) cand1 = 0.5 * (dq(end) + m * dq(mid / m));
        if (detail::scaled_point_ok(f, end / m)) cand2 = 0.5 * (dq(mid) + m * dq(end / m));
        if (cand1 == detail::infeasible && cand2 == detail::infeasible)
            throw domain_error("both min arguments need scaled points outside the domain of '" +
                               f.name() + "'");
        return cand1 <= cand2 ? detail::half_mean_min{cand1, 1.0}
                              : detail::half_mean_min{cand2, 2.0};
    };
    const detail::half_mean_min mu1 = side_min(a);
    const detail::half_mean_min mu2 = side_min(b);
    const double rhs =
        prm.iv.length() / 4.0 * (std::pow(mu1.value, 1.0 / q) + std::pow(mu2.value, 1.0 / q));
    const double lhs =
        std::abs(0.5 * (f.value(a) + f.value(b)) - mean_value(f, prm.iv, tol));
    bound_result r = make_bound_result(lhs, rhs);
    r.details.emplace_back("mu1", mu1.value);
    r.details.emplace_back("mu1Branch", mu1.branch);
    r.details.emplace_back("mu2", mu2.value);
    r.details.emplace_back("mu2Branch", mu2.branch);
    return r;
}

// ---- verification sweeps ----------------------------------------------------

enum class theorem_id { thm21, thm22, thm23, corollary21 };

inline std::string_view to_string(theorem_id id) {
    switch (id) {
        case theorem_id::thm21: return "21";
        case theorem_id::thm22: return "22";
        case theorem_id::thm23: return "23";
        case theorem_id::corollary21: return "c21";
    }
    return "?";
}

struct sweep_point {
    double x = 0.0;
    bool ok = false;
    bound_result result{};
    std::string error{};
};

struct slack_report {
    std::vector<sweep_point> points;
    long violations = 0;
    long failures = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    double argmin_x = std::numeric_limits<double>::quiet_NaN();
};

/// Evaluates the selected bound on a uniform inclusive x-grid over [a,b].
/// Per-point failures (domain errors) are recorded and the sweep continues.
/// Results are ordered by x; the aggregate tracks min slack and violations.
inline slack_report verify_sweep(const function_1d& f, const interval& iv, double m,
                                 theorem_id thm, std::optional<double> p, std::optional<double> q,
                                 std::optional<double> M, int grid_points,
                                 double tol = default_oracle_tolerance) {
    if (grid_points < 2) throw std::invalid_argument("sweep needs at least 2 grid points");
    {
        // missing exponents or M are usage errors, not per-point failures
        bound_params probe(iv, iv.a(), m);
        if (p) probe.with_hoelder_p(*p);
        if (q) probe.with_power_q(*q);
        if (M) probe.with_derivative_bound(*M);
        switch (thm) {
            case theorem_id::thm22: probe.require_p(); break;
            case theorem_id::thm23: probe.require_q(); break;
            case theorem_id::corollary21:
                probe.require_p();
                probe.require_M();
                break;
            case theorem_id::thm21: break;
        }
    }

    // the mean is x-independent; compute the deviation base once
    const double mean = mean_value(f, iv, tol);

    slack_report rep;
    rep.points.reserve(grid_points);
    for (int j = 0; j < grid_points; ++j) {
        const double x = (j == grid_points - 1)
                             ? iv.b()
                             : iv.a() + iv.length() * (static_cast<double>(j) / (grid_points - 1));
        sweep_point pt;
        pt.x = x;
        try {
            bound_params prm(iv, x, m);
            if (p) prm.with_hoelder_p(*p);
            if (q) prm.with_power_q(*q);
            if (M) prm.with_derivative_bound(*M);
            const double lhs = std::abs(f.value(x) - mean);
            detail::rhs_eval rhs;
            switch (thm) {
                case theorem_id::thm21: rhs = detail::thm21_rhs(f, prm); break;
                case theorem_id::thm22: rhs = detail::thm22_rhs(f, prm); break;
                case theorem_id::thm23: rhs = detail::thm23_rhs(f, prm); break;
                case theorem_id::corollary21:
                    rhs.rhs = corollary21_bound(prm);
                    break;
            }
            pt.result = make_bound_result(lhs, rhs.rhs, rhs.branch);
            pt.result.details = std::move(rhs.details);
            pt.ok = true;
            if (!pt.result.holds) ++rep.violations;
            if (pt.result.slack < rep.min_slack) {
                rep.min_slack = pt.result.slack;
                rep.argmin_x = x;
            }
        } catch (const std::exception& e) {
            pt.ok = false;
            pt.error = e.what();
            ++rep.failures;
        }
        rep.points.push_back(std::move(pt));
    }
    return rep;
}

} // namespace ostrowski
