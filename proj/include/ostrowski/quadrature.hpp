#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ostrowski/bounds.hpp"
#include "ostrowski/function.hpp"

// Composite midpoint rule, its true error against the oracle, and the two
// a priori error bounds driven by f' alone (valid when |f'|^q is convex).

namespace ostrowski {

/// Strictly increasing division a = x0 < x1 < ... < xn = b.
class partition {
public:
    explicit partition(std::vector<double> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.size() < 2)
            throw std::invalid_argument("partition needs at least 2 nodes");
        for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
            if (!(nodes_[i] < nodes_[i + 1]))
                throw std::invalid_argument("partition nodes must strictly increase");
    }

    static partition uniform(const interval& iv, int panels) {
        if (panels < 1) throw std::invalid_argument("partition needs at least 1 panel");
        std::vector<double> nodes(panels + 1);
        for (int i = 0; i <= panels; ++i)
            nodes[i] = (i == panels)
                           ? iv.b()
                           : iv.a() + iv.length() * (static_cast<double>(i) / panels);
        return partition(std::move(nodes));
    }

    const std::vector<double>& nodes() const { return nodes_; }
    int panel_count() const { return static_cast<int>(nodes_.size()) - 1; }
    double a() const { return nodes_.front(); }
    double b() const { return nodes_.back(); }

private:
    std::vector<double> nodes_;
};

struct quadrature_report {
    int panels = 0;
    double approximation = 0.0;
    double true_error = 0.0;
    double bound = 0.0;
    bool holds = false;       // true_error <= bound + 1e-9*(1+bound)
    double tightness = 0.0;   // true_error / bound, 0 when bound is 0
};

/// Sum over all panels of (x_{i+1}-x_i) * f((x_i+x_{i+1})/2).
inline double midpoint_rule(const function_1d& f, const partition& d) {
    const auto& x = d.nodes();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        sum += (x[i + 1] - x[i]) * f.value(0.5 * (x[i] + x[i + 1]));
    return sum;
}

/// |integral of f over [a,b] - midpoint_rule(f, d)| via the oracle.
inline double midpoint_error(const function_1d& f, const partition& d,
                             double tol = default_oracle_tolerance) {
    const interval iv(d.a(), d.b());
    return std::abs(integrate(f, iv, tol).value - midpoint_rule(f, d));
}

/// Per-panel term of the pair bound: (h^2/4) * (mu1^(1/q) + mu2^(1/q)) with
/// mu pairing the midpoint derivative with each panel endpoint.
inline double prop41_panel_bound(const function_1d& f, double xi, double xi1, double q) {
    const double h = xi1 - xi;
    const double mid = 0.5 * (xi + xi1);
    auto dq = [&](double u) { return std::pow(std::abs(f.derivative(u)), q); };
    const double mu1 = 0.5 * (dq(mid) + dq(xi));
    const double mu2 = 0.5 * (dq(mid) + dq(xi1));
    return 0.25 * h * h * (std::pow(mu1, 1.0 / q) + std::pow(mu2, 1.0 / q));
}

/// Per-panel term of the endpoint bound: (3^(1-1/q)/8) h^2 (|f'(xi)|+|f'(xi1)|).
inline double prop42_panel_bound(const function_1d& f, double xi, double xi1, double q) {
    const double h = xi1 - xi;
    return std::pow(3.0, 1.0 - 1.0 / q) / 8.0 * h * h *
           (std::abs(f.derivative(xi)) + std::abs(f.derivative(xi1)));
}

inline double prop41_bound(const function_1d& f, const partition& d, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1");
    const auto& x = d.nodes();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        sum += prop41_panel_bound(f, x[i], x[i + 1], q);
    return sum;
}

inline double prop42_bound(const function_1d& f, const partition& d, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1");
    const auto& x = d.nodes();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        sum += prop42_panel_bound(f, x[i], x[i + 1], q);
    return sum;
}

enum class apriori_bound { prop41, prop42 };

inline std::string_view to_string(apriori_bound which) {
    return which == apriori_bound::prop41 ? "prop41" : "prop42";
}

inline double evaluate_apriori_bound(const function_1d& f, const partition& d, double q,
                                     apriori_bound which) {
    return which == apriori_bound::prop41 ? prop41_bound(f, d, q) : prop42_bound(f, d, q);
}

inline quadrature_report make_quadrature_report(const function_1d& f, const partition& d,
                                                double bound,
                                                double tol = default_oracle_tolerance) {
    quadrature_report rep;
    rep.panels = d.panel_count();
    rep.approximation = midpoint_rule(f, d);
    rep.true_error =
        std::abs(integrate(f, interval(d.a(), d.b()), tol).value - rep.approximation);
    rep.bound = bound;
    rep.holds = rep.true_error <= bound + holds_tolerance_scale * (1.0 + bound);
    rep.tightness = bound == 0.0 ? 0.0 : rep.true_error / bound;
    return rep;
}

struct refine_result {
    partition part;
    quadrature_report report;
};

/// Doubles a uniform partition (n = 1, 2, 4, ...) until the selected a priori
/// bound drops to the target; both bounds decay only like 1/n, so an
/// unreachable target throws once max_panels is passed.
inline refine_result refine_to_bound(const function_1d& f, const interval& iv, double q,
                                     double target, apriori_bound which,
                                     int max_panels = 1 << 20,
                                     double tol = default_oracle_tolerance) {
    if (!(target > 0.0)) throw std::invalid_argument("target must be positive");
    if (max_panels < 1) throw std::invalid_argument("max_panels must be >= 1");
    for (long n = 1; n <= max_panels; n *= 2) {
        partition d = partition::uniform(iv, static_cast<int>(n));
        const double bound = evaluate_apriori_bound(f, d, q, which);
        if (bound <= target) {
            quadrature_report rep = make_quadrature_report(f, d, bound, tol);
            return {std::move(d), rep};
        }
    }
    throw integration_error("a priori bound target " + std::to_string(target) +
                            " unreachable within " + std::to_string(max_panels) + " panels");
}

} // namespace ostrowski
