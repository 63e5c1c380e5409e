// Acceptance suite: every release-gating property of the library, one line of
// output per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ostrowski/ostrowski.hpp"

using namespace ostrowski;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool close_abs(double v, double expected, double tol) { return std::abs(v - expected) <= tol; }

struct corpus_entry {
    function_1d f;
    interval iv;
};

std::vector<corpus_entry> theorem_corpus() {
    std::vector<corpus_entry> out;
    for (int n = 2; n <= 6; ++n) out.push_back({power_function(n), interval(0.1, 2.0)});
    out.push_back({exp_function(), interval(0.0, 1.0)});
    out.push_back({neg_log1p_function(), interval(0.0, 1.0)});
    return out;
}

double remark_midpoint_value(const function_1d& f, const interval& iv, double m) {
    const double first = std::abs(f.derivative(iv.a())) + m * std::abs(f.derivative(iv.b() / m));
    const double second = std::abs(f.derivative(iv.b())) + m * std::abs(f.derivative(iv.a() / m));
    return iv.length() / 8.0 * std::min(first, second);
}

} // namespace

int main() {
    criterion(1, "kernel identity residual at oracle accuracy", [](std::string& detail) {
        const auto limit = std::chrono::steady_clock::now() + std::chrono::seconds(5);
        const function_1d corpus[] = {power_function(2), power_function(3), exp_function(),
                                      neg_log1p_function()};
        double worst = 0.0;
        for (const auto& f : corpus) {
            for (int i = 0; i <= 10; ++i) {
                const double x = i / 10.0;
                const double res =
                    kernel_identity_residual(f, bound_params(interval(0.0, 1.0), x), 1e-10);
                worst = std::max(worst, res);
                if (res > 1e-9) {
                    detail = f.name() + " at x=" + std::to_string(x) +
                             " residual=" + std::to_string(res);
                    return false;
                }
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "max residual %.2e", worst);
        detail = buf;
        return std::chrono::steady_clock::now() < limit;
    });

    criterion(2, "zero-violation sweeps for every certified hypothesis", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        const convexity_grid cert{41, 41, 1e-12};
        int admitted = 0;
        long points = 0;
        for (const auto& entry : theorem_corpus()) {
            const function_1d& f = entry.f;
            const interval& iv = entry.iv;
            for (double m : {0.5, 1.0}) {
                const double bstar = iv.b() / m;
                if (!f.domain().contains(bstar)) continue;
                auto certified = [&](double q) {
                    return check_m_convex(abs_derivative_power(f, q), bstar, m, cert)
                        .certified();
                };
                auto sweep_clean = [&](theorem_id id, std::optional<double> p,
                                       std::optional<double> q) {
                    const slack_report rep = verify_sweep(f, iv, m, id, p, q, {}, 101);
                    points += static_cast<long>(rep.points.size());
                    if (rep.violations != 0 || rep.failures != 0) {
                        detail = f.name() + " m=" + std::to_string(m) + " thm" +
                                 std::string(to_string(id)) +
                                 " violations=" + std::to_string(rep.violations) +
                                 " failures=" + std::to_string(rep.failures);
                        return false;
                    }
                    return true;
                };
                if (certified(1.0)) {
                    ++admitted;
                    if (!sweep_clean(theorem_id::thm21, {}, {})) return false;
                }
                for (double p : {2.0, 3.0})
                    if (certified(p / (p - 1.0))) {
                        ++admitted;
                        if (!sweep_clean(theorem_id::thm22, p, {})) return false;
                    }
                for (double q : {1.0, 2.0, 3.0})
                    if (certified(q)) {
                        ++admitted;
                        if (!sweep_clean(theorem_id::thm23, {}, q)) return false;
                    }
            }
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d sweeps admitted, %ld points, %.1f s", admitted,
                      points, seconds);
        detail = buf;
        // every m=1 hypothesis and the full power family at m=0.5 must certify
        return admitted == 72 && seconds < 30.0;
    });

    criterion(3, "midpoint value reduces to the pair minimum", [](std::string& detail) {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> lo(0.0, 3.0), len(0.1, 3.0), mm(0.1, 1.0);
        const function_1d fns[] = {power_function(3), exp_function(), neg_log1p_function()};
        for (int i = 0; i < 50; ++i) {
            const double a = lo(rng);
            const interval iv(a, a + len(rng));
            const double m = mm(rng);
            const function_1d& f = fns[i % 3];
            const bound_result r = thm21_bound(f, bound_params(iv, iv.midpoint(), m));
            const double remark = remark_midpoint_value(f, iv, m);
            if (std::abs(r.rhs - remark) > 1e-12 * remark) {
                detail = f.name() + " rhs=" + std::to_string(r.rhs) +
                         " remark=" + std::to_string(remark);
                return false;
            }
        }
        return true;
    });

    criterion(4, "m=1 pair minimum equals the convex endpoint average", [](std::string&) {
        std::mt19937 rng(54321);
        std::uniform_real_distribution<double> lo(0.0, 3.0), len(0.1, 3.0);
        const function_1d fns[] = {power_function(4), exp_function(), neg_log1p_function()};
        for (int i = 0; i < 50; ++i) {
            const double a = lo(rng);
            const interval iv(a, a + len(rng));
            const function_1d& f = fns[i % 3];
            const double remark = remark_midpoint_value(f, iv, 1.0);
            const double kirmaci =
                iv.length() / 8.0 *
                (std::abs(f.derivative(iv.a())) + std::abs(f.derivative(iv.b())));
            if (std::abs(remark - kirmaci) > 1e-12 * (1.0 + kirmaci)) return false;
        }
        return true;
    });

    criterion(5, "power-mean midpoint value under its 3^(1-1/q)/8 envelope",
              [](std::string& detail) {
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> lo(0.0, 2.0), len(0.1, 2.0), mm(0.1, 1.0);
        const function_1d fns[] = {power_function(3), exp_function(), neg_log1p_function()};
        for (int i = 0; i < 50; ++i) {
            const double a = lo(rng);
            const interval iv(a, a + len(rng));
            const double m = mm(rng);
            const function_1d& f = fns[i % 3];
            for (double q : {1.0, 2.0, 3.0}) {
                const bound_result r =
                    thm23_bound(f, bound_params(iv, iv.midpoint(), m).with_power_q(q));
                const double envelope =
                    iv.length() * std::pow(3.0, 1.0 - 1.0 / q) / 8.0 *
                    (std::abs(f.derivative(iv.a())) +
                     std::pow(m, 1.0 / q) * std::abs(f.derivative(iv.b() / m)));
                if (r.rhs > envelope + 1e-12 * (1.0 + envelope)) {
                    detail = f.name() + " q=" + std::to_string(q);
                    return false;
                }
                if (q == 1.0 && std::abs(r.rhs - envelope) > 1e-12 * (1.0 + envelope)) {
                    detail = "q=1 equality failed for " + f.name();
                    return false;
                }
            }
        }
        return true;
    });

    criterion(6, "kernel-moment bound is tight at both endpoints for x^2", [](std::string& detail) {
        const function_1d f = power_function(2);
        const bound_result at_a = thm21_bound(f, bound_params(interval(0.0, 1.0), 0.0));
        const bound_result at_b = thm21_bound(f, bound_params(interval(0.0, 1.0), 1.0));
        char buf[96];
        std::snprintf(buf, sizeof buf, "slack(0)=%.2e slack(1)=%.2e", at_a.slack, at_b.slack);
        detail = buf;
        return std::abs(at_a.slack) <= 1e-9 && std::abs(at_b.slack) <= 1e-9 &&
               close_abs(at_a.lhs, 1.0 / 3.0, 1e-9) && close_abs(at_a.rhs, 1.0 / 3.0, 1e-9) &&
               close_abs(at_b.lhs, 2.0 / 3.0, 1e-9) && close_abs(at_b.rhs, 2.0 / 3.0, 1e-9);
    });

    criterion(7, "power-mean discrepancy spot value", [](std::string&) {
        const mean_check_result r = prop31_check(0.0, 1.0, 2, 1.0);
        return close_abs(r.lhs, 1.0 / 12.0, 1e-12) && close_abs(r.rhs, 0.25, 1e-12) && r.holds;
    });

    criterion(8, "identric discrepancy spot value", [](std::string&) {
        const mean_check_result r = prop32_check(0.0, 1.0, 1.0, 2.0);
        const double lhs_oracle = std::abs(std::log(4.0 / std::exp(1.0)) - std::log(1.5));
        const double rhs_oracle = 0.25 * (std::sqrt(25.0 / 72.0) + std::sqrt(13.0 / 18.0));
        return close_abs(r.lhs, lhs_oracle, 1e-6) && close_abs(r.rhs, rhs_oracle, 1e-6) &&
               r.holds;
    });

    criterion(9, "a priori bounds dominate the midpoint error", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        const partition four = partition::uniform(interval(0.0, 1.0), 4);
        const double err4 = midpoint_error(power_function(2), four);
        const double b42 = prop42_bound(power_function(2), four, 1.0);
        if (!close_abs(err4, 1.0 / 192.0, 1e-9) || !close_abs(b42, 0.0625, 1e-12) ||
            err4 > b42) {
            detail = "spot check failed";
            return false;
        }
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> pick(0.0, 1.0);
        long checked = 0;
        for (const auto& [f, iv] : theorem_corpus()) {
            std::vector<partition> parts;
            for (int n : {1, 2, 4, 8, 16, 32}) parts.push_back(partition::uniform(iv, n));
            for (int r = 0; r < 10; ++r) {
                std::vector<double> nodes{iv.a(), iv.b()};
                for (int k = 0; k < 5; ++k)
                    nodes.push_back(iv.a() + iv.length() * (0.05 + 0.9 * pick(rng)));
                std::sort(nodes.begin(), nodes.end());
                bool distinct = true;
                for (std::size_t k = 0; k + 1 < nodes.size(); ++k)
                    if (nodes[k + 1] - nodes[k] < 1e-9) distinct = false;
                if (!distinct) {
                    --r;
                    continue;
                }
                parts.push_back(partition(std::move(nodes)));
            }
            for (const auto& d : parts) {
                const double err = midpoint_error(f, d);
                for (double q : {1.0, 2.0, 3.0}) {
                    ++checked;
                    if (err > prop41_bound(f, d, q) + 1e-9 ||
                        err > prop42_bound(f, d, q) + 1e-9) {
                        detail = f.name() + " n=" + std::to_string(d.panel_count()) +
                                 " q=" + std::to_string(q);
                        return false;
                    }
                }
            }
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%ld bound checks, %.1f s", checked, seconds);
        detail = buf;
        return seconds < 30.0;
    });

    criterion(10, "midpoint rule converges at second order", [](std::string& detail) {
        std::string ratios;
        for (int n : {16, 32, 64}) {
            const double e1 =
                midpoint_error(exp_function(), partition::uniform(interval(0.0, 1.0), n));
            const double e2 =
                midpoint_error(exp_function(), partition::uniform(interval(0.0, 1.0), 2 * n));
            const double ratio = e1 / e2;
            char buf[32];
            std::snprintf(buf, sizeof buf, "%s%.3f", ratios.empty() ? "" : ", ", ratio);
            ratios += buf;
            if (!(ratio >= 3.8 && ratio <= 4.2)) {
                detail = "ratio " + std::to_string(ratio) + " at n=" + std::to_string(n);
                return false;
            }
        }
        detail = "ratios " + ratios;
        return true;
    });

    criterion(11, "certifier separates 3x^2 from -x^2 with an exact witness",
              [](std::string& detail) {
        const convexity_grid grid51{51, 51, 1e-12};
        if (!check_m_convex(scaled_power_function(3.0, 2), 2.0, 1.0, grid51).certified()) {
            detail = "3x^2 not certified";
            return false;
        }
        const function_1d concave = scaled_power_function(-1.0, 2);
        const convexity_report coarse =
            check_m_convex(concave, 1.0, 1.0, convexity_grid{2, 3, 1e-12});
        if (coarse.certified() || !coarse.witness) {
            detail = "-x^2 not refuted on the coarse grid";
            return false;
        }
        const convexity_witness& w = *coarse.witness;
        if (!(w.x == 0.0 && w.y == 1.0 && w.t == 0.5 && w.lhs == -0.25 && w.rhs == -0.5 &&
              w.gap == 0.25)) {
            detail = "unexpected witness";
            return false;
        }
        const convexity_report fine = check_m_convex(concave, 1.0, 1.0, grid51);
        if (fine.certified() || !fine.witness) return false;
        // the reported witness must reproduce its own arithmetic
        const convexity_witness& v = *fine.witness;
        const double lhs = concave.value(v.t * v.x + (1.0 - v.t) * v.y);
        const double rhs = v.t * concave.value(v.x) + (1.0 - v.t) * concave.value(v.y);
        return lhs == v.lhs && rhs == v.rhs && v.gap == lhs - rhs;
    });

    criterion(12, "oracle accuracy: forced-numeric integral and derivative checks",
              [](std::string& detail) {
        const auto numeric =
            integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-10);
        if (!close_abs(numeric.value, 1.0 / 3.0, 1e-10)) {
            detail = "integral off by " + std::to_string(numeric.value - 1.0 / 3.0);
            return false;
        }
        const std::vector<std::string> corpus = {
            "x^2",       "x^3",        "x^4",          "-ln(x+1)", "exp(x)",
            "sin(x)",    "cos(x)",     "sqrt(x+1)",    "x^2*exp(x)", "ln(x+1)",
            "2*x+1",     "x^2.5",      "abs(x-1)",     "(x+1)/(x^2+1)",
        };
        std::mt19937 rng(2718);
        std::uniform_real_distribution<double> pick(0.05, 2.0);
        for (const auto& src : corpus) {
            const expr::node_ptr e = expr::parse(src);
            const expr::node_ptr d = expr::differentiate(e);
            int used = 0;
            while (used < 100) {
                const double x = pick(rng);
                if (src == "abs(x-1)" && std::abs(x - 1.0) < 1e-3) continue;
                ++used;
                const double h = 1e-6;
                const double fd = (expr::eval(e, x + h) - expr::eval(e, x - h)) / (2.0 * h);
                if (std::abs(expr::eval(d, x) - fd) > 1e-5 * (1.0 + std::abs(fd))) {
                    detail = src + " at x=" + std::to_string(x);
                    return false;
                }
            }
        }
        return true;
    });

    std::printf("%s: %d of 12 criteria passed\n", failures == 0 ? "OK" : "FAILED",
                12 - failures);
    return failures == 0 ? 0 : 1;
}
