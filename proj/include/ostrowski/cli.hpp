#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ostrowski/ostrowski.hpp"

// Command-line front end. Exit codes: 0 when every checked inequality holds
// (or a certification succeeds), 1 when a violation is found, 2 on usage or
// domain errors.

namespace ostrowski::cli {

namespace detail {

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << text << "\n";
}

inline bound_params make_params(const interval& iv, double x, double m,
                                const std::optional<double>& p, const std::optional<double>& q,
                                const std::optional<double>& M) {
    bound_params prm(iv, x, m);
    if (p) prm.with_hoelder_p(*p);
    if (q) prm.with_power_q(*q);
    if (M) prm.with_derivative_bound(*M);
    return prm;
}

// grid certification of the hypothesis behind a bound id; returns nothing for
// the M-based bounds, which are instead spot-checked against |f'| <= M
inline bool certify_for(const std::string& thm, const function_1d& f, const bound_params& prm,
                        int grid_points) {
    const convexity_grid grid{grid_points, grid_points, 1e-12};
    const double bstar = prm.iv.b() / prm.m;
    if (thm == "ostrowski" || thm == "lipschitz" || thm == "c21") {
        const double M = prm.require_M();
        for (int i = 0; i <= 200; ++i) {
            const double x = prm.iv.a() + prm.iv.length() * i / 200.0;
            if (std::abs(f.derivative(x)) > M * (1.0 + 1e-12) + 1e-12) return false;
        }
        return true;
    }
    if (thm == "hadamard") return check_m_convex(f, bstar, prm.m, grid).certified();
    if (thm == "21")
        return check_m_convex(abs_derivative_power(f, 1.0), bstar, prm.m, grid).certified();
    // every remaining bound assumes m-convex |f'|^q
    return check_m_convex(abs_derivative_power(f, prm.require_q()), bstar, prm.m, grid)
        .certified();
}

struct thm_choice {
    std::string id;
    bool needs_p = false;
    bool needs_q = false;
    bool needs_M = false;
};

inline const std::vector<thm_choice>& bound_registry() {
    static const std::vector<thm_choice> table = {
        {"21", false, false, false},      {"22", true, false, false},
        {"23", false, true, false},       {"c21", true, false, true},
        {"c22", false, true, false},      {"ostrowski", false, false, true},
        {"lipschitz", false, false, true},{"midq", false, true, false},
        {"midconvex", false, false, false},{"midmin", false, true, false},
        {"trapezoid", false, true, false},{"hadamard", false, false, false},
    };
    return table;
}

inline bound_result evaluate_bound(const std::string& thm, const function_1d& f,
                                   const bound_params& prm, double tol) {
    if (thm == "21") return thm21_bound(f, prm, tol);
    if (thm == "22") return thm22_bound(f, prm, tol);
    if (thm == "23") return thm23_bound(f, prm, tol);
    if (thm == "c21")
        return make_bound_result(ostrowski_lhs(f, prm, tol), corollary21_bound(prm));
    if (thm == "c22") return corollary22_bound(f, prm, tol);
    if (thm == "ostrowski")
        return make_bound_result(ostrowski_lhs(f, prm, tol), classical_ostrowski_bound(prm));
    if (thm == "lipschitz")
        return make_bound_result(
            std::abs(f.value(prm.iv.midpoint()) - mean_value(f, prm.iv, tol)),
            lipschitz_midpoint_bound(prm));
    if (thm == "midq") return midpoint_power_q_bound(f, prm, tol);
    if (thm == "midconvex") return midpoint_convex_bound(f, prm, tol);
    if (thm == "midmin") return midpoint_power_min_bound(f, prm, tol);
    if (thm == "trapezoid") return trapezoid_bound(f, prm, tol);
    if (thm == "hadamard") return hadamard_right_bound(f, prm.iv, prm.m, tol);
    throw std::invalid_argument("unknown bound id '" + thm + "'");
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numeric verification of Ostrowski-type inequalities for functions whose "
                 "derivative magnitude (or its q-th power) is m-convex: grid certification "
                 "of m-convexity, bound evaluation and sweeps, special-means checks, and "
                 "a priori midpoint-rule error bounds.",
                 "ostrowski"};
    app.require_subcommand(1);

    // ---- convexity ----------------------------------------------------------
    struct {
        std::string fn, mode = "mconvex", output;
        double b = 1.0, m = 1.0, tol = 1e-12, resolution = 0.05;
        int grid = 101, tgrid = 0;
    } cx;
    CLI::App* convexity =
        app.add_subcommand("convexity", "Grid-certify m-convexity, starshapedness, class "
                                        "membership (f(0) <= 0), or estimate the largest "
                                        "feasible m");
    convexity->add_option("--fn", cx.fn, "function spec (builtin:... or expr:...)")->required();
    convexity->add_option("--b", cx.b, "right endpoint of [0, b]")->required();
    convexity->add_option("--m", cx.m, "convexity parameter in (0, 1]")->capture_default_str();
    convexity->add_option("--mode", cx.mode, "mconvex | starshaped | km | maxm")
        ->check(CLI::IsMember({"mconvex", "starshaped", "km", "maxm"}))
        ->capture_default_str();
    convexity->add_option("--grid", cx.grid, "points per x/y axis")->capture_default_str();
    convexity->add_option("--tgrid", cx.tgrid, "points on the t axis (defaults to --grid)");
    convexity->add_option("--tol", cx.tol, "violation tolerance, scaled by (1+max|g|)")
        ->capture_default_str();
    convexity->add_option("--resolution", cx.resolution, "m lattice step for maxm")
        ->capture_default_str();
    convexity->add_option("-o,--output", cx.output, "write the report here instead of stdout");

    // ---- bound --------------------------------------------------------------
    struct {
        std::string thm, fn, output;
        double a = 0.0, b = 1.0, m = 1.0, tol = default_oracle_tolerance;
        double x = std::numeric_limits<double>::quiet_NaN();
        std::optional<double> p, q, M;
        bool certify = false;
        int certify_grid = 51;
    } bd;
    CLI::App* bound = app.add_subcommand(
        "bound", "Evaluate one bound at a single x and report lhs/rhs/slack/holds");
    {
        std::vector<std::string> ids;
        for (const auto& c : detail::bound_registry()) ids.push_back(c.id);
        bound->add_option("--thm", bd.thm,
                          "bound id: 21 (kernel, m-convex |f'|), 22 (Hoelder), 23 (power mean), "
                          "c21 (uniform |f'|<=M), c22 (midpoint pair), ostrowski, lipschitz, "
                          "midq, midconvex, midmin, trapezoid, hadamard")
            ->required()
            ->check(CLI::IsMember(ids));
    }
    bound->add_option("--fn", bd.fn, "function spec")->required();
    bound->add_option("--a", bd.a, "left endpoint")->required();
    bound->add_option("--b", bd.b, "right endpoint")->required();
    bound->add_option("--x", bd.x, "evaluation point (default: midpoint)");
    bound->add_option("--m", bd.m, "convexity parameter in (0, 1]")->capture_default_str();
    bound->add_option("--p", bd.p, "Hoelder exponent p > 1 (sets q = p/(p-1))");
    bound->add_option("--q", bd.q, "power-mean exponent q >= 1");
    bound->add_option("--M", bd.M, "uniform derivative bound");
    bound->add_option("--tol", bd.tol, "oracle tolerance for the lhs")->capture_default_str();
    bound->add_flag("--certify", bd.certify,
                    "grid-certify the bound's hypothesis first; refutation exits 1");
    bound->add_option("--certify-grid", bd.certify_grid, "certification grid points per axis")
        ->capture_default_str();
    bound->add_option("-o,--output", bd.output, "write the report here instead of stdout");

    // ---- sweep ----------------------------------------------------------------
    struct {
        std::string thm, fn, format = "csv", output;
        double a = 0.0, b = 1.0, m = 1.0, tol = default_oracle_tolerance;
        std::optional<double> p, q, M;
        int points = 101;
    } sw;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Evaluate a bound on a uniform x grid over [a,b] and aggregate slack");
    sweep->add_option("--thm", sw.thm, "bound id: 21 | 22 | 23 | c21")
        ->required()
        ->check(CLI::IsMember({"21", "22", "23", "c21"}));
    sweep->add_option("--fn", sw.fn, "function spec")->required();
    sweep->add_option("--a", sw.a, "left endpoint")->required();
    sweep->add_option("--b", sw.b, "right endpoint")->required();
    sweep->add_option("--m", sw.m, "convexity parameter in (0, 1]")->capture_default_str();
    sweep->add_option("--p", sw.p, "Hoelder exponent p > 1");
    sweep->add_option("--q", sw.q, "power-mean exponent q >= 1");
    sweep->add_option("--M", sw.M, "uniform derivative bound (c21)");
    sweep->add_option("--points", sw.points, "grid points, endpoints included")
        ->capture_default_str();
    sweep->add_option("--tol", sw.tol, "oracle tolerance")->capture_default_str();
    sweep->add_option("--format", sw.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("-o,--output", sw.output, "write the report here instead of stdout");

    // ---- means ----------------------------------------------------------------
    struct {
        std::string op, output;
        double a = 0.0, b = 1.0, m = 1.0, p = 1.0, q = 2.0;
        int n = 2;
    } mn;
    CLI::App* means_cmd = app.add_subcommand(
        "means", "Special means and the two mean-discrepancy bound checks");
    means_cmd->add_option("--op", mn.op, "a | lp | i | prop31 | prop32")
        ->required()
        ->check(CLI::IsMember({"a", "lp", "i", "prop31", "prop32"}));
    means_cmd->add_option("--a", mn.a, "first argument")->required();
    means_cmd->add_option("--b", mn.b, "second argument")->required();
    means_cmd->add_option("--p", mn.p, "exponent for lp")->capture_default_str();
    means_cmd->add_option("--n", mn.n, "power for prop31 (n >= 2)")->capture_default_str();
    means_cmd->add_option("--m", mn.m, "convexity parameter in (0, 1]")->capture_default_str();
    means_cmd->add_option("--q", mn.q, "exponent for prop32 (q > 1)")->capture_default_str();
    means_cmd->add_option("-o,--output", mn.output, "write the report here instead of stdout");

    // ---- quad -----------------------------------------------------------------
    struct {
        std::string fn, bound_id = "prop42", nodes, format = "json", output;
        double a = 0.0, b = 1.0, q = 1.0, tol = default_oracle_tolerance;
        std::optional<double> target;
        int n = 4, max_panels = 1 << 20;
    } qd;
    CLI::App* quad = app.add_subcommand(
        "quad", "Composite midpoint rule, its true error, and a priori error bounds");
    quad->add_option("--fn", qd.fn, "function spec")->required();
    quad->add_option("--a", qd.a, "left endpoint")->required();
    quad->add_option("--b", qd.b, "right endpoint")->required();
    quad->add_option("--n", qd.n, "uniform panel count")->capture_default_str();
    quad->add_option("--nodes", qd.nodes, "explicit partition nodes lo,...,hi (overrides --n)");
    quad->add_option("--q", qd.q, "exponent q >= 1 used by the bound")->capture_default_str();
    quad->add_option("--bound", qd.bound_id, "prop41 | prop42")
        ->check(CLI::IsMember({"prop41", "prop42"}))
        ->capture_default_str();
    quad->add_option("--target", qd.target,
                     "refine a uniform partition (n = 1,2,4,...) until the bound <= target");
    quad->add_option("--max-panels", qd.max_panels, "refinement panel limit")
        ->capture_default_str();
    quad->add_option("--tol", qd.tol, "oracle tolerance for the true error")
        ->capture_default_str();
    quad->add_option("--format", qd.format, "json | csv (csv = per-panel breakdown)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    quad->add_option("-o,--output", qd.output, "write the report here instead of stdout");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (convexity->parsed()) {
            const convexity_grid grid{cx.grid, cx.tgrid > 0 ? cx.tgrid : cx.grid, cx.tol};
            const function_1d f = parse_function_spec(cx.fn);
            if (cx.mode == "maxm") {
                const double best = max_m(f, cx.b, grid, cx.resolution);
                jsonw::object o;
                o.field("maxM", best).field("b", cx.b).field("resolution", cx.resolution);
                detail::emit(o.str(), cx.output, out);
                return 0;
            }
            if (cx.mode == "km") {
                const membership_report rep = in_km(f, cx.b, cx.m, grid);
                jsonw::object o;
                o.field("member", rep.member)
                    .field("valueAtZero", rep.value_at_zero)
                    .raw("convexity", to_json(rep.convexity));
                detail::emit(o.str(), cx.output, out);
                return rep.member ? 0 : 1;
            }
            const convexity_report rep = cx.mode == "starshaped"
                                             ? check_starshaped(f, cx.b, grid)
                                             : check_m_convex(f, cx.b, cx.m, grid);
            detail::emit(to_json(rep), cx.output, out);
            return rep.certified() ? 0 : 1;
        }

        if (bound->parsed()) {
            const function_1d f = parse_function_spec(bd.fn);
            const interval iv(bd.a, bd.b);
            const double x = std::isnan(bd.x) ? iv.midpoint() : bd.x;
            const bound_params prm = detail::make_params(iv, x, bd.m, bd.p, bd.q, bd.M);
            for (const auto& c : detail::bound_registry()) {
                if (c.id != bd.thm) continue;
                if (c.needs_p) prm.require_p();
                if (c.needs_q) prm.require_q();
                if (c.needs_M) prm.require_M();
            }
            bool certified = true;
            if (bd.certify) certified = detail::certify_for(bd.thm, f, prm, bd.certify_grid);
            const bound_result r = detail::evaluate_bound(bd.thm, f, prm, bd.tol);
            jsonw::object o;
            o.field("thm", bd.thm).field("x", x);
            if (bd.certify) o.field("hypothesisCertified", certified);
            o.field("lhs", r.lhs)
                .field("rhs", r.rhs)
                .field("slack", r.slack)
                .field("branch", to_string(r.branch))
                .field("holds", r.holds);
            if (!r.details.empty()) o.raw("details", details_json(r.details));
            detail::emit(o.str(), bd.output, out);
            return (r.holds && certified) ? 0 : 1;
        }

        if (sweep->parsed()) {
            const function_1d f = parse_function_spec(sw.fn);
            const interval iv(sw.a, sw.b);
            theorem_id id = theorem_id::thm21;
            if (sw.thm == "22") id = theorem_id::thm22;
            else if (sw.thm == "23") id = theorem_id::thm23;
            else if (sw.thm == "c21") id = theorem_id::corollary21;
            const slack_report rep =
                verify_sweep(f, iv, sw.m, id, sw.p, sw.q, sw.M, sw.points, sw.tol);
            detail::emit(sw.format == "csv" ? to_csv(rep) : to_json(rep), sw.output, out);
            if (rep.violations > 0) return 1;
            return rep.failures > 0 ? 2 : 0;
        }

        if (means_cmd->parsed()) {
            if (mn.op == "a" || mn.op == "lp" || mn.op == "i") {
                double v = 0.0;
                if (mn.op == "a") v = arithmetic_mean(mn.a, mn.b);
                else if (mn.op == "lp") v = p_logarithmic_mean(mn.a, mn.b, mn.p);
                else v = identric_mean(mn.a, mn.b);
                jsonw::object o;
                o.field("value", v);
                detail::emit(o.str(), mn.output, out);
                return 0;
            }
            const mean_check_result r = mn.op == "prop31"
                                            ? prop31_check(mn.a, mn.b, mn.n, mn.m)
                                            : prop32_check(mn.a, mn.b, mn.m, mn.q);
            detail::emit(to_json(r), mn.output, out);
            return r.holds ? 0 : 1;
        }

        if (quad->parsed()) {
            const function_1d f = parse_function_spec(qd.fn);
            const interval iv(qd.a, qd.b);
            const apriori_bound which =
                qd.bound_id == "prop41" ? apriori_bound::prop41 : apriori_bound::prop42;
            if (qd.target) {
                const refine_result res =
                    refine_to_bound(f, iv, qd.q, *qd.target, which, qd.max_panels, qd.tol);
                detail::emit(qd.format == "csv" ? panel_csv(f, res.part, qd.q, which)
                                                : to_json(res.report),
                             qd.output, out);
                return res.report.holds ? 0 : 1;
            }
            partition d = [&] {
                if (qd.nodes.empty()) return partition::uniform(iv, qd.n);
                std::vector<double> nodes;
                std::size_t at = 0;
                while (at <= qd.nodes.size()) {
                    const std::size_t comma = qd.nodes.find(',', at);
                    nodes.push_back(std::stod(qd.nodes.substr(
                        at, comma == std::string::npos ? std::string::npos : comma - at)));
                    if (comma == std::string::npos) break;
                    at = comma + 1;
                }
                return partition(std::move(nodes));
            }();
            const double bound_value = evaluate_apriori_bound(f, d, qd.q, which);
            const quadrature_report rep = make_quadrature_report(f, d, bound_value, qd.tol);
            detail::emit(qd.format == "csv" ? panel_csv(f, d, qd.q, which) : to_json(rep),
                         qd.output, out);
            return rep.holds ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace ostrowski::cli
