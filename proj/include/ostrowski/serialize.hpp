#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "ostrowski/bounds.hpp"
#include "ostrowski/mconvex.hpp"
#include "ostrowski/means.hpp"
#include "ostrowski/quadrature.hpp"

// Machine-readable report emission. Every numeric field is rendered with 15
// significant digits through the same formatter, so identical inputs produce
// byte-identical output and re-parsing is stable.

namespace ostrowski {

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace jsonw {

inline std::string quote(std::string_view s) {
    std::string out = "\"";
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

/// Insertion-ordered flat JSON object writer.
class object {
public:
    object& field(std::string_view key, double v) { return raw(key, format_number(v)); }
    object& field(std::string_view key, long v) { return raw(key, std::to_string(v)); }
    object& field(std::string_view key, int v) { return raw(key, std::to_string(v)); }
    object& field(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }
    object& field(std::string_view key, std::string_view v) { return raw(key, quote(v)); }
    object& field(std::string_view key, const char* v) { return raw(key, quote(v)); }
    object& raw(std::string_view key, std::string_view rendered) {
        if (!body_.empty()) body_ += ',';
        body_ += quote(key);
        body_ += ':';
        body_ += rendered;
        return *this;
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    std::string body_;
};

} // namespace jsonw

inline std::string to_json(const convexity_report& rep) {
    jsonw::object o;
    o.field("status", rep.certified() ? "certifiedOnGrid" : "violated");
    o.field("m", rep.m);
    if (rep.witness) {
        jsonw::object w;
        w.field("x", rep.witness->x)
            .field("y", rep.witness->y)
            .field("t", rep.witness->t)
            .field("lhs", rep.witness->lhs)
            .field("rhs", rep.witness->rhs)
            .field("gap", rep.witness->gap);
        o.raw("witness", w.str());
    }
    o.field("samples", rep.samples_checked);
    return o.str();
}

inline std::string details_json(const std::vector<std::pair<std::string, double>>& details) {
    jsonw::object d;
    for (const auto& [key, value] : details) d.field(key, value);
    return d.str();
}

inline std::string to_json(const bound_result& r) {
    jsonw::object o;
    o.field("lhs", r.lhs)
        .field("rhs", r.rhs)
        .field("slack", r.slack)
        .field("branch", to_string(r.branch))
        .field("holds", r.holds);
    if (!r.details.empty()) o.raw("details", details_json(r.details));
    return o.str();
}

inline std::string to_json(const mean_check_result& r) {
    jsonw::object o;
    o.field("lhs", r.lhs).field("rhs", r.rhs).field("holds", r.holds);
    for (const auto& [key, value] : r.components) o.field(key, value);
    return o.str();
}

inline std::string to_json(const quadrature_report& r) {
    jsonw::object o;
    o.field("n", r.panels)
        .field("approximation", r.approximation)
        .field("trueError", r.true_error)
        .field("bound", r.bound)
        .field("holds", r.holds)
        .field("tightness", r.tightness);
    return o.str();
}

/// Aggregate half of the sweep report. minSlack and argminX are null when
/// no point evaluated successfully.
inline std::string aggregate_json(const slack_report& rep) {
    jsonw::object o;
    o.field("violations", rep.violations).field("failures", rep.failures);
    if (std::isfinite(rep.min_slack)) o.field("minSlack", rep.min_slack);
    else o.raw("minSlack", "null");
    if (std::isfinite(rep.argmin_x)) o.field("argminX", rep.argmin_x);
    else o.raw("argminX", "null");
    return o.str();
}

inline std::string to_json(const slack_report& rep) {
    std::string points = "[";
    bool first = true;
    for (const auto& pt : rep.points) {
        if (!first) points += ',';
        first = false;
        jsonw::object o;
        o.field("x", pt.x);
        if (pt.ok) {
            o.field("lhs", pt.result.lhs)
                .field("rhs", pt.result.rhs)
                .field("slack", pt.result.slack)
                .field("branch", to_string(pt.result.branch))
                .field("holds", pt.result.holds);
        } else {
            o.field("error", pt.error);
        }
        points += o.str();
    }
    points += ']';
    jsonw::object o;
    o.raw("points", points).raw("aggregate", aggregate_json(rep));
    return o.str();
}

/// CSV rows x, lhs, rhs, slack, branch, holds; failed points carry the error
/// text in the branch column with empty numeric fields.
inline std::string to_csv(const slack_report& rep) {
    std::string out = "x,lhs,rhs,slack,branch,holds\n";
    for (const auto& pt : rep.points) {
        out += format_number(pt.x);
        if (pt.ok) {
            out += ',';
            out += format_number(pt.result.lhs);
            out += ',';
            out += format_number(pt.result.rhs);
            out += ',';
            out += format_number(pt.result.slack);
            out += ',';
            out += to_string(pt.result.branch);
            out += ',';
            out += pt.result.holds ? "true" : "false";
        } else {
            std::string msg = pt.error;
            for (char& c : msg)
                if (c == ',' || c == '\n') c = ';';
            out += ",,,," + msg + ",false";
        }
        out += '\n';
    }
    return out;
}

/// Per-panel breakdown of an a priori bound: columns i, xi, xi1, panelBound.
inline std::string panel_csv(const function_1d& f, const partition& d, double q,
                             apriori_bound which) {
    std::string out = "i,xi,xi1,panelBound\n";
    const auto& x = d.nodes();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double panel = which == apriori_bound::prop41
                                 ? prop41_panel_bound(f, x[i], x[i + 1], q)
                                 : prop42_panel_bound(f, x[i], x[i + 1], q);
        out += std::to_string(i);
        out += ',';
        out += format_number(x[i]);
        out += ',';
        out += format_number(x[i + 1]);
        out += ',';
        out += format_number(panel);
        out += '\n';
    }
    return out;
}

} // namespace ostrowski
