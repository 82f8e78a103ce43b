#include "poinckit/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "poinckit/errors.hpp"

namespace poinckit {

const char* family_name(PotentialFamily f) {
    switch (f) {
        case PotentialFamily::gaussian: return "gaussian";
        case PotentialFamily::exp_power: return "exp_power";
        case PotentialFamily::double_well: return "double_well";
        case PotentialFamily::heavy_tail: return "heavy_tail";
        case PotentialFamily::uniform: return "uniform";
        case PotentialFamily::custom_table: return "custom_table";
    }
    return "?";
}

double PotentialSpec::param(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

namespace {

double table_value(const std::vector<double>& xs, const std::vector<double>& vs, double x) {
    if (xs.size() < 2) throw invalid_argument("custom_table needs at least 2 knots");
    if (x <= xs.front()) {
        double s = (vs[1] - vs[0]) / (xs[1] - xs[0]);
        return vs[0] + s * (x - xs[0]);
    }
    if (x >= xs.back()) {
        size_t n = xs.size();
        double s = (vs[n - 1] - vs[n - 2]) / (xs[n - 1] - xs[n - 2]);
        return vs[n - 1] + s * (x - xs[n - 1]);
    }
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    size_t i = static_cast<size_t>(it - xs.begin());
    double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return vs[i - 1] + t * (vs[i] - vs[i - 1]);
}

} // namespace

double PotentialSpec::V(double x) const {
    // flattened region (used by the modified measure): V clamped to a constant
    if (auto it = params.find("flat_level"); it != params.end()) {
        if (x >= param("flat_lo", 0.0) && x <= param("flat_hi", 0.0)) return it->second;
    }
    double u = param("scale", 1.0) * (x - param("shift", 0.0));
    switch (family) {
        case PotentialFamily::gaussian: {
            double s = param("sigma", 1.0);
            return u * u / (2.0 * s * s);
        }
        case PotentialFamily::exp_power: {
            double p = param("p", 2.0);
            return std::pow(std::fabs(u), p);
        }
        case PotentialFamily::double_well: {
            double a = param("a", 1.0), h = param("h", 1.0);
            double t = u * u - a * a;
            return h * t * t;
        }
        case PotentialFamily::heavy_tail: {
            double alpha = param("alpha", 3.0);
            return 0.5 * (1.0 + alpha) * std::log1p(u * u);
        }
        case PotentialFamily::uniform:
            return 0.0;
        case PotentialFamily::custom_table:
            return table_value(table_x, table_v, u);
    }
    return 0.0;
}

double PotentialSpec::Vp(double x) const {
    if (params.count("flat_level") && x >= param("flat_lo", 0.0) && x <= param("flat_hi", 0.0))
        return 0.0;
    double c = param("scale", 1.0);
    double u = c * (x - param("shift", 0.0));
    double g = 0.0;
    switch (family) {
        case PotentialFamily::gaussian: {
            double s = param("sigma", 1.0);
            g = u / (s * s);
            break;
        }
        case PotentialFamily::exp_power: {
            double p = param("p", 2.0);
            g = (u == 0.0) ? 0.0 : p * std::copysign(std::pow(std::fabs(u), p - 1.0), u);
            break;
        }
        case PotentialFamily::double_well: {
            double a = param("a", 1.0), h = param("h", 1.0);
            g = 4.0 * h * u * (u * u - a * a);
            break;
        }
        case PotentialFamily::heavy_tail: {
            double alpha = param("alpha", 3.0);
            g = (1.0 + alpha) * u / (1.0 + u * u);
            break;
        }
        case PotentialFamily::uniform:
            g = 0.0;
            break;
        case PotentialFamily::custom_table: {
            double dd = table_x.size() >= 2 ? (table_x[1] - table_x[0]) * 0.5 : 1e-6;
            g = (table_value(table_x, table_v, u + dd) - table_value(table_x, table_v, u - dd)) / (2 * dd);
            break;
        }
    }
    return c * g;
}

double PotentialSpec::Vpp(double x) const {
    if (params.count("flat_level") && x >= param("flat_lo", 0.0) && x <= param("flat_hi", 0.0))
        return 0.0;
    double c = param("scale", 1.0);
    double u = c * (x - param("shift", 0.0));
    double g = 0.0;
    switch (family) {
        case PotentialFamily::gaussian: {
            double s = param("sigma", 1.0);
            g = 1.0 / (s * s);
            break;
        }
        case PotentialFamily::exp_power: {
            double p = param("p", 2.0);
            g = (u == 0.0) ? 0.0 : p * (p - 1.0) * std::pow(std::fabs(u), p - 2.0);
            break;
        }
        case PotentialFamily::double_well: {
            double a = param("a", 1.0), h = param("h", 1.0);
            g = 4.0 * h * (3.0 * u * u - a * a);
            break;
        }
        case PotentialFamily::heavy_tail: {
            double alpha = param("alpha", 3.0);
            double d = 1.0 + u * u;
            g = (1.0 + alpha) * (1.0 - u * u) / (d * d);
            break;
        }
        case PotentialFamily::uniform:
            g = 0.0;
            break;
        case PotentialFamily::custom_table: {
            double dd = table_x.size() >= 2 ? (table_x[1] - table_x[0]) : 1e-4;
            g = (table_value(table_x, table_v, u + dd) - 2 * table_value(table_x, table_v, u) +
                 table_value(table_x, table_v, u - dd)) / (dd * dd);
            break;
        }
    }
    return c * c * g;
}

namespace {

// Smallest t > 0 with V(center + t) - Vmin >= level, by doubling + bisection.
double cut_radius(const PotentialSpec& s, double center, double vmin, double level,
                  double max_halfwidth, int dir) {
    double lo = 0.0, hi = 1.0 / 64.0;
    while (s.V(center + dir * hi) - vmin < level) {
        hi *= 2.0;
        if (hi >= max_halfwidth) return max_halfwidth;
    }
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        (s.V(center + dir * mid) - vmin < level ? lo : hi) = mid;
    }
    return hi;
}

} // namespace

PotentialSpec make_spec(PotentialFamily family, const std::map<std::string, double>& params,
                        double level, double max_halfwidth) {
    PotentialSpec s;
    s.family = family;
    s.params = params;
    if (family == PotentialFamily::uniform) {
        double r = s.param("r", 1.0);
        double shift = s.param("shift", 0.0);
        if (r <= 0) throw invalid_argument("uniform: r must be positive");
        s.x_lo = shift - r;
        s.x_hi = shift + r;
        return s;
    }
    // Heavy tails cannot reach the full level cut on a uniform grid of a few
    // thousand points; cap by a tighter level so the density peak stays resolved.
    if (family == PotentialFamily::heavy_tail) level = std::min(level, 14.0);
    double center = s.param("shift", 0.0);
    double vmin = s.V(center);
    // crude argmin scan for asymmetric tables
    if (family == PotentialFamily::custom_table) {
        for (double t = -max_halfwidth; t <= max_halfwidth; t += max_halfwidth / 512) {
            if (s.V(t) < vmin) { vmin = s.V(t); center = t; }
        }
    }
    double rplus = cut_radius(s, center, vmin, level, max_halfwidth, +1);
    double rminus = cut_radius(s, center, vmin, level, max_halfwidth, -1);
    auto it_lo = params.find("x_lo");
    auto it_hi = params.find("x_hi");
    s.x_lo = it_lo != params.end() ? it_lo->second : center - rminus;
    s.x_hi = it_hi != params.end() ? it_hi->second : center + rplus;
    if (!(s.x_lo < s.x_hi)) throw invalid_argument("potential domain is empty");
    return s;
}

PotentialSpec parse_potential(const std::string& text) {
    auto colon = text.find(':');
    std::string fam = text.substr(0, colon);
    PotentialFamily family;
    if (fam == "gaussian") family = PotentialFamily::gaussian;
    else if (fam == "exp_power") family = PotentialFamily::exp_power;
    else if (fam == "double_well") family = PotentialFamily::double_well;
    else if (fam == "heavy_tail") family = PotentialFamily::heavy_tail;
    else if (fam == "uniform") family = PotentialFamily::uniform;
    else throw invalid_argument("unknown potential family '" + fam + "'");

    std::map<std::string, double> params;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string kv;
        while (std::getline(ss, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw invalid_argument("bad key=value pair '" + kv + "' in potential spec");
            std::string key = kv.substr(0, eq);
            try {
                params[key] = std::stod(kv.substr(eq + 1));
            } catch (const std::exception&) {
                throw invalid_argument("bad numeric value in '" + kv + "'");
            }
        }
    }
    return make_spec(family, params);
}

} // namespace poinckit
