#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace poinckit {

enum class PotentialFamily {
    gaussian,     // V = x^2 / (2 sigma^2)
    exp_power,    // V = |x|^p, p >= 1
    double_well,  // V = h (x^2 - a^2)^2
    heavy_tail,   // V = ((1+alpha)/2) log(1+x^2)
    uniform,      // V = 0 on [-r, r]
    custom_table, // piecewise-linear V through user knots
};

const char* family_name(PotentialFamily f);

// A potential V with its evaluation domain. Families are closed under the
// optional reparametrizations x -> x - shift and x -> scale * x, applied as
// V_eff(x) = V_family(scale * (x - shift)).
struct PotentialSpec {
    PotentialFamily family = PotentialFamily::gaussian;
    std::map<std::string, double> params;
    double x_lo = 0.0;
    double x_hi = 0.0;

    // custom_table knots (strictly increasing x, finite V)
    std::vector<double> table_x;
    std::vector<double> table_v;

    double param(const std::string& key, double fallback) const;

    double V(double x) const;
    double Vp(double x) const;  // weak derivative; kinks get the sign convention, 0 at the kink
    double Vpp(double x) const; // second derivative (difference quotient for tables)

    bool compact_support() const { return family == PotentialFamily::uniform; }
};

// Builds a spec with the default truncation applied: the domain is cut where
// V - min V reaches `level` (default 40), capped at half-width `max_halfwidth`
// around the minimizer. Families with compact support keep their exact domain.
PotentialSpec make_spec(PotentialFamily family,
                        const std::map<std::string, double>& params,
                        double level = 40.0,
                        double max_halfwidth = 50.0);

// Parses the spec grammar family:key=value,key=value, e.g. "gaussian:sigma=1",
// "exp_power:p=1.5", "double_well:a=1,h=1", "heavy_tail:alpha=3", "uniform:r=1".
// Optional keys x_lo/x_hi override the default truncation.
PotentialSpec parse_potential(const std::string& text);

} // namespace poinckit
