#pragma once

#include <string>
#include <vector>

#include "poinckit/potential.hpp"

namespace poinckit {

// Certificate that V grows at least linearly, with slope c/R, beyond the
// beta level set around the minimizer.
struct SuperlinearCertificate {
    double beta = 0.0;
    double R_minus = 0.0;
    double R_plus = 0.0;
    double R = 0.0; // max(R_minus, R_plus)
    double c = 0.0;
    double h = 0.0;
    bool valid = false;
    bool compact = false; // no tail beyond the level set (e.g. uniform family)
    std::string reason;   // set when !valid
};

// A Gibbs measure Z^{-1} e^{-V} dx sampled by the midpoint rule on a uniform
// grid: x[i] = x_lo + (i + 1/2) dx are cell midpoints and w[i] the normalized
// cell masses. Immutable after construction; all cached moments use the same
// weights.
struct Measure1D {
    PotentialSpec spec;
    int n = 0;
    double dx = 0.0;
    std::vector<double> x;
    std::vector<double> w;      // normalized, sums to 1
    std::vector<double> vtilde; // V - Vmin on the grid
    double v_min = 0.0;         // min of V over the grid
    double Z = 0.0;             // integral of e^{-V} over the domain
    double z_tilde = 0.0;       // integral of e^{-(V - Vmin)}
    double mean = 0.0;
    double variance = 0.0;
    double median = 0.0;
    double mean_abs_dev = 0.0; // E |x - mean|
    double a_min = 0.0;        // leftmost grid argmin of V
    int a_min_index = 0;

    double lo() const { return spec.x_lo; }
    double hi() const { return spec.x_hi; }
    // normalized density at x (piecewise-constant on cells)
    double density(double xq) const;
    // index of the grid cell containing x (clamped)
    int cell_index(double xq) const;
};

Measure1D build_measure(const PotentialSpec& spec, int n_points);

// Continuous CDF of the piecewise-constant density; clamps to 0/1 outside the
// domain rather than throwing.
double cdf(const Measure1D& m, double x);

// Inverse of cdf, for stationary sampling. u in [0,1].
double quantile(const Measure1D& m, double u);

struct LevelRadii {
    double R_minus = 0.0;
    double R_plus = 0.0;
    bool capped_minus = false; // level set ran into the domain boundary
    bool capped_plus = false;
};

// Largest grid radii around the argmin with V - V(a) <= beta on the whole
// segment. Radii are capped at the domain boundary with the cap flag set.
LevelRadii level_radii(const Measure1D& m, double beta);

SuperlinearCertificate superlinear_certificate(const Measure1D& m, double beta);

// The flattened measure: density proportional to e^{-beta} on the level set
// N_beta and to e^{-(V - V(a))} outside, renormalized on the same grid.
Measure1D modified_measure(const Measure1D& m, double beta);

} // namespace poinckit
