#pragma once

#include <optional>
#include <vector>

#include "poinckit/measure.hpp"
#include "poinckit/tridiag.hpp"

namespace poinckit {

// Discretization of the energy f -> integral of (f')^2 dmu as f.A.f with
// A tridiagonal (off-diagonal -w_mid/dx^2) and diagonal mass M = diag(w).
// Reflecting at the domain ends, so constants span ker A when no Dirichlet
// nodes are set.
struct DirichletForm {
    Measure1D measure;
    std::vector<double> off; // midpoint weights, off[i] couples cells i, i+1
    std::vector<int> dirichlet; // pinned cell indices (f = 0 there)

    int n() const { return measure.n; }
    double dx() const { return measure.dx; }
    // stiffness application y = A f
    void apply_stiffness(const std::vector<double>& f, std::vector<double>& y) const;
    double energy(const std::vector<double>& f) const;
};

DirichletForm assemble_form(const Measure1D& m);

struct SpectralResult {
    double lambda1 = 0.0;
    double C_P = 0.0;
    std::vector<double> eigvec;
    double residual = 0.0;
};

// Smallest nonzero eigenvalue of A f = lambda M f and C_P = 1/lambda.
SpectralResult poincare_constant(const DirichletForm& form);

// Poincare constant of the measure restricted to [a, b] (Neumann ends,
// mean-zero with respect to the restricted weights).
SpectralResult restricted_poincare(const DirichletForm& form, double a, double b);

// Smallest generalized eigenvalue with f pinned to 0 at the given grid cells.
double dirichlet_eigenvalue(const DirichletForm& form, const std::vector<int>& nodes);

// sup over f with f(b) = 0 of int (f - f(b))^2 dmu / int (f')^2 dmu.
double hardy_constant(const DirichletForm& form, double b);

// Two-sided Muckenhoupt constant about the median.
double muckenhoupt_constant(const Measure1D& m);

// Exact 1D constant for the L1 inequality about the median:
// sup over grid of min(F, 1-F) / density.
double cheeger_constant(const Measure1D& m);

// Var(P_t f) for each t, via the full spectral decomposition. Forms with more
// than 2048 cells are internally downsampled to 1024 cells.
std::vector<double> semigroup_variance(const DirichletForm& form, const std::vector<double>& f,
                                       const std::vector<double>& times);

// sup of int f^2 dmu / int (f')^2 dmu over f with zero mu-mean on [lo, hi]
// (rank-one constrained eigenproblem via the spectral secular equation).
double constrained_poincare_sup(const DirichletForm& form, double lo, double hi);

} // namespace poinckit
