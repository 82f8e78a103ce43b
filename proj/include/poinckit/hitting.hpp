#pragma once

#include <optional>
#include <vector>

#include "poinckit/dirichlet_form.hpp"
#include "poinckit/measure.hpp"

namespace poinckit {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// A hitting-moment field on the grid. For exponential moments the field is
// E_x[e^{theta T_U}] (1 on U and its boundary cells); for polynomial moments
// it is E_x[T_U^q] (0 on the closure of U for q >= 1).
struct HittingSolution {
    Interval U;
    int left_boundary = 0;  // boundary cell indices after snapping to the grid
    int right_boundary = 0;
    double theta = 0.0;
    int q = 0;
    std::vector<double> field;
    bool blow_up = false;
    double truncation_shift = 0.0; // last relative change at the probe points
    int doublings = 0;
    double integral_against_mu = 0.0; // +inf when blow_up
};

// Solves W'' - V' W' + theta W = 0 on each component of the complement of U
// with W = 1 on the boundary and a reflecting far end. The far end starts at
// the measure's domain and is doubled until the probe points (distance 1 and 2
// from U) move by less than 1e-4 relative. Blow-up is flagged on negative or
// huge solutions or when the probe shift grows between doublings.
HittingSolution exp_moment_field(const Measure1D& m, Interval U, double theta);

// Supremum of theta with a finite exponential moment for the reflected
// diffusion on the measure's domain, by bisection on the solver's blow-up
// flag to relative width 1e-3.
double critical_rate(const Measure1D& m, Interval U);

// v_0 = 1 and the nested solutions of L v_q = -q v_{q-1} with v_q = 0 on the
// boundary, solved in conservative flux form (cancellation-free cumulative
// sums). The whole ladder shares the doubling protocol; orders whose probe
// shift stops decreasing are flagged blow_up.
std::vector<HittingSolution> poly_moment_fields(const Measure1D& m, Interval U, int q_max);

// Discrete generator applied to a hitting field at an interior grid cell
// (three-point stencil, same discretization as the solver).
double apply_generator(const Measure1D& m, const std::vector<double>& field, int i);

// Checks L W <= -lambda W outside U (relative tolerance 1e-6) and assembles
// 4/lambda + (4 |chi'|^2_inf / lambda + 2) C_P(U_r) with the cubic smoothstep
// bump chi falling from 1 to 0 across [dU, dU_r].
double lyapunov_poincare_bound(const DirichletForm& form, const HittingSolution& W,
                               double lambda, double r);

// (1/lambda)(1 + b C_P(U)) with b from a C^2 quintic extension of W into U.
double bbcg_bound(const DirichletForm& form, const HittingSolution& W, double lambda);

// 1/lambda + C_P(U); requires the outward-derivative sign condition on dU
// (W falls toward U from outside). Empty when the condition fails.
std::optional<double> stokes_bound(const DirichletForm& form, const HittingSolution& W,
                                   double lambda);

struct LocalMeanBound {
    double formula = 0.0;   // the assembled right-hand side
    double checker = 0.0;   // discrete sup of int f^2 dmu / int (f')^2 dmu
    double oscillation = 0.0;
    double ball_mass = 0.0;
};

// Poincare-type bound with the mean replaced by the mean over B(a, 2r);
// kappa = 4/pi^2 (sharp 1D Lebesgue constant), n = 1. The checker solves the
// constrained eigenproblem on a grid of at most 2049 cells.
LocalMeanBound local_mean_poincare_bound(const Measure1D& m, double a, double r, double C_P);

struct UltraTail {
    bool convergent = false;
    double value = 0.0;  // last integral value
    double growth = 1.0; // ratio across the last doubling
    int doublings = 0;
};

struct UltraResult {
    UltraTail right;
    UltraTail left;
    bool convergent = false;
};

// Double-integral ultracontractivity test on both tails, computed through the
// equivalent ODE phi' = 1 - V' phi (phi = e^{-V} int e^V), integrated
// implicitly so e^V never overflows; the outer integral is doubled in range
// until it settles (< 1e-6 relative) or grows steadily (>= 1+1e-3 per
// doubling).
UltraResult ultracontractive_test(const Measure1D& m, double a);

struct WeakPoincareBeta {
    double beta_s = 0.0;   // beta(s)
    double threshold = 0.0; // the s-quantile u(s) of the ratio field
    double constant = 0.0;  // the assembled weighted-Poincare constant C
};

// beta(s) = C / u(s) where u(s) is the s-quantile of the mu-distribution of
// v_{q-1}/v_q (ratio 1 where v_q = 0) and C is assembled exactly as in
// lyapunov_poincare_bound with bands at distance 1 and 2 from U.
WeakPoincareBeta weak_poincare_beta(const Measure1D& m, Interval U, int q, double s);

// sup over the grid of V'' - (V')^2 / 2.
double drift_curvature_bound(const Measure1D& m);

// e^{theta s0} (1 + e^{V(x)/2} theta / (theta_U - theta)) with
// s0 = e^{2 C_m} / (2 pi) and V normalized so that e^{-V} integrates to 1.
// theta_U = mu_U / (8 C_P (1 - mu_U)) for mu_U <= 1/2, else mu_U^2 / (2 C_P).
double exp_moment_upper(const Measure1D& m, double x, double theta, double C_P, double mu_U);

// The guaranteed-rate threshold theta(U) used by exp_moment_upper.
double theta_guaranteed(double C_P, double mu_U);

} // namespace poinckit
