#include "poinckit/dirichlet_form.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "poinckit/errors.hpp"

namespace poinckit {

void DirichletForm::apply_stiffness(const std::vector<double>& f, std::vector<double>& y) const {
    const int N = n();
    const double inv2 = 1.0 / (dx() * dx());
    y.assign(N, 0.0);
    for (int i = 0; i + 1 < N; ++i) {
        double flux = off[i] * (f[i + 1] - f[i]) * inv2;
        y[i] -= flux;
        y[i + 1] += flux;
    }
}

double DirichletForm::energy(const std::vector<double>& f) const {
    const int N = n();
    const double inv2 = 1.0 / (dx() * dx());
    double s = 0.0;
    for (int i = 0; i + 1 < N; ++i) {
        double d = f[i + 1] - f[i];
        s += off[i] * d * d * inv2;
    }
    return s;
}

DirichletForm assemble_form(const Measure1D& m) {
    DirichletForm form;
    form.measure = m;
    form.off.resize(m.n - 1);
    for (int i = 0; i + 1 < m.n; ++i) {
        double mid = 0.5 * (m.x[i] + m.x[i + 1]);
        form.off[i] = std::exp(-(m.spec.V(mid) - m.v_min)) * m.dx / m.z_tilde;
    }
    return form;
}

namespace {

// B = M^{-1/2} A M^{-1/2} restricted to the cell range [i0, i1] (inclusive),
// with Neumann ends unless a flag keeps couplings to pinned nodes outside.
SymTridiag reduced_pencil(const DirichletForm& form, int i0, int i1,
                          bool keep_left_coupling, bool keep_right_coupling) {
    const auto& m = form.measure;
    const double inv2 = 1.0 / (m.dx * m.dx);
    SymTridiag t;
    int len = i1 - i0 + 1;
    t.d.assign(len, 0.0);
    t.e.assign(len > 0 ? len - 1 : 0, 0.0);
    for (int i = i0; i <= i1; ++i) {
        double diag = 0.0;
        if (i > i0 || keep_left_coupling) diag += (i > 0 ? form.off[i - 1] : 0.0);
        if (i < i1 || keep_right_coupling) diag += (i < m.n - 1 ? form.off[i] : 0.0);
        t.d[i - i0] = diag * inv2 / m.w[i];
    }
    for (int i = i0; i < i1; ++i)
        t.e[i - i0] = -form.off[i] * inv2 / std::sqrt(m.w[i] * m.w[i + 1]);
    return t;
}

double spectral_residual(const DirichletForm& form, const std::vector<double>& f, double lambda) {
    std::vector<double> af;
    form.apply_stiffness(f, af);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < form.n(); ++i) {
        double r = af[i] - lambda * form.measure.w[i] * f[i];
        num += r * r;
        den += form.measure.w[i] * f[i] * form.measure.w[i] * f[i];
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

} // namespace

SpectralResult poincare_constant(const DirichletForm& form) {
    if (!form.dirichlet.empty())
        throw invalid_argument("poincare_constant: form must have no Dirichlet nodes");
    const auto& m = form.measure;
    SymTridiag t = reduced_pencil(form, 0, m.n - 1, false, false);
    double lambda = eigenvalue_bisect(t, 1);
    std::vector<double> v = inverse_iteration(t, lambda);
    SpectralResult res;
    res.eigvec.resize(m.n);
    for (int i = 0; i < m.n; ++i) res.eigvec[i] = v[i] / std::sqrt(m.w[i]);
    // project out the constant component (exact kernel direction)
    double mean = 0.0;
    for (int i = 0; i < m.n; ++i) mean += m.w[i] * res.eigvec[i];
    for (int i = 0; i < m.n; ++i) res.eigvec[i] -= mean;
    double norm = 0.0;
    for (int i = 0; i < m.n; ++i) norm += m.w[i] * res.eigvec[i] * res.eigvec[i];
    norm = std::sqrt(norm);
    for (int i = 0; i < m.n; ++i) res.eigvec[i] /= norm;
    res.lambda1 = form.energy(res.eigvec);
    res.C_P = 1.0 / res.lambda1;
    res.residual = spectral_residual(form, res.eigvec, res.lambda1);
    if (res.residual > 1e-8)
        throw computation_error("poincare_constant: eigen residual " + std::to_string(res.residual));
    return res;
}

SpectralResult restricted_poincare(const DirichletForm& form, double a, double b) {
    const auto& m = form.measure;
    a = std::max(a, m.lo());
    b = std::min(b, m.hi());
    int i0 = m.cell_index(a), i1 = m.cell_index(b);
    if (m.x[i0] < a) ++i0; // keep only midpoints inside [a, b]
    if (m.x[i1] > b) --i1;
    if (i1 - i0 + 1 < 8) throw invalid_argument("restricted_poincare: fewer than 8 grid points");

    SymTridiag t = reduced_pencil(form, i0, i1, false, false);
    double lambda = eigenvalue_bisect(t, 1);
    std::vector<double> v = inverse_iteration(t, lambda);

    SpectralResult res;
    res.eigvec.assign(m.n, 0.0);
    double wsum = 0.0, mean = 0.0;
    for (int i = i0; i <= i1; ++i) wsum += m.w[i];
    for (int i = i0; i <= i1; ++i) res.eigvec[i] = v[i - i0] / std::sqrt(m.w[i]);
    for (int i = i0; i <= i1; ++i) mean += m.w[i] * res.eigvec[i] / wsum;
    double num = 0.0, den = 0.0;
    const double inv2 = 1.0 / (m.dx * m.dx);
    for (int i = i0; i <= i1; ++i) {
        double g = res.eigvec[i] - mean;
        num += m.w[i] * g * g;
        if (i < i1) {
            double d = res.eigvec[i + 1] - res.eigvec[i];
            den += form.off[i] * d * d * inv2;
        }
    }
    res.lambda1 = den / num;
    res.C_P = 1.0 / res.lambda1;
    res.residual = 0.0;
    // cross-check against the bisection value
    if (std::fabs(res.lambda1 - lambda) > 1e-6 * std::max(1.0, std::fabs(lambda)))
        res.lambda1 = lambda, res.C_P = 1.0 / lambda;
    return res;
}

double dirichlet_eigenvalue(const DirichletForm& form, const std::vector<int>& nodes) {
    const auto& m = form.measure;
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    double best = 1e300;
    int start = 0;
    auto consider = [&](int i0, int i1, bool dl, bool dr) {
        if (i1 < i0) return;
        SymTridiag t = reduced_pencil(form, i0, i1, dl, dr);
        best = std::min(best, eigenvalue_bisect(t, 0));
    };
    for (int node : sorted) {
        consider(start, node - 1, start > 0, true);
        start = node + 1;
    }
    consider(start, m.n - 1, start > 0, false);
    return best;
}

double hardy_constant(const DirichletForm& form, double b) {
    int node = form.measure.cell_index(b);
    return 1.0 / dirichlet_eigenvalue(form, {node});
}

double muckenhoupt_constant(const Measure1D& m) {
    int imed = m.cell_index(m.median);
    // right branch: sup over x > median of mu([x,inf)) * int_median^x 1/density
    double best = 0.0;
    double tail = 0.0;
    std::vector<double> invdens(m.n);
    for (int i = 0; i < m.n; ++i) invdens[i] = m.z_tilde * std::exp(m.vtilde[i]) * m.dx;
    double inv_acc = 0.0;
    std::vector<double> tails(m.n + 1, 0.0);
    for (int i = m.n - 1; i >= 0; --i) tails[i] = tails[i + 1] + m.w[i];
    for (int i = imed + 1; i < m.n; ++i) {
        inv_acc += invdens[i];
        best = std::max(best, tails[i] * inv_acc);
    }
    inv_acc = 0.0;
    double mass_left = 0.0;
    for (int j = 0; j < imed; ++j) mass_left += m.w[j];
    for (int i = imed - 1; i >= 0; --i) {
        inv_acc += invdens[i];
        best = std::max(best, mass_left * inv_acc);
        mass_left -= m.w[i];
    }
    return best;
}

double cheeger_constant(const Measure1D& m) {
    double best = 0.0;
    double acc = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double F = acc + 0.5 * m.w[i];
        acc += m.w[i];
        double dens = m.w[i] / m.dx;
        if (dens <= 0) continue;
        best = std::max(best, std::min(F, 1.0 - F) / dens);
    }
    return best;
}

std::vector<double> semigroup_variance(const DirichletForm& form, const std::vector<double>& f,
                                       const std::vector<double>& times) {
    const DirichletForm* use = &form;
    DirichletForm coarse;
    std::vector<double> fc;
    if (form.n() > 2048) {
        Measure1D mc = build_measure(form.measure.spec, 1024);
        coarse = assemble_form(mc);
        fc.resize(mc.n);
        for (int i = 0; i < mc.n; ++i) fc[i] = f[form.measure.cell_index(mc.x[i])];
        use = &coarse;
    }
    const auto& m = use->measure;
    const std::vector<double>& ff = fc.empty() ? f : fc;

    SymTridiag t = reduced_pencil(*use, 0, m.n - 1, false, false);
    TridiagEigen eig = full_decomposition(t);
    std::vector<double> fhat(m.n);
    for (int i = 0; i < m.n; ++i) fhat[i] = std::sqrt(m.w[i]) * ff[i];
    std::vector<double> out(times.size(), 0.0);
    for (int k = 1; k < m.n; ++k) {
        double c = 0.0;
        for (int i = 0; i < m.n; ++i) c += eig.vectors[k][i] * fhat[i];
        double c2 = c * c;
        for (size_t j = 0; j < times.size(); ++j)
            out[j] += c2 * std::exp(-2.0 * eig.values[k] * times[j]);
    }
    return out;
}

double constrained_poincare_sup(const DirichletForm& form, double lo, double hi) {
    const auto& m = form.measure;
    if (m.n > 2049) throw invalid_argument("constrained_poincare_sup: build the form with <= 2049 cells");
    SymTridiag t = reduced_pencil(form, 0, m.n - 1, false, false);
    TridiagEigen eig = full_decomposition(t);

    // overlaps of the (M-weighted) indicator with the eigenbasis
    std::vector<double> overlap(m.n, 0.0);
    double wmax = 0.0;
    for (int k = 0; k < m.n; ++k) {
        double s = 0.0;
        for (int i = 0; i < m.n; ++i)
            if (m.x[i] >= lo && m.x[i] <= hi) s += eig.vectors[k][i] * std::sqrt(m.w[i]);
        overlap[k] = s;
        wmax = std::max(wmax, std::fabs(s));
    }
    const double tol = 1e-9 * std::max(wmax, 1e-30);

    double zero_overlap_min = 1e300;
    std::vector<int> poles;
    for (int k = 0; k < m.n; ++k) {
        if (std::fabs(overlap[k]) <= tol) {
            if (k >= 1) zero_overlap_min = std::min(zero_overlap_min, eig.values[k]);
        } else {
            poles.push_back(k);
        }
    }
    double root = 1e300;
    if (poles.size() >= 2) {
        double a = eig.values[poles[0]], b = eig.values[poles[1]];
        auto g = [&](double lam) {
            double s = 0.0;
            for (int k : poles) s += overlap[k] * overlap[k] / (eig.values[k] - lam);
            return s;
        };
        double pad = 1e-12 * std::max(1.0, b - a);
        double xl = a + pad, xr = b - pad;
        if (g(xl) < 0.0 && g(xr) > 0.0) {
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (xl + xr);
                (g(mid) < 0 ? xl : xr) = mid;
            }
            root = 0.5 * (xl + xr);
        } else {
            root = b; // degenerate bracket; the gap collapsed
        }
    }
    double lambda = std::min(root, zero_overlap_min);
    return 1.0 / lambda;
}

} // namespace poinckit
