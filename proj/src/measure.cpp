#include "poinckit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "poinckit/errors.hpp"

namespace poinckit {

double Measure1D::density(double xq) const {
    if (xq < lo() || xq > hi()) return 0.0;
    return w[static_cast<size_t>(cell_index(xq))] / dx;
}

int Measure1D::cell_index(double xq) const {
    int i = static_cast<int>(std::floor((xq - lo()) / dx));
    return std::clamp(i, 0, n - 1);
}

Measure1D build_measure(const PotentialSpec& spec, int n_points) {
    if (n_points < 64) throw invalid_argument("build_measure: n_points must be >= 64");
    if (!(spec.x_lo < spec.x_hi) || !std::isfinite(spec.x_lo) || !std::isfinite(spec.x_hi))
        throw invalid_argument("build_measure: domain must be finite and nonempty");

    Measure1D m;
    m.spec = spec;
    m.n = n_points;
    m.dx = (spec.x_hi - spec.x_lo) / n_points;
    m.x.resize(n_points);
    m.vtilde.resize(n_points);
    std::vector<double> v(n_points);
    double vmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_points; ++i) {
        m.x[i] = spec.x_lo + (i + 0.5) * m.dx;
        v[i] = spec.V(m.x[i]);
        if (!std::isfinite(v[i]))
            throw computation_error("build_measure: V is not finite at x=" + std::to_string(m.x[i]));
        if (v[i] < vmin) vmin = v[i];
    }
    m.v_min = vmin;
    m.w.resize(n_points);
    double total = 0.0;
    for (int i = 0; i < n_points; ++i) {
        m.vtilde[i] = v[i] - vmin;
        m.w[i] = std::exp(-m.vtilde[i]) * m.dx;
        total += m.w[i];
    }
    if (!(total > 0.0)) throw computation_error("build_measure: zero total mass");
    m.z_tilde = total;
    m.Z = total * std::exp(-vmin);
    for (double& wi : m.w) wi /= total;

    double mean = 0.0;
    for (int i = 0; i < n_points; ++i) mean += m.w[i] * m.x[i];
    double var = 0.0, mad = 0.0;
    for (int i = 0; i < n_points; ++i) {
        double d = m.x[i] - mean;
        var += m.w[i] * d * d;
        mad += m.w[i] * std::fabs(d);
    }
    m.mean = mean;
    m.variance = var;
    m.mean_abs_dev = mad;

    int amin = 0;
    for (int i = 1; i < n_points; ++i)
        if (m.vtilde[i] < m.vtilde[amin]) amin = i; // strict: keeps the leftmost argmin
    m.a_min_index = amin;
    m.a_min = m.x[amin];

    m.median = quantile(m, 0.5);
    return m;
}

double cdf(const Measure1D& m, double xq) {
    if (xq <= m.lo()) return 0.0;
    if (xq >= m.hi()) return 1.0;
    int i = m.cell_index(xq);
    double acc = 0.0;
    for (int j = 0; j < i; ++j) acc += m.w[j];
    double cell_lo = m.lo() + i * m.dx;
    return acc + m.w[i] * (xq - cell_lo) / m.dx;
}

double quantile(const Measure1D& m, double u) {
    if (u <= 0.0) return m.lo();
    if (u >= 1.0) return m.hi();
    double acc = 0.0;
    for (int i = 0; i < m.n; ++i) {
        if (acc + m.w[i] >= u) {
            double cell_lo = m.lo() + i * m.dx;
            double frac = m.w[i] > 0 ? (u - acc) / m.w[i] : 0.5;
            return cell_lo + frac * m.dx;
        }
        acc += m.w[i];
    }
    return m.hi();
}

LevelRadii level_radii(const Measure1D& m, double beta) {
    if (!(beta > 0)) throw invalid_argument("level_radii: beta must be positive");
    LevelRadii r;
    const double va = m.vtilde[m.a_min_index];
    int i = m.a_min_index;
    while (i + 1 < m.n && m.vtilde[i + 1] - va <= beta) ++i;
    r.R_plus = m.x[i] - m.a_min;
    r.capped_plus = (i == m.n - 1);
    i = m.a_min_index;
    while (i - 1 >= 0 && m.vtilde[i - 1] - va <= beta) --i;
    r.R_minus = m.a_min - m.x[i];
    r.capped_minus = (i == 0);
    return r;
}

SuperlinearCertificate superlinear_certificate(const Measure1D& m, double beta) {
    SuperlinearCertificate cert;
    cert.beta = beta;
    LevelRadii lr = level_radii(m, beta);
    cert.R_minus = lr.R_minus;
    cert.R_plus = lr.R_plus;
    cert.R = std::max(lr.R_minus, lr.R_plus);

    if (lr.capped_minus && lr.capped_plus) {
        cert.compact = true;
        cert.valid = false;
        cert.reason = "compact support";
        return cert;
    }

    // Steepest slope with h = 0: the smallest tail secant (V(a+t) - V(a))/t.
    // Scanning a geometric slope grid below it never finds a larger feasible c,
    // so the top of the grid is the certificate.
    const double va = m.vtilde[m.a_min_index];
    double min_secant = std::numeric_limits<double>::infinity();
    bool has_tail = false;
    for (int i = 0; i < m.n; ++i) {
        double t = m.x[i] - m.a_min;
        bool right_tail = t >= lr.R_plus && t > 0 && !lr.capped_plus;
        bool left_tail = -t >= lr.R_minus && t < 0 && !lr.capped_minus;
        if (!right_tail && !left_tail) continue;
        has_tail = true;
        double secant = (m.vtilde[i] - va) / std::fabs(t);
        min_secant = std::min(min_secant, secant);
    }
    if (!has_tail || !(min_secant > 0) || !std::isfinite(min_secant)) {
        cert.valid = false;
        cert.reason = has_tail ? "no positive slope works" : "compact support";
        cert.compact = !has_tail;
        return cert;
    }

    const int n_slopes = 512;
    double best_c = 0.0, best_h = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_slopes; ++k) {
        double slope = min_secant * std::pow(2.0, -10.0 * k / (n_slopes - 1.0));
        double h = 0.0;
        for (int i = 0; i < m.n; ++i) {
            double t = m.x[i] - m.a_min;
            bool tail = (t >= lr.R_plus && t > 0 && !lr.capped_plus) ||
                        (-t >= lr.R_minus && t < 0 && !lr.capped_minus);
            if (!tail) continue;
            h = std::max(h, slope * std::fabs(t) - (m.vtilde[i] - va));
        }
        double c = slope * cert.R;
        bool preferred = h <= 2 * beta;
        if ((preferred && c > best_c) || (best_c == 0.0 && h < best_h)) {
            best_c = c;
            best_h = h;
        }
    }
    cert.c = best_c;
    cert.h = std::max(0.0, best_h);
    cert.valid = best_c > 0.0;
    if (!cert.valid) cert.reason = "no positive slope works";
    return cert;
}

Measure1D modified_measure(const Measure1D& m, double beta) {
    SuperlinearCertificate cert = superlinear_certificate(m, beta);
    if (!cert.valid) throw invalid_argument("modified_measure: superlinearity required");

    PotentialSpec spec = m.spec;
    const double va = m.spec.V(m.a_min);
    spec.params["flat_lo"] = m.a_min - cert.R_minus;
    spec.params["flat_hi"] = m.a_min + cert.R_plus;
    spec.params["flat_level"] = va + beta;
    return build_measure(spec, m.n);
}

} // namespace poinckit
