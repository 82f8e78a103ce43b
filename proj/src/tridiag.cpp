#include "poinckit/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "poinckit/dense_eig.hpp"
#include "poinckit/errors.hpp"

namespace poinckit {

int sturm_count(const SymTridiag& t, double sigma) {
    const int n = t.n();
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        double e2 = i > 0 ? t.e[i - 1] * t.e[i - 1] : 0.0;
        q = t.d[i] - sigma - (i > 0 ? e2 / q : 0.0);
        if (q == 0.0) q = 1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

namespace {

// Gershgorin interval containing the whole spectrum.
void spectrum_bounds(const SymTridiag& t, double& lo, double& hi) {
    const int n = t.n();
    lo = 1e300;
    hi = -1e300;
    for (int i = 0; i < n; ++i) {
        double r = (i > 0 ? std::fabs(t.e[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(t.e[i]) : 0.0);
        lo = std::min(lo, t.d[i] - r);
        hi = std::max(hi, t.d[i] + r);
    }
}

} // namespace

double eigenvalue_bisect(const SymTridiag& t, int k, double rel_tol) {
    double lo, hi;
    spectrum_bounds(t, lo, hi);
    double span = std::max(hi - lo, 1e-300);
    double abs_tol = span * 1e-15;
    while (hi - lo > abs_tol + rel_tol * std::max(std::fabs(lo), std::fabs(hi))) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (sturm_count(t, mid) <= k ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> inverse_iteration(const SymTridiag& t, double& lambda) {
    const int n = t.n();
    double lo, hi;
    spectrum_bounds(t, lo, hi);
    double shift_eps = std::max(hi - lo, 1.0) * 1e-14;

    std::vector<double> v(n);
    // fixed quasi-random start, reproducible
    unsigned long long s = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < n; ++i) {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        v[i] = (static_cast<double>(s % 1000003) / 1000003.0) - 0.5;
    }
    double sigma = lambda;
    for (int pass = 0; pass < 4; ++pass) {
        std::vector<double> a(n, 0.0), b(n), c(n, 0.0), rhs = v;
        for (int i = 0; i < n; ++i) b[i] = t.d[i] - sigma;
        for (int i = 1; i < n; ++i) a[i] = t.e[i - 1];
        for (int i = 0; i + 1 < n; ++i) c[i] = t.e[i];
        if (!solve_tridiag(a, b, c, rhs)) {
            sigma += shift_eps;
            continue;
        }
        double norm = std::sqrt(std::inner_product(rhs.begin(), rhs.end(), rhs.begin(), 0.0));
        if (!(norm > 0) || !std::isfinite(norm)) {
            sigma += shift_eps;
            continue;
        }
        for (int i = 0; i < n; ++i) v[i] = rhs[i] / norm;
        if (norm > 1e12) break; // converged: huge growth against a near-singular shift
    }
    // Rayleigh quotient refinement
    double num = 0.0;
    for (int i = 0; i < n; ++i) {
        double av = t.d[i] * v[i];
        if (i > 0) av += t.e[i - 1] * v[i - 1];
        if (i + 1 < n) av += t.e[i] * v[i + 1];
        num += v[i] * av;
    }
    lambda = num;
    return v;
}

TridiagEigen full_decomposition(const SymTridiag& t) {
    const int n = t.n();
    if (n > 2049) throw invalid_argument("full_decomposition: n exceeds the 2049 cap");
    std::vector<double> d = t.d;
    std::vector<double> e(n, 0.0);
    for (int i = 1; i < n; ++i) e[i] = t.e[i - 1]; // ql_implicit's tred2 shift convention
    DenseMatrix z = DenseMatrix::identity(n);
    ql_implicit(d, e, z);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    TridiagEigen out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        out.values[k] = d[idx[k]];
        for (int i = 0; i < n; ++i) out.vectors[k][i] = z.at(i, idx[k]);
    }
    return out;
}

bool solve_tridiag(std::vector<double> a, std::vector<double> b, std::vector<double> c,
                   std::vector<double>& rhs) {
    const int n = static_cast<int>(b.size());
    if (n == 0) return false;
    std::vector<double> c2(n, 0.0); // fill-in second superdiagonal from row swaps
    for (int i = 0; i < n - 1; ++i) {
        if (std::fabs(a[i + 1]) > std::fabs(b[i])) {
            std::swap(b[i], a[i + 1]);
            std::swap(c[i], b[i + 1]);
            if (i + 2 < n) std::swap(c2[i], c[i + 1]);
            std::swap(rhs[i], rhs[i + 1]);
        }
        if (b[i] == 0.0) return false;
        double f = a[i + 1] / b[i];
        b[i + 1] -= f * c[i];
        if (i + 2 < n) c[i + 1] -= f * c2[i];
        rhs[i + 1] -= f * rhs[i];
    }
    if (b[n - 1] == 0.0) return false;
    rhs[n - 1] /= b[n - 1];
    if (n >= 2) {
        rhs[n - 2] = (rhs[n - 2] - c[n - 2] * rhs[n - 1]) / b[n - 2];
        for (int i = n - 3; i >= 0; --i)
            rhs[i] = (rhs[i] - c[i] * rhs[i + 1] - c2[i] * rhs[i + 2]) / b[i];
    }
    return true;
}

} // namespace poinckit
