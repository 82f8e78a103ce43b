#include "poinckit/dense_eig.hpp"

#include <algorithm>
#include <cmath>

#include "poinckit/errors.hpp"

namespace poinckit {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// Householder reduction of a symmetric matrix to tridiagonal form (tred2).
void tred2(DenseMatrix& z, std::vector<double>& d, std::vector<double>& e) {
    const int n = z.n;
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(z.at(i, k));
            if (scale == 0.0) {
                e[i] = z.at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    z.at(i, k) /= scale;
                    h += z.at(i, k) * z.at(i, k);
                }
                double f = z.at(i, l);
                double g = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z.at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    z.at(j, i) = z.at(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += z.at(j, k) * z.at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += z.at(k, j) * z.at(i, k);
                    e[j] = g / h;
                    f += e[j] * z.at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = z.at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        z.at(j, k) -= f * e[k] + g * z.at(i, k);
                }
            }
        } else {
            e[i] = z.at(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += z.at(i, k) * z.at(k, j);
                for (int k = 0; k <= l; ++k) z.at(k, j) -= g * z.at(k, i);
            }
        }
        d[i] = z.at(i, i);
        z.at(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) z.at(j, i) = z.at(i, j) = 0.0;
    }
}

} // namespace

void ql_implicit(std::vector<double>& d, std::vector<double>& e, DenseMatrix& z) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    e.resize(n);
    for (int i = 1; i < n; ++i) e[i - 1] = e[i]; // shift convention from tred2
    e[n - 1] = 0.0;
    // here e[i] couples d[i] and d[i+1]
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 || std::fabs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw computation_error("ql_implicit: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                bool underflow = false;
                for (; i >= l; --i) {
                    double f = s * e[i], b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < z.n; ++k) {
                        f = z.at(k, i + 1);
                        z.at(k, i + 1) = s * z.at(k, i) + c * f;
                        z.at(k, i) = c * z.at(k, i) - s * f;
                    }
                }
                if (underflow && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

DenseEigen symmetric_eigen(const DenseMatrix& a) {
    DenseEigen out;
    DenseMatrix z = a;
    std::vector<double> d, e;
    tred2(z, d, e);
    ql_implicit(d, e, z);
    // sort ascending, permuting columns
    const int n = a.n;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    out.values.resize(n);
    out.vectors = DenseMatrix::identity(n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = d[idx[j]];
        for (int i = 0; i < n; ++i) out.vectors.at(i, j) = z.at(i, idx[j]);
    }
    return out;
}

bool lu_solve(DenseMatrix a, std::vector<double>& rhs) {
    const int n = a.n;
    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;
    for (int col = 0; col < n; ++col) {
        int best = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a.at(r, col)) > std::fabs(a.at(best, col))) best = r;
        if (std::fabs(a.at(best, col)) < 1e-300) return false;
        if (best != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(best, j), a.at(col, j));
            std::swap(rhs[best], rhs[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = a.at(r, col) / a.at(col, col);
            a.at(r, col) = 0.0;
            for (int j = col + 1; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
            rhs[r] -= f * rhs[col];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = rhs[i];
        for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * rhs[j];
        rhs[i] = s / a.at(i, i);
    }
    return true;
}

} // namespace poinckit
