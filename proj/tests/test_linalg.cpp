#include <cmath>
#include <random>

#include "doctest.h"
#include "poinckit/dense_eig.hpp"
#include "poinckit/tridiag.hpp"

using namespace poinckit;

namespace {

// Discrete Neumann Laplacian on n cells: eigenvalues 2(1-cos(k pi / n)).
SymTridiag neumann_laplacian(int n) {
    SymTridiag t;
    t.d.assign(n, 2.0);
    t.d[0] = t.d[n - 1] = 1.0;
    t.e.assign(n - 1, -1.0);
    return t;
}

} // namespace

TEST_CASE("sturm bisection matches the Neumann Laplacian spectrum") {
    int n = 257;
    SymTridiag t = neumann_laplacian(n);
    for (int k : {0, 1, 2, 5, 100, 256}) {
        double expected = 2.0 * (1.0 - std::cos(k * M_PI / n));
        CHECK(eigenvalue_bisect(t, k) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("inverse iteration returns an eigenpair") {
    int n = 200;
    SymTridiag t = neumann_laplacian(n);
    double lambda = eigenvalue_bisect(t, 1);
    std::vector<double> v = inverse_iteration(t, lambda);
    double expected = 2.0 * (1.0 - std::cos(M_PI / n));
    CHECK(lambda == doctest::Approx(expected).epsilon(1e-10));
    // residual || T v - lambda v ||
    double r2 = 0;
    for (int i = 0; i < n; ++i) {
        double tv = t.d[i] * v[i];
        if (i > 0) tv += t.e[i - 1] * v[i - 1];
        if (i + 1 < n) tv += t.e[i] * v[i + 1];
        r2 += (tv - lambda * v[i]) * (tv - lambda * v[i]);
    }
    CHECK(std::sqrt(r2) < 1e-10);
}

TEST_CASE("full decomposition agrees with bisection and is orthonormal") {
    int n = 64;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    SymTridiag t;
    t.d.resize(n);
    t.e.resize(n - 1);
    for (int i = 0; i < n; ++i) t.d[i] = 3 + u(rng);
    for (int i = 0; i + 1 < n; ++i) t.e[i] = -u(rng);
    TridiagEigen full = full_decomposition(t);
    for (int k : {0, 1, n / 2, n - 1})
        CHECK(full.values[k] == doctest::Approx(eigenvalue_bisect(t, k)).epsilon(1e-10));
    for (int a : {0, 3, n - 1}) {
        for (int b : {0, 3, n - 1}) {
            double dot = 0;
            for (int i = 0; i < n; ++i) dot += full.vectors[a][i] * full.vectors[b][i];
            CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("pivoted tridiagonal solve") {
    int n = 50;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(n, 0.0), b(n), c(n, 0.0), x(n);
    for (int i = 0; i < n; ++i) {
        b[i] = 0.1 + 0.05 * u(rng); // weakly dominant diagonal is not required
        if (i > 0) a[i] = u(rng);
        if (i + 1 < n) c[i] = u(rng);
        x[i] = u(rng);
    }
    std::vector<double> rhs(n, 0.0);
    for (int i = 0; i < n; ++i) {
        rhs[i] = b[i] * x[i];
        if (i > 0) rhs[i] += a[i] * x[i - 1];
        if (i + 1 < n) rhs[i] += c[i] * x[i + 1];
    }
    std::vector<double> sol = rhs;
    REQUIRE(solve_tridiag(a, b, c, sol));
    for (int i = 0; i < n; ++i) CHECK(sol[i] == doctest::Approx(x[i]).epsilon(1e-8));
}

TEST_CASE("dense symmetric eigensolver on a known matrix") {
    // 3x3 with eigenvalues 1, 2, 4
    DenseMatrix a;
    a.n = 3;
    a.a = {2, 1, 0, 1, 3, 1, 0, 1, 2};
    DenseEigen e = symmetric_eigen(a);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(e.values[1] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(e.values[2] == doctest::Approx(4.0).epsilon(1e-10));
    // residual of each pair
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i) {
            double av = 0;
            for (int j = 0; j < 3; ++j) av += a.at(i, j) * e.vectors.at(j, k);
            CHECK(av == doctest::Approx(e.values[k] * e.vectors.at(i, k)).epsilon(1e-9));
        }
    }
}

TEST_CASE("dense LU solve") {
    DenseMatrix a;
    a.n = 3;
    a.a = {0, 2, 1, 1, 0, 3, 2, 1, 0}; // needs pivoting
    std::vector<double> rhs = {5, 10, 4};
    REQUIRE(lu_solve(a, rhs));
    // verify A x = b for the original matrix
    DenseMatrix b;
    b.n = 3;
    b.a = {0, 2, 1, 1, 0, 3, 2, 1, 0};
    std::vector<double> out(3, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += b.at(i, j) * rhs[j];
    CHECK(out[0] == doctest::Approx(5).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(10).epsilon(1e-12));
    CHECK(out[2] == doctest::Approx(4).epsilon(1e-12));
}
