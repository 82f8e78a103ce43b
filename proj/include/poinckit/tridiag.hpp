#pragma once

#include <vector>

namespace poinckit {

// Symmetric tridiagonal matrix: diagonal d (n), sub/super-diagonal e (n-1).
struct SymTridiag {
    std::vector<double> d;
    std::vector<double> e;
    int n() const { return static_cast<int>(d.size()); }
};

// Number of eigenvalues strictly below sigma (Sturm sequence count).
int sturm_count(const SymTridiag& t, double sigma);

// k-th smallest eigenvalue (k is 0-based) by bisection on the Sturm count.
double eigenvalue_bisect(const SymTridiag& t, int k, double rel_tol = 1e-13);

// Eigenvector for an isolated eigenvalue by inverse iteration with a
// partially-pivoted tridiagonal factorization. Returns the normalized vector;
// lambda is refined with one Rayleigh quotient.
std::vector<double> inverse_iteration(const SymTridiag& t, double& lambda);

struct TridiagEigen {
    std::vector<double> values;          // ascending
    std::vector<std::vector<double>> vectors; // vectors[k] is the k-th eigenvector
};

// Full decomposition by the implicit QL algorithm. Intended for n <= 2049.
TridiagEigen full_decomposition(const SymTridiag& t);

// Solves a general tridiagonal system (lower a[1..n-1], diag b, upper c[0..n-2])
// with partial pivoting. Returns false when a pivot collapses.
bool solve_tridiag(std::vector<double> a, std::vector<double> b, std::vector<double> c,
                   std::vector<double>& rhs);

} // namespace poinckit
