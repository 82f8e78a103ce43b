#pragma once

#include <vector>

namespace poinckit {

// Row-major dense matrix, n x n.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;
    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    static DenseMatrix identity(int n);
};

struct DenseEigen {
    std::vector<double> values; // ascending
    DenseMatrix vectors;        // columns are eigenvectors
};

// Symmetric eigendecomposition: Householder tridiagonalization followed by
// implicit QL. a must be symmetric.
DenseEigen symmetric_eigen(const DenseMatrix& a);

// Implicit QL on a tridiagonal (d, e) accumulating rotations into z (which
// the caller seeds with the identity or a tridiagonalizing transform).
// On return d holds eigenvalues (unsorted); e is destroyed.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, DenseMatrix& z);

// Dense LU solve with partial pivoting (small systems). Returns false if singular.
bool lu_solve(DenseMatrix a, std::vector<double>& rhs);

} // namespace poinckit
