#pragma once

#include <complex>
#include <vector>

#include "hermcert/hermform.hpp"

namespace hermcert {

/// Dense Hermitian matrix of complex doubles, row major.
struct HermMatrix {
    int N = 0;
    std::vector<std::complex<double>> a;

    HermMatrix() = default;
    explicit HermMatrix(int n) : N(n), a(std::size_t(n) * n, 0.0) {}

    std::complex<double>& at(int i, int j) { return a[std::size_t(i) * N + j]; }
    const std::complex<double>& at(int i, int j) const { return a[std::size_t(i) * N + j]; }

    double frobenius() const;
    bool is_hermitian(double rel_tol = 1e-14) const;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    HermMatrix U;                     // unitary, eigenvectors in columns
};

/// Coefficient matrix of P over the graded-lex monomial basis, rounded to
/// nearest doubles.
HermMatrix to_float(const HermitianForm& P);

/// Cyclic complex Jacobi rotations; stops when the off-diagonal Frobenius
/// norm drops below 1e-12 * ||M||_F. Throws after 100 sweeps without
/// convergence or on non-Hermitian input.
EigenDecomposition jacobi_eigh(const HermMatrix& M);

/// Exact dense coefficient matrix of P (graded-lex order).
std::vector<std::vector<Scalar>> exact_matrix(const HermitianForm& P);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Exact inertia of a Hermitian Gaussian-rational matrix via LDL^dagger
/// elimination with diagonal pivoting, falling back to 2x2 pivots when all
/// remaining diagonal entries vanish. No floating tolerance anywhere.
Inertia rational_inertia(std::vector<std::vector<Scalar>> M);

/// Exact positive-semidefiniteness of the coefficient matrix.
bool psd_exact(const HermitianForm& P);

/// Exact (k, l) = (#positive, #negative) eigenvalue counts.
std::pair<int, int> signature(const HermitianForm& P);

}  // namespace hermcert
