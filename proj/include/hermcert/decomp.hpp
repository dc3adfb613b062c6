#pragma once

#include <optional>

#include "hermcert/spectra.hpp"

namespace hermcert {

/// Homogeneous section with floating coefficients, dense over the
/// graded-lex monomial basis of degree d.
struct FloatSection {
    int n = 0;
    int d = 0;
    std::vector<std::complex<double>> coeffs;

    std::complex<double> eval(const std::vector<std::complex<double>>& v) const;
};

/// Floating image of a Hermitian form: (n, d) plus the coefficient matrix.
struct FloatForm {
    int n = 0;
    int d = 0;
    HermMatrix C;

    static FloatForm of(const HermitianForm& P) { return {P.n, P.d, to_float(P)}; }

    std::complex<double> eval_pair(const std::vector<std::complex<double>>& v,
                                   const std::vector<std::complex<double>>& w) const;
    double eval_diag(const std::vector<std::complex<double>>& v) const {
        return eval_pair(v, v).real();
    }
};

/// Independent sections (f, g) with P = sum|f|^2 - sum|g|^2 and signature
/// (k, l). Lives in floating arithmetic; exact certificates go through
/// psd_exact instead.
struct DistinguishedBasis {
    int n = 0;
    int d = 0;
    std::vector<FloatSection> f;
    std::vector<FloatSection> g;
    int k = 0;
    int l = 0;
};

/// Eigendecomposition-based distinguished basis; eigenvalues below
/// 1e-10 * ||C||_F in magnitude are dropped as the zero block.
DistinguishedBasis distinguished_basis(const HermitianForm& P);

/// sum|f|^2 + sum|g|^2 for the given basis of P.
FloatForm modulus(const HermitianForm& P, const DistinguishedBasis& basis);

/// Sections with sum|s^j|^2 = P when the exact matrix is PSD, else nullopt.
std::optional<std::vector<FloatSection>> sos_decomposition(const HermitianForm& P);

/// Seed-deterministic mix of block-unitary and hyperbolic rotations; the
/// re-expanded form and the span of f+g are unchanged, as is (k, l).
DistinguishedBasis rebase_distinguished(const DistinguishedBasis& basis, unsigned seed);

/// Re-expanded coefficient matrix sum f f^dag - sum g g^dag of a basis.
HermMatrix reexpand(const DistinguishedBasis& basis);

}  // namespace hermcert
