#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "hermcert/multiindex.hpp"
#include "hermcert/scalar.hpp"

namespace hermcert {

/// Homogeneous holomorphic polynomial of degree d in z0..zn, sparse and
/// with exact coefficients. Zero coefficients are never stored.
struct HoloSection {
    int n = 0;
    int d = 0;
    std::map<MultiIndex, Scalar> coeffs;

    HoloSection() = default;
    HoloSection(int n_, int d_) : n(n_), d(d_) {}

    static HoloSection monomial(int n, const MultiIndex& alpha, const Scalar& c = Scalar(1));

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const MultiIndex& alpha, const Scalar& c);

    HoloSection operator+(const HoloSection& o) const;
    HoloSection operator-(const HoloSection& o) const;
    HoloSection operator*(const HoloSection& o) const;
    HoloSection scaled(const Scalar& c) const;
    HoloSection pow(int k) const;

    Scalar eval(const std::vector<Scalar>& v) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& v) const;

    friend bool operator==(const HoloSection& a, const HoloSection& b) {
        return a.n == b.n && a.d == b.d && a.coeffs == b.coeffs;
    }
};

/// Hermitian algebraic function on P^n: a bihomogeneous polynomial
/// sum C(alpha,beta) z^alpha conj(z)^beta with C Hermitian, stored sparsely
/// over pairs of degree-d exponents in the fixed graded-lex basis order.
struct HermitianForm {
    int n = 0;
    int d = 0;
    std::map<std::pair<MultiIndex, MultiIndex>, Scalar> C;

    HermitianForm() = default;
    HermitianForm(int n_, int d_) : n(n_), d(d_) {}

    /// The constant function 1 (degree-0 form), the identity for products.
    static HermitianForm unit(int n);

    bool is_zero() const { return C.empty(); }
    void add_entry(const MultiIndex& alpha, const MultiIndex& beta, const Scalar& c);
    Scalar entry(const MultiIndex& alpha, const MultiIndex& beta) const;

    bool is_hermitian() const;
    bool is_diagonal() const;

    HermitianForm operator+(const HermitianForm& o) const;
    HermitianForm operator-(const HermitianForm& o) const;
    HermitianForm scaled(const mpq_class& c) const;

    friend bool operator==(const HermitianForm& a, const HermitianForm& b) {
        return a.n == b.n && a.d == b.d && a.C == b.C;
    }
};

/// Form with C(a,b) = sum_terms sign * s_a * conj(s_b); on the diagonal this
/// is sum sign * |s(v)|^2. All sections must share (n, d).
HermitianForm from_squares(const std::vector<std::pair<int, HoloSection>>& terms);

/// Polarized evaluation sum C(a,b) v^a conj(w)^b, exact.
Scalar eval_pair(const HermitianForm& P, const std::vector<Scalar>& v,
                 const std::vector<Scalar>& w);
std::complex<double> eval_pair(const HermitianForm& P,
                               const std::vector<std::complex<double>>& v,
                               const std::vector<std::complex<double>>& w);

inline Scalar eval_diag(const HermitianForm& P, const std::vector<Scalar>& v) {
    return eval_pair(P, v, v);
}
inline double eval_diag(const HermitianForm& P, const std::vector<std::complex<double>>& v) {
    return eval_pair(P, v, v).real();
}

/// Product of forms; degrees add, evaluation is multiplicative.
HermitianForm product(const HermitianForm& P, const HermitianForm& Q);

/// The form of ||z||^(2m) on P^n: diagonal with multinomial entries m!/alpha!.
HermitianForm norm_power(int n, int m);

/// Basis of the support space V_P: the nonzero column sections
/// u_beta = sum_alpha C(alpha,beta) z^alpha, reduced by exact row reduction
/// to a maximal linearly independent subset.
std::vector<HoloSection> support_space_basis(const HermitianForm& P);

/// G-curvature matrix [P(v_i, conj(v_j))] along a tuple of points, exact.
std::vector<std::vector<Scalar>> gcurvature(const HermitianForm& P,
                                            const std::vector<std::vector<Scalar>>& points);
std::vector<std::vector<std::complex<double>>> gcurvature(
    const HermitianForm& P, const std::vector<std::vector<std::complex<double>>>& points);

}  // namespace hermcert
