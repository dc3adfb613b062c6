#pragma once

#include "hermcert/hermform.hpp"

namespace hermcert {

/// Inhomogeneous Hermitian polynomial in affine variables: a real-valued
/// polynomial sum c(alpha,beta) x^alpha conj(x)^beta where the holomorphic
/// and anti-holomorphic degrees need not match. Reality means
/// c(alpha,beta) = conj(c(beta,alpha)).
struct MixedHermPoly {
    int n_vars = 0;
    std::map<std::pair<MultiIndex, MultiIndex>, Scalar> coeffs;

    MixedHermPoly() = default;
    explicit MixedHermPoly(int n_vars_) : n_vars(n_vars_) {}

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const MultiIndex& alpha, const MultiIndex& beta, const Scalar& c);
    bool is_real_valued() const;

    Scalar eval(const std::vector<Scalar>& x) const;
    double eval(const std::vector<std::complex<double>>& x) const;
    /// Complex-valued evaluation (derivatives are not real-valued).
    std::complex<double> eval_complex(const std::vector<std::complex<double>>& x) const;

    /// Partial derivative in holomorphic variable i (hol) or the conjugate
    /// variable i (hol = false); exact.
    MixedHermPoly derivative(int i, bool hol) const;

    friend bool operator==(const MixedHermPoly& a, const MixedHermPoly& b) {
        return a.n_vars == b.n_vars && a.coeffs == b.coeffs;
    }
};

/// Sets z_chart = 1; the affine variables are the remaining coordinates in
/// index order. P = |z_chart|^(2d) * result(affine coords).
MixedHermPoly dehomogenize(const HermitianForm& P, int chart);

/// Monomial substitution x_i -> prod y_j^(map[i][j]), applied to holomorphic
/// exponents and conjugately to anti-holomorphic exponents; exact.
/// map[i] has the length of the new variable set.
MixedHermPoly monomial_substitute(const MixedHermPoly& q,
                                  const std::vector<MultiIndex>& map);

/// Largest gamma with q = |y^gamma|^2 * reduced; reduced carries no further
/// monomial-square factor.
std::pair<MultiIndex, MixedHermPoly> factor_monomial_square(const MixedHermPoly& q);

struct BlowupStep {
    std::vector<MultiIndex> substitution;
    MultiIndex gamma;             // factor pulled out at this step
    MultiIndex gamma_cumulative;  // total factor in the current variables
    MixedHermPoly reduced;
};

struct BlowupTrace {
    std::vector<BlowupStep> steps;
    MixedHermPoly final_reduced;
    std::vector<std::pair<std::vector<Scalar>, Scalar>> probe_values;  // residual zeros probe

    /// |y^gamma_cumulative|^2 * reduced of step i, i.e. the paper-style p_i.
    MixedHermPoly step_product(std::size_t i) const;
};

/// Folds monomial_substitute then factor_monomial_square per step, tracking
/// the cumulative monomial factor through later substitutions.
BlowupTrace blowup_chain(const MixedHermPoly& q, const std::vector<std::vector<MultiIndex>>& steps,
                         const std::vector<std::vector<Scalar>>& probes = {});

}  // namespace hermcert
