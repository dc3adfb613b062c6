#pragma once

#include <optional>

#include "hermcert/hermform.hpp"

namespace hermcert {

/// Holomorphic map P^1 -> P^n given by n+1 binary forms of common degree e.
struct RationalCurve {
    int n_target = 0;
    int e = 0;
    std::vector<HoloSection> components;  // each with n = 1, degree e

    RationalCurve(int n_target_, std::vector<HoloSection> comps);
};

/// A point of P^1 with rational ratio. Finite chart means [a:b] with b != 0
/// (local coordinate x = a/b + t, y = 1); infinity means [1:0] (x = 1, y = t).
struct P1Point {
    mpq_class a;
    mpq_class b;

    static P1Point finite(const mpq_class& ratio) { return {ratio, 1}; }
    static P1Point infinity() { return {1, 0}; }
    bool at_infinity() const { return b == 0; }
    friend bool operator==(const P1Point& x, const P1Point& y);
};

/// Exact Taylor data of a form near a point of P^1: coefficients c_{jk} of
/// t^j conj(t)^k in the local coordinate.
struct BidegreeExpansion {
    std::map<std::pair<int, int>, Scalar> coeffs;
    P1Point center = P1Point::finite(0);
};

struct JetResult {
    bool pass = false;
    int mu = 0;                                   // lowest total bidegree
    std::map<std::pair<int, int>, Scalar> lowest_block;
};

/// Exact gcd factorization of a form on P^1: |s_D|^2 (x) residual = P, with
/// the residual's support space having trivial section gcd.
struct DivisorP1 {
    HoloSection s_D;
    HermitianForm residual;
};

/// Exact substitution z_i -> gamma_i(x, y); evaluation is functorial.
HermitianForm pullback(const HermitianForm& P, const RationalCurve& gamma);

/// Exact local expansion of a form on P^1 at a rational center.
BidegreeExpansion local_expansion(const HermitianForm& P, const P1Point& center);

/// Lowest-order term must be c|t|^(2m) with c > 0 (D'Angelo jet condition).
JetResult jet_check(const BidegreeExpansion& exp);

/// Extract s_D = gcd of the support-space sections (monic in x, with the
/// multiplicity of y tracked separately) and the exact residual.
DivisorP1 base_divisor_factor(const HermitianForm& P);

/// gcd of binary forms in (x, y); monic in the leading x power.
HoloSection binary_gcd(const std::vector<HoloSection>& sections);

/// Exact division of binary forms; throws if not divisible.
HoloSection binary_divide(const HoloSection& num, const HoloSection& den);

/// Nearest rational with denominator <= max_den among continued-fraction
/// convergents of x, or nullopt if none approximates x to tol.
std::optional<mpq_class> snap_to_rational(double x, long max_den, double tol);

/// Rational roots [a:b] of a binary form (linear factors over Q(i) with
/// rational ratio; Gaussian-rational roots with nonzero imaginary part are
/// not searched).
std::vector<P1Point> rational_roots(const HoloSection& s);

struct JppFailure {
    std::size_t curve_index = 0;
    P1Point center = P1Point::finite(0);
    JetResult jet;
};

struct JppReport {
    bool failure_found = false;
    std::optional<JppFailure> failure;
    std::size_t centers_checked = 0;
};

/// Pulls P back along each curve, factors out the base divisor and runs
/// jet_check at each supplied center plus the rational roots of s_D.
/// A clean report means "no failure found", not a jet-property proof.
JppReport jpp_scan(const HermitianForm& P, const std::vector<RationalCurve>& curves,
                   const std::vector<P1Point>& centers);

}  // namespace hermcert
