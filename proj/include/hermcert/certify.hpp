#pragma once

#include <optional>
#include <string>

#include "hermcert/curves.hpp"
#include "hermcert/decomp.hpp"

namespace hermcert {

enum class Verdict { CertifiedQsn, CertifiedNotQsn, Inconclusive };

struct Obstruction {
    P1Point point = P1Point::finite(0);
    JetResult jet;            // jet data of the free residual at the point
    bool exact_zero = false;  // residual vanishes exactly at the point
    // set instead of `point` when the confirmed zero has a Gaussian-rational
    // chart coordinate with nonzero imaginary part (jet data is exact-real-only)
    std::optional<Scalar> complex_chart_point;
};

struct CertificateReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<int> minimal_exponent;
    std::optional<std::vector<FloatSection>> witness_sections;  // SOS of R^m (x) P~
    std::optional<HoloSection> witness_divisor;                 // s_D on the P^1 pipeline
    std::optional<Obstruction> obstruction;
    int search_bound = 0;
    std::vector<double> min_eigenvalue_trace;  // per m, floating diagnostics
    std::optional<double> sup_ratio;
};

/// Least m in [0, m_max] with R^m (x) P exactly PSD; the PSD decisions are
/// rational, the eigenvalue trace is floating diagnostics only.
CertificateReport quillen_minimal_exponent(const HermitianForm& P, const HermitianForm& R,
                                           int m_max);

struct SamplingPlan {
    int sphere_samples = 512;
    unsigned seed = 1;
    std::vector<std::vector<std::complex<double>>> extra_points;
};

struct RatioEstimate {
    double sup_estimate = 0;
    std::vector<std::complex<double>> arg_max;
    bool degenerate = false;  // every sample hit a zero of P
};

/// Max of modulus(P,basis)/P over unit-sphere samples plus user points;
/// samples at zeros of P are filtered out.
RatioEstimate modulus_ratio_estimate(const HermitianForm& P, const DistinguishedBasis& basis,
                                     const SamplingPlan& plan);

/// Exact modulus ratio (|P|/P)(v) at a rational point, available when the
/// coefficient matrix is diagonal (then |P| is the entrywise absolute value
/// and stays rational).
Scalar modulus_ratio_exact_diagonal(const HermitianForm& P, const std::vector<Scalar>& v);

struct SgcsReport {
    bool s1_pass = false;  // diagonal positivity and Theta_2 PSD on samples
    bool s2_pass = false;  // det Theta_2 > 0 off-fiber, = 0 on-fiber
    bool s3_pass = false;  // positive curvature of the associated metric
    double worst_diagonal = 0;
    double worst_offfiber_det = 0;
    double worst_samefiber_det = 0;
    double worst_curvature_eigenvalue = 0;
    bool pass() const { return s1_pass && s2_pass && s3_pass; }
};

/// Sampled check of the strong global Cauchy-Schwarz conditions S1-S3.
SgcsReport sgcs_check(const HermitianForm& R, int pair_samples, unsigned seed);

/// Full decision pipeline on P^1: factor the base divisor, run the exponent
/// search on the free residual, and fall back to an exact zero search.
CertificateReport qsn_decide_p1(const HermitianForm& P, int m_max,
                                const SamplingPlan& zero_search = {});

}  // namespace hermcert
