#pragma once

#include "hermcert/blowup.hpp"
#include "hermcert/certify.hpp"
#include "hermcert/spectra.hpp"

namespace hermcert {

/// Weight data for the L^2 inner product on H^0(P^1, O(me+d)):
/// weight e^-(m phi + psi) with phi = log r, psi = log p, and volume form
/// (i del delbar phi) / 2pi.
struct WeightSpec {
    HermitianForm R;  // degree e, SGCS
    HermitianForm P;  // degree d, strictly positive on the diagonal
    int m = 1;

    /// Validates SGCS for R (sampled) and strict positivity for P on a
    /// 1000-point chart probe. Throws on failure.
    static WeightSpec checked(HermitianForm R, HermitianForm P, int m, unsigned seed = 7);
    /// No validation; for specs already known good (e.g. Fubini-Study).
    static WeightSpec unchecked(HermitianForm R, HermitianForm P, int m);
};

struct QuadraturePlan {
    double rel_tol = 1e-10;
    int initial_radial = 32;
    int initial_angular = 64;
    int max_doublings = 6;
};

struct KernelData {
    int m = 0;
    int degree = 0;     // me + d, so basis_dim = degree + 1
    int basis_dim = 0;
    HermMatrix gram;                // (t^j, t^k) inner products
    HermMatrix orthonormal_coeffs;  // column a holds s^a in monomial coords
    double quadrature_error_estimate = 0;
    // chart polynomials kept for evaluation and the reproducing check
    MixedHermPoly r_fin, p_fin, r_inf, p_inf;
};

/// Monomial Gram matrix by adaptive polar quadrature over both charts;
/// throws if the requested tolerance is not reached (reporting the achieved
/// one in the message) or if the Gram fails to be positive definite.
KernelData gram_matrix(const WeightSpec& spec, const QuadraturePlan& quad = {});

/// K(x, y) = sum_a s^a(x) conj(s^a(y)) for points in the finite chart.
std::complex<double> kernel_eval(const KernelData& K, std::complex<double> x,
                                 std::complex<double> y);

/// Max over probe points of |Bergman projection of s minus s| / ||s||,
/// with the projection integral done by fresh quadrature.
double reproducing_error(const KernelData& K, const WeightSpec& spec, const HoloSection& s);

struct AsymptoticsRow {
    int m = 0;
    std::vector<double> rho;  // K(x,x) e^-(m phi + psi) / m per probe
};

struct AsymptoticsTable {
    std::vector<AsymptoticsRow> rows;
    std::vector<double> b1;  // fitted per probe from rho_m ~ 1 - b1/m
    double b1_mean = 0;
};

AsymptoticsTable diagonal_asymptotics(const HermitianForm& R, const HermitianForm& P,
                                      const std::vector<int>& m_list,
                                      const std::vector<std::complex<double>>& probes,
                                      const QuadraturePlan& quad = {});

/// Minimum diagonal entry of the floating coefficient matrix of R^m (x) P,
/// computed by floating convolution (independent of the exact PSD route).
double cm_diagonal_min(const HermitianForm& R, const HermitianForm& P, int m);

/// First m in [0, m_max] whose floating matrix has nonnegative diagonal,
/// or -1 if none.
int cm_psd_onset(const HermitianForm& R, const HermitianForm& P, int m_max);

}  // namespace hermcert
