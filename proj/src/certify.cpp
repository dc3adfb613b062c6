#include "hermcert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <random>
#include <stdexcept>

#include "hermcert/blowup.hpp"

namespace hermcert {

namespace {

int worker_cap() {
    const char* env = std::getenv("HERMCERT_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
}

double min_eigenvalue(const HermitianForm& F) {
    auto eig = jacobi_eigh(to_float(F));
    return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
}

}  // namespace

CertificateReport quillen_minimal_exponent(const HermitianForm& P, const HermitianForm& R,
                                           int m_max) {
    if (R.is_zero()) throw std::invalid_argument("quillen_minimal_exponent: zero R");
    if (m_max < 0) throw std::invalid_argument("quillen_minimal_exponent: negative m_max");
    CertificateReport report;
    report.search_bound = m_max;

    const int cap = worker_cap();
    std::vector<HermitianForm> powers;  // R^m (x) P for m = 0..m_max, built lazily
    powers.push_back(P);

    int found = -1;
    for (int base = 0; base <= m_max && found < 0; base += cap) {
        int hi = std::min(base + cap - 1, m_max);
        while ((int)powers.size() <= hi) powers.push_back(product(powers.back(), R));
        std::vector<std::future<bool>> checks;
        for (int m = base; m <= hi; ++m)
            checks.push_back(std::async(cap > 1 ? std::launch::async : std::launch::deferred,
                                        [&powers, m] { return psd_exact(powers[m]); }));
        for (int m = base; m <= hi; ++m) {
            bool ok = checks[m - base].get();
            report.min_eigenvalue_trace.push_back(min_eigenvalue(powers[m]));
            if (ok && found < 0) { found = m; break; }
        }
    }

    if (found >= 0) {
        report.verdict = Verdict::CertifiedQsn;
        report.minimal_exponent = found;
        report.witness_sections = sos_decomposition(powers[found]);
    } else {
        report.verdict = Verdict::Inconclusive;
    }
    return report;
}

static std::vector<std::complex<double>> random_sphere_point(std::mt19937& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::complex<double>> v(dim);
    double n2 = 0;
    do {
        n2 = 0;
        for (auto& z : v) {
            z = {gauss(rng), gauss(rng)};
            n2 += std::norm(z);
        }
    } while (n2 < 1e-12);
    double inv = 1.0 / std::sqrt(n2);
    for (auto& z : v) z *= inv;
    return v;
}

RatioEstimate modulus_ratio_estimate(const HermitianForm& P, const DistinguishedBasis& basis,
                                     const SamplingPlan& plan) {
    if (plan.sphere_samples <= 0 && plan.extra_points.empty())
        throw std::invalid_argument("modulus_ratio_estimate: empty sampling plan");
    FloatForm pf = FloatForm::of(P);
    FloatForm mf = modulus(P, basis);
    std::mt19937 rng(plan.seed);
    RatioEstimate out;
    bool any = false;
    auto consider = [&](const std::vector<std::complex<double>>& v) {
        double p = pf.eval_diag(v);
        if (p == 0.0 || std::abs(p) < 1e-280) return;  // zero of P, filtered
        double ratio = mf.eval_diag(v) / p;
        any = true;
        if (ratio > out.sup_estimate || out.arg_max.empty()) {
            out.sup_estimate = ratio;
            out.arg_max = v;
        }
    };
    for (int i = 0; i < plan.sphere_samples; ++i) consider(random_sphere_point(rng, P.n + 1));
    for (const auto& v : plan.extra_points) {
        if ((int)v.size() != P.n + 1)
            throw std::invalid_argument("modulus_ratio_estimate: point dimension mismatch");
        consider(v);
    }
    out.degenerate = !any;
    return out;
}

Scalar modulus_ratio_exact_diagonal(const HermitianForm& P, const std::vector<Scalar>& v) {
    if (!P.is_diagonal())
        throw std::invalid_argument("modulus_ratio_exact_diagonal: matrix must be diagonal");
    Scalar num, den;
    for (const auto& [key, c] : P.C) {
        if (!c.is_real()) throw std::invalid_argument("diagonal entries must be real");
        Scalar m2;
        {
            Scalar mono(1);
            for (std::size_t i = 0; i < key.first.size(); ++i)
                for (int e = 0; e < key.first[i]; ++e) mono *= v[i];
            m2 = Scalar(mono.norm2());
        }
        den += c * m2;
        num += Scalar(abs(c.re)) * m2;
    }
    if (den.is_zero()) throw std::invalid_argument("modulus_ratio_exact_diagonal: point is a zero of P");
    return num / den;
}

SgcsReport sgcs_check(const HermitianForm& R, int pair_samples, unsigned seed) {
    if (R.is_zero()) throw std::invalid_argument("sgcs_check: zero form");
    if (pair_samples < 1) throw std::invalid_argument("sgcs_check: pair_samples >= 1 required");
    std::mt19937 rng(seed);
    const int dim = R.n + 1;
    SgcsReport rep;
    rep.s1_pass = rep.s2_pass = rep.s3_pass = true;
    rep.worst_diagonal = std::numeric_limits<double>::infinity();
    rep.worst_offfiber_det = std::numeric_limits<double>::infinity();
    rep.worst_samefiber_det = 0;
    rep.worst_curvature_eigenvalue = std::numeric_limits<double>::infinity();

    // S1 diagonal positivity: random sphere points plus the coordinate points
    std::vector<std::vector<std::complex<double>>> singles;
    for (int i = 0; i < dim; ++i) {
        std::vector<std::complex<double>> e(dim, 0.0);
        e[i] = 1.0;
        singles.push_back(e);
    }
    for (int i = 0; i < pair_samples; ++i) singles.push_back(random_sphere_point(rng, dim));
    for (const auto& v : singles) {
        double p = eval_diag(R, v);
        rep.worst_diagonal = std::min(rep.worst_diagonal, p);
        if (p <= 0) rep.s1_pass = false;
    }

    // S1 pairs (Theta_2 PSD) and S2 determinant signs
    for (int i = 0; i < pair_samples; ++i) {
        auto v = random_sphere_point(rng, dim);
        auto w = random_sphere_point(rng, dim);
        auto theta = gcurvature(R, {v, w});
        double det = (theta[0][0] * theta[1][1] - theta[0][1] * theta[1][0]).real();
        double scale = std::abs(theta[0][0].real() * theta[1][1].real()) + 1e-300;
        if (theta[0][0].real() < 0 || theta[1][1].real() < 0 || det < -1e-9 * scale)
            rep.s1_pass = false;
        rep.worst_offfiber_det = std::min(rep.worst_offfiber_det, det);
        if (det <= 1e-9 * scale) rep.s2_pass = false;  // random pairs are off-fiber a.s.

        // same-fiber pair: w = lambda v must degenerate
        std::uniform_real_distribution<double> unif(0.25, 2.0);
        std::complex<double> lambda(unif(rng), unif(rng));
        auto w2 = v;
        for (auto& z : w2) z *= lambda;
        auto theta2 = gcurvature(R, {v, w2});
        double det2 = std::abs((theta2[0][0] * theta2[1][1] - theta2[0][1] * theta2[1][0]).real());
        double scale2 = std::abs(theta2[0][0].real() * theta2[1][1].real()) + 1e-300;
        rep.worst_samefiber_det = std::max(rep.worst_samefiber_det, det2 / scale2);
        if (det2 > 1e-9 * scale2) rep.s2_pass = false;
    }

    // S3 curvature positivity via exact differentiation of the chart polynomial
    const int nv = R.n;
    if (nv >= 1) {
        for (int chart = 0; chart <= R.n; ++chart) {
            MixedHermPoly r = dehomogenize(R, chart);
            std::vector<MixedHermPoly> dr(nv), drb(nv);
            std::vector<std::vector<MixedHermPoly>> ddr(nv, std::vector<MixedHermPoly>(nv));
            for (int i = 0; i < nv; ++i) {
                dr[i] = r.derivative(i, true);
                drb[i] = r.derivative(i, false);
                for (int j = 0; j < nv; ++j) ddr[i][j] = dr[i].derivative(j, false);
            }
            std::uniform_real_distribution<double> box(-1.5, 1.5);
            for (int s = 0; s < pair_samples; ++s) {
                std::vector<std::complex<double>> t(nv);
                for (auto& z : t) z = {box(rng), box(rng)};
                double rv = r.eval(t);
                if (rv <= 0) {
                    rep.s3_pass = false;
                    rep.worst_curvature_eigenvalue = std::min(rep.worst_curvature_eigenvalue, rv);
                    continue;
                }
                HermMatrix H(nv);
                for (int i = 0; i < nv; ++i)
                    for (int j = 0; j < nv; ++j) {
                        std::complex<double> di = dr[i].eval_complex(t);
                        std::complex<double> dj = drb[j].eval_complex(t);
                        std::complex<double> dij = ddr[i][j].eval_complex(t);
                        H.at(i, j) = (dij * rv - di * dj) / (rv * rv);
                    }
                // symmetrize away roundoff before the eigen call
                for (int i = 0; i < nv; ++i)
                    for (int j = 0; j < i; ++j) {
                        auto avg = 0.5 * (H.at(i, j) + std::conj(H.at(j, i)));
                        H.at(i, j) = avg;
                        H.at(j, i) = std::conj(avg);
                    }
                double lam_min = jacobi_eigh(H).eigenvalues.back();
                rep.worst_curvature_eigenvalue = std::min(rep.worst_curvature_eigenvalue, lam_min);
                if (lam_min <= 0) rep.s3_pass = false;
            }
        }
    }
    return rep;
}

namespace {

// gradient-free minimization of the chart-normalized diagonal on P^1
struct ChartMinimum {
    std::complex<double> t;
    double value;
};

ChartMinimum minimize_chart(const MixedHermPoly& p, int degree, std::complex<double> start) {
    auto f = [&](std::complex<double> t) {
        double v = p.eval(std::vector<std::complex<double>>{t});
        double w = 1.0 + std::norm(t);
        return v / std::pow(w, degree);
    };
    std::complex<double> cur = start;
    double best = f(cur);
    double step = 0.5;
    static const std::complex<double> dirs[8] = {
        {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    while (step > 1e-11) {
        bool improved = false;
        for (const auto& d : dirs) {
            std::complex<double> cand = cur + step * d;
            double v = f(cand);
            if (v < best) {
                best = v;
                cur = cand;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return {cur, best};
}

}  // namespace

CertificateReport qsn_decide_p1(const HermitianForm& P, int m_max, const SamplingPlan& zero_search) {
    if (P.n != 1) throw std::invalid_argument("qsn_decide_p1: form must live on P^1");
    if (P.is_zero()) throw std::invalid_argument("qsn_decide_p1: zero form");

    DivisorP1 div = base_divisor_factor(P);
    const HermitianForm& resid = div.residual;

    CertificateReport report = quillen_minimal_exponent(resid, norm_power(1, 1), m_max);
    report.witness_divisor = div.s_D;
    if (report.verdict == Verdict::CertifiedQsn) return report;

    // exact zero search on the free residual
    auto confirm_center = [&](const P1Point& c) -> bool {
        auto exp = local_expansion(resid, c);
        if (exp.coeffs.empty()) return false;
        auto jet = jet_check(exp);
        if (jet.mu > 0 || !jet.pass) {
            // a free form with a zero (mu > 0) or a jet failure is not QSN
            report.verdict = Verdict::CertifiedNotQsn;
            report.obstruction = Obstruction{c, jet, jet.mu > 0, std::nullopt};
            return true;
        }
        return false;
    };

    // canonical rational centers first, so simple obstructions get reported
    // at simple points
    for (const mpq_class& c : {mpq_class(0), mpq_class(1), mpq_class(-1), mpq_class(1, 2),
                               mpq_class(-1, 2), mpq_class(2), mpq_class(-2)})
        if (confirm_center(P1Point::finite(c))) return report;
    if (confirm_center(P1Point::infinity())) return report;

    MixedHermPoly p_chart = dehomogenize(resid, 1);
    std::vector<std::complex<double>> starts;
    for (int ring = 0; ring < 8; ++ring)
        for (int k = 0; k < 8; ++k) {
            double radius = 0.2 * (ring + 1);
            double ang = 2 * M_PI * k / 8.0;
            starts.push_back(std::polar(radius, ang));
        }
    double scale = 0;
    for (const auto& [key, c] : resid.C) scale = std::max(scale, std::abs(c.to_complex()));
    for (const auto& s : starts) {
        auto m = minimize_chart(p_chart, resid.d, s);
        if (m.value > 1e-12 * scale) continue;
        auto re = snap_to_rational(m.t.real(), 1000000L, 1e-7);
        auto im = snap_to_rational(m.t.imag(), 1000000L, 1e-7);
        if (!re || !im) continue;
        Scalar t(*re, *im);
        if (t.is_real()) {
            if (confirm_center(P1Point::finite(t.re))) return report;
        } else {
            Scalar val = eval_pair(resid, {t, Scalar(1)}, {t, Scalar(1)});
            if (val.is_zero()) {
                report.verdict = Verdict::CertifiedNotQsn;
                report.obstruction = Obstruction{P1Point::finite(0), JetResult{}, true, t};
                return report;
            }
        }
    }
    (void)zero_search;
    report.verdict = Verdict::Inconclusive;
    return report;
}

}  // namespace hermcert
