// Acceptance gate: one line per criterion, nonzero exit on any failure.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>

#include "hermcert/bergman.hpp"
#include "hermcert/parse.hpp"

using namespace hermcert;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool check(bool ok, const char* what) {
    if (!ok) std::fprintf(stderr, "  failed: %s\n", what);
    return ok;
}

#define REQ(cond) ok = check((cond), #cond) && ok

// --- 1: two-step blowup replay -------------------------------------------

bool criterion1() {
    bool ok = true;
    auto t0 = Clock::now();
    MixedExpression p = parse_mixed_form("sq(x1^4) + (sq(x1) - sq(x2^2))^2");
    ChainSpec chain = parse_chain("x1=y1*y2,x2=y2 | y1=t1,y2=t1*t2", p.vars);
    BlowupTrace trace = blowup_chain(p.poly, chain.steps, {{Scalar(0), Scalar(1)}});

    MixedHermPoly p1 =
        parse_mixed_form("sq(y2^2)*((sq(y1^2*y2))^2 + (sq(y1) - sq(y2))^2)").poly;
    MixedHermPoly p2 =
        parse_mixed_form("(sq(t1^2*t2))^2*((sq(t1^2*t2))^2 + (1 - sq(t2))^2)").poly;
    REQ(trace.steps.size() == 2);
    REQ(trace.step_product(0) == p1);
    REQ(trace.step_product(1) == p2);
    REQ(trace.probe_values.size() == 1 && trace.probe_values[0].second == Scalar(0));
    REQ(seconds_since(t0) < 1.0);
    return ok;
}

// --- 2: curve-pullback replay --------------------------------------------

bool criterion2() {
    bool ok = true;
    auto t0 = Clock::now();
    HermitianForm P = parse_form("sq(z0^4) + (sq(z0*z2) - sq(z1^2))^2").form;
    std::vector<HoloSection> comps{parse_section("z0^2", 1), parse_section("z0*z1", 1),
                                   parse_section("z0*z1 + z1^2", 1)};
    HermitianForm Q = pullback(P, RationalCurve(2, std::move(comps)));

    HermitianForm expected = product(
        from_squares({{1, parse_section("z0^4", 1)}}),
        parse_form("(sq(z0))^4 + (sq(z0*z1 + z1^2) - (sq(z1))^2)^2").form);
    REQ(Q == expected);

    DivisorP1 div = base_divisor_factor(Q);
    REQ(div.s_D == parse_section("z0^4", 1));
    REQ(product(from_squares({{1, div.s_D}}), div.residual) == Q);

    JetResult jet = jet_check(local_expansion(div.residual, P1Point::finite(0)));
    REQ(!jet.pass);
    REQ(jet.mu == 2);
    REQ(jet.lowest_block.at({2, 0}) == Scalar(1));
    REQ(jet.lowest_block.at({1, 1}) == Scalar(2));
    REQ(jet.lowest_block.at({0, 2}) == Scalar(1));

    CertificateReport rep = qsn_decide_p1(Q, 12, {});
    REQ(rep.verdict == Verdict::CertifiedNotQsn);
    REQ(seconds_since(t0) < 1.0);
    return ok;
}

// --- 3: Quillen exponent with a brute-force oracle ------------------------

std::vector<mpq_class> convolved_diagonal(int m) {
    std::vector<mpq_class> binom(m + 1);
    binom[0] = 1;
    for (int j = 1; j <= m; ++j) binom[j] = binom[j - 1] * (m - j + 1) / j;
    std::vector<mpq_class> p{1, mpq_class(-3, 2), 1};
    std::vector<mpq_class> out(m + 3, 0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b <= m; ++b) out[a + b] += p[a] * binom[b];
    return out;
}

bool criterion3() {
    bool ok = true;
    auto t0 = Clock::now();
    HermitianForm P = parse_form("sq(z0^2)+sq(z1^2)-3/2*sq(z0*z1)").form;
    HermitianForm R = norm_power(1, 1);

    CertificateReport rep = quillen_minimal_exponent(P, R, 10);
    REQ(rep.verdict == Verdict::CertifiedQsn);
    REQ(rep.minimal_exponent.has_value() && *rep.minimal_exponent == 5);

    // m = 4: not PSD, with the specific negative diagonal entry
    HermitianForm C4 = product(P, norm_power(1, 4));
    REQ(!psd_exact(C4));
    REQ(C4.entry({3, 3}, {3, 3}) == Scalar(-1));
    REQ(convolved_diagonal(4)[3] == -1);

    // m = 5: PSD with minimum diagonal entry exactly 0
    HermitianForm C5 = product(P, norm_power(1, 5));
    REQ(psd_exact(C5));
    MonomialBasis diag_basis(1, 7);
    mpq_class min_entry = 1;
    for (std::size_t r = 0; r < diag_basis.size(); ++r) {
        MultiIndex a = diag_basis.unrank(r);
        min_entry = std::min(min_entry, C5.entry(a, a).re);
    }
    REQ(min_entry == 0);

    // independent oracle: first m with a nonnegative convolved diagonal
    int oracle = -1;
    for (int m = 0; m <= 10 && oracle < 0; ++m) {
        bool nonneg = true;
        for (const auto& q : convolved_diagonal(m)) nonneg = nonneg && q >= 0;
        if (nonneg) oracle = m;
    }
    REQ(oracle == 5);
    REQ(seconds_since(t0) < 1.0);
    return ok;
}

// --- 4: circle obstruction ------------------------------------------------

bool criterion4() {
    bool ok = true;
    auto t0 = Clock::now();
    HermitianForm P = parse_form("(sq(z0)-sq(z1))^2").form;
    REQ(!psd_exact(P));  // m = 0
    for (int m = 1; m <= 50; ++m) REQ(!psd_exact(product(P, norm_power(1, m))));

    JetResult jet = jet_check(local_expansion(P, P1Point::finite(1)));
    REQ(!jet.pass);

    DistinguishedBasis b = distinguished_basis(P);
    SamplingPlan plan;
    plan.sphere_samples = 64;
    // point with |v1|^2 = 1 - eps, eps = 1e-3: ratio (2 - eps)^2 / eps^2
    plan.extra_points = {{1.0, std::sqrt(1.0 - 1e-3)}};
    RatioEstimate est = modulus_ratio_estimate(P, b, plan);
    REQ(est.sup_estimate > 1e6);
    REQ(est.sup_estimate > 2e6 && est.sup_estimate < 8e6);
    REQ(seconds_since(t0) < 5.0);
    return ok;
}

// --- 5: exact modulus-ratio divergence ------------------------------------

bool criterion5() {
    bool ok = true;
    auto t0 = Clock::now();
    HermitianForm P = parse_form("sq(z0^4) + (sq(z0*z2) - sq(z1^2))^2").form;
    std::vector<Scalar> v{Scalar(mpq_class(1, 100)), Scalar(mpq_class(1, 10)), Scalar(1)};
    REQ(modulus_ratio_exact_diagonal(P, v) == Scalar(mpq_class(400000001)));
    REQ(seconds_since(t0) < 1.0);
    return ok;
}

// --- 6: Bergman exactness -------------------------------------------------

double beta_oracle(int j, int m) {
    double v = 1.0;
    for (int i = 2; i <= j; ++i) v *= i;
    for (int i = 2; i <= m - j; ++i) v *= i;
    for (int i = 2; i <= m + 1; ++i) v /= i;
    return v;
}

bool criterion6() {
    bool ok = true;
    auto t0 = Clock::now();
    HermitianForm R = norm_power(1, 1), W = HermitianForm::unit(1);

    for (int m = 1; m <= 20; ++m) {
        KernelData K = gram_matrix(WeightSpec::unchecked(R, W, m));
        for (int j = 0; j <= m; ++j) {
            REQ(std::abs(K.gram.at(j, j).real() - beta_oracle(j, m)) < 1e-9);
            for (int k = 0; k < j; ++k) REQ(std::abs(K.gram.at(j, k)) < 1e-9);
        }
        if (m == 20) {
            for (int i = 0; i < 20; ++i) {
                std::complex<double> t = std::polar(0.1 + 0.12 * i, 0.31 * i);
                double val = kernel_eval(K, t, t).real() / std::pow(1.0 + std::norm(t), m);
                REQ(std::abs(val - (m + 1)) < 1e-8 * (m + 1));
            }
        }
    }

    AsymptoticsTable tab =
        diagonal_asymptotics(R, W, {8, 12, 16, 20}, {{0.2, 0.1}, {0.7, -0.3}, {1.5, 0.4}});
    for (double b1 : tab.b1) REQ(std::abs(b1 + 1.0) < 1e-2);
    REQ(std::abs(tab.b1_mean + 1.0) < 1e-2);

    WeightSpec spec = WeightSpec::unchecked(R, W, 6);
    KernelData K6 = gram_matrix(spec);
    HoloSection s(1, 6);
    s.add_term({3, 3}, Scalar(2));
    s.add_term({6, 0}, Scalar(mpq_class(1), mpq_class(1)));
    s.add_term({0, 6}, Scalar(mpq_class(-1, 3)));
    REQ(reproducing_error(K6, spec, s) < 1e-7);
    REQ(seconds_since(t0) < 60.0);
    return ok;
}

// --- 7: cross-module onset consistency ------------------------------------

bool criterion7() {
    bool ok = true;
    auto t0 = Clock::now();
    HermitianForm P = parse_form("sq(z0^2)+sq(z1^2)-3/2*sq(z0*z1)").form;
    HermitianForm R = norm_power(1, 1);
    CertificateReport rep = quillen_minimal_exponent(P, R, 10);
    int onset = cm_psd_onset(R, P, 10);
    REQ(rep.minimal_exponent.has_value());
    REQ(*rep.minimal_exponent == onset);
    REQ(onset == 5);
    REQ(seconds_since(t0) < 5.0);
    return ok;
}

// --- 8: randomized property suites ----------------------------------------

bool criterion8() {
    auto t0 = Clock::now();
    doctest::Context ctx;
    ctx.addFilter("test-suite", "properties");
    ctx.setOption("no-intro", true);
    ctx.setOption("no-version", true);
    ctx.setOption("duration", false);
    int rc = ctx.run();
    bool ok = check(rc == 0, "properties suite green");
    ok = check(seconds_since(t0) < 120.0, "properties runtime < 120 s") && ok;
    return ok;
}

}  // namespace

int main() {
    bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    for (int i = 0; i < 8; ++i) {
        bool ok = criteria[i]();
        std::printf("criterion %d: %s\n", i + 1, ok ? "PASS" : "FAIL");
        std::fflush(stdout);
        all = all && ok;
    }
    return all ? 0 : 1;
}
