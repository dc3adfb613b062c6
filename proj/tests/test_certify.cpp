#include <doctest.h>

#include <cstdlib>

#include "hermcert/certify.hpp"
#include "hermcert/parse.hpp"

using namespace hermcert;

namespace {

// independent brute-force oracle: exact diagonal of the coefficient
// convolution (1, -3/2, 1) * binomial row of (a+b)^m
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

const char* kQuillen = "sq(z0^2)+sq(z1^2)-3/2*sq(z0*z1)";

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("minimal exponent of the test pair is 5") {
    HermitianForm P = parse_form(kQuillen).form;
    CertificateReport rep = quillen_minimal_exponent(P, norm_power(1, 1), 10);
    CHECK(rep.verdict == Verdict::CertifiedQsn);
    REQUIRE(rep.minimal_exponent.has_value());
    CHECK(*rep.minimal_exponent == 5);
    REQUIRE(rep.witness_sections.has_value());
    CHECK(!rep.witness_sections->empty());
    CHECK(rep.min_eigenvalue_trace.size() == 6);

    // brute-force oracle: first m with nonnegative convolved diagonal
    int oracle = -1;
    for (int m = 0; m <= 10 && oracle < 0; ++m) {
        auto diag = convolved_diagonal(m);
        bool ok = true;
        for (const auto& q : diag) ok = ok && q >= 0;
        if (ok) oracle = m;
    }
    CHECK(oracle == 5);
}

TEST_CASE("the m = 4 product has diagonal entry exactly -1; m = 5 minimum is 0") {
    HermitianForm P = parse_form(kQuillen).form;
    HermitianForm C4 = product(P, norm_power(1, 4));
    CHECK(C4.entry({3, 3}, {3, 3}) == Scalar(-1));
    CHECK(!psd_exact(C4));
    HermitianForm C5 = product(P, norm_power(1, 5));
    CHECK(psd_exact(C5));
    MonomialBasis basis(1, 7);
    mpq_class min_entry = 1;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        MultiIndex a = basis.unrank(r);
        min_entry = std::min(min_entry, C5.entry(a, a).re);
    }
    CHECK(min_entry == 0);
}

TEST_CASE("monotonicity once certified") {
    HermitianForm P = parse_form(kQuillen).form;
    for (int m = 5; m <= 8; ++m) CHECK(psd_exact(product(P, norm_power(1, m))));
}

TEST_CASE("worker cap from the environment does not change the result") {
    HermitianForm P = parse_form(kQuillen).form;
    setenv("HERMCERT_THREADS", "1", 1);
    auto one = quillen_minimal_exponent(P, norm_power(1, 1), 10);
    setenv("HERMCERT_THREADS", "4", 1);
    auto four = quillen_minimal_exponent(P, norm_power(1, 1), 10);
    unsetenv("HERMCERT_THREADS");
    CHECK(one.minimal_exponent == four.minimal_exponent);
}

TEST_CASE("exact modulus ratio at the worked sample point") {
    HermitianForm P = parse_form("sq(z0^4) + (sq(z0*z2) - sq(z1^2))^2").form;
    std::vector<Scalar> v{Scalar(mpq_class(1, 100)), Scalar(mpq_class(1, 10)), Scalar(1)};
    Scalar ratio = modulus_ratio_exact_diagonal(P, v);
    CHECK(ratio == Scalar(mpq_class(400000001)));
}

TEST_CASE("modulus ratio is 1 for PSD forms") {
    HermitianForm R = norm_power(1, 2);
    DistinguishedBasis b = distinguished_basis(R);
    CHECK(b.g.empty());
    SamplingPlan plan;
    plan.sphere_samples = 64;
    RatioEstimate est = modulus_ratio_estimate(R, b, plan);
    CHECK(est.sup_estimate == doctest::Approx(1.0));
}

TEST_CASE("ratio estimate blows up near the circle zero") {
    HermitianForm P = parse_form("(sq(z0)-sq(z1))^2").form;
    DistinguishedBasis b = distinguished_basis(P);
    SamplingPlan plan;
    plan.sphere_samples = 16;
    // |v1|^2 = 1 - eps, so the ratio is (2 - eps)^2 / eps^2
    plan.extra_points = {{1.0, std::sqrt(1.0 - 1e-3)}};
    RatioEstimate est = modulus_ratio_estimate(P, b, plan);
    CHECK(est.sup_estimate > 2e6);
    CHECK(est.sup_estimate < 8e6);
}

TEST_CASE("boundedness verdict is stable under rebasing") {
    // the modulus value depends on the distinguished basis (hyperbolic
    // rebasing rescales it), but the boundedness verdict does not
    HermitianForm P = parse_form("(sq(z0)-sq(z1))^2").form;
    DistinguishedBasis b = distinguished_basis(P);
    SamplingPlan plan;
    plan.sphere_samples = 128;
    plan.seed = 5;
    double base = modulus_ratio_estimate(P, b, plan).sup_estimate;
    CHECK(base > 1e4);
    for (unsigned seed : {2u, 9u}) {
        double re = modulus_ratio_estimate(P, rebase_distinguished(b, seed), plan).sup_estimate;
        CHECK(re > 1e4);
        CHECK(re < 100 * base);
    }
    // bounded case: PSD forms have empty g, rebasing keeps the ratio at 1
    HermitianForm R = norm_power(1, 2);
    DistinguishedBasis br = distinguished_basis(R);
    for (unsigned seed : {2u, 9u}) {
        double re = modulus_ratio_estimate(R, rebase_distinguished(br, seed), plan).sup_estimate;
        CHECK(re == doctest::Approx(1.0));
    }
}

TEST_CASE("sgcs holds for norm powers and fails for the circle form") {
    CHECK(sgcs_check(norm_power(1, 1), 40, 3).pass());
    CHECK(sgcs_check(norm_power(2, 1), 30, 3).pass());
    CHECK(!sgcs_check(parse_form("(sq(z0)-sq(z1))^2").form, 40, 3).pass());
}

TEST_CASE("qsn pipeline: PSD forms certify at exponent 0") {
    CertificateReport rep = qsn_decide_p1(parse_form("sq(z0^2)+sq(z1^2)").form, 10, {});
    CHECK(rep.verdict == Verdict::CertifiedQsn);
    CHECK(*rep.minimal_exponent == 0);
}

TEST_CASE("qsn pipeline: circle is certified-not with the zero at [1:1]") {
    CertificateReport rep = qsn_decide_p1(parse_form("(sq(z0)-sq(z1))^2").form, 20, {});
    CHECK(rep.verdict == Verdict::CertifiedNotQsn);
    REQUIRE(rep.obstruction.has_value());
    CHECK(rep.obstruction->point == P1Point::finite(1));
    CHECK(rep.obstruction->exact_zero);
    CHECK(!rep.obstruction->jet.pass);
}

TEST_CASE("qsn pipeline: pulled-back quartic is certified-not via [0:1]") {
    HermitianForm P = parse_form("sq(z0^4) + (sq(z0*z2) - sq(z1^2))^2").form;
    std::vector<HoloSection> comps{parse_section("z0^2", 1), parse_section("z0*z1", 1),
                                   parse_section("z0*z1 + z1^2", 1)};
    HermitianForm Q = pullback(P, RationalCurve(2, std::move(comps)));
    CertificateReport rep = qsn_decide_p1(Q, 12, {});
    CHECK(rep.verdict == Verdict::CertifiedNotQsn);
    REQUIRE(rep.witness_divisor.has_value());
    CHECK(*rep.witness_divisor == parse_section("z0^4", 1));
    REQUIRE(rep.obstruction.has_value());
    CHECK(rep.obstruction->point == P1Point::finite(0));
}

TEST_CASE("qsn pipeline: strictly positive forms certify for moderate m") {
    for (const char* text : {"sq(z0^2)+sq(z1^2)", "sq(z0^2)+sq(z1^2)-1/2*sq(z0*z1)",
                             "2*sq(z0*z1)+sq(z0^2+z1^2)"}) {
        CertificateReport rep = qsn_decide_p1(parse_form(text).form, 50, {});
        CHECK(rep.verdict == Verdict::CertifiedQsn);
    }
}

}  // TEST_SUITE
