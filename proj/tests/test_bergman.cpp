#include <doctest.h>

#include "hermcert/bergman.hpp"
#include "hermcert/parse.hpp"

using namespace hermcert;

namespace {

double beta_oracle(int j, int m) {
    // j! (m-j)! / (m+1)!
    double v = 1.0;
    for (int i = 2; i <= j; ++i) v *= i;
    for (int i = 2; i <= m - j; ++i) v *= i;
    for (int i = 2; i <= m + 1; ++i) v /= i;
    return v;
}

WeightSpec fubini_study(int m) {
    return WeightSpec::unchecked(norm_power(1, 1), HermitianForm::unit(1), m);
}

}  // namespace

TEST_SUITE("bergman") {

TEST_CASE("weight validation") {
    CHECK_THROWS(WeightSpec::unchecked(norm_power(2, 1), HermitianForm::unit(2), 3));
    CHECK_THROWS(WeightSpec::unchecked(norm_power(1, 1), HermitianForm::unit(1), 0));
    // circle form is not SGCS, so it is rejected as a metric form
    CHECK_THROWS(WeightSpec::checked(parse_form("(sq(z0)-sq(z1))^2").form,
                                     HermitianForm::unit(1), 3));
    // indefinite weight form is not strictly positive
    CHECK_THROWS(WeightSpec::checked(norm_power(1, 1),
                                     parse_form("(sq(z0)-sq(z1))^2").form
                                         - parse_form("1/2*sq(z0*z1)").form,
                                     3));
    CHECK_NOTHROW(WeightSpec::checked(norm_power(1, 1), norm_power(1, 1), 3));
}

TEST_CASE("Fubini-Study Gram entries match the Beta-integral oracle") {
    for (int m : {1, 3, 7}) {
        KernelData K = gram_matrix(fubini_study(m));
        REQUIRE(K.basis_dim == m + 1);
        for (int j = 0; j <= m; ++j)
            CHECK(K.gram.at(j, j).real() == doctest::Approx(beta_oracle(j, m)).epsilon(1e-10));
        CHECK(K.quadrature_error_estimate < 1e-10);
    }
    // the m = 1 case in closed form: diag(1/2, 1/2)
    KernelData K1 = gram_matrix(fubini_study(1));
    CHECK(K1.gram.at(0, 0).real() == doctest::Approx(0.5));
    CHECK(K1.gram.at(1, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("off-diagonal Gram entries vanish for diagonal weights") {
    KernelData K = gram_matrix(fubini_study(5));
    for (int j = 0; j <= 5; ++j)
        for (int k = 0; k <= 5; ++k)
            if (j != k) CHECK(std::abs(K.gram.at(j, k)) < 1e-10);
}

TEST_CASE("kernel diagonal reproduces m + 1 for Fubini-Study") {
    KernelData K = gram_matrix(fubini_study(4));
    // K(0,0) with unit weight at the origin is m + 1
    CHECK(kernel_eval(K, 0.0, 0.0).real() == doctest::Approx(5.0));
    for (double r : {0.3, 0.9, 1.7}) {
        std::complex<double> t = std::polar(r, 0.4);
        double rho = kernel_eval(K, t, t).real() / std::pow(1.0 + std::norm(t), 4);
        CHECK(rho == doctest::Approx(5.0).epsilon(1e-8));
    }
}

TEST_CASE("m = 1 kernel value at the origin is 2") {
    KernelData K = gram_matrix(fubini_study(1));
    CHECK(kernel_eval(K, 0.0, 0.0).real() == doctest::Approx(2.0));
}

TEST_CASE("reproducing property holds to quadrature accuracy") {
    WeightSpec spec = fubini_study(6);
    KernelData K = gram_matrix(spec);
    HoloSection s(1, 6);
    s.add_term({3, 3}, Scalar(2));
    s.add_term({6, 0}, Scalar(mpq_class(1), mpq_class(1)));
    s.add_term({0, 6}, Scalar(mpq_class(-1, 3)));
    CHECK(reproducing_error(K, spec, s) < 1e-7);
    HoloSection wrong(1, 4);
    wrong.add_term({2, 2}, Scalar(1));
    CHECK_THROWS(reproducing_error(K, spec, wrong));
}

TEST_CASE("diagonal asymptotics fit b1 = -1 for Fubini-Study") {
    AsymptoticsTable tab = diagonal_asymptotics(norm_power(1, 1), HermitianForm::unit(1),
                                                {4, 6, 8, 10}, {{0.2, 0.1}, {0.7, -0.3}});
    // rho_m = (m+1)/m exactly, so the through-origin fit gives b1 = -1
    for (const auto& row : tab.rows)
        for (double rho : row.rho)
            CHECK(rho == doctest::Approx((row.m + 1.0) / row.m).epsilon(1e-8));
    for (double b1 : tab.b1) CHECK(b1 == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK_THROWS(diagonal_asymptotics(norm_power(1, 1), HermitianForm::unit(1), {4},
                                      {{0.2, 0.1}}));
}

TEST_CASE("a non-trivial weight shifts the Gram but keeps positivity") {
    WeightSpec spec = WeightSpec::unchecked(norm_power(1, 1), norm_power(1, 1), 3);
    KernelData K = gram_matrix(spec);
    CHECK(K.degree == 4);
    for (int j = 0; j < K.basis_dim; ++j) CHECK(K.gram.at(j, j).real() > 0);
}

TEST_CASE("floating convolution onset matches the exact route") {
    HermitianForm P = parse_form("sq(z0^2)+sq(z1^2)-3/2*sq(z0*z1)").form;
    HermitianForm R = norm_power(1, 1);
    CHECK(cm_psd_onset(R, P, 10) == 5);
    CHECK(cm_diagonal_min(R, P, 4) == doctest::Approx(-1.0));
    CHECK(cm_diagonal_min(R, P, 5) == doctest::Approx(0.0));
    CHECK(cm_psd_onset(R, parse_form("(sq(z0)-sq(z1))^2").form, 6) == -1);
}

}  // TEST_SUITE
