#include <doctest.h>

#include <random>

#include "hermcert/parse.hpp"
#include "hermcert/spectra.hpp"

using namespace hermcert;

TEST_SUITE("spectra") {

TEST_CASE("circle form: eigenvalues (1, 1, -2) and signature (2, 1)") {
    HermitianForm P = parse_form("(sq(z0)-sq(z1))^2").form;
    auto eig = jacobi_eigh(to_float(P));
    REQUIRE(eig.eigenvalues.size() == 3);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(-2.0));
    CHECK(signature(P) == std::pair<int, int>(2, 1));
    CHECK(!psd_exact(P));
}

TEST_CASE("norm powers are exactly PSD") {
    CHECK(psd_exact(norm_power(1, 4)));
    CHECK(psd_exact(norm_power(2, 3)));
}

TEST_CASE("jacobi eigenvectors diagonalize random Hermitian matrices") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 10; ++trial) {
        int N = 3 + trial;
        HermMatrix M(N);
        for (int i = 0; i < N; ++i) {
            M.at(i, i) = u(rng);
            for (int j = i + 1; j < N; ++j) {
                M.at(i, j) = {u(rng), u(rng)};
                M.at(j, i) = std::conj(M.at(i, j));
            }
        }
        auto eig = jacobi_eigh(M);
        // residual ||M U - U diag(lambda)||
        double worst = 0;
        for (int col = 0; col < N; ++col)
            for (int i = 0; i < N; ++i) {
                std::complex<double> mu = 0;
                for (int k = 0; k < N; ++k) mu += M.at(i, k) * eig.U.at(k, col);
                worst = std::max(worst, std::abs(mu - eig.eigenvalues[col] * eig.U.at(i, col)));
            }
        CHECK(worst < 1e-10);
        for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i)
            CHECK(eig.eigenvalues[i - 1] >= eig.eigenvalues[i]);
    }
}

TEST_CASE("jacobi rejects non-Hermitian input") {
    HermMatrix M(2);
    M.at(0, 1) = 1.0;
    M.at(1, 0) = 2.0;
    CHECK_THROWS(jacobi_eigh(M));
}

TEST_CASE("rational inertia handles zero-diagonal blocks exactly") {
    // [[0, a], [conj(a), 0]] has inertia (1, 1) for any a != 0
    std::vector<std::vector<Scalar>> M{{Scalar(0), Scalar(mpq_class(2), mpq_class(3))},
                                       {Scalar(mpq_class(2), mpq_class(-3)), Scalar(0)}};
    Inertia in = rational_inertia(M);
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    CHECK(in.zero == 0);
}

TEST_CASE("rational inertia counts zero eigenvalues") {
    // rank-1 PSD: [[1, 1], [1, 1]]
    std::vector<std::vector<Scalar>> M{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}};
    Inertia in = rational_inertia(M);
    CHECK(in.positive == 1);
    CHECK(in.zero == 1);
    CHECK(in.negative == 0);
}

TEST_CASE("signature of the Quillen test form") {
    HermitianForm P = parse_form("sq(z0^2)+sq(z1^2)-3/2*sq(z0*z1)").form;
    CHECK(signature(P) == std::pair<int, int>(2, 1));
}

TEST_CASE("exact matrix round-trips entries in graded-lex order") {
    HermitianForm P = parse_form("sq(z0^2)+sq(z1^2)-3/2*sq(z0*z1)").form;
    auto M = exact_matrix(P);
    REQUIRE(M.size() == 3);
    CHECK(M[0][0] == Scalar(1));
    CHECK(M[1][1] == Scalar(mpq_class(-3, 2)));
    CHECK(M[2][2] == Scalar(1));
}

}  // TEST_SUITE
