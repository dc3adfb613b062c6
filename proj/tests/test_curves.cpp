#include <doctest.h>

#include "hermcert/curves.hpp"
#include "hermcert/parse.hpp"

using namespace hermcert;

namespace {

RationalCurve curve_from(const std::vector<std::string>& comps) {
    std::vector<HoloSection> v;
    for (const auto& c : comps) v.push_back(parse_section(c, 1));
    int n_target = (int)v.size() - 1;
    return RationalCurve(n_target, std::move(v));
}

const char* kQuartic = "sq(z0^4) + (sq(z0*z2) - sq(z1^2))^2";
// residual after pulling back along [x^2, xy, xy + y^2] and removing |x|^8
const char* kResidual = "(sq(z0))^4 + (sq(z0*z1 + z1^2) - (sq(z1))^2)^2";

}  // namespace

TEST_SUITE("curves") {

TEST_CASE("pullback along [x^2, xy, xy+y^2] factors as |x|^8 times the residual") {
    HermitianForm P = parse_form(kQuartic).form;
    HermitianForm Q = pullback(P, curve_from({"z0^2", "z0*z1", "z0*z1 + z1^2"}));
    CHECK(Q.n == 1);
    CHECK(Q.d == 8);
    HermitianForm expected =
        product(from_squares({{1, parse_section("z0^4", 1)}}), parse_form(kResidual).form);
    CHECK(Q == expected);
}

TEST_CASE("base divisor of the pulled-back quartic is x^4") {
    HermitianForm P = parse_form(kQuartic).form;
    HermitianForm Q = pullback(P, curve_from({"z0^2", "z0*z1", "z0*z1 + z1^2"}));
    DivisorP1 div = base_divisor_factor(Q);
    CHECK(div.s_D == parse_section("z0^4", 1));
    CHECK(div.residual == parse_form(kResidual).form);
    // re-verification identity
    CHECK(product(from_squares({{1, div.s_D}}), div.residual) == Q);
}

TEST_CASE("jet of the residual fails at [0:1] with block {1, 2, 1}") {
    HermitianForm Q = parse_form(kResidual).form;
    JetResult jet = jet_check(local_expansion(Q, P1Point::finite(0)));
    CHECK(!jet.pass);
    CHECK(jet.mu == 2);
    REQUIRE(jet.lowest_block.size() == 3);
    CHECK(jet.lowest_block.at({2, 0}) == Scalar(1));
    CHECK(jet.lowest_block.at({1, 1}) == Scalar(2));
    CHECK(jet.lowest_block.at({0, 2}) == Scalar(1));
}

TEST_CASE("jet of |x|^4 at [0:1] passes with c_22 = 1") {
    HermitianForm P = from_squares({{1, parse_section("z0^2", 1)}});
    JetResult jet = jet_check(local_expansion(P, P1Point::finite(0)));
    CHECK(jet.pass);
    CHECK(jet.mu == 4);
    REQUIRE(jet.lowest_block.size() == 1);
    CHECK(jet.lowest_block.at({2, 2}) == Scalar(1));
}

TEST_CASE("circle jet fails at [1:1]") {
    HermitianForm P = parse_form("(sq(z0)-sq(z1))^2").form;
    JetResult jet = jet_check(local_expansion(P, P1Point::finite(1)));
    CHECK(!jet.pass);
    CHECK(jet.mu == 2);
    CHECK(jet.lowest_block.at({1, 1}) == Scalar(2));
}

TEST_CASE("local expansion matches exact evaluation at shifted points") {
    HermitianForm P = parse_form(kResidual).form;
    P1Point c = P1Point::finite(mpq_class(1, 3));
    BidegreeExpansion exp = local_expansion(P, c);
    // sum c_jk t^j conj(t)^k at t = 1/5 must equal P(1/3 + 1/5, 1)
    Scalar t(mpq_class(1, 5));
    Scalar total;
    for (const auto& [jk, coef] : exp.coeffs) {
        Scalar term = coef;
        for (int j = 0; j < jk.first; ++j) term *= t;
        for (int k = 0; k < jk.second; ++k) term *= t.conj();
        total += term;
    }
    std::vector<Scalar> v{Scalar(mpq_class(1, 3) + mpq_class(1, 5)), Scalar(1)};
    CHECK(total == eval_diag(P, v));
}

TEST_CASE("expansion at infinity uses the conjugate chart") {
    HermitianForm P = from_squares({{1, parse_section("z1^2", 1)}});  // |y^2|^2
    JetResult jet = jet_check(local_expansion(P, P1Point::infinity()));
    CHECK(jet.pass);
    CHECK(jet.mu == 4);
}

TEST_CASE("binary gcd and division with y-multiplicity bookkeeping") {
    HoloSection a = parse_section("z0^2*z1 - z0*z1^2", 1);  // xy(x - y)
    HoloSection b = parse_section("z0^3*z1 - z0*z1^3", 1);  // xy(x-y)(x+y)
    HoloSection g = binary_gcd({a, b});
    CHECK(g == parse_section("z0^2*z1 - z0*z1^2", 1));
    CHECK(binary_divide(b, g) == parse_section("z0 + z1", 1));
    CHECK_THROWS(binary_divide(a, parse_section("z0 + z1", 1)));
}

TEST_CASE("rational roots of binary forms") {
    // x^2 y (x - y) (x + 2y): roots 0, 1, -2 and [1:0]
    HoloSection s = parse_section("z0^2*z1", 1) * parse_section("z0 - z1", 1) *
                    parse_section("z0 + 2*z1", 1);
    auto roots = rational_roots(s);
    auto has = [&](const P1Point& p) {
        for (const auto& r : roots)
            if (r == p) return true;
        return false;
    };
    CHECK(has(P1Point::finite(0)));
    CHECK(has(P1Point::finite(1)));
    CHECK(has(P1Point::finite(-2)));
    CHECK(has(P1Point::infinity()));
}

TEST_CASE("snap_to_rational finds small-denominator approximants") {
    CHECK(snap_to_rational(1.0 / 3.0, 1000, 1e-9) == mpq_class(1, 3));
    CHECK(snap_to_rational(0.142857142857, 1000, 1e-9) == mpq_class(1, 7));
    CHECK(!snap_to_rational(0.123456789, 10, 1e-9).has_value());
}

TEST_CASE("jpp scan flags the quartic along the worked curve") {
    HermitianForm P = parse_form(kQuartic).form;
    JppReport rep = jpp_scan(P, {curve_from({"z0^2", "z0*z1", "z0*z1 + z1^2"})}, {});
    REQUIRE(rep.failure_found);
    CHECK(rep.failure->center == P1Point::finite(0));
    CHECK(rep.failure->jet.mu == 2);
}

TEST_CASE("jpp scan is clean for a norm power") {
    HermitianForm P = norm_power(2, 1);
    JppReport rep = jpp_scan(P, {curve_from({"z0", "z1", "z0 + z1"})}, {P1Point::finite(2)});
    CHECK(!rep.failure_found);
    CHECK(rep.centers_checked >= 3);
}

}  // TEST_SUITE
