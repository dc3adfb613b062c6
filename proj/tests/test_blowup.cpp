#include <doctest.h>

#include "hermcert/blowup.hpp"
#include "hermcert/parse.hpp"

using namespace hermcert;

TEST_SUITE("blowup") {

TEST_CASE("real-valuedness and dehomogenization") {
    HermitianForm P = parse_form("sq(z0^4) + (sq(z0*z2) - sq(z1^2))^2").form;
    MixedHermPoly p = dehomogenize(P, 2);
    CHECK(p.n_vars == 2);
    CHECK(p.is_real_valued());
    // chart-2 polynomial |x1|^8 + (|x1|^2 - |x2|^4)^2 at (1, 1) is 1
    CHECK(p.eval({Scalar(1), Scalar(1)}) == Scalar(1));
    CHECK(p.eval({Scalar(0), Scalar(1)}) == Scalar(1));
}

TEST_CASE("exact Wirtinger derivatives") {
    // d/dt |t|^2 = conj(t), d/dconj(t) |t|^2 = t
    MixedHermPoly p(1);
    p.add_term({1}, {1}, Scalar(1));
    MixedHermPoly dt = p.derivative(0, true);
    CHECK(dt.eval_complex({{2.0, 1.0}}) == std::complex<double>(2.0, -1.0));
    MixedHermPoly dtb = p.derivative(0, false);
    CHECK(dtb.eval_complex({{2.0, 1.0}}) == std::complex<double>(2.0, 1.0));
}

TEST_CASE("monomial substitution validates shape") {
    MixedHermPoly p(2);
    p.add_term({1, 0}, {1, 0}, Scalar(1));
    CHECK_THROWS(monomial_substitute(p, {{1, 0}}));             // one map row missing
    CHECK_THROWS(monomial_substitute(p, {{1, 0}, {0}}));        // ragged rows
    MixedHermPoly q = monomial_substitute(p, {{1, 1}, {0, 1}});  // x1 -> y1 y2
    CHECK(q.coeffs.count({{1, 1}, {1, 1}}) == 1);
}

TEST_CASE("monomial square factor is maximal") {
    // |y2|^4 (1 + |y1|^2): gamma = (0, 2)
    MixedHermPoly p(2);
    p.add_term({0, 2}, {0, 2}, Scalar(1));
    p.add_term({1, 2}, {1, 2}, Scalar(1));
    auto [gamma, reduced] = factor_monomial_square(p);
    CHECK(gamma == MultiIndex{0, 2});
    CHECK(reduced.coeffs.count({{0, 0}, {0, 0}}) == 1);
    auto [gamma2, reduced2] = factor_monomial_square(reduced);
    CHECK(gamma2 == MultiIndex{0, 0});
}

TEST_CASE("two-step chain replays the worked resolution") {
    MixedExpression p = parse_mixed_form("sq(x1^4) + (sq(x1) - sq(x2^2))^2");
    ChainSpec chain = parse_chain("x1=y1*y2,x2=y2 | y1=t1,y2=t1*t2", p.vars);
    BlowupTrace trace = blowup_chain(p.poly, chain.steps, {{Scalar(0), Scalar(1)}});

    MixedHermPoly p1 = parse_mixed_form("sq(y2^2)*((sq(y1^2*y2))^2 + (sq(y1) - sq(y2))^2)").poly;
    MixedHermPoly p2 =
        parse_mixed_form("(sq(t1^2*t2))^2*((sq(t1^2*t2))^2 + (1 - sq(t2))^2)").poly;
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.step_product(0) == p1);
    CHECK(trace.step_product(1) == p2);
    CHECK(trace.steps[1].gamma_cumulative == MultiIndex{4, 2});

    // the reduced residual vanishes at (t1, t2) = (0, 1)
    REQUIRE(trace.probe_values.size() == 1);
    CHECK(trace.probe_values[0].second == Scalar(0));
    // but not at (1, 1/2)
    CHECK(trace.final_reduced.eval({Scalar(1), Scalar(mpq_class(1, 2))}) != Scalar(0));
}

TEST_CASE("substitution composes with the cumulative factor") {
    // running the chain in one combined step x1 -> t1^2 t2, x2 -> t1 t2
    MixedExpression p = parse_mixed_form("sq(x1^4) + (sq(x1) - sq(x2^2))^2");
    ChainSpec chain = parse_chain("x1=y1*y2,x2=y2 | y1=t1,y2=t1*t2", p.vars);
    ChainSpec direct = parse_chain("x1=t1*t1*t2,x2=t1*t2", p.vars);
    BlowupTrace two = blowup_chain(p.poly, chain.steps);
    BlowupTrace one = blowup_chain(p.poly, direct.steps);
    CHECK(two.step_product(1) == one.step_product(0));
}

}  // TEST_SUITE
