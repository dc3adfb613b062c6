#include <doctest.h>

#include "hermcert/multiindex.hpp"

using namespace hermcert;

TEST_SUITE("multiindex") {

TEST_CASE("degree and arithmetic") {
    CHECK(degree({2, 0, 1}) == 3);
    CHECK(mi_add({1, 2}, {3, 0}) == MultiIndex{4, 2});
    CHECK(mi_sub({1, 2}, {0, 2}) == MultiIndex{1, 0});
    CHECK(!mi_sub({1, 0}, {0, 1}).has_value());
}

TEST_CASE("basis order on P^1 degree 2") {
    MonomialBasis b(1, 2);
    REQUIRE(b.size() == 3);
    CHECK(b.unrank(0) == MultiIndex{2, 0});
    CHECK(b.unrank(1) == MultiIndex{1, 1});
    CHECK(b.unrank(2) == MultiIndex{0, 2});
}

TEST_CASE("basis size is binomial(n+d, d)") {
    CHECK(MonomialBasis(2, 4).size() == 15);
    CHECK(MonomialBasis(3, 2).size() == 10);
    CHECK(MonomialBasis(0, 7).size() == 1);
    CHECK(MonomialBasis(2, 0).size() == 1);
}

TEST_CASE("rank and unrank round-trip, consistent with grlex order") {
    MonomialBasis b(2, 3);
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b.rank(b.unrank(i)) == i);
        if (i + 1 < b.size()) CHECK(grlex_before(b.unrank(i), b.unrank(i + 1)));
    }
}

TEST_CASE("invalid arguments rejected") {
    CHECK_THROWS(MonomialBasis(-1, 2));
    CHECK_THROWS(MonomialBasis(1, -2));
    CHECK_THROWS((void)MonomialBasis(1, 2).rank({3, 0}));
}

}  // TEST_SUITE
