#include "qcluster/charcalc.hpp"

#include <doctest.h>

using namespace qcluster;

TEST_CASE("finite symmetric and exterior characters") {
    CharWindow w{-4, 4, -4};
    auto s = sym_character({{1, -1, 0}}, w);  // 1/(1 - u p)
    for (int j = 0; j <= 4; ++j) CHECK(s.coefficient(j, -j) == 1);
    CHECK(s.coefficient(1, -2) == 0);
    auto e = ext_character({{1, -1, -1}, {2, -1, -1}}, w);  // (1 - u p)(1 - u p^2)
    CHECK(e.coefficient(0, 0) == 1);
    CHECK(e.coefficient(1, -1) == -1);
    CHECK(e.coefficient(2, -1) == -1);
    CHECK(e.coefficient(3, -2) == 1);
    CHECK_THROWS_AS(e.coefficient(5, 0), TruncationUnsafe);
}

TEST_CASE("inverse pair multiplies to one") {
    CharWindow w{-3, 3, -3};
    auto a = sym_character({{1, -1, 0}}, w);
    auto b = ext_character({{1, -1, -1}}, w);
    auto prod = multiply(a, b, w);
    CHECK(prod.agrees_on(constant_character(1, w), w));
}

TEST_CASE("infinite families report truncation hazards") {
    CharWindow w{-3, 3, -3};
    auto o = family_character(dual_of_o(), w);
    CHECK(o.coefficient(0, -1) == 1);
    CHECK(o.coefficient(3, -1) == 1);
    auto k = family_character(dual_of_k_mod_o(), w);
    // Both supports are unbounded in opposite directions, so the product is unsafe.
    CHECK_THROWS_AS(multiply(o, k, w), TruncationUnsafe);
}

TEST_CASE("binomial factor") {
    CharWindow w{-2, 2, -2};
    auto b = binomial_character(1, -1, w);
    CHECK(b.coefficient(0, 0) == 1);
    CHECK(b.coefficient(1, -1) == -1);
    CHECK(b.table().size() == 2);
}

TEST_CASE("abelian factorization certificates") {
    Report r = verify_abelian_sequences(8);
    CHECK(r.count("fail") == 0);
    CHECK(r.count("pass") >= 3);
    CHECK_THROWS(verify_abelian_sequences(3));
}
