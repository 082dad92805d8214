#include "qcluster/qtorus.hpp"

#include <doctest.h>

#include <random>

using namespace qcluster;

namespace {

FormPtr random_form(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> e(-3, 3);
    std::vector<std::vector<int>> l(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            l[i][j] = e(rng);
            l[j][i] = -l[i][j];
        }
    return make_form(SkewForm(l));
}

TorusElement random_element(std::mt19937& rng, const FormPtr& f, int terms) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), v(-3, 3);
    TorusElement x = TorusElement::zero(f);
    for (int t = 0; t < terms; ++t) {
        ExponentVector a(f->rank());
        for (auto& ai : a) ai = e(rng);
        x += TorusElement::monomial(f, a, QuantumScalar::v_power(v(rng), c(rng)));
    }
    return x;
}

}  // namespace

TEST_CASE("scalar arithmetic and bar") {
    QuantumScalar a = QuantumScalar::v_power(2, 3) + QuantumScalar(1) - QuantumScalar::v_power(-1);
    CHECK(a.bar().coefficient(-2) == 3);
    CHECK(a.at_one() == 3);
    CHECK((a * a.bar()).bar() == a * a.bar());
    auto q = (a * QuantumScalar::v_power(1, 2)).divide_exact(a);
    REQUIRE(q);
    CHECK(*q == QuantumScalar::v_power(1, 2));
    CHECK(!QuantumScalar(3).divide_exact(QuantumScalar(2)));
}

TEST_CASE("generators q-commute by the form") {
    auto f = make_form(SkewForm({{0, 2}, {-2, 0}}));
    auto x1 = TorusElement::generator(f, 0), x2 = TorusElement::generator(f, 1);
    // X1 X2 = v^{2 L12} X2 X1
    CHECK(x1 * x2 == (x2 * x1).shifted(4));
    CHECK(q_commutation_exponent(x1, x2) == 4);
    CHECK((x1 * x2).terms().begin()->second == QuantumScalar::v_power(2));
}

TEST_CASE("ring laws on random elements") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_form(rng, 1 + trial % 4);
        auto a = random_element(rng, f, 3), b = random_element(rng, f, 3), c = random_element(rng, f, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).bar() == b.bar() * a.bar());
        // classical specialization is a ring homomorphism
        LaurentPolynomial pa = a.specialize_classical(), pb = b.specialize_classical(), prod;
        for (const auto& [ea, ca] : pa)
            for (const auto& [eb, cb] : pb) {
                ExponentVector e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                prod[e] += ca * cb;
            }
        std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
        CHECK((a * b).specialize_classical() == prod);
    }
}

TEST_CASE("exact division recovers factors") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_form(rng, 3);
        auto a = random_element(rng, f, 2), b = random_element(rng, f, 3);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(a.left_divide(a * b) == b);
        CHECK(b.right_divide(a * b) == a);
    }
    auto f = make_form(SkewForm({{0, 1}, {-1, 0}}));
    auto x = TorusElement::generator(f, 0) + TorusElement::one(f);
    CHECK_THROWS_AS(x.left_divide(TorusElement::generator(f, 1)), InexactDivision);
}

TEST_CASE("q-proportionality detection") {
    std::mt19937 rng(3);
    auto f = random_form(rng, 3);
    auto y = random_element(rng, f, 3);
    REQUIRE(!y.is_zero());
    for (int m = -6; m <= 6; ++m) CHECK(detect_q_proportional(y.shifted(m), y) == m);
    CHECK(!detect_q_proportional(y + y, y));
}

TEST_CASE("monomial inverse and mismatched forms") {
    auto f = make_form(SkewForm({{0, 3}, {-3, 0}}));
    auto m = TorusElement::monomial(f, {2, -1}, QuantumScalar::v_power(5, -1));
    CHECK(m * m.monomial_inverse() == TorusElement::one(f));
    auto g = make_form(SkewForm({{0, 1}, {-1, 0}}));
    CHECK_THROWS_AS(m * TorusElement::generator(g, 0), FormMismatch);
    CHECK_THROWS(SkewForm({{0, 1}, {1, 0}}));
}
