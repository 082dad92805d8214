#include "engine_properties.hpp"
#include "qcluster/coulomb.hpp"
#include "qcluster/seed.hpp"

#include <doctest.h>

using namespace qcluster;

namespace {

QuantumSeed a2() {
    return QuantumSeed::initial(SkewForm({{0, 1}, {-1, 0}}), ExchangeMatrix(std::vector<std::vector<int>>{{0, 1}, {-1, 0}}));
}

}  // namespace

TEST_CASE("matrix mutation by hand") {
    ExchangeMatrix b(std::vector<std::vector<int>>{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}});
    ExchangeMatrix expect(std::vector<std::vector<int>>{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}, {1, 0, 0}});
    CHECK(mutate_exchange(b, 1) == expect);
    CHECK(mutate_exchange(mutate_exchange(b, 1), 1) == b);
}

TEST_CASE("A2 quantum exchange") {
    QuantumSeed s = a2();
    auto c = check_compatibility(s);
    CHECK(c.ok);
    CHECK(c.d == 1);
    QuantumSeed t = mutate(s, 0);
    // x1' = X^(-1,0) + X^(-1,1)
    auto f = s.ambient();
    CHECK(t.variables[0] == TorusElement::monomial(f, {-1, 0}) + TorusElement::monomial(f, {-1, 1}));
    CHECK(t.variables[1] == s.variables[1]);
    CHECK(mutate(s, 0).labels == s.labels);
}

TEST_CASE("bad indices and incompatible data") {
    QuantumSeed s = a2();
    CHECK_THROWS_AS(mutate(s, 2), SeedError);
    CHECK_THROWS_AS(mutate(s, -1), SeedError);
    QuantumSeed bad = QuantumSeed::initial(SkewForm({{0, 1}, {-1, 0}}), ExchangeMatrix(std::vector<std::vector<int>>{{0, 2}, {-2, 0}}));
    bad.lambda = SkewForm({{0, 0}, {0, 0}});
    CHECK(!check_compatibility(bad).ok);
    CHECK_THROWS_AS(mutate(bad, 0), SeedError);
}

TEST_CASE("GL_n quivers and completed forms") {
    ExchangeMatrix b2 = build_quiver_gln(2);
    CHECK(b2.rows() == std::vector<std::vector<int>>{{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}, {0, -1, 1}});
    CHECK(quiver_gln_labels(2) == std::vector<std::string>{"P_{1,1}", "P_{1,0}", "P_{2,0}", "P_{0,det}"});
    auto lam = complete_lambda(b2, -2);
    REQUIRE(lam);
    CHECK(*lam == initial_seed_gl2().lambda);
    for (int n = 2; n <= 4; ++n) {
        ExchangeMatrix b = build_quiver_gln(n);
        CHECK(b.rank() == 2 * n);
        CHECK(b.mutable_count() == 2 * n - 1);
        CHECK(b.principal_part_skew_symmetric());
    }
    CHECK_THROWS_AS(build_quiver_gln(1), std::invalid_argument);
    CHECK_THROWS_AS(complete_lambda(ExchangeMatrix(std::vector<std::vector<int>>{{1, 1}, {1, 1}}), 1), RankError);
}

TEST_CASE("canonical form ignores vertex order") {
    QuantumSeed s = initial_seed_gl2();
    QuantumSeed t = mutate(mutate(s, 0), 2);
    for (auto order : {std::vector<int>{2, 0, 1}, std::vector<int>{1, 2, 0}}) {
        QuantumSeed p = permute_mutable(t, order);
        CHECK(canonical_form(permute_mutable(p, canonical_order(p))) ==
              canonical_form(permute_mutable(t, canonical_order(t))));
    }
}

TEST_CASE("exchange binomial is bar invariant") {
    QuantumSeed s = initial_seed_gl2();
    for (int k = 0; k < 3; ++k) {
        auto x = exchange_binomial(s, k);
        CHECK(x.bar() == x);
        CHECK(x.size() == 2);
    }
}

TEST_CASE("randomized engine properties") {
    using namespace qcluster::testing;
    for (auto t : {check_involution(120, 1), check_d_conservation(120, 2), check_eps_independence(120, 3),
                   check_classical_oracle(120, 4)}) {
        INFO(t.first_failure);
        CHECK(t.instances >= 100);
        CHECK(t.failures == 0);
    }
}
