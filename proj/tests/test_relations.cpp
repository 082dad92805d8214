#include "qcluster/coulomb.hpp"
#include "qcluster/relations.hpp"

#include <doctest.h>

using namespace qcluster;

TEST_CASE("labels round trip") {
    for (auto l : {SimpleLabel::p(1, -3), SimpleLabel::p(-2, 0), SimpleLabel::det(), SimpleLabel::unit(),
                   SimpleLabel::koszul()})
        CHECK(SimpleLabel::parse(l.to_string()) == l);
    CHECK(SimpleLabel::p(0, 5) == SimpleLabel::unit());
    CHECK_THROWS_AS(SimpleLabel::parse("Q_{1,1}"), std::invalid_argument);
}

TEST_CASE("instance counts") {
    CHECK(instantiate(Suite::MutN, 2, -2, 2).size() == 10);
    CHECK(instantiate(Suite::Old, 2, -2, 2).size() == 10);
    CHECK(instantiate(Suite::Old, 3, 0, 0).size() == 4);
    CHECK(instantiate(Suite::Commute, 2, -2, 2).size() == 30);
    CHECK(instantiate(Suite::Glue, 2, -2, 2).size() == 20);
    CHECK(instantiate(Suite::Abelian, 1, 0, 0).empty());
    CHECK_THROWS_AS(instantiate(Suite::Glue, 3, 0, 0), std::invalid_argument);
    CHECK(parse_suite("commute") == Suite::Commute);
    CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
}

TEST_CASE("rank one top exchange uses the Koszul unit") {
    auto inst = instantiate(Suite::MutN, 1, 0, 0);
    REQUIRE(inst.size() == 2);
    auto ls = inst[0].labels();
    CHECK(std::find(ls.begin(), ls.end(), SimpleLabel::koszul()) != ls.end());
    CHECK(std::find(ls.begin(), ls.end(), SimpleLabel::unit()) != ls.end());
}

TEST_CASE("missing labels give skips; solving inverts evaluation") {
    QuantumSeed seed = initial_seed_gl2();
    SimpleClassRegistry reg = initial_registry(seed, -2);
    auto inst = instantiate(Suite::MutN, 2, 0, 0);
    auto r = evaluate(inst[0], reg);
    CHECK(r.status == "skip");
    CHECK(!r.missing.empty());

    // With P_{-1,0} solved from the first instance, that instance holds.
    auto solved = solve_linear(inst[0], SimpleLabel::p(-1, 0), reg);
    REQUIRE(solved);
    reg.classes[SimpleLabel::p(-1, 0)] = *solved;
    CHECK(evaluate(inst[0], reg).status == "pass");
    CHECK(evaluate(inst[1], reg).status == "pass");
}

TEST_CASE("loop shift fit on the seed's own classes") {
    QuantumSeed seed = initial_seed_gl2();
    auto rels = initial_commutation_relations(seed);
    CHECK(!rels.empty());
    CHECK(fit_loop_shift(seed, rels) == -2);
    CHECK_THROWS_AS(fit_loop_shift(seed, {}), FitError);
}
