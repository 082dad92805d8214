#include "engine_properties.hpp"
#include "qcluster/coulomb.hpp"
#include "qcluster/graph.hpp"

#include <doctest.h>

using namespace qcluster;

namespace {

QuantumSeed a2() {
    return QuantumSeed::initial(SkewForm({{0, 1}, {-1, 0}}), ExchangeMatrix(std::vector<std::vector<int>>{{0, 1}, {-1, 0}}));
}

// Linear A3 quiver 1 -> 2 -> 3 with principal coefficients.
QuantumSeed a3_linear() {
    ExchangeMatrix b(std::vector<std::vector<int>>{
        {0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    return QuantumSeed::initial(*complete_lambda(b, 1), b);
}

}  // namespace

TEST_CASE("A2 pentagon") {
    ExchangeGraph g = explore(a2(), 6);
    CHECK(g.nodes.size() == 5);
    CHECK(g.closed);
    CHECK(variable_inventory(g).size() == 5);
    // every vertex of the pentagon has two neighbours
    std::map<std::string, std::set<std::string>> nbrs;
    for (const auto& [a, k, b] : g.edges) nbrs[a].insert(b);
    for (const auto& [key, s] : g.nodes) CHECK(nbrs[key].size() == 2);
}

TEST_CASE("A3 has fourteen seeds") {
    ExchangeGraph g = explore(a3_linear(), 10);
    CHECK(g.nodes.size() == 14);
    CHECK(g.closed);
    CHECK(variable_inventory(g).size() == 9);
}

TEST_CASE("GL1 and GL2 graphs") {
    ExchangeGraph g1 = explore(initial_seed_gl1(), 5);
    CHECK(g1.nodes.size() == 2);
    CHECK(g1.closed);

    std::size_t prev = 0;
    for (int d = 0; d <= 4; ++d) {
        std::size_t now = explore(initial_seed_gl2(), d).nodes.size();
        CHECK(now > prev);
        prev = now;
    }
}

TEST_CASE("exploration does not depend on thread count") {
    ExchangeGraph a = explore(initial_seed_gl2(), 4, 1);
    ExchangeGraph b = explore(initial_seed_gl2(), 4, 4);
    CHECK(a.edges == b.edges);
    CHECK(a.depth == b.depth);
}

TEST_CASE("twist of acyclic seeds") {
    auto r = twist(a2());
    CHECK(r.sequence.size() == 2);
    auto acyc = is_acyclic(a3_linear());
    CHECK(acyc.acyclic);
    auto t = twist(a3_linear());
    CHECK(t.sequence.size() == 3);
    CHECK(is_acyclic(t.seed).acyclic);
    // Each mutation in the sequence happened at a source of the current quiver.
    QuantumSeed s = a3_linear();
    for (int k : t.sequence) {
        CHECK(is_source(s, k));
        s = mutate(s, k);
    }
}

TEST_CASE("cyclic quiver has no twist") {
    ExchangeMatrix b(std::vector<std::vector<int>>{
        {0, 1, -1}, {-1, 0, 1}, {1, -1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    QuantumSeed s = QuantumSeed::initial(*complete_lambda(b, 1), b);
    CHECK(!is_acyclic(s).acyclic);
    CHECK_THROWS_AS(twist(s), AcyclicityError);
}
