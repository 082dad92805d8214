#include "qcluster/coulomb.hpp"

#include <doctest.h>

using namespace qcluster;

namespace {

const Gl2Model& model() {
    static const Gl2Model m = build_gl2_model(5, 3, 2);
    return m;
}

void require_clean(const Report& r, int min_pass) {
    INFO(r.suite);
    for (const auto& c : r.records)
        if (c.status == "fail") FAIL_CHECK(c.name << " " << c.details);
    CHECK(r.count("pass") >= min_pass);
}

}  // namespace

TEST_CASE("GL2 seed data") {
    QuantumSeed s = initial_seed_gl2();
    CHECK(s.lambda.entries() ==
          std::vector<std::vector<int>>{{0, -2, -2, 2}, {2, 0, 0, 2}, {2, 0, 0, 4}, {-2, -2, -4, 0}});
    auto c = check_compatibility(s);
    CHECK(c.ok);
    CHECK(c.d == -2);
    CHECK(c.product == std::vector<std::vector<long>>{{-2, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, -2, 0}});
}

TEST_CASE("registry normalizations") {
    const auto& reg = model().registry;
    CHECK(reg.loop_shift2 == -2);
    auto n = reg.normalizations.at(SimpleLabel::p(-1, 0));
    CHECK(n.frozen_exponent == -1);
    CHECK(n.v_power == 2);
    for (int l = -2; l <= 2; ++l) {
        if (l == 0) continue;
        auto t = reg.normalizations.at(SimpleLabel::p(2, l));
        CHECK(t.frozen_exponent == l);
        CHECK(t.v_power == 4 * l);
    }
    CHECK(model().unresolved.empty());
}

TEST_CASE("relation suites on the inner window") {
    const auto& reg = model().registry;
    require_clean(verify_relations(reg, Suite::MutN, -2, 2), 10);
    require_clean(verify_relations(reg, Suite::Old, -2, 2), 10);
    require_clean(verify_relations(reg, Suite::Commute, -2, 2), 30);
    require_clean(verify_relations(reg, Suite::Glue, -2, 2), 20);
    CHECK_THROWS(verify_relations(reg, Suite::Abelian, 0, 0));
}

TEST_CASE("a corrupted class is caught") {
    SimpleClassRegistry reg = model().registry;
    auto& x = reg.classes.at(SimpleLabel::p(1, -1));
    x = x.shifted(2);
    CHECK(verify_relations(reg, Suite::MutN, -2, 2).count("fail") > 0);
}

TEST_CASE("twist, closure, common clusters, inventory") {
    require_clean(verify_twist_duality(model()), 5);
    require_clean(verify_commutation_closure(model().registry, -2, 2), 30);
    require_clean(verify_common_clusters(model()), 1);
    Gl2Model wide = build_gl2_model(3, 4);
    Report inv = verify_inventory(wide, 3);
    require_clean(inv, 1);
    CHECK(inv.count("skip") == 0);
}

TEST_CASE("left dual labels") {
    CHECK(left_dual_label(SimpleLabel::p(1, 0)) == SimpleLabel::p(-1, 2));
    CHECK(left_dual_label(SimpleLabel::p(-1, 0)) == SimpleLabel::p(1, -1));
}

TEST_CASE("positivity to depth 4") { require_clean(verify_positivity(model(), 4, 2), 1); }

TEST_CASE("GL1 abelian identity") {
    Gl1Model g = build_gl1_model(-2);
    CHECK(g.lambda12 == 2);
    require_clean(verify_abelian(g), 4);
    require_clean(verify_relations(g.registry, Suite::MutN, 0, 0), 2);
}
