#include "qcluster/coulomb.hpp"
#include "qcluster/serialize.hpp"

#include <doctest.h>

using namespace qcluster;

TEST_CASE("seed round trip keeps variables") {
    QuantumSeed s = mutate(mutate(initial_seed_gl2(), 1), 0);
    Json j = seed_to_json(s);
    QuantumSeed t = seed_from_json(Json::parse(j.dump()));
    CHECK(t.lambda == s.lambda);
    CHECK(t.exchange == s.exchange);
    CHECK(t.labels == s.labels);
    REQUIRE(t.variables.size() == s.variables.size());
    for (std::size_t i = 0; i < s.variables.size(); ++i) CHECK(t.variables[i].to_string() == s.variables[i].to_string());
    CHECK(seed_to_json(t) == j);
}

TEST_CASE("minimal seed file defaults to generators") {
    Json j = Json::parse(R"({"rank": 2, "mutable": 2, "lambda": [[0,1],[-1,0]], "b": [[0,1],[-1,0]]})");
    QuantumSeed s = seed_from_json(j);
    CHECK(s.variables[1] == TorusElement::generator(s.ambient(), 1));
}

TEST_CASE("malformed seeds") {
    CHECK_THROWS_AS(seed_from_json(Json::parse(R"({"rank": 2})")), FormatError);
    CHECK_THROWS_AS(seed_from_json(Json::parse(R"({"rank": 2, "mutable": 1, "lambda": [[0,1],[-1,0]], "b": [[0,1],[1]]})")),
                    FormatError);
    CHECK_THROWS_AS(seed_from_json(Json::parse("[1,2]")), FormatError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/seed.json"), FormatError);
}

TEST_CASE("element and scalar forms") {
    auto f = make_form(SkewForm({{0, 1}, {-1, 0}}));
    auto x = TorusElement::monomial(f, {1, -2}, QuantumScalar::v_power(-3, Integer("123456789012345678901234567890")));
    CHECK(element_from_json(element_to_json(x), f) == x);
    CHECK(scalar_from_json(scalar_to_json(QuantumScalar::v_power(2, -5))) == QuantumScalar::v_power(2, -5));
}

TEST_CASE("report form") {
    Report r{"demo", {{"a", {{"ell", 1}}, "pass", "", "", "", {}}, {"b", {}, "skip", "missing", "", "", {}}}};
    Json j = report_to_json(r);
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["skip"] == 1);
    CHECK(j["instances"][0]["params"]["ell"] == 1);
}
