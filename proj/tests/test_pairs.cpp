#include "qcluster/pairs.hpp"

#include <doctest.h>

using namespace qcluster;

TEST_CASE("small boxes by hand") {
    CHECK(enumerate_box(1, 0, 1).size() == 4);
    CHECK(enumerate_box(2, 0, 1).size() == 10);
    for (const auto& p : enumerate_box(2, -1, 1)) CHECK(is_dominant(p));
}

TEST_CASE("enumeration matches orbit partition") {
    for (int n = 1; n <= 3; ++n)
        for (int side = 1; side <= 3; ++side) {
            INFO("n=" << n << " side=" << side);
            CHECK(static_cast<std::int64_t>(enumerate_box(n, 0, side - 1).size()) ==
                  orbit_count_bruteforce(n, 0, side - 1));
        }
    CHECK(orbit_count_bruteforce(2, -1, 0) == 10);
}

TEST_CASE("canonicalize sorts columns") {
    DominantPair p = canonicalize({0, 1, 1}, {5, 2, 3});
    CHECK(p.lambda == std::vector<int>{1, 1, 0});
    CHECK(p.mu == std::vector<int>{3, 2, 5});
    CHECK(is_dominant(p));
    CHECK(!is_dominant(DominantPair{{0, 1}, {0, 0}}));
    CHECK_THROWS_AS(canonicalize({1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(orbit_count_bruteforce(5, 0, 1), GuardExceeded);
}

TEST_CASE("label dictionary") {
    DominantPair p = label_to_pair(SimpleLabel::p(1, 3), 2);
    CHECK(p.lambda == std::vector<int>{1, 0});
    CHECK(p.mu == std::vector<int>{3, 0});
    DominantPair q = label_to_pair(SimpleLabel::p(-1, 2), 2);
    CHECK(q.lambda == std::vector<int>{0, -1});
    CHECK(q.mu == std::vector<int>{0, 2});
    CHECK(label_to_pair(SimpleLabel::det(), 2).mu == std::vector<int>{1, 1});
}
