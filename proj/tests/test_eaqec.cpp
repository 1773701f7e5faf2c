#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullcraft/eaqec.hpp"

using namespace hullcraft;

TEST_CASE("css formulas") {
    CHECK(css_primary(3, 8, 4, 5, 2) == EaqecParams{3, 8, 2, 5, 2});
    CHECK(css_primary(3, 8, 4, 5, 0) == EaqecParams{3, 8, 4, 5, 4});
    CHECK_THROWS_AS(css_primary(3, 8, 4, 5, 5), BadLevel);

    CHECK(css_dual(3, 8, 4, 5, 2) == EaqecParams{3, 8, 2, 5, 2});
    CHECK(css_dual(3, 8, 4, 5, 0) == EaqecParams{3, 8, 4, 5, 4});
    CHECK(css_dual(3, 10, 5, 6, 1) == EaqecParams{3, 10, 4, 6, 4});
}

TEST_CASE("defect and the MDS EAQEC test") {
    CHECK(defect({3, 8, 2, 5, 2}) == 0);
    CHECK(defect({3, 8, 4, 5, 4}) == 0);
    CHECK(defect({3, 8, 4, 4, 4}) == 2);

    CHECK(is_mds_eaqec({3, 8, 2, 5, 2}));
    CHECK(!is_mds_eaqec({3, 8, 4, 4, 4}));
    CHECK(!is_mds_eaqec({3, 4, 0, 4, 2})); // d = 4 > (n+2)/2 = 3
}

TEST_CASE("dual distance of MDS classical codes feeds css_dual") {
    auto t = FieldTower::build(3, 1);
    auto fam = subgroup_candidate(t, 8, 4);
    auto dual = hermitian_dual(fam.code);
    CHECK(min_distance(dual) == static_cast<long>(fam.code.k()) + 1); // d_perp = k+1
}

TEST_CASE("enumerate (q=3, n=8, d=5): the subgroup pipeline") {
    auto t = FieldTower::build(3, 1);
    auto recs = enumerate_for_length_distance(t, 8, 5);
    REQUIRE(recs.size() == 3); // hull 2: levels 0, 1, 2
    bool seen_2252 = false, seen_8454 = false;
    for (const auto& r : recs) {
        CHECK(r.family == "subgroup");
        CHECK(r.mds);
        CHECK(2 * r.eaqec.d + r.eaqec.k == r.eaqec.n + r.eaqec.c + 2);
        if (r.eaqec == EaqecParams{3, 8, 2, 5, 2}) seen_2252 = true;
        if (r.eaqec == EaqecParams{3, 8, 4, 5, 4}) seen_8454 = true;
        CHECK(r.plan.positions.size() == r.hull_dim - r.level);
    }
    CHECK(seen_2252);
    CHECK(seen_8454);
}

TEST_CASE("enumerate (q=3, n=10, d=6): extended generic pipeline") {
    auto t = FieldTower::build(3, 1);
    auto recs = enumerate_for_length_distance(t, 10, 6);
    CHECK(!recs.empty());
    CHECK(recs.front().family == "generic");
    CHECK(recs.front().hull_dim == 4); // measured for the projective RS(10,5)
    bool has_positive_c = false;
    for (const auto& r : recs) has_positive_c |= r.eaqec.c >= 1;
    CHECK(has_positive_c);
}

TEST_CASE("enumerate at q=4 covers non-divisor lengths") {
    auto t = FieldTower::build(2, 2);
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{7, 4}, {9, 5}, {12, 6}}) {
        auto recs = enumerate_for_length_distance(t, n, d);
        REQUIRE(!recs.empty());
        bool has_positive_c = false;
        for (const auto& r : recs) {
            CHECK(2 * r.eaqec.d + r.eaqec.k == r.eaqec.n + r.eaqec.c + 2);
            has_positive_c |= r.eaqec.c >= 1;
        }
        CHECK(has_positive_c);
    }
}

TEST_CASE("enumerate picks the coset family when n = v*n1 fits") {
    auto t = FieldTower::build(2, 2); // n = 10 = 2*5, gcd(5,3) = 1
    auto recs = enumerate_for_length_distance(t, 10, 5);
    REQUIRE(!recs.empty());
    CHECK(recs.front().family == "coset");
}

TEST_CASE("enumerate rejects out-of-range requests") {
    auto t = FieldTower::build(3, 1);
    CHECK_THROWS_AS(enumerate_for_length_distance(t, 8, 6), BadRange); // d > (n+2)/2
    CHECK_THROWS_AS(enumerate_for_length_distance(t, 11, 2), BadRange);
    CHECK_THROWS_AS(enumerate_for_length_distance(t, 8, 1), BadRange);
}

TEST_CASE("levels give strictly decreasing c") {
    auto t = FieldTower::build(3, 1);
    auto recs = enumerate_for_length_distance(t, 8, 5);
    for (std::size_t i = 1; i < recs.size(); ++i) {
        CHECK(recs[i].level == recs[i - 1].level + 1);
        CHECK(recs[i].eaqec.c == recs[i - 1].eaqec.c - 1);
    }
}

TEST_CASE("count_distinct_c") {
    auto t9 = FieldTower::build(3, 1);
    auto dc = count_distinct_c(t9, 8, 4);
    CHECK(dc.count == 3); // h = 2 gives c in {4, 3, 2}
    CHECK(dc.count >= rational_floor(dc.claimed) + 1);

    auto t16 = FieldTower::build(2, 2);
    auto dc2 = count_distinct_c(t16, 15, 8);
    CHECK(rational_floor(dc2.claimed) + 1 == 3); // floor(2*5/4) + 1
    CHECK(dc2.count >= 3);
    CHECK(dc2.count == 5); // measured hull 4

    // k1 = 0 still yields the level-0 record
    auto dc3 = count_distinct_c(t16, 5, 3);
    CHECK(dc3.claimed == Rational(0));
    CHECK(dc3.count >= 1);
}
