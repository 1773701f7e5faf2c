#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hullcraft/twisted.hpp"

using namespace hullcraft;

namespace {
const Elt kOnePlusI = 4; // GF(9)
}

TEST_CASE("twisted code construction (GF(9), alpha of order 4)") {
    auto t = FieldTower::build(3, 1);
    TwistSpec spec{4, 2, kOnePlusI};
    auto c = twisted_code(t, spec);
    CHECK(c.n() == 4);
    CHECK(c.k() == 2);

    // rows are eval(1 + (1+i)x^2) and eval(x), canonicalized
    const auto pts = t->subgroup_of_order(4);
    GfMatrix raw(t, 2, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        raw.at(0, i) = t->add(1, t->mul(kOnePlusI, t->pow(pts[i], 2)));
        raw.at(1, i) = pts[i];
    }
    CHECK(c == LinearCode(t, raw));

    auto c1 = twisted_code(t, {4, 1, kOnePlusI});
    CHECK(c1.k() == 1);

    CHECK_THROWS_AS(twisted_code(t, {4, 2, 0}), BadSpec);
    CHECK_THROWS_AS(twisted_code(t, {4, 4, kOnePlusI}), BadSpec);
    CHECK_THROWS_AS(twisted_code(t, {5, 2, kOnePlusI}), NotADivisor);
}

TEST_CASE("twisted dual basis shapes") {
    auto t = FieldTower::build(3, 1);
    auto d = twisted_dual_basis(t, {4, 2, kOnePlusI});
    CHECK(d.n() == 4);
    CHECK(d.k() == 2); // span{1, x - (1+i)x^3}

    CHECK(twisted_dual_basis(t, {4, 3, kOnePlusI}).k() == 1); // span{1 - eta x^3}
    CHECK(twisted_dual_basis(t, {4, 1, kOnePlusI}).k() == 3);
}

TEST_CASE("twisted duality examples") {
    auto t9 = FieldTower::build(3, 1);
    CHECK(check_twisted_duality(t9, {4, 2, kOnePlusI}));
    CHECK(check_twisted_duality(t9, {8, 3, kOnePlusI}));

    auto t16 = FieldTower::build(2, 2);
    // eta = 2 is the polynomial x, outside the order-5 subgroup
    CHECK(check_twisted_duality(t16, {5, 2, 2}));

    // odd characteristic: flipping the sign inside the displayed h-basis breaks
    // the match; in characteristic 2 both placements coincide
    auto rep9 = twisted_duality_report(t9, {4, 2, kOnePlusI});
    CHECK(rep9.displayed_ok);
    CHECK(!rep9.negated_ok);
    auto rep16 = twisted_duality_report(t16, {5, 2, 2});
    CHECK(rep16.displayed_ok);
    CHECK(rep16.negated_ok);
}

TEST_CASE("twisted MDS (Prop 4.2 direction)") {
    auto t = FieldTower::build(3, 1);
    const auto pts = t->subgroup_of_order(4);
    CHECK(std::find(pts.begin(), pts.end(), kOnePlusI) == pts.end());
    TwistSpec spec{4, 2, kOnePlusI};
    CHECK(is_twisted_mds(t, spec));
    CHECK(min_distance(twisted_code(t, spec)) == 3);

    // eta = i inside the subgroup: the quadratics lambda(1 + i x^2) + mu x have
    // root product 1/i = 2i in alpha, so weight-2 words exist and d = 2
    TwistSpec inside{4, 2, 3};
    CHECK(!is_twisted_mds(t, inside));
    CHECK(min_distance(twisted_code(t, inside)) == 2);
}

TEST_CASE("twisted hull candidate (q=3, n=8)") {
    auto t = FieldTower::build(3, 1);
    auto res = twisted_hull_candidate(t, {8, 4, kOnePlusI});
    CHECK(res.hull.bound_count == 1); // {3,6,1,4} meets [1..2] in {1}
    CHECK(res.hull.hull_dim == 1);
    CHECK(res.hull.oracle_ok);
    CHECK(hermitian_dual(res.code) == twisted_dual_basis(t, {8, 4, kOnePlusI}));

    auto res5 = twisted_hull_candidate(t, {8, 5, kOnePlusI});
    CHECK(res5.hull.bound_count == 1); // {3,6,1,4,7} meets [1..1] in {1}
    CHECK(res5.hull.hull_dim == 1);

    CHECK_THROWS_AS(twisted_hull_candidate(t, {8, 3, kOnePlusI}), BadSpec); // k < n/2
}

TEST_CASE("measured counterexample to the printed hull bound (q=4, n=15, k=9)") {
    // For every nonzero eta the hull of (U^{-1} C)^q is exactly 2, while the
    // claimed k(n-k-2)/q^2 = 36/16 rounds up to 3. The two surviving hull
    // dimensions are the pure common monomials {4j mod 15 : j=2..9} in {0..4};
    // the j=1 generator is a binomial and never lands in the hull here.
    auto t = FieldTower::build(2, 2);
    for (Elt eta = 1; eta < 16; ++eta) {
        auto res = twisted_hull_candidate(t, {15, 9, eta});
        CHECK(res.hull.hull_dim == 2);
        CHECK(rational_ceil(res.hull.bound_claimed) == 3);
        CHECK(!res.hull.oracle_ok);
    }
    // neighboring k = 8: hull 3 meets ceil(2.5) = 3 but stays below the
    // spec-range count 4 (the j=1 term overcounts)
    auto res8 = twisted_hull_candidate(t, {15, 8, 1});
    CHECK(res8.hull.hull_dim == 3);
    CHECK(res8.hull.bound_count == 4);
    CHECK(rational_ceil(res8.hull.bound_claimed) == 3);
}

TEST_CASE("twisted schur square exceeds the RS profile for proper twists") {
    auto t = FieldTower::build(3, 1);
    // k = 3, n = 8: RS would give 2k-1 = 5; the twist forces 6
    for (Elt eta = 1; eta < 9; ++eta)
        CHECK(schur_square_dim(twisted_code(t, {8, 3, eta})) == 6);
    // k <= 2 cannot reach 2k products at all: rank is k(k+1)/2 capped
    CHECK(schur_square_dim(twisted_code(t, {8, 2, kOnePlusI})) == 3);
    CHECK(schur_square_dim(twisted_code(t, {8, 1, kOnePlusI})) == 1);
}
