#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hullcraft/field.hpp"

using namespace hullcraft;

// GF(9) = GF(3)[x]/(x^2+1); encodings are c0 + 3*c1, so the modulus root i
// is 3, 1+i is 4, 2+2i is 8.
namespace {
const Elt kI = 3, kOnePlusI = 4;
}

TEST_CASE("tower construction") {
    auto t = FieldTower::build(3, 1);
    CHECK(t->q() == 3);
    CHECK(t->q2() == 9);
    CHECK(t->modulus() == std::vector<std::uint32_t>{1, 0, 1}); // x^2 + 1
    CHECK(t->generator() == kOnePlusI);

    auto t16 = FieldTower::build(2, 2);
    CHECK(t16->q() == 4);
    CHECK(t16->q2() == 16);
    CHECK(t16->modulus().size() == 5); // degree 2m = 4
    CHECK(t16->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1}); // x^4 + x + 1

    CHECK(FieldTower::build(5, 1)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
    CHECK(FieldTower::build(7, 1)->modulus() == std::vector<std::uint32_t>{1, 0, 1});

    CHECK_THROWS_AS(FieldTower::build(4, 1), NotPrime);
    CHECK_THROWS_AS(FieldTower::build(2, 16), SizeExceeded);
}

TEST_CASE("tower determinism") {
    auto a = FieldTower::build(5, 1);
    auto b = FieldTower::build(5, 1);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->generator() == b->generator());
    CHECK(a->generator() == 6); // 1 + x
    CHECK(FieldTower::build(7, 1)->generator() == 9); // 2 + x
}

TEST_CASE("GF(9) arithmetic examples") {
    auto t = FieldTower::build(3, 1);
    CHECK(t->mul(kI, kI) == 2);
    CHECK(t->inv(1) == 1);
    CHECK(t->add(kOnePlusI, 8) == 0); // (1+i) + (2+2i)
    CHECK_THROWS_AS(t->inv(0), DivisionByZero);
    CHECK_THROWS_AS(t->div(1, 0), DivisionByZero);
    CHECK(arith(*t, kI, kI, ArithOp::Mul) == 2);
}

TEST_CASE("frobenius and norm on GF(9)") {
    auto t = FieldTower::build(3, 1);
    CHECK(t->frobenius_q(1) == 1);
    CHECK(t->frobenius_q(kI) == 6);        // i -> 2i
    CHECK(t->frobenius_q(kOnePlusI) == 7); // 1+i -> 1+2i
    CHECK(t->norm_q(0) == 0);
    CHECK(t->norm_q(kI) == 1);
    CHECK(t->norm_q(kOnePlusI) == 2);
}

TEST_CASE("subgroups of GF(9)*") {
    auto t = FieldTower::build(3, 1);
    CHECK(t->subgroup_of_order(1) == std::vector<Elt>{1});
    const auto s4 = t->subgroup_of_order(4);
    CHECK(s4 == std::vector<Elt>{1, 6, 2, 3}); // powers of g^2; the set {1, i, 2, 2i}
    CHECK_THROWS_AS(t->subgroup_of_order(3), NotADivisor);
}

TEST_CASE("field axioms, exhaustive at desk scale") {
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {2, 2}, {5, 1}}) {
        auto t = FieldTower::build(p, m);
        const Elt n = t->q2();
        for (Elt a = 0; a < n; ++a) {
            CHECK(t->add(a, 0) == a);
            CHECK(t->mul(a, 1) == a);
            CHECK(t->add(a, t->neg(a)) == 0);
            if (a != 0) CHECK(t->mul(a, t->inv(a)) == 1);
            for (Elt b = 0; b < n; ++b) {
                CHECK(t->add(a, b) == t->add(b, a));
                CHECK(t->mul(a, b) == t->mul(b, a));
                for (Elt c = 0; c < n; ++c) {
                    CHECK(t->mul(a, t->add(b, c)) == t->add(t->mul(a, b), t->mul(a, c)));
                    CHECK(t->mul(a, t->mul(b, c)) == t->mul(t->mul(a, b), c));
                    CHECK(t->add(a, t->add(b, c)) == t->add(t->add(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("frobenius is a self-inverse automorphism") {
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {2, 2}, {7, 1}}) {
        auto t = FieldTower::build(p, m);
        std::uint32_t fixed = 0;
        for (Elt a = 0; a < t->q2(); ++a) {
            CHECK(t->frobenius_q(t->frobenius_q(a)) == a);
            fixed += t->in_subfield(a);
            if (a) CHECK(t->pow(t->norm_q(a), t->q() - 1) == 1); // norm lands in GF(q)*
            for (Elt b = 0; b < t->q2(); ++b) {
                CHECK(t->frobenius_q(t->mul(a, b)) ==
                      t->mul(t->frobenius_q(a), t->frobenius_q(b)));
                CHECK(t->frobenius_q(t->add(a, b)) ==
                      t->add(t->frobenius_q(a), t->frobenius_q(b)));
            }
        }
        CHECK(fixed == t->q()); // the GF(q) subfield, exactly
    }
}

TEST_CASE("subgroup closure and root-of-unity property") {
    auto t = FieldTower::build(5, 1);
    for (std::uint32_t n : {2u, 3u, 4u, 6u, 8u, 12u, 24u}) {
        const auto g = t->subgroup_of_order(n);
        CHECK(g.size() == n);
        for (Elt x : g) {
            CHECK(t->pow(x, n) == 1);
            for (Elt y : g) {
                const Elt z = t->mul(x, y);
                CHECK(std::find(g.begin(), g.end(), z) != g.end());
            }
        }
    }
}

TEST_CASE("norm preimages and subfield enumeration") {
    auto t = FieldTower::build(2, 2);
    const auto star = t->subfield_star();
    CHECK(star.size() == 3); // GF(4)*
    for (Elt b : star) {
        const Elt e = t->norm_preimage(b);
        CHECK(t->norm_q(e) == b);
    }
}

TEST_CASE("header round trip") {
    auto t = FieldTower::build(3, 1);
    CHECK(t->header() == "GF(9) p=3 modulus=1,0,1");
    auto back = FieldTower::parse_header(t->header());
    CHECK(back->q2() == 9);
    CHECK(back->generator() == t->generator());
    CHECK_THROWS_AS(FieldTower::parse_header("GF(9) p=3 modulus=1,1,1"), ParseError);
    CHECK_THROWS_AS(FieldTower::parse_header("nonsense"), ParseError);
}

TEST_CASE("large field sanity (polynomial path)") {
    auto t = FieldTower::build(2, 9); // GF(2^18): beyond the table threshold
    CHECK(t->q2() == 262144u);
    for (Elt a : {Elt(1), Elt(2), Elt(12345), Elt(98765)}) {
        CHECK(t->mul(a, t->inv(a)) == 1);
        CHECK(t->frobenius_q(t->frobenius_q(a)) == a);
        CHECK(t->in_subfield(t->norm_q(a)));
    }
}
