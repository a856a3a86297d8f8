#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tricover/gf.hpp"

using namespace tricover;

namespace {
FieldPtr f9() { return ResidueField::from_modulus(ModPoly(3, {1, 0, 1})); }  // F_3[t]/(t^2+1)
}

TEST_CASE("field construction") {
    REQUIRE_THROWS_AS(ResidueField::from_modulus(ModPoly(4, {1, 1})), precondition_error);
    REQUIRE_THROWS_AS(ResidueField::from_modulus(ModPoly(3, {2, 0, 2})), precondition_error);
    // x^2 - 1 is reducible
    REQUIRE_THROWS_AS(ResidueField::from_modulus(ModPoly(3, {2, 0, 1})), precondition_error);

    const FieldPtr F = f9();
    REQUIRE(F->p() == 3);
    REQUIRE(F->ext_degree() == 2);
    REQUIRE(F->order() == 9);
    REQUIRE(F->order_u64() == 9);
}

TEST_CASE("field arithmetic") {
    const FieldPtr F = f9();
    const FqElem t = F->gen();
    REQUIRE(t * t == F->from_int(2));  // t^2 = -1 = 2

    const FieldPtr F11 = ResidueField::prime_field(11);
    REQUIRE(F11->from_int(2).inverse() == F11->from_int(6));
    REQUIRE(F11->from_int(1) / F11->from_int(2) == F11->from_int(6));

    SECTION("additive identity and inverses") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 50; ++i) {
            const FqElem a = F->from_index(rng() % 9);
            REQUIRE(a + F->zero() == a);
            REQUIRE(a - a == F->zero());
            if (!a.is_zero()) REQUIRE(a * a.inverse() == F->one());
        }
    }

    SECTION("division by zero reported distinctly") {
        REQUIRE_THROWS_AS(F->one() / F->zero(), division_by_zero);
        REQUIRE_THROWS_AS(F->zero().inverse(), division_by_zero);
    }

    SECTION("Frobenius fixes everything") {
        for (const FieldPtr& FF :
             {f9(), ResidueField::prime_field(7),
              ResidueField::from_modulus(ModPoly(2, {1, 1, 1})),
              ResidueField::from_modulus(ModPoly(5, {3, 0, 1}))}) {
            for (const auto& a : enumerate_field(FF))
                REQUIRE(a.pow(FF->order_u64()) == a);
        }
    }
}

TEST_CASE("element order") {
    const FieldPtr F = f9();
    REQUIRE(element_order(F->one()) == 1);
    REQUIRE(element_order(F->gen()) == 4);  // t^2 = -1
    REQUIRE(element_order(ResidueField::prime_field(11)->from_int(2)) == 10);
    REQUIRE_THROWS_AS(element_order(F->zero()), precondition_error);

    SECTION("order divides p^m - 1, exhaustively for small fields") {
        for (const FieldPtr& FF :
             {ResidueField::prime_field(2), ResidueField::from_modulus(ModPoly(2, {1, 1, 1})),
              f9(), ResidueField::from_modulus(ModPoly(5, {3, 0, 1})),
              ResidueField::from_modulus(ModPoly(11, {1, 0, 1}))}) {
            const std::uint64_t n = FF->order_u64() - 1;
            for (const auto& a : enumerate_field(FF)) {
                if (a.is_zero()) continue;
                const std::uint64_t o = element_order(a);
                REQUIRE(n % o == 0);
                REQUIRE(a.pow(o) == FF->one());
                if (o > 1) REQUIRE(a.pow(o - 1) != FF->one());
            }
        }
    }
}

TEST_CASE("field enumeration") {
    const FieldPtr F2 = ResidueField::prime_field(2);
    const auto e2 = enumerate_field(F2);
    REQUIRE(e2.size() == 2);
    REQUIRE(e2[0].is_zero());
    REQUIRE(e2[1] == F2->one());

    const auto e9 = enumerate_field(f9());
    REQUIRE(e9.size() == 9);
    REQUIRE(e9.front().is_zero());
    REQUIRE(e9.back().coeffs() == std::vector<std::int64_t>{2, 2});
    for (std::size_t i = 0; i < e9.size(); ++i) {
        REQUIRE(e9[i].index() == i);
        for (std::size_t j = i + 1; j < e9.size(); ++j) REQUIRE(e9[i] != e9[j]);
    }

    const auto e4 = enumerate_field(ResidueField::from_modulus(ModPoly(2, {1, 1, 1})));
    REQUIRE(e4.size() == 4);

    REQUIRE_THROWS_AS(enumerate_field(f9(), 5), cap_exceeded_error);
}

TEST_CASE("square roots") {
    const FieldPtr F = f9();
    const auto r = solve_square(F, F->from_int(2));
    REQUIRE(r.has_value());
    REQUIRE(*r == F->gen());  // t is first in enumeration order with t^2 = 2

    const FieldPtr F3 = ResidueField::prime_field(3);
    REQUIRE_FALSE(solve_square(F3, F3->from_int(2)).has_value());

    REQUIRE(solve_square(F, F->zero()).value() == F->zero());
}
