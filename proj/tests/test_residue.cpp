#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tricover/ideals.hpp"

using namespace tricover;

TEST_CASE("cyclotomic integers and triangle parameters") {
    const TriangleParams P = TriangleParams::make(5);
    REQUIRE(P.q() == 5);
    REQUIRE(P.ring->minpoly() == IntPoly{-1, -1, 1});
    REQUIRE(P.mu == P.lambda + bigint(2));

    // lambda^2 = lambda + 1 in Z[lambda_5]
    REQUIRE(P.lambda * P.lambda == P.lambda + bigint(1));

    for (const CycloMat2* g : {&P.gamma1, &P.gamma2, &P.gamma3}) {
        REQUIRE(g->det() == CycloInt::constant(P.ring, 1));
    }

    // gamma1 * gamma2 = gamma3^{-1}: their product times gamma3 is I
    const CycloMat2& g1 = P.gamma1;
    const CycloMat2& g2 = P.gamma2;
    CycloMat2 g12{g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d,
                  g1.c * g2.a + g1.d * g2.c, g1.c * g2.b + g1.d * g2.d};
    const CycloMat2& g3 = P.gamma3;
    CycloMat2 prod{g12.a * g3.a + g12.b * g3.c, g12.a * g3.b + g12.b * g3.d,
                   g12.c * g3.a + g12.d * g3.c, g12.c * g3.b + g12.d * g3.d};
    REQUIRE(prod.a == CycloInt::constant(P.ring, 1));
    REQUIRE(prod.b == CycloInt::zero(P.ring));
    REQUIRE(prod.c == CycloInt::zero(P.ring));
    REQUIRE(prod.d == CycloInt::constant(P.ring, 1));

    // q = 3 collapses to a rank-1 ring with lambda = 1
    const TriangleParams P3 = TriangleParams::make(3);
    REQUIRE(P3.lambda == CycloInt::constant(P3.ring, 1));
    REQUIRE(P3.mu == CycloInt::constant(P3.ring, 3));
}

TEST_CASE("primes above") {
    SECTION("q=5, p=11 splits") {
        const auto ideals = primes_above(5, 11);
        REQUIRE(ideals.size() == 2);
        REQUIRE(ideals[0].g == ModPoly(11, {3, 1}));
        REQUIRE(ideals[1].g == ModPoly(11, {7, 1}));
        for (const auto& I : ideals) {
            REQUIRE(I.e == 1);
            REQUIRE(I.f == 1);
        }
    }
    SECTION("q=5, p=3 is inert") {
        const auto ideals = primes_above(5, 3);
        REQUIRE(ideals.size() == 1);
        REQUIRE(ideals[0].g == ModPoly(3, {2, 2, 1}));
        REQUIRE(ideals[0].e == 1);
        REQUIRE(ideals[0].f == 2);
    }
    SECTION("q=9, p=3 is totally ramified") {
        const auto ideals = primes_above(9, 3);
        REQUIRE(ideals.size() == 1);
        REQUIRE(ideals[0].g == ModPoly(3, {2, 1}));
        REQUIRE(ideals[0].e == 3);
        REQUIRE(ideals[0].f == 1);
    }
    SECTION("bad input") {
        REQUIRE_THROWS_AS(primes_above(4, 3), precondition_error);
        REQUIRE_THROWS_AS(primes_above(5, 6), precondition_error);
    }
}

TEST_CASE("residue degree formula") {
    REQUIRE(residue_degree_formula(5, 2) == 2);
    REQUIRE(residue_degree_formula(5, 3) == 2);
    REQUIRE(residue_degree_formula(9, 3) == 1);

    SECTION("matches factorization for all odd q <= 31, p <= 31") {
        for (int q = 3; q <= 31; q += 2) {
            const std::size_t deg = lambda_minpoly(q).degree();
            for (std::int64_t p = 2; p <= 31; ++p) {
                if (!is_prime(p)) continue;
                const int f = residue_degree_formula(q, p);
                std::size_t ef = 0;
                for (const auto& I : primes_above(q, p)) {
                    REQUIRE(I.f == f);
                    ef += static_cast<std::size_t>(I.e) * static_cast<std::size_t>(I.f);
                }
                REQUIRE(ef == deg);
            }
        }
    }
}

TEST_CASE("reduction modulo an ideal") {
    const TriangleParams P9 = TriangleParams::make(9);
    const auto I9 = primes_above(9, 3).at(0);  // (3, x - 1)
    const FieldPtr F = residue_field(I9);

    REQUIRE(reduce_cyclo(P9.lambda, I9, F) == F->one());
    REQUIRE(reduce_cyclo(P9.mu, I9, F).is_zero());
    REQUIRE(reduce_cyclo(CycloInt::zero(P9.ring), I9, F).is_zero());

    SECTION("mismatched q rejected") {
        const TriangleParams P5 = TriangleParams::make(5);
        REQUIRE_THROWS_AS(reduce_cyclo(P5.lambda, I9), precondition_error);
    }

    SECTION("ring homomorphism on random pairs") {
        std::mt19937_64 rng(42);
        for (const auto& [q, p] : std::vector<std::pair<int, std::int64_t>>{
                 {5, 3}, {7, 2}, {9, 3}, {7, 13}, {15, 11}}) {
            const TriangleParams P = TriangleParams::make(q);
            const auto ideals = primes_above(q, p);
            const auto& I = ideals.front();
            const FieldPtr FF = residue_field(I);
            const std::size_t d = P.ring->degree();
            auto random_elem = [&]() {
                std::vector<bigint> c(d);
                for (auto& v : c)
                    v = static_cast<std::int64_t>(rng() % 2001) - 1000;
                return CycloInt(P.ring, std::move(c));
            };
            for (int t = 0; t < 1000; ++t) {
                const CycloInt a = random_elem(), b = random_elem();
                REQUIRE(reduce_cyclo(a + b, I, FF) ==
                        reduce_cyclo(a, I, FF) + reduce_cyclo(b, I, FF));
                REQUIRE(reduce_cyclo(a * b, I, FF) ==
                        reduce_cyclo(a, I, FF) * reduce_cyclo(b, I, FF));
            }
        }
    }
}

TEST_CASE("ideal membership") {
    const TriangleParams P9 = TriangleParams::make(9);
    const auto I9 = primes_above(9, 3).at(0);
    REQUIRE(ideal_contains(I9, P9.mu));
    REQUIRE(ideal_contains(I9, CycloInt::zero(P9.ring)));

    const TriangleParams P5 = TriangleParams::make(5);
    for (const auto& I : primes_above(5, 11)) {
        REQUIRE_FALSE(ideal_contains(I, P5.mu));
    }

    SECTION("mu_q avoids every ideal above p != q, prime q <= 31") {
        for (int q = 3; q <= 31; q += 2) {
            if (!is_prime(q)) continue;
            const TriangleParams P = TriangleParams::make(q);
            for (std::int64_t p = 2; p <= 31; ++p) {
                if (!is_prime(p) || p == q) continue;
                for (const auto& I : primes_above(q, p))
                    REQUIRE_FALSE(ideal_contains(I, P.mu));
            }
        }
    }
}
