#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tricover/covers.hpp"
#include "tricover/sl2.hpp"

using namespace tricover;

namespace {

FieldPtr f9() { return ResidueField::from_modulus(ModPoly(3, {1, 0, 1})); }

FqElem root_of_z2_eq_2(const FieldPtr& F) {
    for (const auto& z : enumerate_field(F))
        if (z * z == F->from_int(2)) return z;
    throw std::logic_error("no root");
}

FqElem root_of_z2_eq_z_plus_1(const FieldPtr& F) {
    for (const auto& z : enumerate_field(F))
        if (!z.is_zero() && z * z == z + F->one()) return z;
    throw std::logic_error("no root");
}

Mat2 v_mat(const FieldPtr& F) { return Mat2::from_ints(F, 0, 1, -1, 2); }
Mat2 u_mat(const FieldPtr& F, const FqElem& z) {
    return Mat2(F->one(), z, F->zero(), F->one());
}

}  // namespace

TEST_CASE("matrix basics") {
    const FieldPtr F = ResidueField::prime_field(11);
    const Mat2 v = v_mat(F);
    REQUIRE(v * v.inverse() == Mat2::identity(F));
    REQUIRE(v.det() == F->one());

    REQUIRE_THROWS_AS(Mat2::from_ints(F, 1, 0, 0, 2), precondition_error);

    SECTION("powers of the parabolic generators match their closed forms") {
        const TriangleParams P = TriangleParams::make(5);
        const auto I = primes_above(5, 3).front();
        const FieldPtr E = residue_field(I);
        const auto gens = reduce_generators(P, I, E);
        const FqElem beta = reduce_cyclo(P.mu, I, E);
        for (std::uint64_t n = 1; n <= 12; ++n) {
            // gamma3^n = (1, n*beta; 0, 1)
            const Mat2 g3n = gens[2].pow(n);
            REQUIRE(g3n.a() == E->one());
            REQUIRE(g3n.b() == beta * E->from_int(static_cast<std::int64_t>(n)));
            REQUIRE(g3n.c().is_zero());
            // gamma2^n = (1-n, n; -n, 1+n)
            const Mat2 g2n = gens[1].pow(n);
            const auto nn = static_cast<std::int64_t>(n);
            REQUIRE(g2n.a() == E->from_int(1 - nn));
            REQUIRE(g2n.b() == E->from_int(nn));
            REQUIRE(g2n.c() == E->from_int(-nn));
            REQUIRE(g2n.d() == E->from_int(1 + nn));
        }
    }
}

TEST_CASE("psl canonicalization") {
    const FieldPtr F2 = ResidueField::prime_field(2);
    REQUIRE(psl_canon(Mat2::identity(F2)) == Mat2::identity(F2));

    const FieldPtr F11 = ResidueField::prime_field(11);
    const Mat2 neg_id = Mat2::from_ints(F11, -1, 0, 0, -1);
    REQUIRE(psl_canon(neg_id) == Mat2::identity(F11));

    SECTION("idempotent and sign-blind on random unimodular matrices") {
        std::mt19937_64 rng(99);
        int made = 0;
        while (made < 200) {
            const std::int64_t a = static_cast<std::int64_t>(rng() % 11);
            const std::int64_t b = static_cast<std::int64_t>(rng() % 11);
            const std::int64_t c = static_cast<std::int64_t>(rng() % 11);
            // choose d with ad - bc = 1 if possible
            if (a == 0) continue;
            const std::int64_t d = ((1 + b * c) % 11) * mod_inverse(a, 11) % 11;
            if (((a * d - b * c) % 11 + 11) % 11 != 1) continue;
            const Mat2 m = Mat2::from_ints(F11, a, b, c, d);
            ++made;
            REQUIRE(psl_canon(m) == psl_canon(psl_canon(m)));
            REQUIRE(psl_canon(m) == psl_canon(m.negate()));
        }
    }
}

TEST_CASE("closure") {
    const FieldPtr F = f9();

    SECTION("trivial") {
        const auto G = closure({Mat2::identity(F)}, GroupMode::sl2_set);
        REQUIRE(G.size() == 1);
        REQUIRE(G.at(0) == Mat2::identity(F));
    }

    SECTION("orders 120 and 720 over F_9") {
        const auto G120 = closure({v_mat(F), u_mat(F, root_of_z2_eq_2(F))}, GroupMode::sl2_set);
        REQUIRE(G120.size() == 120);
        const auto G720 =
            closure({v_mat(F), u_mat(F, root_of_z2_eq_z_plus_1(F))}, GroupMode::sl2_set);
        REQUIRE(G720.size() == 720);
    }

    SECTION("cap exceeded") {
        REQUIRE_THROWS_AS(closure({v_mat(F), u_mat(F, F->gen())}, GroupMode::sl2_set, 10),
                          cap_exceeded_error);
    }

    SECTION("sl2/psl2 size ratio") {
        // odd characteristic with -I in the group: ratio exactly 2
        const auto sl = closure({v_mat(F), u_mat(F, root_of_z2_eq_2(F))}, GroupMode::sl2_set);
        const auto psl = closure({v_mat(F), u_mat(F, root_of_z2_eq_2(F))}, GroupMode::psl2_set);
        REQUIRE(sl.contains(Mat2::from_ints(F, -1, 0, 0, -1)));
        REQUIRE(sl.size() == 2 * psl.size());

        // characteristic 2: the two sizes agree
        const TriangleParams P = TriangleParams::make(5);
        const auto I = primes_above(5, 2).front();
        const auto gens = reduce_generators(P, I);
        const std::vector<Mat2> gv{gens[0], gens[1], gens[2]};
        REQUIRE(closure(gv, GroupMode::sl2_set).size() ==
                closure(gv, GroupMode::psl2_set).size());

        // odd characteristic without -I: no collapse either
        const FieldPtr F5 = ResidueField::prime_field(5);
        const Mat2 par = Mat2::from_ints(F5, 1, 1, 0, 1);
        const auto sl5 = closure({par}, GroupMode::sl2_set);
        REQUIRE_FALSE(sl5.contains(Mat2::from_ints(F5, -1, 0, 0, -1)));
        REQUIRE(sl5.size() == closure({par}, GroupMode::psl2_set).size());
    }
}

TEST_CASE("group identification") {
    const FieldPtr F9 = f9();

    SECTION("SL2(F5) inside SL2(F_9)") {
        const auto G = closure({v_mat(F9), u_mat(F9, root_of_z2_eq_2(F9))}, GroupMode::sl2_set);
        REQUIRE(identify_group(G) == GroupId::sl2f5());
        REQUIRE(identify_group(G).label() == "SL2(F5)");
    }

    SECTION("full SL2 over F_5 wins over the order-120 coincidence") {
        const FieldPtr F5 = ResidueField::prime_field(5);
        const auto G = closure({v_mat(F5), u_mat(F5, F5->one())}, GroupMode::sl2_set);
        REQUIRE(G.size() == 120);
        REQUIRE(identify_group(G) == GroupId::sl2(5, 1));
    }

    SECTION("full SL2(F_9)") {
        const auto G =
            closure({v_mat(F9), u_mat(F9, root_of_z2_eq_z_plus_1(F9))}, GroupMode::sl2_set);
        REQUIRE(identify_group(G) == GroupId::sl2(3, 2));
    }

    SECTION("dihedral image at q=3, p=2") {
        const TriangleParams P = TriangleParams::make(3);
        const auto I = primes_above(3, 2).front();
        const auto gens = reduce_generators(P, I);
        const FieldPtr F2 = residue_field(I);
        REQUIRE(gens[0] == Mat2::from_ints(F2, 1, 1, 1, 0));
        REQUIRE(gens[2] == Mat2::from_ints(F2, 1, 1, 0, 1));
        const auto G = closure({gens[0], gens[2]}, GroupMode::psl2_set);
        REQUIRE(G.size() == 6);
        const auto id = identify_group(G, std::make_pair(gens[0], gens[2]));
        REQUIRE(id == GroupId::dihedral(3));
        REQUIRE(id.label() == "D_6");
    }

    SECTION("dihedral images for p=2, odd q <= 15: s odd, s | q, s = q for prime q") {
        for (int q = 3; q <= 15; q += 2) {
            const TriangleParams P = TriangleParams::make(q);
            for (const auto& I : primes_above(q, 2)) {
                const auto gens = reduce_generators(P, I);
                const auto G = closure({gens[0], gens[2]}, GroupMode::psl2_set);
                const auto id = identify_group(G, std::make_pair(gens[0], gens[2]));
                REQUIRE(id.kind == GroupId::Kind::dihedral);
                REQUIRE(id.s % 2 == 1);
                REQUIRE(q % static_cast<int>(id.s) == 0);
                if (is_prime(q)) REQUIRE(id.s == static_cast<std::uint64_t>(q));
            }
        }
    }

    SECTION("cyclic") {
        const FieldPtr F5 = ResidueField::prime_field(5);
        const auto G = closure({u_mat(F5, F5->one())}, GroupMode::sl2_set);
        REQUIRE(G.size() == 5);
        REQUIRE(identify_group(G) == GroupId::cyclic(5));
        const auto triv = closure({Mat2::identity(F5)}, GroupMode::sl2_set);
        REQUIRE(identify_group(triv) == GroupId::cyclic(1));
    }

    SECTION("a dicyclic group reports unknown") {
        const FieldPtr F11 = ResidueField::prime_field(11);
        const Mat2 rot = Mat2::from_ints(F11, 2, 0, 0, 6);
        const Mat2 flip = Mat2::from_ints(F11, 0, 1, -1, 0);
        const auto G = closure({rot, flip}, GroupMode::sl2_set);
        REQUIRE(G.size() == 20);
        const auto id = identify_group(G);
        REQUIRE(id.kind == GroupId::Kind::unknown);
        REQUIRE(id.s == 20);
    }
}

TEST_CASE("projective line action") {
    SECTION("identity fixes everything") {
        const FieldPtr F3 = ResidueField::prime_field(3);
        const auto ct = p1_action_cycles(Mat2::identity(F3));
        REQUIRE(ct == CycleType::of({1, 1, 1, 1}));
    }

    SECTION("reduced generators at q=5 over 3") {
        const TriangleParams P = TriangleParams::make(5);
        const auto I = primes_above(5, 3).front();
        const auto gens = reduce_generators(P, I);
        REQUIRE(p1_action_cycles(gens[2]) == CycleType::of({3, 3, 3, 1}));
        REQUIRE(p1_action_cycles(gens[0]) == CycleType::of({5, 5}));
    }

    SECTION("cycle sums and length divisibility") {
        std::mt19937_64 rng(31337);
        for (const FieldPtr& F : {f9(), ResidueField::prime_field(13),
                                  ResidueField::from_modulus(ModPoly(2, {1, 1, 1}))}) {
            const std::uint64_t n1 = F->order_u64() + 1;
            int made = 0;
            while (made < 25) {
                const FqElem a = F->from_index(rng() % F->order_u64());
                const FqElem b = F->from_index(rng() % F->order_u64());
                const FqElem c = F->from_index(rng() % F->order_u64());
                if (a.is_zero()) continue;
                const FqElem d = (F->one() + b * c) / a;
                const Mat2 m(a, b, c, d);
                ++made;
                const auto ct = p1_action_cycles(m);
                REQUIRE(ct.sum() == n1);
                const std::uint64_t o = mat_order(m, GroupMode::sl2_set, 100000);
                for (auto len : ct.lengths) REQUIRE(o % len == 0);
            }
        }
    }

    SECTION("transitivity whenever the closure is all of SL2/PSL2") {
        const TriangleParams P = TriangleParams::make(5);
        const auto I = primes_above(5, 3).front();
        const auto gens = reduce_generators(P, I);
        const FieldPtr E = residue_field(I);
        // orbit of infinity under the generators reaches every point
        std::vector<ProjPoint> frontier{ProjPoint::infinity()};
        std::vector<bool> seen(E->order_u64() + 1, false);
        seen[E->order_u64()] = true;
        std::size_t count = 1;
        while (!frontier.empty()) {
            const ProjPoint z = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                const ProjPoint w = moebius_apply(g, z);
                const std::uint64_t idx = w.is_infinity() ? E->order_u64() : w.finite->index();
                if (!seen[idx]) {
                    seen[idx] = true;
                    ++count;
                    frontier.push_back(w);
                }
            }
        }
        REQUIRE(count == E->order_u64() + 1);
    }
}
