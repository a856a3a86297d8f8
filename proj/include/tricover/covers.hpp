#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ideals.hpp"
#include "sl2.hpp"

namespace tricover {

enum class BasePoint { cusp_one, cusp_infinity, elliptic };

inline const char* base_point_name(BasePoint b) {
    switch (b) {
        case BasePoint::cusp_one: return "one";
        case BasePoint::cusp_infinity: return "infinity";
        case BasePoint::elliptic: return "elliptic";
    }
    return "?";
}

/// Ramification over one base point: the fiber as (count, index) pairs,
/// with sum count*index equal to the covering degree.
struct RamificationData {
    BasePoint base;
    std::vector<std::pair<bigint, bigint>> fiber;
};

/// Everything computed for one cover X(p-ideal) -> X(1): the classification
/// of its Galois group, the covering degree mu_bar, genus values where the
/// hypotheses hold, and the ramification/monodromy data backing them.
struct CoverReport {
    CoverReport(int q_, std::int64_t p_, PrimeIdeal ideal_, FieldPtr residue_)
        : q(q_), p(p_), ideal(std::move(ideal_)), residue(std::move(residue_)),
          galois(GroupId::unknown(0)) {}

    int q;
    std::int64_t p;
    int ideal_index = -1;
    PrimeIdeal ideal;
    FieldPtr residue;
    GroupId galois;
    bigint index_mu_bar = 0;
    bool degenerate = false;
    std::optional<bigint> genus_full;
    std::optional<bigint> genus_borel;
    std::vector<RamificationData> ramification;
    std::optional<std::array<CycleType, 3>> borel_monodromy;  // over infinity, 1, z0
    bool oracle_checked = false;
    bool p2_extrapolated = false;
};

/// Entrywise reduction of the three generators modulo the ideal. Every
/// output has determinant 1.
inline std::array<Mat2, 3> reduce_generators(const TriangleParams& P, const PrimeIdeal& I,
                                             const FieldPtr& F) {
    auto red = [&](const CycloMat2& M) {
        return Mat2(reduce_cyclo(M.a, I, F), reduce_cyclo(M.b, I, F), reduce_cyclo(M.c, I, F),
                    reduce_cyclo(M.d, I, F));
    };
    return {red(P.gamma1), red(P.gamma2), red(P.gamma3)};
}

inline std::array<Mat2, 3> reduce_generators(const TriangleParams& P, const PrimeIdeal& I) {
    return reduce_generators(P, I, residue_field(I));
}

/// Galois-group classification of the cover. The trichotomy is: degenerate
/// guard (mu in the ideal) first, then p = 2 (dihedral), then p = 3 with
/// mu^2 - 2 in the ideal (PSL2(F5), index 60), else PSL2 of the residue
/// field with index (N+1)N(N-1)/2. With verify set, the prediction is
/// checked against a breadth-first closure of the reduced generators;
/// a mismatch is a hard error.
inline CoverReport classify_cover(const TriangleParams& P, const PrimeIdeal& I,
                                  bool verify = false, std::size_t closure_cap = 2'000'000) {
    if (P.q() != I.q) throw precondition_error("classify_cover: params/ideal q mismatch");
    FieldPtr F = residue_field(I);
    CoverReport rep(I.q, I.p, I, F);

    const auto gens = reduce_generators(P, I, F);
    const auto hint = std::make_pair(gens[0], gens[2]);  // gamma1, gamma3 images
    auto closure_psl = [&]() {
        return closure({gens[0], gens[1], gens[2]}, GroupMode::psl2_set, closure_cap);
    };
    auto mismatch = [&](const std::string& what) {
        std::ostringstream os;
        os << "classify_cover: theorem/oracle mismatch at q=" << I.q << " p=" << I.p << ": "
           << what;
        throw oracle_mismatch_error(os.str());
    };

    rep.degenerate = reduce_cyclo(P.mu, I, F).is_zero();
    if (rep.degenerate) {
        // gamma3 reduces to the identity; no closed-form label applies, so
        // report whatever the closure is.
        const GroupSet G = closure_psl();
        rep.galois = identify_group(G, hint);
        rep.index_mu_bar = G.size();
        rep.oracle_checked = true;
        return rep;
    }

    if (I.p == 2) {
        if (is_prime(I.q) && !verify) {
            rep.galois = GroupId::dihedral(static_cast<std::uint64_t>(I.q));
            rep.index_mu_bar = 2 * I.q;
            return rep;
        }
        const GroupSet G = closure_psl();
        if (G.size() % 2 != 0) mismatch("p=2 image has odd order");
        const std::uint64_t s = G.size() / 2;
        const GroupId id = identify_group(G, hint);
        if (id != GroupId::dihedral(s)) mismatch("p=2 image is not dihedral: " + id.label());
        if (s % 2 == 0 || I.q % static_cast<int>(s) != 0) mismatch("dihedral s does not divide q");
        if (is_prime(I.q) && s != static_cast<std::uint64_t>(I.q)) mismatch("s != q for prime q");
        rep.galois = GroupId::dihedral(s);
        rep.index_mu_bar = bigint(2) * s;
        rep.oracle_checked = true;
        return rep;
    }

    const CycloInt mu2m2 = P.mu * P.mu - CycloInt::constant(P.ring, 2);
    if (I.p == 3 && reduce_cyclo(mu2m2, I, F).is_zero()) {
        rep.galois = GroupId::psl2f5();
        rep.index_mu_bar = 60;
    } else {
        const bigint N = F->order();
        rep.galois = GroupId::psl2(I.p, I.f);
        rep.index_mu_bar = (N + 1) * N * (N - 1) / 2;
    }

    if (verify) {
        const GroupSet G = closure_psl();
        const GroupId id = identify_group(G, hint);
        if (id != rep.galois)
            mismatch("predicted " + rep.galois.label() + ", closure is " + id.label());
        if (bigint(G.size()) != rep.index_mu_bar)
            mismatch("predicted index " + rep.index_mu_bar.str() + ", closure has " +
                     std::to_string(G.size()) + " elements");
        rep.oracle_checked = true;
    }
    return rep;
}

/// Riemann-Hurwitz genus over a genus-0 base from explicit cycle data:
/// 2g - 2 = -2*degree + sum over fibers of sum (length - 1).
inline std::int64_t rh_genus_oracle(std::uint64_t degree, const std::vector<CycleType>& fibers) {
    if (degree < 1) throw precondition_error("rh_genus_oracle: degree must be positive");
    std::int64_t branch = 0;
    for (const auto& f : fibers) {
        if (f.sum() != degree)
            throw precondition_error("rh_genus_oracle: fiber does not sum to the degree");
        for (auto l : f.lengths) branch += static_cast<std::int64_t>(l) - 1;
    }
    const std::int64_t two_g_minus_2 = -2 * static_cast<std::int64_t>(degree) + branch;
    if (two_g_minus_2 % 2 != 0) throw std::logic_error("rh_genus_oracle: odd 2g-2");
    const std::int64_t g = two_g_minus_2 / 2 + 1;
    if (g < 0) throw std::logic_error("rh_genus_oracle: negative genus");
    return g;
}

namespace detail {

inline bigint rh_genus_from_ramification(const bigint& degree,
                                         const std::vector<RamificationData>& rams) {
    bigint branch = 0;
    for (const auto& r : rams) {
        bigint fiber_sum = 0;
        for (const auto& [count, e] : r.fiber) {
            branch += count * (e - 1);
            fiber_sum += count * e;
        }
        if (fiber_sum != degree)
            throw std::logic_error("rh_genus_from_ramification: fiber does not sum to the degree");
    }
    const bigint two_g_minus_2 = bigint(-2) * degree + branch;
    if (two_g_minus_2 % 2 != 0) throw std::logic_error("rh_genus_from_ramification: odd 2g-2");
    return two_g_minus_2 / 2 + 1;
}

inline bigint exact_quotient(const bigint& num, const bigint& den, const char* what) {
    if (den == 0 || num % den != 0) {
        std::ostringstream os;
        os << what << ": " << num.str() << " not divisible by " << den.str();
        throw std::logic_error(os.str());
    }
    return num / den;
}

}  // namespace detail

/// Genus of the full congruence cover, 1 + (mu_bar/2)(1 - 2/p - 1/q), in
/// exact rational arithmetic with a hard integrality check, together with
/// the ramification data (fibers over the two cusps carry mu_bar/p points
/// of index p, the fiber over the elliptic point mu_bar/q points of index
/// q). Cross-checked against the Riemann-Hurwitz assembly of those fibers.
inline void compute_genus_full(CoverReport& rep) {
    const PrimeIdeal& I = rep.ideal;
    if (!is_prime(I.q))
        throw precondition_error("genus_full: q composite (an odd prime is required)");
    if (I.p == I.q) throw precondition_error("genus_full: p = q is excluded");
    if (I.e > 1) throw precondition_error("genus_full: ramified ideal (e > 1)");
    if (rep.degenerate) throw precondition_error("genus_full: degenerate reduction (mu in the ideal)");

    const bigint mu = rep.index_mu_bar;
    const bigint p = I.p, q = I.q;
    // 1 + mu*(pq - 2q - p)/(2pq)
    const bigint num = mu * (p * q - 2 * q - p);
    const bigint den = 2 * p * q;
    if (num % den != 0) throw std::logic_error("genus_full: non-integral genus");
    const bigint g = 1 + num / den;
    if (g < 0) throw std::logic_error("genus_full: negative genus");

    const bigint k_cusp = detail::exact_quotient(mu, p, "genus_full: mu_bar/p");
    const bigint k_ell = detail::exact_quotient(mu, q, "genus_full: mu_bar/q");
    std::vector<RamificationData> rams;
    rams.push_back({BasePoint::cusp_one, {{k_cusp, p}}});
    rams.push_back({BasePoint::cusp_infinity, {{k_cusp, p}}});
    rams.push_back({BasePoint::elliptic, {{k_ell, q}}});
    if (detail::rh_genus_from_ramification(mu, rams) != g)
        throw oracle_mismatch_error("genus_full: formula disagrees with Riemann-Hurwitz assembly");

    rep.genus_full = g;
    rep.ramification = std::move(rams);
    rep.p2_extrapolated = (I.p == 2);
}

inline bigint genus_full(const TriangleParams& P, const PrimeIdeal& I) {
    CoverReport rep = classify_cover(P, I, false);
    compute_genus_full(rep);
    return *rep.genus_full;
}

/// Measured monodromy of the Borel-level cover: cycle types of the three
/// generator images acting on P^1 of the residue field, over infinity, 1
/// and the elliptic point respectively. The shapes are validated on the
/// spot: one fixed point plus p^(f-1) p-cycles over each cusp, equal types
/// over the two cusps, and over the elliptic point only q-cycles plus
/// 0 or 2 fixed points according to p^f mod q.
inline std::array<CycleType, 3> monodromy_borel(const TriangleParams& P, const PrimeIdeal& I,
                                                std::uint64_t enum_cap = 1'000'000) {
    if (!is_prime(I.q)) throw precondition_error("monodromy_borel: q must be prime");
    if (I.p == 2 || I.q == static_cast<int>(I.p))
        throw precondition_error("monodromy_borel: p and q must be distinct odd primes");
    const CoverReport rep = classify_cover(P, I, false);
    if (rep.galois.kind != GroupId::Kind::psl2)
        throw precondition_error("monodromy_borel: classification is not PSL2 of the residue field");

    FieldPtr F = rep.residue;
    const auto gens = reduce_generators(P, I, F);
    const CycleType over_inf = p1_action_cycles(gens[2], enum_cap);
    const CycleType over_one = p1_action_cycles(gens[1], enum_cap);
    const CycleType over_z0 = p1_action_cycles(gens[0], enum_cap);

    const std::uint64_t pf = F->order_u64();
    const auto pu = static_cast<std::uint64_t>(I.p);
    std::uint64_t pf1 = 1;
    for (int i = 1; i < I.f; ++i) pf1 *= pu;

    auto bad = [&](const std::string& what) {
        throw oracle_mismatch_error("monodromy_borel: q=" + std::to_string(I.q) +
                                    " p=" + std::to_string(I.p) + ": " + what);
    };
    for (const CycleType* t : {&over_inf, &over_one}) {
        if (t->count_of(1) != 1 || t->count_of(pu) != pf1 ||
            t->lengths.size() != pf1 + 1 || t->sum() != pf + 1)
            bad("cusp monodromy is not one fixed point plus p^(f-1) p-cycles: " + t->str());
    }
    if (!(over_inf == over_one)) bad("cusp monodromies differ");

    const std::uint64_t qu = static_cast<std::uint64_t>(I.q);
    const std::uint64_t m_fixed = over_z0.count_of(1);
    const std::uint64_t n_cycles = over_z0.count_of(qu);
    if (m_fixed != 0 && m_fixed != 2) bad("elliptic fixed-point count not in {0, 2}");
    if (n_cycles * qu + m_fixed != pf + 1 || over_z0.lengths.size() != n_cycles + m_fixed)
        bad("elliptic monodromy is not q-cycles plus fixed points: " + over_z0.str());
    const std::uint64_t pf_mod_q = pf % qu;
    if (m_fixed == 0 && pf_mod_q != qu - 1) bad("0 fixed points but p^f != -1 mod q");
    if (m_fixed == 2 && pf_mod_q != 1) bad("2 fixed points but p^f != 1 mod q");

    return {over_inf, over_one, over_z0};
}

/// Genus of the Borel-level cover by the closed formula (q-1)/2 * n - p^(f-1),
/// with n determined by p^f + 1 = q*n + m and m in {0, 2} by p^f mod q.
/// Purely arithmetic; the monodromy-based oracle lives alongside in the
/// verification suite.
inline bigint genus_borel(const TriangleParams& P, const PrimeIdeal& I) {
    if (!is_prime(I.q) || I.q < 5)
        throw precondition_error("genus_borel: q must be a prime >= 5");
    if (I.p == 2 || static_cast<int>(I.p) == I.q)
        throw precondition_error("genus_borel: p and q must be distinct odd primes");
    const CoverReport rep = classify_cover(P, I, false);
    if (rep.galois.kind != GroupId::Kind::psl2)
        throw precondition_error("genus_borel: classification is not PSL2 of the residue field");

    const bigint pf = boost::multiprecision::pow(bigint(I.p), static_cast<unsigned>(I.f));
    const bigint pf1 = boost::multiprecision::pow(bigint(I.p), static_cast<unsigned>(I.f - 1));
    const bigint r = pf % I.q;
    bigint m;
    if (r == I.q - 1) m = 0;
    else if (r == 1) m = 2;
    else throw std::logic_error("genus_borel: p^f is not +-1 mod q");
    const bigint n = detail::exact_quotient(pf + 1 - m, bigint(I.q), "genus_borel: (p^f+1-m)/q");
    const bigint g = bigint(I.q - 1) / 2 * n - pf1;
    if (g < 0) throw std::logic_error("genus_borel: negative genus");
    return g;
}

inline void compute_genus_borel(CoverReport& rep, const TriangleParams& P,
                                bool with_monodromy = false, std::uint64_t enum_cap = 1'000'000) {
    rep.genus_borel = genus_borel(P, rep.ideal);
    if (with_monodromy) {
        const auto cycles = monodromy_borel(P, rep.ideal, enum_cap);
        const std::uint64_t degree = rep.residue->order_u64() + 1;
        const std::int64_t g_oracle =
            rh_genus_oracle(degree, {cycles[0], cycles[1], cycles[2]});
        if (bigint(g_oracle) != *rep.genus_borel)
            throw oracle_mismatch_error("genus_borel: formula disagrees with Riemann-Hurwitz on measured monodromy");
        rep.borel_monodromy = cycles;
    }
}

/// Brute-force check of the generated-subgroup classification over an
/// explicit field: the closure of v = (0 1; -1 2) and u_z = (1 z; 0 1)
/// must be SL2(F5) exactly when p = 3 and z^2 = 2, and all of SL2 of the
/// field otherwise. The prediction failing is a hard error.
inline GroupId verify_generated_subgroup(std::int64_t p, const FieldPtr& F, const FqElem& z,
                                    std::size_t closure_cap = 2'000'000) {
    if (p < 3 || !is_prime(p)) throw precondition_error("verify_generated_subgroup: p must be an odd prime");
    if (F->p() != p) throw precondition_error("verify_generated_subgroup: field/prime mismatch");
    if (z.is_zero()) throw precondition_error("verify_generated_subgroup: z must be nonzero");
    // z must generate the field over F_p: its Frobenius orbit has size m.
    int d = 1;
    FqElem w = z.pow(static_cast<std::uint64_t>(p));
    while (!(w == z) && d <= F->ext_degree()) {
        w = w.pow(static_cast<std::uint64_t>(p));
        ++d;
    }
    if (d != F->ext_degree())
        throw precondition_error("verify_generated_subgroup: z does not generate the field");

    const Mat2 v(F->from_int(0), F->from_int(1), F->from_int(-1), F->from_int(2));
    const Mat2 u(F->one(), z, F->zero(), F->one());
    const GroupSet G = closure({v, u}, GroupMode::sl2_set, closure_cap);
    const GroupId id = identify_group(G);
    const bool special = (p == 3) && (z * z == F->from_int(2));
    const GroupId predicted = special ? GroupId::sl2f5() : GroupId::sl2(p, F->ext_degree());
    if (id != predicted)
        throw oracle_mismatch_error("verify_generated_subgroup: predicted " + predicted.label() +
                                    ", closure is " + id.label() + " of order " +
                                    std::to_string(G.size()));
    return id;
}

}  // namespace tricover
