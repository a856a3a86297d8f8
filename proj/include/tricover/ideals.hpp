#pragma once

#include <vector>

#include "cyclo.hpp"
#include "gf.hpp"

namespace tricover {

/// Prime ideal (p, g(lambda)) of Z[lambda_q]: g a monic irreducible factor
/// of T_q mod p, with ramification multiplicity e and residue degree
/// f = deg g. Ideals above a fixed (q, p) are indexed in the canonical
/// sorted factor order.
struct PrimeIdeal {
    int q;
    std::int64_t p;
    ModPoly g;
    int e;
    int f;
};

/// Least f >= 1 with p^f == +-1 (mod q'), where q' is 2q with all factors
/// of p removed. Pure modular arithmetic; no polynomial factorization.
inline int residue_degree_formula(int q, std::int64_t p) {
    if (q < 3 || q % 2 == 0)
        throw precondition_error("residue_degree_formula: q must be odd and >= 3");
    if (!is_prime(p)) throw precondition_error("residue_degree_formula: p must be prime");
    std::int64_t qp = 2 * static_cast<std::int64_t>(q);
    while (qp % p == 0) qp /= p;
    std::int64_t pw = 1;
    for (int f = 1;; ++f) {
        pw = (pw * (p % qp)) % qp;
        if (pw == 1 % qp || pw == (qp - 1) % qp) return f;
    }
}

/// Prime ideals of Z[lambda_q] above p, one per distinct irreducible factor
/// of T_q mod p, in sorted factor order.
inline std::vector<PrimeIdeal> primes_above(int q, std::int64_t p) {
    if (q < 3 || q % 2 == 0) throw precondition_error("primes_above: q must be odd and >= 3");
    if (!is_prime(p)) throw precondition_error("primes_above: p must be prime");
    const IntPoly T = lambda_minpoly(q);
    std::vector<PrimeIdeal> out;
    std::size_t ef_sum = 0;
    for (const auto& [g, e] : factor_mod_p(T, p)) {
        const int f = static_cast<int>(g.degree());
        ef_sum += static_cast<std::size_t>(e) * static_cast<std::size_t>(f);
        out.push_back(PrimeIdeal{q, p, g, e, f});
    }
    if (ef_sum != T.degree()) throw std::logic_error("primes_above: sum e*f != deg T_q");
    return out;
}

inline FieldPtr residue_field(const PrimeIdeal& I) { return ResidueField::from_modulus(I.g); }

/// Entrywise reduction Z[lambda_q] -> F_{p^f}: coefficients mod p, then the
/// polynomial mod g. A ring homomorphism.
inline FqElem reduce_cyclo(const CycloInt& x, const PrimeIdeal& I, const FieldPtr& F) {
    if (x.ring()->q() != I.q)
        throw precondition_error("reduce_cyclo: element and ideal belong to different q");
    if (F->p() != I.p || F->modulus() != I.g)
        throw precondition_error("reduce_cyclo: field does not match ideal");
    std::vector<std::int64_t> c;
    c.reserve(x.coeffs().size());
    for (const auto& v : x.coeffs()) {
        bigint r = v % I.p;
        if (r < 0) r += I.p;
        c.push_back(r.convert_to<std::int64_t>());
    }
    return F->from_residue(ModPoly(I.p, std::move(c)));
}

inline FqElem reduce_cyclo(const CycloInt& x, const PrimeIdeal& I) {
    return reduce_cyclo(x, I, residue_field(I));
}

inline bool ideal_contains(const PrimeIdeal& I, const CycloInt& x) {
    return reduce_cyclo(x, I).is_zero();
}

}  // namespace tricover
