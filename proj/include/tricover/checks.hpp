#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "covers.hpp"

namespace tricover {

struct CheckResult {
    std::string family;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string where(int q, std::int64_t p, int idx) {
    std::ostringstream os;
    os << "(q=" << q << ", p=" << p << ", ideal " << idx << ")";
    return os.str();
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace detail

/// The full cross-check suite: every closed-form result recomputed by an
/// independent brute-force route over the given ranges. Returns one result
/// per check family; all families passing is the green verdict.
inline std::vector<CheckResult> run_verification(int max_q, std::int64_t max_p,
                                                 std::size_t closure_cap = 2'000'000,
                                                 std::uint64_t enum_cap = 1'000'000) {
    std::vector<CheckResult> out;
    const auto primes = detail::primes_up_to(max_p);
    std::map<int, TriangleParams> params;
    for (int q = 3; q <= max_q; q += 2) params.emplace(q, TriangleParams::make(q));

    {  // classification vs breadth-first closure of the reduced generators
        CheckResult r;
        r.family = "classification-vs-closure";
        for (auto& [q, P] : params) {
            for (auto p : primes) {
                int idx = 0;
                for (const auto& I : primes_above(q, p)) {
                    const auto tag = detail::where(q, p, idx++);
                    try {
                        CoverReport quick = classify_cover(P, I, false, closure_cap);
                        if (quick.degenerate) {
                            // already closure-based
                            if (!ideal_contains(I, P.mu))
                                r.failures.push_back(tag + ": degenerate without mu in ideal");
                            ++r.checked;
                            continue;
                        }
                        if (quick.index_mu_bar > closure_cap) {
                            ++r.skipped;
                            continue;
                        }
                        classify_cover(P, I, true, closure_cap);
                        ++r.checked;
                    } catch (const std::exception& e) {
                        r.failures.push_back(tag + ": " + e.what());
                    }
                }
            }
        }
        out.push_back(std::move(r));
    }

    {  // residue degree: factorization vs the +-1 power formula
        CheckResult r;
        r.family = "residue-degree-formula";
        for (auto& [q, P] : params) {
            for (auto p : primes) {
                const int f_formula = residue_degree_formula(q, p);
                int idx = 0;
                std::size_t ef = 0;
                for (const auto& I : primes_above(q, p)) {
                    const auto tag = detail::where(q, p, idx++);
                    if (I.f != f_formula) {
                        std::ostringstream os;
                        os << tag << ": factor degree " << I.f << " != formula " << f_formula;
                        r.failures.push_back(os.str());
                    }
                    ef += static_cast<std::size_t>(I.e) * static_cast<std::size_t>(I.f);
                    ++r.checked;
                }
                if (ef != params.at(q).ring->degree())
                    r.failures.push_back(detail::where(q, p, -1) + ": sum e*f != deg T_q");
            }
        }
        out.push_back(std::move(r));
    }

    {  // measured monodromy shapes and the Borel genus against Riemann-Hurwitz
        CheckResult r;
        r.family = "borel-monodromy-and-genus";
        for (auto& [q, P] : params) {
            if (!is_prime(q)) continue;
            for (auto p : primes) {
                if (p == 2 || p == q) continue;
                int idx = 0;
                for (const auto& I : primes_above(q, p)) {
                    const auto tag = detail::where(q, p, idx++);
                    try {
                        const CoverReport quick = classify_cover(P, I, false, closure_cap);
                        if (quick.degenerate || quick.galois.kind != GroupId::Kind::psl2) {
                            ++r.skipped;
                            continue;
                        }
                        if (quick.residue->order_u64() > enum_cap) {
                            ++r.skipped;
                            continue;
                        }
                        const auto cycles = monodromy_borel(P, I, enum_cap);
                        if (q >= 5) {
                            const bigint g1 = genus_borel(P, I);
                            const std::int64_t g2 = rh_genus_oracle(
                                quick.residue->order_u64() + 1, {cycles[0], cycles[1], cycles[2]});
                            if (g1 != g2) {
                                std::ostringstream os;
                                os << tag << ": formula genus " << g1.str()
                                   << " != Riemann-Hurwitz " << g2;
                                r.failures.push_back(os.str());
                            }
                        }
                        ++r.checked;
                    } catch (const cap_exceeded_error&) {
                        ++r.skipped;
                    } catch (const std::exception& e) {
                        r.failures.push_back(tag + ": " + e.what());
                    }
                }
            }
        }
        out.push_back(std::move(r));
    }

    {  // full-cover genus formula vs its ramification assembly
        CheckResult r;
        r.family = "full-genus-vs-ramification";
        for (auto& [q, P] : params) {
            if (!is_prime(q)) continue;
            for (auto p : primes) {
                if (p == q) continue;
                int idx = 0;
                for (const auto& I : primes_above(q, p)) {
                    const auto tag = detail::where(q, p, idx++);
                    try {
                        CoverReport rep = classify_cover(P, I, false, closure_cap);
                        if (rep.degenerate || I.e > 1) {
                            ++r.skipped;
                            continue;
                        }
                        compute_genus_full(rep);  // internally cross-checked
                        if (rep.index_mu_bar <= 100000) {
                            // materialize the fibers and run the cycle-based oracle too
                            const auto deg = rep.index_mu_bar.convert_to<std::uint64_t>();
                            std::vector<CycleType> fibers;
                            for (const auto& ram : rep.ramification) {
                                std::vector<std::uint64_t> lens;
                                for (const auto& [count, e] : ram.fiber)
                                    for (bigint i = 0; i < count; ++i)
                                        lens.push_back(e.convert_to<std::uint64_t>());
                                fibers.push_back(CycleType::of(std::move(lens)));
                            }
                            if (bigint(rh_genus_oracle(deg, fibers)) != *rep.genus_full) {
                                r.failures.push_back(tag + ": genus != materialized Riemann-Hurwitz");
                            }
                        }
                        ++r.checked;
                    } catch (const std::exception& e) {
                        r.failures.push_back(tag + ": " + e.what());
                    }
                }
            }
        }
        out.push_back(std::move(r));
    }

    {  // generated-subgroup orders over F_9 and F_5 (120 / 720 / 120)
        CheckResult r;
        r.family = "generated-subgroup-orders";
        try {
            FieldPtr F9 = ResidueField::from_modulus(ModPoly(3, {1, 0, 1}));  // t^2 + 1
            FqElem z2 = F9->zero();
            bool found = false;
            for (const auto& z : enumerate_field(F9)) {
                if (z * z == F9->from_int(2)) { z2 = z; found = true; break; }
            }
            if (!found) throw std::logic_error("no square root of 2 in F_9");
            verify_generated_subgroup(3, F9, z2, closure_cap);
            const Mat2 v9(F9->from_int(0), F9->from_int(1), F9->from_int(-1), F9->from_int(2));
            const Mat2 u9(F9->one(), z2, F9->zero(), F9->one());
            if (closure({v9, u9}, GroupMode::sl2_set, closure_cap).size() != 120)
                r.failures.push_back("F_9, z^2=2: closure order != 120");
            ++r.checked;

            FqElem z3 = F9->zero();
            found = false;
            for (const auto& z : enumerate_field(F9)) {
                if (!z.is_zero() && z * z == z + F9->one()) { z3 = z; found = true; break; }
            }
            if (!found) throw std::logic_error("no root of z^2 = z + 1 in F_9");
            verify_generated_subgroup(3, F9, z3, closure_cap);
            const Mat2 u9b(F9->one(), z3, F9->zero(), F9->one());
            if (closure({v9, u9b}, GroupMode::sl2_set, closure_cap).size() != 720)
                r.failures.push_back("F_9, z^2=z+1: closure order != 720");
            ++r.checked;

            FieldPtr F5 = ResidueField::prime_field(5);
            verify_generated_subgroup(5, F5, F5->one(), closure_cap);
            const Mat2 v5 = Mat2::from_ints(F5, 0, 1, -1, 2);
            const Mat2 u5 = Mat2::from_ints(F5, 1, 1, 0, 1);
            if (closure({v5, u5}, GroupMode::sl2_set, closure_cap).size() != 120)
                r.failures.push_back("F_5, z=1: closure order != 120");
            ++r.checked;
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("generated-subgroup check: ") + e.what());
        }
        out.push_back(std::move(r));
    }

    {  // |norm(mu_q)| = q for prime q, and mu_q avoids every ideal above p != q
        CheckResult r;
        r.family = "norm-of-mu";
        for (auto& [q, P] : params) {
            if (!is_prime(q)) continue;
            const bigint nrm = norm_via_resultant(P.ring->minpoly(), IntPoly{2, 1});
            const bigint nrm_abs = boost::multiprecision::abs(nrm);
            if (nrm_abs != q) {
                std::ostringstream os;
                os << "q=" << q << ": |norm(mu)| = " << nrm_abs.str() << " != q";
                r.failures.push_back(os.str());
            }
            ++r.checked;
            for (auto p : primes) {
                if (p == q) continue;
                int idx = 0;
                for (const auto& I : primes_above(q, p)) {
                    if (ideal_contains(I, P.mu))
                        r.failures.push_back(detail::where(q, p, idx) + ": mu_q in ideal despite p != q");
                    ++idx;
                    ++r.checked;
                }
            }
        }
        out.push_back(std::move(r));
    }

    return out;
}

}  // namespace tricover
