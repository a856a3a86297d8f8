#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "intpoly.hpp"

namespace tricover {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        const std::int64_t qt = r / new_r;
        std::swap(t -= qt * new_t, new_t);
        std::swap(r -= qt * new_r, new_r);
    }
    if (r != 1) throw division_by_zero("mod_inverse: element not invertible");
    return ((t % p) + p) % p;
}

/// Polynomial over the prime field F_p, coefficients stored reduced in
/// [0, p) with index = degree. The zero polynomial is the empty sequence.
class ModPoly {
   public:
    ModPoly(std::int64_t p, std::vector<std::int64_t> ascending) : p_(p), c_(std::move(ascending)) {
        if (p_ < 2) throw precondition_error("ModPoly: modulus must be >= 2");
        for (auto& v : c_) v = ((v % p_) + p_) % p_;
        trim();
    }

    static ModPoly zero(std::int64_t p) { return ModPoly(p, {}); }
    static ModPoly one(std::int64_t p) { return ModPoly(p, {1}); }
    static ModPoly x(std::int64_t p) { return ModPoly(p, {0, 1}); }
    static ModPoly constant(std::int64_t p, std::int64_t v) { return ModPoly(p, {v}); }
    static ModPoly monomial(std::int64_t p, std::size_t k, std::int64_t a = 1) {
        std::vector<std::int64_t> c(k + 1, 0);
        c[k] = a;
        return ModPoly(p, std::move(c));
    }
    static ModPoly from_intpoly(const IntPoly& f, std::int64_t p) {
        std::vector<std::int64_t> c;
        c.reserve(f.coeffs().size());
        for (const auto& v : f.coeffs()) {
            bigint r = v % p;
            if (r < 0) r += p;
            c.push_back(r.convert_to<std::int64_t>());
        }
        return ModPoly(p, std::move(c));
    }

    std::int64_t p() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    std::size_t degree() const {
        if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
        return c_.size() - 1;
    }
    std::int64_t leading() const {
        if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }
    std::int64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

    // Canonical order: by degree, then by coefficient sequence (constant term
    // first). Used to fix factor and prime-ideal ordering across runs.
    friend bool operator<(const ModPoly& a, const ModPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    ModPoly operator-() const {
        ModPoly r = *this;
        for (auto& v : r.c_) v = (p_ - v) % p_;
        return r;
    }
    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        a.check_same(b);
        std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
        return ModPoly(a.p_, std::move(c));
    }
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) { return a + (-b); }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return zero(a.p_);
        std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
        }
        return ModPoly(a.p_, std::move(c));
    }
    friend ModPoly operator*(const ModPoly& a, std::int64_t s) {
        ModPoly r = a;
        s = ((s % a.p_) + a.p_) % a.p_;
        for (auto& v : r.c_) v = (v * s) % a.p_;
        r.trim();
        return r;
    }

    std::int64_t operator()(std::int64_t v) const {
        v = ((v % p_) + p_) % p_;
        std::int64_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * v + c_[i]) % p_;
        return acc;
    }

    ModPoly derivative() const {
        std::vector<std::int64_t> c;
        for (std::size_t i = 1; i < c_.size(); ++i) c.push_back((c_[i] * static_cast<std::int64_t>(i % p_)) % p_);
        return ModPoly(p_, std::move(c));
    }

    ModPoly monic() const {
        if (is_zero()) return *this;
        return *this * mod_inverse(leading(), p_);
    }

    static std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den) {
        num.check_same(den);
        if (den.is_zero()) throw division_by_zero("ModPoly::divmod: division by zero polynomial");
        const std::int64_t p = num.p_;
        if (num.is_zero() || num.degree() < den.degree()) return {zero(p), num};
        const std::int64_t inv_lc = mod_inverse(den.leading(), p);
        std::vector<std::int64_t> r = num.c_;
        const std::size_t dd = den.degree();
        std::vector<std::int64_t> q(num.degree() - dd + 1, 0);
        for (std::size_t i = r.size(); i-- > dd;) {
            const std::int64_t c = (r[i] * inv_lc) % p;
            if (c == 0) continue;
            q[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) {
                auto& slot = r[i - dd + j];
                slot = ((slot - c * den.c_[j]) % p + p) % p;
            }
        }
        return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
    }

    friend ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }
    friend ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

   private:
    std::int64_t p_;
    std::vector<std::int64_t> c_;

    void check_same(const ModPoly& o) const {
        if (p_ != o.p_) throw precondition_error("ModPoly: mixed moduli");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

inline ModPoly powmod(ModPoly base, const bigint& e, const ModPoly& mod) {
    if (e < 0) throw precondition_error("powmod: negative exponent");
    ModPoly acc = ModPoly::one(mod.p());
    if (e == 0) return acc;
    base = base % mod;
    const unsigned top = boost::multiprecision::msb(e);
    for (unsigned bit = top + 1; bit-- > 0;) {
        acc = (acc * acc) % mod;
        if (boost::multiprecision::bit_test(e, bit)) acc = (acc * base) % mod;
    }
    return acc;
}

namespace detail {

inline std::vector<std::int64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::int64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<std::int64_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<std::int64_t>(n));
    return out;
}

}  // namespace detail

/// Deterministic irreducibility certificate over F_p: f of degree n is
/// irreducible iff x^(p^n) == x (mod f) and gcd(x^(p^(n/l)) - x, f) = 1
/// for every prime l dividing n.
inline bool is_irreducible(const ModPoly& f) {
    if (f.is_zero()) return false;
    const std::size_t n = f.is_zero() ? 0 : (f.coeffs().size() - 1);
    if (n == 0) return false;
    if (n == 1) return true;
    const std::int64_t p = f.p();
    const ModPoly x = ModPoly::x(p);
    for (std::int64_t l : detail::prime_factors_u64(n)) {
        const bigint e = boost::multiprecision::pow(bigint(p), static_cast<unsigned>(n / l));
        const ModPoly h = powmod(x, e, f);
        if (!gcd(h - (x % f), f).is_one()) return false;
    }
    const bigint e = boost::multiprecision::pow(bigint(p), static_cast<unsigned>(n));
    return powmod(x, e, f) == (x % f);
}

namespace detail {

// f with f' = 0 over F_p is g(x^p) = (pth root of g)^p ... over the prime
// field the p-th root just reindexes coefficients.
inline ModPoly pth_root(const ModPoly& f) {
    const std::int64_t p = f.p();
    std::vector<std::int64_t> c;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i % static_cast<std::size_t>(p) == 0) {
            c.push_back(f.coeffs()[i]);
        } else if (f.coeffs()[i] != 0) {
            throw std::logic_error("pth_root: polynomial is not a p-th power");
        }
    }
    return ModPoly(p, std::move(c));
}

// Squarefree decomposition: emits (squarefree part, multiplicity) pairs.
inline void squarefree_parts(const ModPoly& f, int mult_scale,
                             std::vector<std::pair<ModPoly, int>>& out) {
    if (f.is_zero()) throw std::logic_error("squarefree_parts: zero polynomial");
    if (f.degree() == 0) return;
    const ModPoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_parts(pth_root(f), mult_scale * static_cast<int>(f.p()), out);
        return;
    }
    ModPoly c = gcd(f, fp);
    ModPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly z = w / y;
        if (!z.is_one()) out.emplace_back(z, mult_scale * i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) squarefree_parts(pth_root(c), mult_scale * static_cast<int>(f.p()), out);
}

// Distinct-degree splitting of a squarefree monic polynomial: pairs
// (product of irreducible factors of degree d, d).
inline std::vector<std::pair<ModPoly, std::size_t>> distinct_degree(ModPoly f) {
    const std::int64_t p = f.p();
    std::vector<std::pair<ModPoly, std::size_t>> out;
    ModPoly h = ModPoly::x(p) % f;
    std::size_t d = 0;
    while (!f.is_one() && f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, bigint(p), f);
        const ModPoly g = gcd(h - (ModPoly::x(p) % f), f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            if (f.is_one()) break;
            h = h % f;
        }
    }
    if (!f.is_one() && f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
inline void equal_degree(const ModPoly& u, std::size_t d, std::mt19937_64& rng,
                         std::vector<ModPoly>& out) {
    if (u.degree() == d) {
        out.push_back(u.monic());
        return;
    }
    const std::int64_t p = u.p();
    const std::size_t du = u.degree();
    while (true) {
        std::vector<std::int64_t> rc(du);
        for (auto& v : rc) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
        const ModPoly r(p, std::move(rc));
        if (r.is_zero()) continue;
        ModPoly g = gcd(r, u);
        if (g.is_one() || g == u.monic()) {
            if (p == 2) {
                ModPoly tr = r % u, sq = r % u;
                for (std::size_t j = 1; j < d; ++j) {
                    sq = (sq * sq) % u;
                    tr = tr + sq;
                }
                g = gcd(tr, u);
            } else {
                const bigint e = (boost::multiprecision::pow(bigint(p), static_cast<unsigned>(d)) - 1) / 2;
                const ModPoly w = powmod(r, e, u);
                g = gcd(w - ModPoly::one(p), u);
            }
        }
        if (!g.is_one() && g.degree() < du) {
            equal_degree(g, d, rng, out);
            equal_degree(u / g, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorization of a monic polynomial over F_p into monic
/// irreducibles with multiplicities, in canonical (sorted) order. The
/// result is validated: the factors multiply back to the input and each
/// carries an irreducibility certificate.
inline std::vector<std::pair<ModPoly, int>> factor(const ModPoly& f) {
    if (f.is_zero() || !f.is_monic())
        throw precondition_error("factor: polynomial must be monic");
    if (!is_prime(f.p())) throw precondition_error("factor: modulus must be prime");
    std::vector<std::pair<ModPoly, int>> result;
    if (f.degree() == 0) return result;

    std::vector<std::pair<ModPoly, int>> squarefree;
    detail::squarefree_parts(f.monic(), 1, squarefree);
    std::mt19937_64 rng(0x7515bd1bc1e0aedULL);  // fixed seed: factor order is canonicalized below
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : detail::distinct_degree(part.monic())) {
            std::vector<ModPoly> irr;
            detail::equal_degree(prod, d, rng, irr);
            for (auto& h : irr) result.emplace_back(std::move(h), mult);
        }
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    ModPoly check = ModPoly::one(f.p());
    for (const auto& [h, m] : result) {
        if (!is_irreducible(h)) throw std::logic_error("factor: reducible factor produced");
        for (int i = 0; i < m; ++i) check = check * h;
    }
    if (check != f) throw std::logic_error("factor: factor product does not match input");
    return result;
}

/// Factorization of an integer polynomial reduced mod p. The input must be
/// monic so the reduction keeps full degree.
inline std::vector<std::pair<ModPoly, int>> factor_mod_p(const IntPoly& f, std::int64_t p) {
    if (f.is_zero() || !f.is_monic())
        throw precondition_error("factor_mod_p: polynomial must be monic");
    if (!is_prime(p)) throw precondition_error("factor_mod_p: p must be prime");
    return factor(ModPoly::from_intpoly(f, p));
}

}  // namespace tricover
