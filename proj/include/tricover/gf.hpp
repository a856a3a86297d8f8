#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "modpoly.hpp"

namespace tricover {

class ResidueField;
using FieldPtr = std::shared_ptr<const ResidueField>;
class FqElem;

/// F_{p^m} presented as F_p[x]/(g) for a monic irreducible g of degree m.
/// Field objects are immutable and shared; elements hold a pointer back to
/// their field. Two field objects are the same field iff (p, g) agree.
class ResidueField : public std::enable_shared_from_this<ResidueField> {
   public:
    static FieldPtr from_modulus(ModPoly g) {
        if (!is_prime(g.p())) throw precondition_error("ResidueField: p must be prime");
        if (g.is_zero() || !g.is_monic() || g.degree() < 1)
            throw precondition_error("ResidueField: modulus must be monic of degree >= 1");
        if (!is_irreducible(g)) throw precondition_error("ResidueField: modulus must be irreducible");
        return FieldPtr(new ResidueField(std::move(g)));
    }
    static FieldPtr prime_field(std::int64_t p) { return from_modulus(ModPoly::x(p)); }

    std::int64_t p() const noexcept { return p_; }
    int ext_degree() const noexcept { return m_; }
    const ModPoly& modulus() const noexcept { return g_; }

    bigint order() const { return boost::multiprecision::pow(bigint(p_), static_cast<unsigned>(m_)); }

    std::uint64_t order_u64() const {
        std::uint64_t acc = 1;
        for (int i = 0; i < m_; ++i) {
            if (acc > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p_))
                throw cap_exceeded_error("residue field order exceeds 64-bit range");
            acc *= static_cast<std::uint64_t>(p_);
        }
        return acc;
    }

    bool same(const ResidueField& o) const { return p_ == o.p_ && g_ == o.g_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem from_int(std::int64_t v) const;
    FqElem gen() const;  // the class of x
    FqElem from_coeffs(std::vector<std::int64_t> c) const;
    FqElem from_residue(const ModPoly& r) const;
    FqElem from_index(std::uint64_t k) const;

   private:
    explicit ResidueField(ModPoly g) : p_(g.p()), m_(static_cast<int>(g.degree())), g_(std::move(g)) {}

    std::int64_t p_;
    int m_;
    ModPoly g_;
};

/// Element of a residue field, a coefficient vector of fixed length m with
/// entries reduced mod p.
class FqElem {
   public:
    FqElem(FieldPtr F, std::vector<std::int64_t> c) : F_(std::move(F)), c_(std::move(c)) {
        const auto m = static_cast<std::size_t>(F_->ext_degree());
        if (c_.size() > m) throw precondition_error("FqElem: coefficient vector longer than m");
        c_.resize(m, 0);
        for (auto& v : c_) v = ((v % F_->p()) + F_->p()) % F_->p();
    }

    const FieldPtr& field() const noexcept { return F_; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (auto v : c_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        return a.same_field(b) && a.c_ == b.c_;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    // Canonical order: highest-degree coefficient first, consistent with the
    // base-p digit index used for enumeration.
    friend bool fq_less(const FqElem& a, const FqElem& b) {
        a.require_same(b);
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    FqElem operator-() const {
        FqElem r = *this;
        const auto p = F_->p();
        for (auto& v : r.c_) v = (p - v) % p;
        return r;
    }
    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        a.require_same(b);
        FqElem r = a;
        const auto p = a.F_->p();
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (r.c_[i] + b.c_[i]) % p;
        return r;
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) { return a + (-b); }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        a.require_same(b);
        const auto p = a.F_->p();
        const auto m = a.c_.size();
        std::vector<std::int64_t> prod(2 * m - 1, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a.c_[i] * b.c_[j]) % p;
        }
        const auto& g = a.F_->modulus().coeffs();  // monic of degree m
        for (std::size_t i = prod.size(); i-- > m;) {
            const std::int64_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (std::size_t j = 0; j < m; ++j) {
                auto& slot = prod[i - m + j];
                slot = ((slot - c * g[j]) % p + p) % p;
            }
        }
        prod.resize(m);
        return FqElem(a.F_, std::move(prod));
    }

    FqElem inverse() const {
        if (is_zero()) throw division_by_zero("FqElem: inverse of zero");
        const auto p = F_->p();
        // extended Euclid on (this as polynomial, modulus)
        ModPoly r0 = F_->modulus(), r1(p, c_);
        ModPoly s0 = ModPoly::zero(p), s1 = ModPoly::one(p);
        while (!r1.is_zero()) {
            auto [q, r2] = ModPoly::divmod(r0, r1);
            ModPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0) throw std::logic_error("FqElem: modulus not irreducible?");
        const ModPoly inv = s0 * mod_inverse(r0.coeff(0), p);
        return F_->from_residue(inv % F_->modulus());
    }

    friend FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inverse(); }

    FqElem pow(const bigint& e) const {
        if (e < 0) return inverse().pow(-e);
        FqElem acc = F_->one();
        if (e == 0) return acc;
        const unsigned top = boost::multiprecision::msb(e);
        for (unsigned bit = top + 1; bit-- > 0;) {
            acc = acc * acc;
            if (boost::multiprecision::bit_test(e, bit)) acc = acc * (*this);
        }
        return acc;
    }
    FqElem pow(std::uint64_t e) const { return pow(bigint(e)); }

    /// Position in the enumeration order: sum coeff[i] * p^i. Requires the
    /// field order to fit in 64 bits.
    std::uint64_t index() const {
        F_->order_u64();
        std::uint64_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * static_cast<std::uint64_t>(F_->p()) + static_cast<std::uint64_t>(c_[i]);
        return acc;
    }

   private:
    FieldPtr F_;
    std::vector<std::int64_t> c_;

    bool same_field(const FqElem& o) const {
        return F_ == o.F_ || F_->same(*o.F_);
    }
    void require_same(const FqElem& o) const {
        if (!same_field(o)) throw precondition_error("FqElem: elements of different fields");
    }
};

inline FqElem ResidueField::zero() const {
    return FqElem(shared_from_this(), std::vector<std::int64_t>(static_cast<std::size_t>(m_), 0));
}
inline FqElem ResidueField::one() const { return from_int(1); }
inline FqElem ResidueField::from_int(std::int64_t v) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(m_), 0);
    c[0] = v;
    return FqElem(shared_from_this(), std::move(c));
}
inline FqElem ResidueField::gen() const { return from_residue(ModPoly::x(p_) % g_); }
inline FqElem ResidueField::from_coeffs(std::vector<std::int64_t> c) const {
    return FqElem(shared_from_this(), std::move(c));
}
inline FqElem ResidueField::from_residue(const ModPoly& r) const {
    const ModPoly rr = r % g_;
    std::vector<std::int64_t> c(static_cast<std::size_t>(m_), 0);
    for (std::size_t i = 0; i < rr.coeffs().size(); ++i) c[i] = rr.coeffs()[i];
    return FqElem(shared_from_this(), std::move(c));
}
inline FqElem ResidueField::from_index(std::uint64_t k) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(p_));
        k /= static_cast<std::uint64_t>(p_);
    }
    return FqElem(shared_from_this(), std::move(c));
}

/// All p^m field elements exactly once, in base-p digit order (0 first,
/// all-coefficients-(p-1) last). Guarded by a cap.
inline std::vector<FqElem> enumerate_field(const FieldPtr& F, std::uint64_t cap = 1'000'000) {
    const std::uint64_t n = F->order_u64();
    if (n > cap) throw cap_exceeded_error("enumerate_field: field order exceeds cap");
    std::vector<FqElem> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(F->from_index(k));
    return out;
}

/// Least n >= 1 with a^n = 1; divides p^m - 1.
inline std::uint64_t element_order(const FqElem& a) {
    if (a.is_zero()) throw precondition_error("element_order: zero has no multiplicative order");
    const std::uint64_t n = a.field()->order_u64() - 1;
    std::uint64_t ord = n;
    for (std::int64_t l : detail::prime_factors_u64(n)) {
        while (ord % static_cast<std::uint64_t>(l) == 0 &&
               a.pow(ord / static_cast<std::uint64_t>(l)) == a.field()->one())
            ord /= static_cast<std::uint64_t>(l);
    }
    return ord;
}

/// First z in enumeration order with z^2 = c, if any.
inline std::optional<FqElem> solve_square(const FieldPtr& F, const FqElem& c,
                                          std::uint64_t cap = 1'000'000) {
    const std::uint64_t n = F->order_u64();
    if (n > cap) throw cap_exceeded_error("solve_square: field order exceeds cap");
    for (std::uint64_t k = 0; k < n; ++k) {
        FqElem z = F->from_index(k);
        if (z * z == c) return z;
    }
    return std::nullopt;
}

}  // namespace tricover
