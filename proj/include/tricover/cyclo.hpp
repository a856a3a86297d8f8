#pragma once

#include <memory>
#include <vector>

#include "intpoly.hpp"

namespace tricover {

class CycloRing;
using RingPtr = std::shared_ptr<const CycloRing>;

/// The order Z[lambda_q] presented as Z[x]/(T_q), T_q the minimal polynomial
/// of lambda_q = 2*cos(pi/q).
class CycloRing : public std::enable_shared_from_this<CycloRing> {
   public:
    static RingPtr make(int q) { return RingPtr(new CycloRing(q)); }

    int q() const noexcept { return q_; }
    const IntPoly& minpoly() const noexcept { return T_; }
    std::size_t degree() const { return T_.degree(); }

   private:
    explicit CycloRing(int q) : q_(q), T_(lambda_minpoly(q)) {}
    int q_;
    IntPoly T_;
};

/// Element of Z[lambda_q] in the power basis 1, lambda, ..., lambda^(d-1);
/// multiplication reduces modulo T_q, exactly over the integers.
class CycloInt {
   public:
    CycloInt(RingPtr R, std::vector<bigint> c) : R_(std::move(R)), c_(std::move(c)) {
        reduce();
    }

    static CycloInt zero(const RingPtr& R) { return CycloInt(R, {}); }
    static CycloInt constant(const RingPtr& R, bigint v) { return CycloInt(R, {std::move(v)}); }
    static CycloInt lambda(const RingPtr& R) { return CycloInt(R, {0, 1}); }

    const RingPtr& ring() const noexcept { return R_; }
    const std::vector<bigint>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const CycloInt& a, const CycloInt& b) {
        a.require_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycloInt& a, const CycloInt& b) { return !(a == b); }

    CycloInt operator-() const {
        CycloInt r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend CycloInt operator+(const CycloInt& a, const CycloInt& b) {
        a.require_same(b);
        CycloInt r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend CycloInt operator-(const CycloInt& a, const CycloInt& b) { return a + (-b); }
    friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
        a.require_same(b);
        const std::size_t d = a.c_.size();
        std::vector<bigint> prod(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return CycloInt(a.R_, std::move(prod));
    }
    friend CycloInt operator*(const CycloInt& a, const bigint& s) {
        CycloInt r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend CycloInt operator+(const CycloInt& a, const bigint& s) {
        CycloInt r = a;
        if (!r.c_.empty()) r.c_[0] += s;
        return r;
    }

   private:
    RingPtr R_;
    std::vector<bigint> c_;

    void require_same(const CycloInt& o) const {
        if (R_ != o.R_ && R_->q() != o.R_->q())
            throw precondition_error("CycloInt: elements of different rings");
    }

    // Reduce modulo the monic minimal polynomial and fix the length at d.
    void reduce() {
        const std::size_t d = R_->degree();
        const auto& T = R_->minpoly().coeffs();
        for (std::size_t i = c_.size(); i-- > d;) {
            const bigint c = c_[i];
            if (c == 0) continue;
            c_[i] = 0;
            for (std::size_t j = 0; j < d; ++j) c_[i - d + j] -= c * T[j];
        }
        c_.resize(d, 0);
    }
};

/// 2x2 matrix with entries in Z[lambda_q].
struct CycloMat2 {
    CycloInt a, b, c, d;
    CycloInt det() const { return a * d - b * c; }
};

/// The triangle-group data for one q: the ring, lambda and mu = 2 + lambda,
/// and the three generators
///   gamma1 = (-lambda -1; 1 0), gamma2 = (0 1; -1 2), gamma3 = (1 mu; 0 1),
/// each of determinant 1.
struct TriangleParams {
    RingPtr ring;
    CycloInt lambda, mu;
    CycloMat2 gamma1, gamma2, gamma3;

    int q() const { return ring->q(); }

    static TriangleParams make(int q) {
        RingPtr R = CycloRing::make(q);
        CycloInt lam = CycloInt::lambda(R);
        CycloInt mu = lam + bigint(2);
        const CycloInt zero = CycloInt::zero(R);
        const CycloInt one = CycloInt::constant(R, 1);
        const CycloInt two = CycloInt::constant(R, 2);
        CycloMat2 g1{-lam, -one, one, zero};
        CycloMat2 g2{zero, one, -one, two};
        CycloMat2 g3{one, mu, zero, one};
        return TriangleParams{std::move(R), std::move(lam), std::move(mu),
                              std::move(g1), std::move(g2), std::move(g3)};
    }
};

}  // namespace tricover
