#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tricover {

using bigint = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i. The zero polynomial is the empty
/// sequence; it has no degree and degree() throws rather than handing a -1
/// into arithmetic.
class IntPoly {
   public:
    IntPoly() = default;
    IntPoly(std::initializer_list<bigint> ascending) : c_(ascending) { trim(); }
    explicit IntPoly(std::vector<bigint> ascending) : c_(std::move(ascending)) { trim(); }

    static IntPoly constant(bigint v) {
        IntPoly r;
        if (v != 0) r.c_.push_back(std::move(v));
        return r;
    }
    static IntPoly x() { return IntPoly{0, 1}; }
    static IntPoly monomial(std::size_t k, bigint a = 1) {
        IntPoly r;
        if (a != 0) {
            r.c_.assign(k + 1, 0);
            r.c_[k] = std::move(a);
        }
        return r;
    }

    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t degree() const {
        if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
        return c_.size() - 1;
    }
    const bigint& leading() const {
        if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }
    bigint coeff(std::size_t i) const { return i < c_.size() ? c_[i] : bigint(0); }
    const std::vector<bigint>& coeffs() const noexcept { return c_; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend IntPoly operator*(const IntPoly& a, const bigint& s) {
        if (s == 0) return IntPoly{};
        IntPoly r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    bigint operator()(const bigint& v) const {
        bigint acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    IntPoly derivative() const {
        IntPoly r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * bigint(i));
        r.trim();
        return r;
    }

    /// Quotient and remainder against a monic divisor; exact over the integers.
    static std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& num, const IntPoly& den) {
        if (den.is_zero() || !den.is_monic())
            throw precondition_error("divmod_monic: divisor must be monic");
        IntPoly q, r = num;
        const std::size_t dd = den.degree();
        while (!r.is_zero() && r.degree() >= dd) {
            const std::size_t k = r.degree() - dd;
            const bigint c = r.leading();
            q = q + IntPoly::monomial(k, c);
            r = r - IntPoly::monomial(k, c) * den;
        }
        return {q, r};
    }

    /// Exact division: throws if the divisor does not divide this polynomial
    /// coefficient-exactly.
    IntPoly exact_div(const IntPoly& den) const {
        if (den.is_zero()) throw division_by_zero("exact_div: division by zero polynomial");
        if (is_zero()) return IntPoly{};
        if (degree() < den.degree()) throw std::domain_error("exact_div: not divisible");
        IntPoly q, r = *this;
        const std::size_t dd = den.degree();
        const bigint& lc = den.leading();
        while (!r.is_zero() && r.degree() >= dd) {
            const std::size_t k = r.degree() - dd;
            if (r.leading() % lc != 0) throw std::domain_error("exact_div: not divisible");
            const bigint c = r.leading() / lc;
            q = q + IntPoly::monomial(k, c);
            r = r - IntPoly::monomial(k, c) * den;
        }
        if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
        return q;
    }

    bigint content() const {
        bigint g = 0;
        for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
        return g;
    }

    IntPoly scalar_exact_div(const bigint& s) const {
        if (s == 0) throw division_by_zero("scalar_exact_div: division by zero");
        IntPoly r = *this;
        for (auto& v : r.c_) {
            if (v % s != 0) throw std::domain_error("scalar_exact_div: not divisible");
            v /= s;
        }
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const bigint& c = c_[i];
            if (c == 0) continue;
            bigint a = boost::multiprecision::abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0) {
                os << a.str();
            } else {
                if (a != 1) os << a.str() << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

   private:
    std::vector<bigint> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// The n-th cyclotomic polynomial, built by exact division of x^n - 1
/// by the cyclotomic polynomials of the proper divisors of n.
inline IntPoly cyclotomic_poly(unsigned n) {
    if (n < 1) throw precondition_error("cyclotomic_poly: n must be >= 1");
    std::map<unsigned, IntPoly> phi;
    for (unsigned d : divisors_of(n)) {
        IntPoly num = IntPoly::monomial(d) - IntPoly{1};
        for (unsigned e : divisors_of(d)) {
            if (e == d) continue;
            num = num.exact_div(phi.at(e));
        }
        phi.emplace(d, std::move(num));
    }
    return phi.at(n);
}

/// Minimal polynomial T_q of 2*cos(pi/q) over the rationals, for odd q >= 3.
/// Recovered exactly from the identity x^d * T_q(x + 1/x) = Phi_{2q}(x)
/// with d = phi(2q)/2, solving for the coefficients from the top degree down.
inline IntPoly lambda_minpoly(int q) {
    if (q < 3 || q % 2 == 0)
        throw precondition_error("lambda_minpoly: q must be odd and >= 3");
    const IntPoly phi = cyclotomic_poly(2u * static_cast<unsigned>(q));
    const std::size_t d = phi.degree() / 2;
    std::vector<IntPoly> pow_xx1(d + 1);
    pow_xx1[0] = IntPoly{1};
    const IntPoly xx1{1, 0, 1};
    for (std::size_t i = 1; i <= d; ++i) pow_xx1[i] = pow_xx1[i - 1] * xx1;
    IntPoly rem = phi;
    std::vector<bigint> t(d + 1, 0);
    for (std::size_t i = d + 1; i-- > 0;) {
        t[i] = rem.coeff(d + i);
        if (t[i] != 0) rem = rem - IntPoly::monomial(d - i, t[i]) * pow_xx1[i];
    }
    if (!rem.is_zero()) throw std::logic_error("lambda_minpoly: coefficient solve failed");
    return IntPoly(std::move(t));
}

namespace detail {

// Pseudo-remainder R with lc(B)^(delta+1) * A = Q*B + R, delta = deg A - deg B.
inline IntPoly pseudo_rem(IntPoly A, const IntPoly& B) {
    const bigint lb = B.leading();
    const std::size_t db = B.degree();
    const std::size_t delta = A.degree() - db;
    std::size_t steps = 0;
    while (!A.is_zero() && A.degree() >= db) {
        const std::size_t k = A.degree() - db;
        const bigint la = A.leading();
        A = A * lb - IntPoly::monomial(k, la) * B;
        ++steps;
    }
    for (; steps < delta + 1 && !A.is_zero(); ++steps) A = A * lb;
    return A;
}

}  // namespace detail

/// Resultant of two integer polynomials via the subresultant
/// pseudo-remainder sequence; all arithmetic stays in the integers.
/// For monic f this is the product of g over the roots of f, i.e. the
/// field norm of g(alpha) down to the rationals.
inline bigint resultant(IntPoly A, IntPoly B) {
    namespace mp = boost::multiprecision;
    if (A.is_zero() || B.is_zero()) return 0;
    int sign = 1;
    if (A.degree() < B.degree()) {
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0)
        return sign * mp::pow(B.coeff(0), static_cast<unsigned>(A.degree()));
    const bigint ca = A.content(), cb = B.content();
    A = A.scalar_exact_div(ca);
    B = B.scalar_exact_div(cb);
    bigint t = mp::pow(ca, static_cast<unsigned>(B.degree())) *
               mp::pow(cb, static_cast<unsigned>(A.degree()));
    bigint g = 1, h = 1;
    while (true) {
        const std::size_t da = A.degree(), db = B.degree();
        const std::size_t delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) sign = -sign;
        IntPoly R = detail::pseudo_rem(A, B);
        A = B;
        const bigint divisor = g * mp::pow(h, static_cast<unsigned>(delta));
        B = R.scalar_exact_div(divisor);
        if (B.is_zero()) return 0;
        if (B.degree() == 0) {
            const auto dA = static_cast<unsigned>(A.degree());
            const bigint num = mp::pow(B.coeff(0), dA);
            const bigint den = mp::pow(h, dA - 1);
            if (num % den != 0) throw std::logic_error("resultant: inexact subresultant division");
            return sign * t * (num / den);
        }
        g = A.leading();
        if (delta > 0) {
            const bigint num = mp::pow(g, static_cast<unsigned>(delta));
            const bigint den = mp::pow(h, static_cast<unsigned>(delta - 1));
            if (num % den != 0) throw std::logic_error("resultant: inexact subresultant division");
            h = num / den;
        }
    }
}

/// Norm of g(lambda) from Q(lambda) to Q, where f is the (monic) minimal
/// polynomial of lambda: the resultant Res(f, g).
inline bigint norm_via_resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || !f.is_monic())
        throw precondition_error("norm_via_resultant: minimal polynomial must be monic");
    return resultant(f, g);
}

}  // namespace tricover
