#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace tricover {

/// Unimodular 2x2 matrix over a residue field. Construction rejects
/// determinant != 1; products and inverses stay unimodular by construction.
class Mat2 {
   public:
    Mat2(FqElem a, FqElem b, FqElem c, FqElem d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (!(det() == a_.field()->one()))
            throw precondition_error("Mat2: determinant must be 1");
    }

    static Mat2 identity(const FieldPtr& F) {
        return Mat2(unchecked{}, F->one(), F->zero(), F->zero(), F->one());
    }
    static Mat2 from_ints(const FieldPtr& F, std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t d) {
        return Mat2(F->from_int(a), F->from_int(b), F->from_int(c), F->from_int(d));
    }

    const FqElem& a() const noexcept { return a_; }
    const FqElem& b() const noexcept { return b_; }
    const FqElem& c() const noexcept { return c_; }
    const FqElem& d() const noexcept { return d_; }
    const FieldPtr& field() const noexcept { return a_.field(); }

    FqElem det() const { return a_ * d_ - b_ * c_; }
    FqElem trace() const { return a_ + d_; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                    x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
    }

    Mat2 inverse() const { return Mat2(unchecked{}, d_, -b_, -c_, a_); }
    Mat2 negate() const { return Mat2(unchecked{}, -a_, -b_, -c_, -d_); }

    bool is_identity() const {
        const auto& F = field();
        return a_ == F->one() && b_.is_zero() && c_.is_zero() && d_ == F->one();
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    Mat2 pow(std::uint64_t e) const {
        Mat2 acc = identity(field());
        Mat2 base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[[";
        auto put = [&](const FqElem& e) {
            os << "(";
            for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
                if (i) os << ",";
                os << e.coeffs()[i];
            }
            os << ")";
        };
        put(a_); os << ","; put(b_); os << "],["; put(c_); os << ","; put(d_); os << "]]";
        return os.str();
    }

   private:
    struct unchecked {};
    Mat2(unchecked, FqElem a, FqElem b, FqElem c, FqElem d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    FqElem a_, b_, c_, d_;
};

/// Canonical representative of {M, -M}: the entrywise-lexicographically
/// smaller matrix. Idempotent; fixes a section of SL2 -> PSL2.
inline Mat2 psl_canon(const Mat2& m) {
    const Mat2 n = m.negate();
    const FqElem* me[4] = {&m.a(), &m.b(), &m.c(), &m.d()};
    const FqElem* ne[4] = {&n.a(), &n.b(), &n.c(), &n.d()};
    for (int i = 0; i < 4; ++i) {
        if (fq_less(*me[i], *ne[i])) return m;
        if (fq_less(*ne[i], *me[i])) return n;
    }
    return m;
}

enum class GroupMode { sl2_set, psl2_set };

inline bool mats_equal(const Mat2& x, const Mat2& y, GroupMode mode) {
    if (mode == GroupMode::psl2_set) return psl_canon(x) == psl_canon(y);
    return x == y;
}

/// Order of a matrix in the chosen quotient, by repeated multiplication.
inline std::uint64_t mat_order(const Mat2& m, GroupMode mode, std::uint64_t bound) {
    const Mat2 id = Mat2::identity(m.field());
    Mat2 x = mode == GroupMode::psl2_set ? psl_canon(m) : m;
    std::uint64_t n = 1;
    while (!(mode == GroupMode::psl2_set ? psl_canon(x) == id : x == id)) {
        x = x * m;
        if (mode == GroupMode::psl2_set) x = psl_canon(x);
        if (++n > bound) throw std::logic_error("mat_order: bound exceeded");
    }
    return n;
}

namespace detail {

struct MatKey {
    std::uint64_t hi = 0, lo = 0;
    friend bool operator==(const MatKey&, const MatKey&) = default;
};

struct MatKeyHash {
    std::size_t operator()(const MatKey& k) const noexcept {
        std::uint64_t x = k.hi * 0x9e3779b97f4a7c15ULL ^ (k.lo + 0xbf58476d1ce4e5b9ULL);
        x ^= x >> 31;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 29;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace detail

/// A finite set of unimodular matrices closed under multiplication, as
/// produced by closure(). Elements are stored packed (32-bit element
/// indices) in breadth-first discovery order.
class GroupSet {
   public:
    GroupSet(FieldPtr F, GroupMode mode) : F_(std::move(F)), mode_(mode) {
        if (F_->order_u64() > 0xFFFFFFFFULL)
            throw cap_exceeded_error("GroupSet: residue field too large for packed enumeration");
    }

    const FieldPtr& field() const noexcept { return F_; }
    GroupMode mode() const noexcept { return mode_; }
    std::size_t size() const noexcept { return keys_.size(); }

    Mat2 at(std::size_t i) const {
        const auto& k = keys_.at(i);
        return Mat2(F_->from_index(k.hi >> 32), F_->from_index(k.hi & 0xFFFFFFFFULL),
                    F_->from_index(k.lo >> 32), F_->from_index(k.lo & 0xFFFFFFFFULL));
    }

    bool contains(const Mat2& m) const {
        const Mat2 r = mode_ == GroupMode::psl2_set ? psl_canon(m) : m;
        return set_.count(key_of(r)) > 0;
    }

    bool insert(const Mat2& m) {
        const auto k = key_of(m);
        if (!set_.insert(k).second) return false;
        keys_.push_back(k);
        return true;
    }

    detail::MatKey key_of(const Mat2& m) const {
        return detail::MatKey{(m.a().index() << 32) | m.b().index(),
                              (m.c().index() << 32) | m.d().index()};
    }

   private:
    FieldPtr F_;
    GroupMode mode_;
    std::vector<detail::MatKey> keys_;
    std::unordered_set<detail::MatKey, detail::MatKeyHash> set_;
};

/// Breadth-first closure of the generated group under multiplication.
/// In psl2_set mode every element is stored as its canonical {M, -M}
/// representative, so the result is the image in PSL2. Throws
/// cap_exceeded_error once the set would outgrow the cap.
inline GroupSet closure(const std::vector<Mat2>& gens, GroupMode mode,
                        std::size_t cap = 2'000'000) {
    if (gens.empty()) throw precondition_error("closure: need at least one generator");
    if (cap < 1) throw precondition_error("closure: cap must be >= 1");
    const FieldPtr& F = gens.front().field();
    for (const auto& g : gens)
        if (!(g.field() == F || g.field()->same(*F)))
            throw precondition_error("closure: generators over different fields");
    GroupSet G(F, mode);
    const Mat2 id = Mat2::identity(F);
    G.insert(mode == GroupMode::psl2_set ? psl_canon(id) : id);
    std::size_t scan = 0;
    while (scan < G.size()) {
        const Mat2 m = G.at(scan++);
        for (const auto& g : gens) {
            Mat2 y = m * g;
            if (mode == GroupMode::psl2_set) y = psl_canon(y);
            if (G.insert(y) && G.size() > cap)
                throw cap_exceeded_error("closure: cap exceeded");
        }
    }
    return G;
}

/// Identified isomorphism type of a closed matrix group.
struct GroupId {
    enum class Kind { dihedral, sl2f5, psl2f5, sl2, psl2, cyclic, unknown };
    Kind kind;
    std::uint64_t s = 0;     // dihedral: odd s with |G| = 2s; cyclic: n; unknown: |G|
    std::int64_t p = 0;      // sl2/psl2: field characteristic
    int m = 0;               // sl2/psl2: field extension degree

    static GroupId dihedral(std::uint64_t s) { return {Kind::dihedral, s, 0, 0}; }
    static GroupId sl2f5() { return {Kind::sl2f5, 0, 0, 0}; }
    static GroupId psl2f5() { return {Kind::psl2f5, 0, 0, 0}; }
    static GroupId sl2(std::int64_t p, int m) { return {Kind::sl2, 0, p, m}; }
    static GroupId psl2(std::int64_t p, int m) { return {Kind::psl2, 0, p, m}; }
    static GroupId cyclic(std::uint64_t n) { return {Kind::cyclic, n, 0, 0}; }
    static GroupId unknown(std::uint64_t order) { return {Kind::unknown, order, 0, 0}; }

    friend bool operator==(const GroupId&, const GroupId&) = default;

    std::string label() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::dihedral: os << "D_" << 2 * s; break;
            case Kind::sl2f5: os << "SL2(F5)"; break;
            case Kind::psl2f5: os << "PSL2(F5)"; break;
            case Kind::sl2:
                os << "SL2(" << p;
                if (m > 1) os << "^" << m;
                os << ")";
                break;
            case Kind::psl2:
                os << "PSL2(" << p;
                if (m > 1) os << "^" << m;
                os << ")";
                break;
            case Kind::cyclic: os << "C_" << s; break;
            case Kind::unknown: os << "Unknown(" << s << ")"; break;
        }
        return os.str();
    }
};

namespace detail {

// Witness search for the (2,3,k) style presentations: h of order 5, u of
// order 3 with ord-condition on h*u, generating the whole set.
inline bool presentation_witness(const GroupSet& g, std::uint64_t prod_cond, std::size_t cap) {
    const GroupMode mode = g.mode();
    std::vector<Mat2> ord5, ord3;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Mat2 m = g.at(i);
        const std::uint64_t o = mat_order(m, mode, g.size() + 1);
        if (o == 5) ord5.push_back(m);
        if (o == 3) ord3.push_back(m);
    }
    for (const auto& h : ord5) {
        for (const auto& u : ord3) {
            if (mat_order(h * u, mode, g.size() + 1) != prod_cond) continue;
            if (closure({h, u}, mode, cap).size() == g.size()) return true;
        }
    }
    return false;
}

}  // namespace detail

/// Classify a closed matrix group: full SL2/PSL2 of the ambient field by
/// order; SL2(F5) (order 120, unique involution, generators satisfying
/// x^5 = y^3 = (xy)^4 = 1) and its PSL2 quotient (order 60, x^5 = y^3 =
/// (xy)^2 = 1); dihedral groups D_2s with odd s, certified by the hint
/// pair (a of order s, b of order 2, b a b^-1 = a^-1); cyclic groups.
/// Anything else is reported Unknown with its order.
inline GroupId identify_group(const GroupSet& g,
                              std::optional<std::pair<Mat2, Mat2>> hint = std::nullopt) {
    const std::size_t n = g.size();
    const GroupMode mode = g.mode();
    const std::uint64_t N = g.field()->order_u64();
    const std::int64_t p = g.field()->p();
    const int m = g.field()->ext_degree();
    const bigint full = bigint(N + 1) * N * (N - 1);
    const bigint half = p == 2 ? full : full / 2;

    // Dihedral first: over F_2 the full group SL2(F_2) is itself D_6, and the
    // dihedral label is the sharper one there.
    if (hint && n % 2 == 0) {
        const std::uint64_t s = n / 2;
        if (s % 2 == 1 && s >= 3) {
            const auto& [a, b] = *hint;
            const std::uint64_t bound = n + 1;
            if (g.contains(a) && g.contains(b) && mat_order(a, mode, bound) == s &&
                mat_order(b, mode, bound) == 2 &&
                mats_equal(b * a * b.inverse(), a.inverse(), mode))
                return GroupId::dihedral(s);
        }
    }

    if (mode == GroupMode::sl2_set && bigint(n) == full) return GroupId::sl2(p, m);
    if (mode == GroupMode::psl2_set && bigint(n) == half) return GroupId::psl2(p, m);

    if (mode == GroupMode::sl2_set && n == 120) {
        std::size_t involutions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Mat2 x = g.at(i);
            if (!x.is_identity() && (x * x).is_identity()) ++involutions;
        }
        if (involutions == 1 && detail::presentation_witness(g, 4, n + 1))
            return GroupId::sl2f5();
    }
    if (mode == GroupMode::psl2_set && n == 60) {
        if (detail::presentation_witness(g, 2, n + 1)) return GroupId::psl2f5();
    }

    if (n <= 4096) {
        for (std::size_t i = 0; i < n; ++i) {
            if (mat_order(g.at(i), mode, n + 1) == n) return GroupId::cyclic(n);
        }
    }
    return GroupId::unknown(n);
}

/// Point of the projective line P^1(F_{p^m}): either finite (a : 1) or the
/// point at infinity (1 : 0).
struct ProjPoint {
    std::optional<FqElem> finite;  // empty = infinity

    static ProjPoint infinity() { return ProjPoint{std::nullopt}; }
    static ProjPoint at(FqElem a) { return ProjPoint{std::move(a)}; }
    bool is_infinity() const { return !finite.has_value(); }

    friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
        if (x.is_infinity() || y.is_infinity()) return x.is_infinity() == y.is_infinity();
        return *x.finite == *y.finite;
    }
};

/// Fractional linear action z -> (az + b)/(cz + d), with the usual
/// conventions at infinity.
inline ProjPoint moebius_apply(const Mat2& mat, const ProjPoint& z) {
    if (z.is_infinity()) {
        if (mat.c().is_zero()) return ProjPoint::infinity();
        return ProjPoint::at(mat.a() / mat.c());
    }
    const FqElem den = mat.c() * (*z.finite) + mat.d();
    if (den.is_zero()) return ProjPoint::infinity();
    return ProjPoint::at((mat.a() * (*z.finite) + mat.b()) / den);
}

/// Multiset of cycle lengths, sorted descending.
struct CycleType {
    std::vector<std::uint64_t> lengths;

    static CycleType of(std::vector<std::uint64_t> v) {
        std::sort(v.begin(), v.end(), std::greater<>());
        return CycleType{std::move(v)};
    }
    std::uint64_t sum() const {
        std::uint64_t s = 0;
        for (auto l : lengths) s += l;
        return s;
    }
    std::uint64_t count_of(std::uint64_t len) const {
        std::uint64_t c = 0;
        for (auto l : lengths) c += (l == len);
        return c;
    }
    friend bool operator==(const CycleType&, const CycleType&) = default;

    std::string str() const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < lengths.size(); ++i) {
            if (i) os << ",";
            os << lengths[i];
        }
        os << "}";
        return os.str();
    }
};

/// Cycle structure of the permutation of all p^m + 1 projective points
/// induced by a unimodular matrix.
inline CycleType p1_action_cycles(const Mat2& mat, std::uint64_t cap = 1'000'000) {
    const FieldPtr& F = mat.field();
    const std::uint64_t N = F->order_u64();
    if (N > cap) throw cap_exceeded_error("p1_action_cycles: field order exceeds cap");
    const std::uint64_t inf = N;
    std::vector<std::uint64_t> next(N + 1);
    for (std::uint64_t i = 0; i < N; ++i) {
        const FqElem z = F->from_index(i);
        const FqElem den = mat.c() * z + mat.d();
        if (den.is_zero()) {
            next[i] = inf;
        } else {
            next[i] = ((mat.a() * z + mat.b()) / den).index();
        }
    }
    next[inf] = mat.c().is_zero() ? inf : (mat.a() / mat.c()).index();

    std::vector<bool> seen(N + 1, false);
    std::vector<std::uint64_t> lengths;
    for (std::uint64_t i = 0; i <= N; ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = next[j];
            ++len;
        }
        lengths.push_back(len);
    }
    return CycleType::of(std::move(lengths));
}

}  // namespace tricover
