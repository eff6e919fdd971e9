#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_L).
//
// A scalar at level L is stored by its coordinate vector in the power basis
// 1, zeta, ..., zeta^{phi(L)-1} of Q[x]/(Phi_L(x)), always reduced modulo the
// L-th cyclotomic polynomial Phi_L.  The representation is canonical: two
// scalars at the same level are equal iff their coordinate vectors are equal.
// Scalars at different levels are compared after embedding into the field at
// the least common multiple level (zeta_L -> zeta_M^{M/L} for L | M).

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qma/rational.hpp"

namespace qma {

namespace detail {

/// Integer polynomials, coefficient vectors with c[i] the coefficient of x^i.
using ZPoly = std::vector<Integer>;

inline void zpoly_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact quotient p / d of integer polynomials; requires d monic and d | p.
inline ZPoly zpoly_divexact(ZPoly p, const ZPoly& d) {
    zpoly_trim(p);
    if (d.empty() || d.back() != 1) throw std::logic_error("zpoly_divexact: divisor must be monic");
    ZPoly q;
    if (p.size() < d.size()) {
        zpoly_trim(p);
        if (!p.empty()) throw std::logic_error("zpoly_divexact: division not exact");
        return q;
    }
    q.assign(p.size() - d.size() + 1, Integer(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Integer c = p[i + d.size() - 1];
        q[i] = c;
        if (c != 0) {
            for (std::size_t k = 0; k < d.size(); ++k) p[i + k] -= c * d[k];
        }
    }
    zpoly_trim(p);
    if (!p.empty()) throw std::logic_error("zpoly_divexact: division not exact");
    return q;
}

/// Phi_L(x) as an integer polynomial, computed by the recursion
/// x^L - 1 = prod_{d | L} Phi_d(x) and cached per level.
inline const ZPoly& cyclotomic_polynomial(long L) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;

    // Iterative fill in increasing divisor order so dependencies exist.
    std::vector<long> todo;
    for (long d : divisors(L))
        if (!cache.count(d)) todo.push_back(d);
    for (long d : todo) {
        ZPoly num(static_cast<std::size_t>(d) + 1, Integer(0));  // x^d - 1
        num[0] = -1;
        num[static_cast<std::size_t>(d)] = 1;
        for (long e : divisors(d)) {
            if (e == d) continue;
            num = zpoly_divexact(std::move(num), cache.at(e));
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(L);
}

}  // namespace detail

/// An element of Q(zeta_L), reduced modulo Phi_L.
class CyclotomicScalar {
  public:
    CyclotomicScalar() : level_(1), coord_(1, Rational(0)) {}

    /// The rational r viewed at level L.
    static CyclotomicScalar from_rational(const Rational& r, long level = 1) {
        CyclotomicScalar s = zero(level);
        s.coord_[0] = r;
        return s;
    }

    static CyclotomicScalar zero(long level = 1) {
        check_level(level);
        CyclotomicScalar s;
        s.level_ = level;
        s.coord_.assign(static_cast<std::size_t>(degree_of(level)), Rational(0));
        return s;
    }

    static CyclotomicScalar one(long level = 1) { return from_rational(Rational(1), level); }

    /// zeta_L^k (k may be any integer; it is taken modulo L).
    static CyclotomicScalar root_of_unity(long level, long k) {
        check_level(level);
        long e = ((k % level) + level) % level;
        std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
        poly[static_cast<std::size_t>(e)] = 1;
        return reduced(level, std::move(poly));
    }

    long level() const { return level_; }
    const std::vector<Rational>& coords() const { return coord_; }

    bool is_zero() const {
        for (const auto& c : coord_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const {
        if (coord_[0] != 1) return false;
        for (std::size_t i = 1; i < coord_.size(); ++i)
            if (coord_[i] != 0) return false;
        return true;
    }

    /// The value as a rational if it lies in Q, otherwise nullopt.
    std::optional<Rational> as_rational() const {
        for (std::size_t i = 1; i < coord_.size(); ++i)
            if (coord_[i] != 0) return std::nullopt;
        return coord_[0];
    }

    /// Embed into Q(zeta_M); requires level | M.
    CyclotomicScalar promoted(long M) const {
        if (M == level_) return *this;
        if (M % level_ != 0) throw std::invalid_argument("promoted: target level must be a multiple");
        long step = M / level_;
        std::vector<Rational> poly(static_cast<std::size_t>((coord_.size() - 1) * step) + 1, Rational(0));
        for (std::size_t i = 0; i < coord_.size(); ++i) poly[i * static_cast<std::size_t>(step)] = coord_[i];
        return reduced(M, std::move(poly));
    }

    friend CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = aligned(a, b);
        for (std::size_t i = 0; i < x.coord_.size(); ++i) x.coord_[i] += y.coord_[i];
        return x;
    }

    friend CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = aligned(a, b);
        for (std::size_t i = 0; i < x.coord_.size(); ++i) x.coord_[i] -= y.coord_[i];
        return x;
    }

    CyclotomicScalar operator-() const {
        CyclotomicScalar r = *this;
        for (auto& c : r.coord_) c = -c;
        return r;
    }

    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = aligned(a, b);
        std::vector<Rational> conv(x.coord_.size() + y.coord_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < x.coord_.size(); ++i) {
            if (x.coord_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coord_.size(); ++j) {
                if (y.coord_[j] == 0) continue;
                conv[i + j] += x.coord_[i] * y.coord_[j];
            }
        }
        return reduced(x.level_, std::move(conv));
    }

    /// Multiplicative inverse; throws on zero.
    CyclotomicScalar inverse() const {
        if (is_zero()) throw std::domain_error("CyclotomicScalar::inverse: zero is not invertible");
        // Extended Euclid in Q[x] against Phi_L (irreducible), so gcd = 1.
        std::vector<Rational> r0 = modulus_rational(level_);
        std::vector<Rational> r1 = coord_;
        trim(r1);
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // s tracks the coefficient of *this
        while (!r1.empty()) {
            auto [q, rem] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto s2 = sub(s0, mul(q, s1));
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd (a nonzero constant); s0 * this == r0 mod Phi.
        if (r0.size() != 1) throw std::logic_error("CyclotomicScalar::inverse: gcd not constant");
        Rational c = r0[0];
        for (auto& v : s0) v /= c;
        return reduced(level_, std::move(s0));
    }

    friend CyclotomicScalar operator/(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        return a * b.inverse();
    }

    CyclotomicScalar pow(long e) const {
        if (e == 0) return one(level_);
        CyclotomicScalar base = e > 0 ? *this : inverse();
        unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        CyclotomicScalar acc = one(level_), b = base;
        while (n > 0) {
            if (n & 1UL) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = aligned(a, b);
        return x.coord_ == y.coord_;
    }
    friend bool operator!=(const CyclotomicScalar& a, const CyclotomicScalar& b) { return !(a == b); }

    /// Total order usable as a container key (level-aligned coordinate order).
    friend bool operator<(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        auto [x, y] = aligned(a, b);
        return x.coord_ < y.coord_;
    }

    /// Multiplicative order: least d >= 1 with s^d = 1, or nullopt when s is
    /// not a root of unity.  All roots of unity in Q(zeta_L) have order
    /// dividing lcm(2, L), which bounds the search.
    std::optional<long> order() const {
        if (is_zero()) return std::nullopt;
        long M = lcm_long(2, level_);
        if (!(pow(M) == one(level_))) return std::nullopt;
        for (long d : divisors(M))
            if (pow(d) == one(level_)) return d;
        return std::nullopt;  // unreachable
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (long i = static_cast<long>(coord_.size()) - 1; i >= 0; --i) {
            const Rational& c = coord_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool unit_mag = (mag == 1);
            if (i == 0) {
                os << mag.get_str();
            } else {
                if (!unit_mag) os << mag.get_str() << "*";
                os << "zeta";
                if (i != 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    long level_;
    std::vector<Rational> coord_;

    static void check_level(long level) {
        if (level < 1) throw std::invalid_argument("cyclotomic level must be >= 1");
    }

    static long degree_of(long level) { return level == 1 ? 1 : euler_phi(level); }

    static std::vector<Rational> modulus_rational(long level) {
        const auto& zp = detail::cyclotomic_polynomial(level);
        std::vector<Rational> p(zp.size());
        for (std::size_t i = 0; i < zp.size(); ++i) p[i] = Rational(zp[i]);
        if (level == 1) return {Rational(-1), Rational(1)};  // x - 1
        return p;
    }

    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    static std::vector<Rational> sub(std::vector<Rational> a, const std::vector<Rational>& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        trim(a);
        return a;
    }

    static std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        }
        trim(c);
        return c;
    }

    /// Polynomial division with remainder over Q; divisor need not be monic.
    static std::pair<std::vector<Rational>, std::vector<Rational>> divmod(std::vector<Rational> r,
                                                                          const std::vector<Rational>& d) {
        trim(r);
        std::vector<Rational> q;
        if (d.empty()) throw std::logic_error("divmod: zero divisor");
        if (r.size() >= d.size()) {
            q.assign(r.size() - d.size() + 1, Rational(0));
            for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
                Rational c = r[static_cast<std::size_t>(i) + d.size() - 1] / d.back();
                q[static_cast<std::size_t>(i)] = c;
                if (c != 0)
                    for (std::size_t k = 0; k < d.size(); ++k)
                        r[static_cast<std::size_t>(i) + k] -= c * d[k];
            }
        }
        trim(r);
        return {std::move(q), std::move(r)};
    }

    /// Build a scalar at the given level from an arbitrary-degree polynomial
    /// in zeta, reducing modulo Phi_level.
    static CyclotomicScalar reduced(long level, std::vector<Rational> poly) {
        CyclotomicScalar s = zero(level);
        auto [q, rem] = divmod(std::move(poly), modulus_rational(level));
        (void)q;
        for (std::size_t i = 0; i < rem.size(); ++i) s.coord_[i] = rem[i];
        return s;
    }

    static std::pair<CyclotomicScalar, CyclotomicScalar> aligned(const CyclotomicScalar& a,
                                                                 const CyclotomicScalar& b) {
        if (a.level_ == b.level_) return {a, b};
        long M = lcm_long(a.level_, b.level_);
        return {a.promoted(M), b.promoted(M)};
    }
};

/// zeta_level^k  (the "cyclo" constructor).
inline CyclotomicScalar cyclo(long level, long k) { return CyclotomicScalar::root_of_unity(level, k); }

/// Least d with s^d = 1, or nullopt if s is not a root of unity.
inline std::optional<long> order_of(const CyclotomicScalar& s) { return s.order(); }

}  // namespace qma
