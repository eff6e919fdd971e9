#pragma once
// Multivariate Laurent polynomials over Q in named commuting parameters,
// used as the generic-mode coefficient ring, together with the
// specialization homomorphism onto a cyclotomic field.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qma/cyclotomic.hpp"
#include "qma/rational.hpp"

namespace qma {

/// Exponent assignment of a monomial in the parameters: name -> nonzero power.
using ParamExponents = std::map<std::string, long>;

/// A Laurent polynomial: finitely many terms, canonically keyed by their
/// exponent maps (zero exponents are never stored, zero coefficients are
/// dropped), so equal values have identical representations.
class LaurentScalar {
  public:
    LaurentScalar() = default;

    static LaurentScalar from_rational(const Rational& r) {
        LaurentScalar s;
        if (r != 0) s.terms_[{}] = r;
        return s;
    }

    static LaurentScalar zero() { return LaurentScalar(); }
    static LaurentScalar one() { return from_rational(1); }

    /// The monomial name^power.
    static LaurentScalar parameter(const std::string& name, long power = 1) {
        if (name.empty()) throw std::invalid_argument("parameter name must be nonempty");
        LaurentScalar s;
        ParamExponents e;
        if (power != 0) e[name] = power;
        s.terms_[std::move(e)] = 1;
        return s;
    }

    const std::map<ParamExponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
    }

    std::optional<Rational> as_rational() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
        return std::nullopt;
    }

    /// A unit here means a single term (monomial times nonzero rational).
    bool is_unit() const { return terms_.size() == 1; }

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    LaurentScalar operator-() const {
        LaurentScalar r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ParamExponents e = ea;
                for (const auto& [name, k] : eb) {
                    long v = (e[name] += k);
                    if (v == 0) e.erase(name);
                }
                r.add_term(e, ca * cb);
            }
        return r;
    }

    /// Inverse of a unit (single-term) Laurent polynomial; throws otherwise.
    LaurentScalar inverse() const {
        if (terms_.size() != 1)
            throw std::domain_error("LaurentScalar::inverse: only single-term units are invertible");
        const auto& [e, c] = *terms_.begin();
        LaurentScalar r;
        ParamExponents inv;
        for (const auto& [name, k] : e) inv[name] = -k;
        r.terms_[std::move(inv)] = Rational(1) / c;
        return r;
    }

    friend LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b) {
        return a * b.inverse();
    }

    LaurentScalar pow(long e) const {
        if (e == 0) return one();
        LaurentScalar base = e > 0 ? *this : inverse();
        unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        LaurentScalar acc = one(), b = base;
        while (n > 0) {
            if (n & 1UL) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }
    friend bool operator<(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ < b.terms_; }

    /// Substitute unit Laurent polynomials for parameters (parameters not
    /// named in the map are left alone).  Used e.g. to pass from a generic
    /// multiparameter coefficient to the one-parameter coefficient ring.
    LaurentScalar substitute_units(const std::map<std::string, LaurentScalar>& subs) const {
        LaurentScalar result;
        for (const auto& [e, c] : terms_) {
            LaurentScalar term = from_rational(c);
            for (const auto& [name, k] : e) {
                auto it = subs.find(name);
                if (it == subs.end())
                    term = term * parameter(name, k);
                else
                    term = term * it->second.pow(k);
            }
            result = result + term;
        }
        return result;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print in reverse key order so higher monomials tend to come first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool printed_factor = false;
            if (mag != 1 || e.empty()) {
                os << mag.get_str();
                printed_factor = true;
            }
            for (const auto& [name, k] : e) {
                if (printed_factor) os << "*";
                os << name;
                if (k != 1) os << "^" << k;
                printed_factor = true;
            }
        }
        return os.str();
    }

  private:
    std::map<ParamExponents, Rational> terms_;

    void add_term(const ParamExponents& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
};

/// Root-of-unity values for the parameters: each named parameter is sent to
/// zeta_level^{exponent[name]}.
struct ParameterAssignment {
    long level = 1;
    std::map<std::string, long> exponent;

    ParameterAssignment() = default;
    ParameterAssignment(long lvl, std::map<std::string, long> exps)
        : level(lvl), exponent(std::move(exps)) {
        if (level < 1) throw std::invalid_argument("ParameterAssignment: level must be >= 1");
    }
};

/// Apply the specialization homomorphism determined by the assignment.
/// Every parameter occurring in s must be assigned.
inline CyclotomicScalar specialize(const LaurentScalar& s, const ParameterAssignment& a) {
    CyclotomicScalar result = CyclotomicScalar::zero(a.level);
    for (const auto& [e, c] : s.terms()) {
        long k = 0;
        for (const auto& [name, power] : e) {
            auto it = a.exponent.find(name);
            if (it == a.exponent.end())
                throw std::invalid_argument("specialize: unassigned parameter '" + name + "'");
            k += it->second * power;
        }
        result = result + CyclotomicScalar::from_rational(c, a.level) * cyclo(a.level, k);
    }
    return result;
}

}  // namespace qma
