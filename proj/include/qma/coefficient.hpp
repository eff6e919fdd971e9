#pragma once
// Coefficient ring used by algebra elements: either an exact cyclotomic
// scalar (parameters specialized to roots of unity) or a generic Laurent
// polynomial in named parameters.  The two modes never mix inside one
// algebra; arithmetic across modes is a usage error and throws.

#include <stdexcept>
#include <string>
#include <variant>

#include "qma/cyclotomic.hpp"
#include "qma/laurent.hpp"

namespace qma {

enum class CoefficientMode { cyclotomic, laurent };

class Coefficient {
  public:
    Coefficient() : v_(CyclotomicScalar()) {}
    Coefficient(CyclotomicScalar s) : v_(std::move(s)) {}
    Coefficient(LaurentScalar s) : v_(std::move(s)) {}

    CoefficientMode mode() const {
        return std::holds_alternative<CyclotomicScalar>(v_) ? CoefficientMode::cyclotomic
                                                            : CoefficientMode::laurent;
    }

    const CyclotomicScalar& cyclotomic() const {
        if (auto* p = std::get_if<CyclotomicScalar>(&v_)) return *p;
        throw std::logic_error("Coefficient: not in cyclotomic mode");
    }

    const LaurentScalar& laurent() const {
        if (auto* p = std::get_if<LaurentScalar>(&v_)) return *p;
        throw std::logic_error("Coefficient: not in laurent mode");
    }

    bool is_zero() const {
        return std::visit([](const auto& s) { return s.is_zero(); }, v_);
    }

    bool is_one() const {
        return std::visit([](const auto& s) { return s.is_one(); }, v_);
    }

    std::optional<Rational> as_rational() const {
        return std::visit([](const auto& s) { return s.as_rational(); }, v_);
    }

    /// True when the coefficient is invertible in its ring (any nonzero
    /// cyclotomic scalar; a single-term Laurent polynomial).
    bool is_unit() const {
        if (auto* p = std::get_if<CyclotomicScalar>(&v_)) return !p->is_zero();
        return std::get<LaurentScalar>(v_).is_unit();
    }

    /// A rational constant carried in the same mode (and, for cyclotomic
    /// coefficients, at the same level) as *this.
    Coefficient same_mode_rational(const Rational& r) const {
        if (auto* p = std::get_if<CyclotomicScalar>(&v_))
            return Coefficient(CyclotomicScalar::from_rational(r, p->level()));
        return Coefficient(LaurentScalar::from_rational(r));
    }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return Coefficient(x + y); });
    }

    friend Coefficient operator-(const Coefficient& a, const Coefficient& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return Coefficient(x - y); });
    }

    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return Coefficient(x * y); });
    }

    friend Coefficient operator/(const Coefficient& a, const Coefficient& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return Coefficient(x / y); });
    }

    Coefficient operator-() const {
        return std::visit([](const auto& s) { return Coefficient(-s); }, v_);
    }

    Coefficient inverse() const {
        return std::visit([](const auto& s) { return Coefficient(s.inverse()); }, v_);
    }

    Coefficient pow(long e) const {
        return std::visit([e](const auto& s) { return Coefficient(s.pow(e)); }, v_);
    }

    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        require_same_mode(a, b, "==");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    /// Total order for container keys; compares mode first.
    friend bool operator<(const Coefficient& a, const Coefficient& b) { return a.v_ < b.v_; }

    std::string to_string() const {
        return std::visit([](const auto& s) { return s.to_string(); }, v_);
    }

  private:
    std::variant<CyclotomicScalar, LaurentScalar> v_;

    static void require_same_mode(const Coefficient& a, const Coefficient& b, const char* op) {
        if (a.v_.index() != b.v_.index())
            throw std::invalid_argument(std::string("Coefficient: mixed coefficient modes in '") + op + "'");
    }

    template <typename F>
    static Coefficient combine(const Coefficient& a, const Coefficient& b, F&& f) {
        if (auto* x = std::get_if<CyclotomicScalar>(&a.v_)) {
            if (auto* y = std::get_if<CyclotomicScalar>(&b.v_)) return f(*x, *y);
        } else if (auto* y = std::get_if<LaurentScalar>(&b.v_)) {
            return f(std::get<LaurentScalar>(a.v_), *y);
        }
        throw std::invalid_argument("Coefficient: mixed coefficient modes in arithmetic");
    }
};

/// Specialize a generic (Laurent) coefficient to a cyclotomic one; identity
/// on coefficients already in cyclotomic mode.
inline Coefficient specialize(const Coefficient& c, const ParameterAssignment& a) {
    if (c.mode() == CoefficientMode::cyclotomic) return c;
    return Coefficient(specialize(c.laurent(), a));
}

}  // namespace qma
