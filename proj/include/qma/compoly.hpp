#pragma once
// Commutative multivariate polynomials with exact cyclotomic coefficients.
//
// * ComPoly: sparse exponent-vector representation over CyclotomicScalar
//   (which embeds the rationals at level 1), with ring arithmetic, exact
//   evaluation, formal partial derivatives, and printing.
// * Monomial orders are external comparators (see present.hpp for the
//   two-tier order used on center presentations); leading_term scans the
//   term map under a supplied order, so storage stays order-independent.
// * compoly_determinant: dense cofactor expansion with zero skipping, the
//   reference determinant for small structured matrices.

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qma/cyclotomic.hpp"
#include "qma/rational.hpp"

namespace qma {

/// Exponent vector of a commutative monomial; index = variable number.
using CMonomial = std::vector<int>;

inline long cmonomial_degree(const CMonomial& e) {
    long d = 0;
    for (int v : e) d += v;
    return d;
}

inline CMonomial cmonomial_product(const CMonomial& a, const CMonomial& b) {
    CMonomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool cmonomial_divides(const CMonomial& a, const CMonomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Componentwise quotient b / a; requires cmonomial_divides(a, b).
inline CMonomial cmonomial_quotient(const CMonomial& b, const CMonomial& a) {
    CMonomial r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

class ComPoly {
public:
    ComPoly() : nv_(0) {}
    explicit ComPoly(int variable_count) : nv_(variable_count) {}

    static ComPoly zero(int nv) { return ComPoly(nv); }

    static ComPoly constant(int nv, const CyclotomicScalar& c) {
        ComPoly p(nv);
        p.add_term(CMonomial(nv, 0), c);
        return p;
    }

    static ComPoly constant(int nv, const Rational& r) {
        return constant(nv, CyclotomicScalar::from_rational(r));
    }

    static ComPoly variable(int nv, int i) {
        if (i < 0 || i >= nv) throw std::out_of_range("ComPoly::variable: index out of range");
        CMonomial e(nv, 0);
        e[i] = 1;
        ComPoly p(nv);
        p.add_term(e, CyclotomicScalar::one());
        return p;
    }

    static ComPoly monomial(int nv, const CMonomial& e, const CyclotomicScalar& c) {
        if (static_cast<int>(e.size()) != nv)
            throw std::invalid_argument("ComPoly::monomial: exponent vector has wrong length");
        for (int v : e)
            if (v < 0) throw std::invalid_argument("ComPoly::monomial: negative exponent");
        ComPoly p(nv);
        p.add_term(e, c);
        return p;
    }

    int variable_count() const { return nv_; }
    const std::map<CMonomial, CyclotomicScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, cmonomial_degree(e));
        return d;
    }

    CyclotomicScalar coefficient_of(const CMonomial& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? CyclotomicScalar::zero() : it->second;
    }

    ComPoly operator+(const ComPoly& o) const {
        require_same(o);
        ComPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    ComPoly operator-() const {
        ComPoly r(nv_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    ComPoly operator-(const ComPoly& o) const { return *this + (-o); }

    ComPoly operator*(const ComPoly& o) const {
        require_same(o);
        ComPoly r(nv_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.add_term(cmonomial_product(ea, eb), ca * cb);
        return r;
    }

    ComPoly scaled(const CyclotomicScalar& c) const {
        ComPoly r(nv_);
        if (c.is_zero()) return r;
        for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
        return r;
    }

    ComPoly pow(unsigned long k) const {
        ComPoly r = constant(nv_, CyclotomicScalar::one());
        ComPoly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const ComPoly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }
    bool operator!=(const ComPoly& o) const { return !(*this == o); }

    CyclotomicScalar evaluate(const std::vector<CyclotomicScalar>& point) const {
        if (static_cast<int>(point.size()) != nv_)
            throw std::invalid_argument("ComPoly::evaluate: point has wrong length");
        CyclotomicScalar acc = CyclotomicScalar::zero();
        for (const auto& [e, c] : terms_) {
            CyclotomicScalar v = c;
            for (int i = 0; i < nv_; ++i)
                if (e[i] != 0) v = v * point[i].pow(e[i]);
            acc = acc + v;
        }
        return acc;
    }

    ComPoly derivative(int i) const {
        if (i < 0 || i >= nv_) throw std::out_of_range("ComPoly::derivative: index out of range");
        ComPoly r(nv_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            CMonomial f = e;
            f[i] -= 1;
            r.add_term(f, c * CyclotomicScalar::from_rational(Rational(e[i])));
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (static_cast<int>(names.size()) != nv_)
            throw std::invalid_argument("ComPoly::to_string: name list has wrong length");
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = it->second.to_string();
            bool negated = false;
            if (!first && cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
                negated = true;
                cs = cs.substr(1);
            }
            if (!first) out << (negated ? " - " : " + ");
            first = false;
            bool trivial_mono = cmonomial_degree(it->first) == 0;
            bool unit_coeff = cs == "1";
            bool composite = cs.find_first_of("+-", 1) != std::string::npos || (!cs.empty() && cs[0] == '-');
            if (trivial_mono) {
                out << (composite ? "(" + cs + ")" : cs);
                continue;
            }
            if (!unit_coeff) out << (composite ? "(" + cs + ")" : cs) << "*";
            bool firstv = true;
            for (int i = 0; i < nv_; ++i) {
                if (it->first[i] == 0) continue;
                if (!firstv) out << "*";
                firstv = false;
                out << names[i];
                if (it->first[i] > 1) out << "^" << it->first[i];
            }
        }
        return out.str();
    }

private:
    int nv_;
    std::map<CMonomial, CyclotomicScalar> terms_;

    void require_same(const ComPoly& o) const {
        if (nv_ != o.nv_)
            throw std::invalid_argument("ComPoly: operands have different variable counts");
    }

    void add_term(const CMonomial& e, const CyclotomicScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

/// Strict less-than on commutative monomials.
using MonomialOrder = std::function<bool(const CMonomial&, const CMonomial&)>;

/// Largest term of a nonzero polynomial under the given order.
inline std::pair<CMonomial, CyclotomicScalar> leading_term(const ComPoly& p, const MonomialOrder& less) {
    if (p.is_zero()) throw std::domain_error("leading_term: zero polynomial");
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

/// Dense determinant by cofactor expansion along the first column, skipping
/// zero entries.  Exact over the coefficient field; intended for small
/// matrices and as an independent oracle for structured determinants.
inline ComPoly compoly_determinant(const std::vector<std::vector<ComPoly>>& a) {
    std::size_t k = a.size();
    for (const auto& row : a)
        if (row.size() != k) throw std::invalid_argument("compoly_determinant: matrix not square");
    if (k == 0) throw std::invalid_argument("compoly_determinant: empty matrix");
    int nv = a[0][0].variable_count();
    std::function<ComPoly(const std::vector<int>&, std::size_t)> det =
        [&](const std::vector<int>& rows, std::size_t col) -> ComPoly {
        if (rows.size() == 1) return a[rows[0]][col];
        ComPoly acc = ComPoly::zero(nv);
        for (std::size_t pos = 0; pos < rows.size(); ++pos) {
            const ComPoly& entry = a[rows[pos]][col];
            if (entry.is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(rows.size() - 1);
            for (std::size_t q = 0; q < rows.size(); ++q)
                if (q != pos) rest.push_back(rows[q]);
            ComPoly sub = entry * det(rest, col + 1);
            acc = (pos % 2 == 0) ? acc + sub : acc - sub;
        }
        return acc;
    };
    std::vector<int> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = static_cast<int>(i);
    return det(rows, 0);
}

/// The top homogeneous part with respect to total degree (all variables of
/// degree one); zero maps to zero.
inline ComPoly top_homogeneous_part(const ComPoly& p) {
    ComPoly out = ComPoly::zero(p.variable_count());
    long top = p.total_degree();
    for (const auto& [e, c] : p.terms())
        if (cmonomial_degree(e) == top) out = out + ComPoly::monomial(p.variable_count(), e, c);
    return out;
}

}  // namespace qma
