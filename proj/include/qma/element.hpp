#pragma once
// Elements of a presented algebra in PBW normal form: finitely many
// exponent-vector monomials with nonzero coefficients, tied to the
// presentation that defines their multiplication.

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qma/presentation.hpp"

namespace qma {

class AlgebraElement {
  public:
    explicit AlgebraElement(PresentationPtr pres) : pres_(std::move(pres)) {
        if (!pres_) throw std::invalid_argument("AlgebraElement: null presentation");
    }

    static AlgebraElement zero(PresentationPtr pres) { return AlgebraElement(std::move(pres)); }

    static AlgebraElement one(PresentationPtr pres) {
        AlgebraElement e(std::move(pres));
        e.terms_.emplace(e.pres_->zero_monomial(), e.pres_->unit());
        return e;
    }

    static AlgebraElement scalar(PresentationPtr pres, const Coefficient& c) {
        AlgebraElement e(std::move(pres));
        if (!c.is_zero()) e.terms_.emplace(e.pres_->zero_monomial(), c);
        return e;
    }

    static AlgebraElement scalar(PresentationPtr pres, const Rational& r) {
        const Coefficient c = pres->rational_coeff(r);
        return scalar(std::move(pres), c);
    }

    static AlgebraElement generator(PresentationPtr pres, int k) {
        AlgebraElement e(std::move(pres));
        e.terms_.emplace(e.pres_->generator_monomial(k), e.pres_->unit());
        return e;
    }

    static AlgebraElement generator(PresentationPtr pres, const std::string& name) {
        const int k = pres->index_of(name);
        if (k < 0) throw std::invalid_argument("AlgebraElement: unknown generator '" + name + "'");
        return generator(std::move(pres), k);
    }

    /// The PBW monomial with the given exponent vector.
    static AlgebraElement monomial(PresentationPtr pres, const Monomial& m,
                                   const Coefficient& c) {
        if (static_cast<int>(m.size()) != pres->size())
            throw std::invalid_argument("AlgebraElement: exponent vector has wrong length");
        for (int e : m)
            if (e < 0) throw std::invalid_argument("AlgebraElement: negative exponent");
        AlgebraElement e(std::move(pres));
        if (!c.is_zero()) e.terms_.emplace(m, c);
        return e;
    }

    static AlgebraElement from_terms(PresentationPtr pres, Presentation::ElementMap terms) {
        AlgebraElement e(std::move(pres));
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->second.is_zero())
                it = terms.erase(it);
            else
                ++it;
        }
        e.terms_ = std::move(terms);
        return e;
    }

    const PresentationPtr& pres() const { return pres_; }
    const Presentation::ElementMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest total degree among the monomials (-1 for the zero element).
    long degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, Presentation::total_degree(m));
        return d;
    }

    Coefficient coefficient_of(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? pres_->rational_coeff(0) : it->second;
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        a.require_same(b);
        AlgebraElement r = a;
        for (const auto& [m, c] : b.terms_) Presentation::add_term(r.terms_, m, c);
        return r;
    }

    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        a.require_same(b);
        AlgebraElement r = a;
        for (const auto& [m, c] : b.terms_) Presentation::add_term(r.terms_, m, -c);
        return r;
    }

    AlgebraElement operator-() const {
        AlgebraElement r(pres_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.require_same(b);
        AlgebraElement r(a.pres_);
        r.terms_ = a.pres_->multiply(a.terms_, b.terms_);
        return r;
    }

    AlgebraElement scaled(const Coefficient& c) const {
        AlgebraElement r(pres_);
        Presentation::accumulate(r.terms_, terms_, c);
        return r;
    }

    AlgebraElement scaled(const Rational& r) const { return scaled(pres_->rational_coeff(r)); }

    AlgebraElement pow(unsigned long e) const {
        AlgebraElement acc = one(pres_);
        AlgebraElement base = *this;
        while (e > 0) {
            if (e & 1UL) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        a.require_same(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    /// Common bidegree of all monomials, or nullopt when inhomogeneous.
    std::optional<std::pair<std::vector<long>, std::vector<long>>> bidegree() const {
        std::optional<std::pair<std::vector<long>, std::vector<long>>> out;
        for (const auto& [m, c] : terms_) {
            auto d = pres_->bidegree(m);
            if (!out)
                out = std::move(d);
            else if (*out != d)
                return std::nullopt;
        }
        return out;
    }

    /// Image under the coefficient specialization onto the target
    /// presentation (same generators, specialized structure constants).
    AlgebraElement specialized(PresentationPtr target, const ParameterAssignment& a) const {
        if (target->size() != pres_->size())
            throw std::invalid_argument("specialized: generator count mismatch");
        AlgebraElement r(std::move(target));
        for (const auto& [m, c] : terms_) Presentation::add_term(r.terms_, m, specialize(c, a));
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = c.to_string();
            bool negated = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                cs.find(" - ") == std::string::npos) {
                negated = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (negated) os << "-";
                first = false;
            } else {
                os << (negated ? " - " : " + ");
            }
            const bool is_const = Presentation::total_degree(m) == 0;
            const bool plain = cs.find(' ') == std::string::npos;
            if (is_const) {
                os << (plain ? cs : "(" + cs + ")");
            } else if (cs == "1") {
                os << pres_->monomial_string(m);
            } else {
                os << (plain ? cs : "(" + cs + ")") << "*" << pres_->monomial_string(m);
            }
        }
        return os.str();
    }

  private:
    PresentationPtr pres_;
    Presentation::ElementMap terms_;

    void require_same(const AlgebraElement& other) const {
        if (pres_ != other.pres_)
            throw std::invalid_argument("AlgebraElement: operands belong to different presentations");
    }
};

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return a * b - b * a;
}

/// The unit gamma with x y = gamma * y x, when one exists (x, y nonzero).
inline std::optional<Coefficient> commutation_scalar(const AlgebraElement& x, const AlgebraElement& y) {
    const AlgebraElement xy = x * y;
    const AlgebraElement yx = y * x;
    if (yx.is_zero() || xy.is_zero()) return std::nullopt;
    const auto& [m, c] = *yx.terms().begin();
    const Coefficient num = xy.coefficient_of(m);
    if (num.is_zero() || !c.is_unit()) return std::nullopt;
    const Coefficient gamma = num * c.inverse();
    if (xy == yx.scaled(gamma)) return gamma;
    return std::nullopt;
}

/// Specialize every structure constant of a presentation at the given
/// root-of-unity parameter assignment, preserving the presentation shape.
inline PresentationPtr specialize_presentation(const PresentationPtr& pres, const ParameterAssignment& a) {
    if (pres->kind() == "quantum_matrix") {
        const QMAStructure& s = pres->qma();
        if (pres->has_single_parameter())
            return Presentation::quantum_matrix_single(s.n, specialize(pres->single_parameter(), a));
        std::vector<std::vector<Coefficient>> p(static_cast<std::size_t>(s.n));
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.n; ++j)
                p[static_cast<std::size_t>(i)].push_back(specialize(s.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], a));
        return Presentation::quantum_matrix(s.n, specialize(s.lambda, a), p);
    }
    if (pres->kind() == "subalgebra")
        return Presentation::subalgebra(specialize_presentation(pres->parent(), a), pres->parent_index());
    if (pres->kind() == "quasipolynomial")
        return Presentation::quasipolynomial(specialize(pres->quasi().q, a), pres->quasi().c);
    throw std::logic_error("specialize_presentation: unknown presentation kind");
}

struct TwistCheckResult {
    bool match = false;
    std::string detail;  // empty when match; otherwise names the first mismatch
};

/// Check that O_{lambda,p}(M_n) with lambda = q^{-2} is the 2-cocycle twist
/// of O_q(M_n) by c(e_i, e_j) = q p_ji (i > j; value 1 otherwise), applied to
/// the row grading on the left and the column grading on the right:
///
///   x'_lm * x'_ij = c(e_l, e_i)^{-1} c(e_m, e_j) (x_lm x_ij)' ,
///   (x_ab x_cd)'  = c(e_a, e_c) c(e_b, e_d)^{-1} x'_ab * x'_cd .
///
/// The twisted structure constants on all generator pairs are compared with
/// the straightening rules of O_{lambda,p}(M_n).
inline TwistCheckResult twist_check(int n, const Coefficient& q,
                                    const std::vector<std::vector<Coefficient>>& p) {
    const PresentationPtr base = Presentation::quantum_matrix_single(n, q);
    const PresentationPtr target = Presentation::quantum_matrix(n, q.pow(-2), p);
    const Coefficient one = q.same_mode_rational(1);

    auto cocycle = [&](int s, int t) -> Coefficient {
        return s > t ? q * p[static_cast<std::size_t>(t) - 1][static_cast<std::size_t>(s) - 1] : one;
    };

    for (int aA = 0; aA < n * n; ++aA) {
        const int l = aA / n + 1, m = aA % n + 1;
        for (int aB = 0; aB < n * n; ++aB) {
            const int i = aB / n + 1, j = aB % n + 1;
            const Coefficient prefactor = cocycle(l, i).inverse() * cocycle(m, j);

            Presentation::ElementMap twisted;
            for (const auto& [mono, c] : base->normalize_word({aA, aB})) {
                // Split the 2-letter normal monomial into ordered letters U <= V.
                int U = -1, V = -1;
                for (int k = 0; k < n * n; ++k) {
                    for (int t = 0; t < mono[static_cast<std::size_t>(k)]; ++t) {
                        if (U < 0)
                            U = k;
                        else
                            V = k;
                    }
                }
                const int ru = U / n + 1, cu = U % n + 1, rv = V / n + 1, cv = V % n + 1;
                const Coefficient factor = cocycle(ru, rv) * cocycle(cu, cv).inverse();
                Presentation::add_term(twisted, mono, prefactor * factor * c);
            }

            const Presentation::ElementMap expected = target->normalize_word({aA, aB});
            if (twisted != expected) {
                std::ostringstream os;
                os << "structure constants differ on " << base->gen(aA).name << " * "
                   << base->gen(aB).name;
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

}  // namespace qma
