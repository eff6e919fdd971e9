#pragma once

// Named exact identity checks over quantum matrix presentations, shared by
// the command-line tool and the verdict suite.  Every check is deterministic
// and exact: pass means the identity reduced to literal zero (or the stated
// structural property held), and detail carries the counterexample context
// on failure.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qma/center.hpp"
#include "qma/element.hpp"
#include "qma/present.hpp"
#include "qma/qdet.hpp"

namespace qma {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on pass
};

inline bool all_pass(const std::vector<Check>& checks) {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace detail {

inline Check identity_check(const std::string& name, const AlgebraElement& lhs,
                            const AlgebraElement& rhs) {
    Check c{name, lhs == rhs, ""};
    if (!c.pass) c.detail = "difference is nonzero";
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Determinant: centrality (single-parameter) or normality (multiparameter)

inline std::vector<Check> determinant_checks(const PresentationPtr& pres) {
    const QMAStructure& s = pres->qma();
    std::vector<Check> out;
    const AlgebraElement D = quantum_determinant(pres);
    if (pres->has_single_parameter()) {
        Check c{"D central", is_central(D), ""};
        if (!c.pass) c.detail = "a generator fails to commute with D";
        out.push_back(std::move(c));
        return out;
    }
    for (int i = 1; i <= s.n; ++i)
        for (int j = 1; j <= s.n; ++j) {
            const AlgebraElement x = AlgebraElement::generator(pres, pres->qma_index(i, j));
            const Coefficient gamma = determinant_normality_scalar(pres, i, j);
            out.push_back(detail::identity_check("D normal on x[" + std::to_string(i) + "," +
                                                     std::to_string(j) + "]",
                                                 D * x, (x * D).scaled(gamma)));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Laplace expansions

inline std::vector<Check> laplace_checks(const PresentationPtr& pres) {
    const QMAStructure& s = pres->qma();
    std::vector<Check> out;
    const AlgebraElement D = quantum_determinant(pres);
    if (pres->has_single_parameter()) {
        for (int i = 1; i <= s.n; ++i) {
            out.push_back(detail::identity_check("laplace row " + std::to_string(i),
                                                 laplace_row_expansion(pres, i), D));
            out.push_back(detail::identity_check("laplace column " + std::to_string(i),
                                                 laplace_column_expansion(pres, i), D));
        }
        return out;
    }
    auto gen = [&](int i, int j) {
        return AlgebraElement::generator(pres, pres->qma_index(i, j));
    };
    auto p = [&](int i, int j) {
        return s.p[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
    };
    if (s.n == 2) {
        out.push_back(detail::identity_check(
            "laplace row 1 (weighted)",
            gen(1, 1) * complement_minor(pres, 1, 1) -
                (gen(1, 2) * complement_minor(pres, 1, 2)).scaled(p(2, 1)),
            D));
    } else if (s.n == 3) {
        const AlgebraElement row1 =
            gen(1, 1) * complement_minor(pres, 1, 1) -
            (gen(1, 2) * complement_minor(pres, 1, 2)).scaled(p(2, 1)) +
            (gen(1, 3) * complement_minor(pres, 1, 3)).scaled(p(3, 1) * p(3, 2));
        out.push_back(detail::identity_check("laplace row 1 (weighted)", row1, D));
        const AlgebraElement row3 =
            (gen(3, 1) * complement_minor(pres, 3, 1)).scaled(p(1, 3) * p(2, 3)) -
            (gen(3, 2) * complement_minor(pres, 3, 2)).scaled(p(2, 1) * p(1, 3) * p(2, 3)) +
            gen(3, 3) * complement_minor(pres, 3, 3);
        out.push_back(detail::identity_check("laplace row 3 (weighted)", row3, D));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quadratic minor identities (n = 3) and pairwise commutation of the
// antidiagonal minor family

/// All pairwise commutators among D(1), D(2), D(3) and the transposed
/// minors D'(1), D'(2) vanish (single-parameter n = 3).
inline Check antidiagonal_commutation_check(const PresentationPtr& pres) {
    std::vector<std::pair<std::string, AlgebraElement>> family;
    for (int t = 1; t <= 3; ++t)
        family.emplace_back("Dt(" + std::to_string(t) + ")", antidiagonal_minor(pres, t));
    for (int t = 1; t <= 2; ++t)
        family.emplace_back("Dt'(" + std::to_string(t) + ")",
                            antidiagonal_minor_transposed(pres, t));
    bool ok = true;
    std::string bad;
    for (const auto& [na, a] : family)
        for (const auto& [nb, b] : family)
            if (ok && !(a * b - b * a).is_zero()) {
                ok = false;
                bad = na + " vs " + nb;
            }
    return {"antidiagonal minors commute pairwise", ok, ok ? "" : "noncommuting pair " + bad};
}

inline std::vector<Check> minor_identity_checks(const PresentationPtr& pres) {
    const QMAStructure& s = pres->qma();
    if (s.n != 3) throw std::invalid_argument("minor_identity_checks: requires n = 3");
    std::vector<Check> out;
    const AlgebraElement D = quantum_determinant(pres);
    const Coefficient lam = s.lambda;
    auto gen = [&](int i, int j) {
        return AlgebraElement::generator(pres, pres->qma_index(i, j));
    };
    auto p = [&](int i, int j) {
        return s.p[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
    };
    auto A = [&](int i, int j) { return complement_minor(pres, i, j); };

    out.push_back(detail::identity_check(
        "minor identity 1: x22 D = A33 A11 - lambda^-2 p12 p13 p23 A13 A31",
        gen(2, 2) * D,
        A(3, 3) * A(1, 1) - (A(1, 3) * A(3, 1)).scaled(lam.pow(-2) * p(1, 2) * p(1, 3) * p(2, 3))));
    out.push_back(detail::identity_check(
        "minor identity 2: p13 p21 x32 D = A23 A11 - lambda^-1 p12 p13 p32 A13 A21",
        (gen(3, 2) * D).scaled(p(1, 3) * p(2, 1)),
        A(2, 3) * A(1, 1) - (A(1, 3) * A(2, 1)).scaled(lam.pow(-1) * p(1, 2) * p(1, 3) * p(3, 2))));
    out.push_back(detail::identity_check(
        "minor identity 3: lambda p21 p31 x13 D = A32 A21 - lambda^-1 p13 p23 p21 A22 A31",
        (gen(1, 3) * D).scaled(lam * p(2, 1) * p(3, 1)),
        A(3, 2) * A(2, 1) - (A(2, 2) * A(3, 1)).scaled(lam.pow(-1) * p(1, 3) * p(2, 3) * p(2, 1))));
    out.push_back(detail::identity_check(
        "minor identity 4: p23 A22 x21 = lambda^-1 p12 p13 A12 x11 + lambda A32 x31",
        (A(2, 2) * gen(2, 1)).scaled(p(2, 3)),
        (A(1, 2) * gen(1, 1)).scaled(lam.pow(-1) * p(1, 2) * p(1, 3)) +
            (A(3, 2) * gen(3, 1)).scaled(lam)));

    if (pres->has_single_parameter()) out.push_back(antidiagonal_commutation_check(pres));
    return out;
}

// ---------------------------------------------------------------------------
// Center generators and the relation families as element identities

inline std::vector<Check> center_generator_checks(const CenterGeneratorsOdd& cg) {
    std::vector<Check> out;
    for (int i = 1; i <= cg.n; ++i)
        for (int j = 1; j <= cg.n; ++j)
            out.push_back({"Z[" + std::to_string(i) + "," + std::to_string(j) + "] central",
                           is_central(cg.z(i, j)), ""});
    out.push_back({"D central", is_central(cg.determinant()), ""});
    for (const auto& [key, y] : cg.Y)
        out.push_back({"Y[" + std::to_string(key.first) + "," + std::to_string(key.second) +
                           "] central",
                       is_central(y), ""});
    for (Check& c : out)
        if (!c.pass) c.detail = "a generator fails to commute with it";
    return out;
}

inline std::vector<Check> center_generator_checks(const PresentationPtr& pres) {
    return center_generator_checks(center_generators_odd(pres));
}

/// Substitute the actual central elements (all pairwise commuting) into a
/// polynomial over the Z/D/Y variable layout.
inline AlgebraElement evaluate_center_polynomial(const CenterPresentation& cp, const ComPoly& f,
                                                 const CenterGeneratorsOdd& cg) {
    const PresentationPtr& pres = cg.determinant().pres();
    auto var_element = [&](int v) -> AlgebraElement {
        if (v < cp.n * cp.n) return cg.z(v / cp.n + 1, v % cp.n + 1);
        if (v == cp.d_index()) return cg.determinant();
        const int off = v - cp.n * cp.n - 1;
        return cg.y(off / (cp.m - 1) + 1, off % (cp.m - 1) + 1);
    };
    AlgebraElement out = AlgebraElement::zero(pres);
    for (const auto& [mono, coeff] : f.terms()) {
        const std::optional<Rational> r = coeff.as_rational();
        if (!r) throw std::invalid_argument("evaluate_center_polynomial: non-rational coefficient");
        AlgebraElement t = AlgebraElement::scalar(pres, *r);
        for (std::size_t v = 0; v < mono.size(); ++v)
            for (int e = 0; e < mono[v]; ++e) t = t * var_element(static_cast<int>(v));
        out = out + t;
    }
    return out;
}

inline std::vector<Check> center_relation_checks(const CenterGeneratorsOdd& cg) {
    CenterPresentation cp = center_presentation(cg.n, static_cast<int>(cg.m));
    std::vector<Check> out;
    for (std::size_t k = 0; k < cp.relations.size(); ++k) {
        AlgebraElement value = evaluate_center_polynomial(cp, cp.relations[k], cg);
        out.push_back({cp.relation_names[k] + " = 0", value.is_zero(),
                       value.is_zero() ? "" : "evaluates to a nonzero element"});
    }
    return out;
}

inline std::vector<Check> center_relation_checks(const PresentationPtr& pres) {
    return center_relation_checks(center_generators_odd(pres));
}

// ---------------------------------------------------------------------------
// Cocycle twist

inline Check twist_structure_check(int n, long level, long qexp,
                                   const std::vector<std::vector<long>>& p_exps) {
    if (static_cast<int>(p_exps.size()) != n)
        throw std::invalid_argument("twist_structure_check: p_exps must be n x n");
    const Coefficient q{CyclotomicScalar::root_of_unity(level, qexp)};
    std::vector<std::vector<Coefficient>> p(
        static_cast<std::size_t>(n),
        std::vector<Coefficient>(static_cast<std::size_t>(n),
                                 Coefficient(CyclotomicScalar::one(level))));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(p_exps[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("twist_structure_check: p_exps must be n x n");
        for (int j = 0; j < n; ++j)
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Coefficient(
                CyclotomicScalar::root_of_unity(level, p_exps[static_cast<std::size_t>(i)]
                                                           [static_cast<std::size_t>(j)]));
    }
    TwistCheckResult r = twist_check(n, q, p);
    return {"twisted structure constants match", r.match, r.detail};
}

}  // namespace qma
