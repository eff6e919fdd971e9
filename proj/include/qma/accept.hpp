#pragma once

// The verdict suite: eleven numbered criteria, each printed as a single
// deterministic pass/fail line.  Every check is exact (identically zero)
// unless the line itself says "probabilistic".  The fast suite skips only
// the modular corner-subalgebra discriminant inside criterion 6; everything
// else runs in both suites.  Timings go to stderr so stdout is byte-stable.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qma/checks.hpp"
#include "qma/disc.hpp"
#include "qma/morph.hpp"
#include "qma/present.hpp"

namespace qma {
namespace acceptance {

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

namespace detail {

constexpr unsigned long long kSeed = 20260823ULL;

/// Collects requirement failures; the criterion passes when none were
/// recorded, and the detail names the first few problems otherwise.
struct Verdict {
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    CriterionResult done(const std::string& ok_detail) const {
        if (problems.empty()) return {true, ok_detail};
        std::string d = problems.front();
        for (std::size_t k = 1; k < problems.size() && k < 3; ++k) d += "; " + problems[k];
        if (problems.size() > 3)
            d += "; and " + std::to_string(problems.size() - 3) + " more";
        return {false, d};
    }
};

inline PresentationPtr single(int n, long m) {
    return Presentation::quantum_matrix_single(n, Coefficient(cyclo(m, 1)));
}

inline AlgebraElement gen(const PresentationPtr& p, const std::string& name) {
    return AlgebraElement::generator(p, name);
}

inline bool element_map_equal(const Presentation::ElementMap& a,
                              const Presentation::ElementMap& b) {
    if (a.size() != b.size()) return false;
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

inline Coefficient random_cyclo_coeff(std::mt19937_64& rng, long level) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> pw(0, level - 1);
    CyclotomicScalar s = CyclotomicScalar::zero(level);
    for (int t = 0; t < 2; ++t)
        s = s + CyclotomicScalar::from_rational(Rational(num(rng)), level) * cyclo(level, pw(rng));
    return Coefficient(s);
}

inline AlgebraElement random_element(std::mt19937_64& rng, const PresentationPtr& P, long level) {
    std::uniform_int_distribution<int> gend(0, P->size() - 1);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> nlet(0, 3);
    AlgebraElement e = AlgebraElement::zero(P);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m = P->zero_monomial();
        const int letters = nlet(rng);
        for (int s = 0; s < letters; ++s) m[static_cast<std::size_t>(gend(rng))] += 1;
        e = e + AlgebraElement::monomial(P, m, random_cyclo_coeff(rng, level));
    }
    return e;
}

inline bool all_checks(Verdict& v, const std::vector<Check>& checks, const std::string& where) {
    bool ok = true;
    for (const Check& c : checks)
        if (!c.pass) {
            v.require(false, where + ": " + c.name);
            ok = false;
        }
    return ok;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Straightening tables specialize correctly; multiplication is associative.

inline CriterionResult criterion_tables() {
    detail::Verdict v;
    for (int n : {2, 3}) {
        auto G = Presentation::quantum_matrix_generic(n);
        std::map<std::string, long> exps{{"lambda", 7}};  // zeta_9^7 = zeta_9^{-2}
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                exps["p_" + std::to_string(i) + std::to_string(j)] = 1;
        auto S = specialize_presentation(G, ParameterAssignment(9, exps));
        auto T = detail::single(n, 9);
        bool equal = true;
        for (int a = 0; a < T->size() && equal; ++a)
            for (int b = 0; b < T->size() && equal; ++b)
                equal = detail::element_map_equal(S->normalize_word(Word{a, b}),
                                                  T->normalize_word(Word{a, b}));
        v.require(equal, "specialized multiparameter table differs from the single-parameter "
                         "table at n=" + std::to_string(n));
    }
    std::vector<std::vector<Coefficient>> p9{
        {Coefficient(CyclotomicScalar::one(9)), Coefficient(cyclo(9, -2))},
        {Coefficient(cyclo(9, 2)), Coefficient(CyclotomicScalar::one(9))}};
    struct Case {
        PresentationPtr P;
        long level;
    };
    std::vector<Case> cases{{Presentation::quantum_matrix(2, Coefficient(cyclo(9, 3)), p9), 9},
                            {detail::single(3, 5), 5}};
    std::mt19937_64 rng(detail::kSeed);
    for (const auto& c : cases) {
        int bad = 0;
        for (int t = 0; t < 200; ++t) {
            AlgebraElement a = detail::random_element(rng, c.P, c.level);
            AlgebraElement b = detail::random_element(rng, c.P, c.level);
            AlgebraElement d = detail::random_element(rng, c.P, c.level);
            if (!((a * b) * d == a * (b * d))) ++bad;
        }
        v.require(bad == 0, c.P->label() + ": associativity failed on " + std::to_string(bad) +
                                " of 200 triples");
    }
    return v.done("tables agree at n=2,3; associativity on 200 seeded triples per algebra");
}

// ---------------------------------------------------------------------------
// 2. Determinant centrality, Laplace expansions, quadratic minor identities,
//    and pairwise commutation of the antidiagonal minors.

inline CriterionResult criterion_determinant() {
    detail::Verdict v;
    for (int n : {2, 3}) {
        auto P = Presentation::quantum_matrix_generic_single(n);
        detail::all_checks(v, determinant_checks(P), "n=" + std::to_string(n));
        detail::all_checks(v, laplace_checks(P), "n=" + std::to_string(n));
    }
    auto M = Presentation::quantum_matrix_generic(3);
    detail::all_checks(v, laplace_checks(M), "multiparameter n=3");
    detail::all_checks(v, minor_identity_checks(M), "multiparameter n=3");
    auto S = Presentation::quantum_matrix_generic_single(3);
    Check comm = antidiagonal_commutation_check(S);
    v.require(comm.pass, "single-parameter n=3: " + comm.name);
    return v.done("D central (n=2,3); all Laplace rows/columns; weighted multiparameter "
                  "expansions; four quadratic minor identities with generic lambda,p; "
                  "antidiagonal minors commute");
}

// ---------------------------------------------------------------------------
// 3. Center generators at odd roots of unity and their relation families.

inline CriterionResult criterion_center() {
    detail::Verdict v;
    for (auto [n, m] : {std::pair<int, long>{2, 3}, {2, 5}, {3, 3}}) {
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        CenterGeneratorsOdd cg = center_generators_odd(detail::single(n, m));
        detail::all_checks(v, center_generator_checks(cg), tag);
        detail::all_checks(v, center_relation_checks(cg), tag);
    }
    return v.done("all Z, D, Y generators central and every relation family holds as an "
                  "element identity for (2,3), (2,5), (3,3)");
}

// ---------------------------------------------------------------------------
// 4. Groebner property of the center presentation; normal-monomial counts.

inline CriterionResult criterion_groebner() {
    detail::Verdict v;
    for (auto [n, m] : {std::pair<int, int>{2, 3}, {2, 5}, {3, 3}}) {
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        GroebnerReport r = groebner_verify(n, m);
        v.require(r.leading_terms_match, tag + ": leading terms differ from the expected list");
        v.require(r.all_spolys_reduce, tag + ": an S-polynomial fails to reduce to zero");
        Integer zf = z_free_normal_count(n, m);
        Integer want = 1;
        for (int k = 0; k < n; ++k) want *= m;
        v.require(zf == want, tag + ": Z-free normal monomial count is " + zf.get_str() +
                                  ", expected " + want.get_str());
    }
    v.require(hilbert_degree(2, 3) == 3, "(2,3): Hilbert polynomial degree is not 3");
    v.require(hilbert_degree(2, 5) == 3, "(2,5): Hilbert polynomial degree is not 3");
    v.require(hilbert_degree(3, 3) == 8, "(3,3): Hilbert polynomial degree is not 8");
    return v.done("Groebner basis confirmed for (2,3), (2,5), (3,3); Z-free counts 9/25/27; "
                  "Hilbert degrees 3/3/8 so Krull dimensions 4/4/9");
}

// ---------------------------------------------------------------------------
// 5. Socle of the local quotient: witnesses always land in the socle; the
//    dimension is exactly 2 at (2,3) and at least 2 (true value reported)
//    at (2,5) and (3,3).

inline CriterionResult criterion_socle() {
    detail::Verdict v;
    std::string dims;
    for (auto [n, m] : {std::pair<int, int>{2, 3}, {2, 5}, {3, 3}}) {
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        SocleReport r = socle_witness(n, m);
        v.require(r.first_witness_in_socle, tag + ": first witness is not in the socle");
        v.require(r.second_witness_in_socle, tag + ": second witness is not in the socle");
        if (n == 2 && m == 3)
            v.require(r.socle_dim == 2, tag + ": socle dimension is " +
                                            std::to_string(r.socle_dim) + ", expected exactly 2");
        else
            v.require(r.socle_dim >= 2, tag + ": socle dimension is " +
                                            std::to_string(r.socle_dim) + ", expected >= 2");
        if (!dims.empty()) dims += "/";
        dims += std::to_string(r.socle_dim);
    }
    return v.done("witness pairs lie in the socle; socle dimensions " + dims +
                  " ((2,3) exactly 2; larger socles reported, so those quotients are "
                  "further from Gorenstein, not closer)");
}

// ---------------------------------------------------------------------------
// 6. Discriminants: quantum affine closed form, the n=2 multiparameter
//    evaluation instance with its negative control, and (full suite) the
//    modular corner-subalgebra instance.

inline CriterionResult criterion_discriminant(bool full) {
    detail::Verdict v;
    auto standard_gamma = [](int g) {
        std::vector<std::vector<long>> gamma(static_cast<std::size_t>(g),
                                             std::vector<long>(static_cast<std::size_t>(g), 0));
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b)
                gamma[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    a > b ? 1 : (a < b ? -1 : 0);
        return gamma;
    };
    for (int g : {1, 2, 4}) {
        QAffineDiscReport r = qaffine_discriminant(standard_gamma(g), g, 3);
        const std::string tag = "quantum affine (g=" + std::to_string(g) + ", m=3)";
        v.require(r.structured, tag + ": Gram matrix is not permutation-structured");
        v.require(r.matches_closed_form, tag + ": determinant does not match the closed form");
        if (g <= 2) {
            PresentationPtr P = Presentation::quasipolynomial(Coefficient(cyclo(3, 1)),
                                                              standard_gamma(g));
            GramMatrix gm = gram_matrix(P, 3);
            v.require(r.determinant == compoly_determinant(gm.entries),
                      tag + ": structured determinant differs from the dense determinant");
        }
    }

    std::vector<std::vector<Coefficient>> p_ones(
        2, std::vector<Coefficient>(2, Coefficient(CyclotomicScalar::one(3))));
    PresentationPtr mp2 = Presentation::quantum_matrix(2, Coefficient(cyclo(3, 1)), p_ones);
    DiscEvalReport ok =
        discriminant_eval_check(mp2, 3, parse_claim("y_12^54*y_21^54*Omega^54"), 5, detail::kSeed);
    v.require(ok.pass(), "n=2 multiparameter instance: evaluation ratios are not one nonzero "
                         "constant at 5 seeded points");
    DiscEvalReport bad =
        discriminant_eval_check(mp2, 3, parse_claim("y_12^53*y_21^53*Omega^53"), 3, detail::kSeed);
    v.require(bad.conclusive && !bad.pass(),
              "negative control: the wrong exponent 53 was not rejected");

    std::string stretch = "modular corner-subalgebra instance skipped (fast suite)";
    if (full) {
        PresentationPtr C = Presentation::subalgebra(detail::single(3, 3), {2, 4, 5, 6, 7, 8});
        ModularDiscReport mr = discriminant_eval_check_modular(
            C, 3, parse_claim("x_13^1458*x_23^1458*x_32^1458*x_31^1458*A(1,1)^1458"), 3,
            detail::kSeed, 1000003);
        v.require(mr.pass() && mr.probabilistic,
                  "modular corner-subalgebra instance: ratio test failed");
        stretch = "modular corner-subalgebra instance passed (probabilistic, 3 points mod "
                  "1000003)";
    }
    return v.done("closed form for g=1,2,4 (dense cross-check g=1,2); evaluation instance "
                  "passed and exponent-53 control rejected (seed 20260823); " + stretch);
}

// ---------------------------------------------------------------------------
// 7. Inner-derivation witness displays with fully generic parameters.

inline CriterionResult criterion_inner_witness() {
    detail::Verdict v;
    WitnessReport r2 = inner_witness_check(WitnessFamily::n2);
    v.require(r2.pass(), "n=2 displays: " + (r2.failures.empty() ? std::string("no checks ran")
                                                                 : r2.failures.front()));
    v.require(r2.checks == 3, "n=2: expected 3 display checks, ran " +
                                  std::to_string(r2.checks));
    WitnessReport r3 = inner_witness_check(WitnessFamily::n3);
    v.require(r3.pass(), "n=3 displays: " + (r3.failures.empty() ? std::string("no checks ran")
                                                                 : r3.failures.front()));
    v.require(r3.checks == 22, "n=3: expected 22 display checks, ran " +
                                   std::to_string(r3.checks));
    return v.done("all cleared conjugation displays hold exactly with generic parameters "
                  "(3 checks at n=2, 22 at n=3)");
}

// ---------------------------------------------------------------------------
// 8. Jacobian rank survey over the claimed rank-one locus.

inline CriterionResult criterion_jacobian() {
    detail::Verdict v;
    for (int m : {3, 5}) {
        PLocusReport r = p_locus_survey(m, 100, detail::kSeed);
        const std::string tag = "m=" + std::to_string(m);
        v.require(r.claimed_all_rank1 && r.claimed_rank1 == 100,
                  tag + ": not all 100 seeded locus points have rank 1");
        v.require(r.generic_none_rank1, tag + ": an off-locus sample had rank 1");
        v.require(r.origin_rank == 0, tag + ": rank at the origin family is " +
                                          std::to_string(r.origin_rank) + ", expected 0");
        v.require(r.rank1_points_in_vanishing_set,
                  tag + ": a rank-1 sample left the vanishing set");
    }
    return v.done("rank 1 at 100 seeded locus points, rank != 1 off locus, rank 0 at the "
                  "origin family, rank-1 points inside the vanishing set (m=3 and 5, "
                  "seed 20260823)");
}

// ---------------------------------------------------------------------------
// 9. Automorphisms: verified maps with two-sided inverses, gradedness,
//    leading forms, free-product witness, and the two documented negative
//    controls (the eight-generator extension and the squared-factor variant).

inline CriterionResult criterion_automorphisms() {
    detail::Verdict v;
    auto p2 = detail::single(2, 3);

    auto pair_check = [&](const PresentationPtr& P, long m, const std::string& a,
                          const std::string& b) {
        GeneratorMap f = builtin_on(a, P, m);
        GeneratorMap g = builtin_on(b, P, m);
        v.require(f.verified && g.verified,
                  a + "/" + b + " (m=" + std::to_string(m) + "): verification failed");
        v.require(verify_inverse(f, g),
                  a + "/" + b + " (m=" + std::to_string(m) + "): not two-sided inverses");
        return f;
    };

    GeneratorMap phi = pair_check(p2, 3, "phi", "rho");
    GeneratorMap psi = pair_check(p2, 3, "psi", "psi_inv");
    GeneratorMap sigma = pair_check(p2, 3, "sigma", "sigma_inv");
    GeneratorMap tau = builtin_on("tau", p2, 3);
    v.require(tau.verified && verify_inverse(tau, tau), "tau: not a verified involution");

    // Scalar map with c11 c22 = c12 c21.
    {
        std::vector<AlgebraElement> im;
        const long c[4] = {2, 3, 4, 6};
        for (int k = 0; k < 4; ++k)
            im.push_back(AlgebraElement::generator(p2, k).scaled(
                p2->rational_coeff(Rational(c[k]))));
        GeneratorMap sc = make_endomorphism(p2, std::move(im), "scalar");
        v.require(sc.verified, "scalar map (2,3,4,6): verification failed");
        v.require(is_graded(sc), "scalar map (2,3,4,6): not graded");
    }
    v.require(is_graded(tau), "tau: not graded");
    v.require(!is_graded(phi), "phi: unexpectedly graded");
    v.require(!is_graded(psi), "psi: unexpectedly graded");
    v.require(!is_graded(sigma), "sigma: unexpectedly graded");

    // The wild map fixes the shifted determinant element and x_11.
    {
        AlgebraElement b = detail::gen(p2, "x_12"), c = detail::gen(p2, "x_21");
        AlgebraElement nabla = c * detail::gen(p2, "x_11").pow(3) + b.pow(4);
        v.require(apply(sigma, nabla) == nabla, "sigma does not fix c u + b^{m+1} at m=3");
        v.require(apply(sigma, detail::gen(p2, "x_11")) == detail::gen(p2, "x_11"),
                  "sigma does not fix x_11");
    }
    for (long m : {3L, 5L}) {
        LeadingFormReport lf = leading_form_check(m);
        v.require(lf.pass(), "leading forms at m=" + std::to_string(m) +
                                 " do not match b^{m+1}u^2 and -b^{(m+1)^2}u^{2m+1}");
    }

    // Seven-generator subalgebra maps with subtraction inverses.
    auto subtraction_inverse = [&](const GeneratorMap& f) {
        std::vector<AlgebraElement> inv;
        for (int k = 0; k < f.pres->size(); ++k) {
            AlgebraElement x = AlgebraElement::generator(f.pres, k);
            inv.push_back(x + x - f.images[static_cast<std::size_t>(k)]);
        }
        return make_endomorphism(f.pres, std::move(inv));
    };
    {
        GeneratorMap b2p = builtin("b2_phi", 3, 3);
        v.require(b2p.verified, "seven-generator phi variant: verification failed");
        GeneratorMap b2pi = subtraction_inverse(b2p);
        v.require(b2pi.verified && verify_inverse(b2p, b2pi),
                  "seven-generator phi variant: subtraction inverse failed");
        GeneratorMap b2s = builtin("b2_psi", 3, 3);
        v.require(b2s.verified, "seven-generator psi variant: verification failed");
        GeneratorMap b2si = subtraction_inverse(b2s);
        v.require(b2si.verified && verify_inverse(b2s, b2si),
                  "seven-generator psi variant: subtraction inverse failed");
    }

    // Negative control: the same shift on the eight-generator subalgebra
    // fails exactly the two straightening relations whose corrections
    // involve x_31.
    {
        auto parent = detail::single(3, 3);
        auto b3 = Presentation::subalgebra(parent, {0, 1, 2, 3, 4, 5, 6, 7});
        const Coefficient& q = parent->single_parameter();
        AlgebraElement shift = detail::gen(b3, "x_12") * detail::gen(b3, "x_23") -
                               (detail::gen(b3, "x_13") * detail::gen(b3, "x_22")).scaled(q);
        std::vector<AlgebraElement> im;
        for (int k = 0; k < b3->size(); ++k) im.push_back(AlgebraElement::generator(b3, k));
        int j31 = b3->index_of("x_31");
        im[static_cast<std::size_t>(j31)] = im[static_cast<std::size_t>(j31)] + shift;
        GeneratorMap tryb3 = make_endomorphism(b3, std::move(im));
        v.require(!tryb3.verified && tryb3.violations.size() == 2 &&
                      tryb3.violations[0] == "x_32 * x_11" && tryb3.violations[1] == "x_32 * x_21",
                  "eight-generator extension control: expected exactly the two x_32 "
                  "violations");
        bool threw = false;
        try {
            builtin("b3_phi", 3, 3);
        } catch (const std::runtime_error&) {
            threw = true;
        }
        v.require(threw, "eight-generator builtin unexpectedly verified");
    }

    // Negative control: squaring the u factor in the first summand of the
    // last image breaks exactly one relation.
    {
        const long m = 3;
        const Coefficient& q = p2->single_parameter();
        AlgebraElement a = detail::gen(p2, "x_11"), b = detail::gen(p2, "x_12"),
                       c = detail::gen(p2, "x_21"), d = detail::gen(p2, "x_22");
        AlgebraElement u = a.pow(static_cast<unsigned long>(m));
        AlgebraElement nabla = c * u + b.pow(static_cast<unsigned long>(m + 1));
        AlgebraElement u2 = u * u;
        AlgebraElement img_b = b + nabla * u2;
        AlgebraElement sum_c = AlgebraElement::zero(p2), sum_d = AlgebraElement::zero(p2);
        for (long i = 1; i <= m + 1; ++i) {
            Rational bin(binomial(m + 1, i));
            AlgebraElement common = b.pow(static_cast<unsigned long>(m + 1 - i)) *
                                    nabla.pow(static_cast<unsigned long>(i));
            sum_c = sum_c + (common * u.pow(static_cast<unsigned long>(2 * i - 1))).scaled(bin);
            sum_d = sum_d + (common * u.pow(static_cast<unsigned long>(2 * (i - 1))) * img_b)
                                .scaled(bin);
        }
        AlgebraElement bad_d =
            d + (a.pow(static_cast<unsigned long>(m - 1)) * (c * nabla * u2 - sum_d)).scaled(q);
        GeneratorMap badmap = make_endomorphism(p2, {a, img_b, c - sum_c, bad_d});
        v.require(!badmap.verified && badmap.violations.size() == 1 &&
                      badmap.violations[0] == "x_22 * x_11",
                  "squared-factor control: expected exactly the x_22 x_11 violation");
    }

    // Free-product witness and noncommutation of the two shifts.
    {
        FreeWitnessReport sw = free_witness(2, 3, enumerate_short_words());
        v.require(sw.words_checked == 40 && sw.pass(),
                  "short-word free witness failed (" + std::to_string(sw.words_checked) +
                      " words)");
        FreeWitnessReport rw = free_witness(2, 3, random_reduced_words(20, 4, 2, detail::kSeed));
        v.require(rw.words_checked == 20 && rw.pass(), "random-word free witness failed");
        int i11 = p2->index_of("x_11");
        v.require(!(compose(phi, psi).images[static_cast<std::size_t>(i11)] ==
                    compose(psi, phi).images[static_cast<std::size_t>(i11)]),
                  "phi psi and psi phi unexpectedly agree on x_11");
    }

    // Off-diagonal ideal checks for sigma and phi.
    v.require(fixed_ideal_check(sigma, 3).pass(), "ideal check failed for sigma");
    v.require(fixed_ideal_check(phi, 3).pass(), "ideal check failed for phi");

    // m = 5 instances.
    {
        auto p5 = detail::single(2, 5);
        pair_check(p5, 5, "phi", "rho");
        pair_check(p5, 5, "psi", "psi_inv");
        GeneratorMap s5 = pair_check(p5, 5, "sigma", "sigma_inv");
        AlgebraElement nabla5 = detail::gen(p5, "x_21") * detail::gen(p5, "x_11").pow(5) +
                                detail::gen(p5, "x_12").pow(6);
        v.require(apply(s5, nabla5) == nabla5, "sigma does not fix c u + b^{m+1} at m=5");
    }

    return v.done("all maps verified with two-sided inverses (m=3; corner shifts and the "
                  "wild map also at m=5); gradedness as expected; leading forms match; "
                  "40 short + 20 seeded words witness freeness; both negative controls "
                  "fail in exactly the documented relations");
}

// ---------------------------------------------------------------------------
// 10. Cocycle twist with q = zeta_9 and a nontrivial parameter matrix.

inline CriterionResult criterion_twist() {
    detail::Verdict v;
    Check c2 = twist_structure_check(2, 9, 1, {{0, -2}, {2, 0}});
    v.require(c2.pass, "n=2: " + c2.detail);
    Check c3 = twist_structure_check(3, 9, 1, {{0, -1, -2}, {1, 0, -3}, {2, 3, 0}});
    v.require(c3.pass, "n=3: " + c3.detail);
    return v.done("twisted structure constants match for n=2 and n=3 at q=zeta_9 with "
                  "nontrivial p");
}

// ---------------------------------------------------------------------------
// 11. Diagonal scalar maps verify exactly when c11 c22 = c12 c21.

inline CriterionResult criterion_scalar_maps() {
    detail::Verdict v;
    auto G = Presentation::quantum_matrix_generic(2);
    std::mt19937_64 rng(detail::kSeed);
    std::uniform_int_distribution<long> pick(1, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    auto draw = [&] {
        Rational r(pick(rng), pick(rng));
        r.canonicalize();
        return sign(rng) ? r : Rational(-r);
    };
    auto diagonal = [&](const Rational& c11, const Rational& c12, const Rational& c21,
                        const Rational& c22) {
        std::vector<AlgebraElement> im;
        const Rational c[4] = {c11, c12, c21, c22};
        for (int k = 0; k < 4; ++k)
            im.push_back(AlgebraElement::generator(G, k).scaled(G->rational_coeff(c[k])));
        return make_endomorphism(G, std::move(im));
    };
    for (int t = 0; t < 10; ++t) {
        Rational c11 = draw(), c12 = draw(), c21 = draw();
        Rational c22 = c12 * c21 / c11;
        c22.canonicalize();
        GeneratorMap sat = diagonal(c11, c12, c21, c22);
        v.require(sat.verified, "satisfying tuple " + std::to_string(t) + " failed to verify");
        Rational delta(pick(rng));
        GeneratorMap viol = diagonal(c11, c12, c21, c22 + delta);
        v.require(!viol.verified && viol.violations.size() == 1 &&
                      viol.violations[0] == "x_22 * x_11",
                  "violating tuple " + std::to_string(t) + " did not fail in exactly the "
                  "diagonal relation");
    }
    return v.done("10 seeded satisfying tuples verify and 10 violating tuples fail exactly "
                  "the diagonal straightening relation (seed 20260823)");
}

// ---------------------------------------------------------------------------

inline bool run_acceptance(const std::string& suite, std::ostream& out) {
    const bool full = (suite == "full");
    struct Named {
        std::string title;
        std::function<CriterionResult()> run;
    };
    std::vector<Named> criteria{
        {"straightening tables and associativity", [] { return criterion_tables(); }},
        {"determinant, Laplace, and minor identities", [] { return criterion_determinant(); }},
        {"center generators and relation families", [] { return criterion_center(); }},
        {"Groebner basis and monomial counts", [] { return criterion_groebner(); }},
        {"socle witnesses", [] { return criterion_socle(); }},
        {"discriminants", [full] { return criterion_discriminant(full); }},
        {"inner-derivation witness displays", [] { return criterion_inner_witness(); }},
        {"Jacobian rank survey", [] { return criterion_jacobian(); }},
        {"automorphism verification", [] { return criterion_automorphisms(); }},
        {"cocycle twist", [] { return criterion_twist(); }},
        {"diagonal scalar-map constraint", [] { return criterion_scalar_maps(); }},
    };
    int passed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r = criteria[k].run();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cerr << "criterion " << (k + 1) << ": " << ms << " ms\n";
        out << "criterion " << (k + 1) << ": " << (r.pass ? "PASS" : "FAIL") << " - "
            << criteria[k].title << ": " << r.detail << "\n";
        if (r.pass) ++passed;
    }
    out << "acceptance (" << (full ? "full" : "fast") << " suite): " << passed << " of "
        << criteria.size() << " criteria passed\n";
    return passed == static_cast<int>(criteria.size());
}

}  // namespace acceptance

using acceptance::run_acceptance;

}  // namespace qma
