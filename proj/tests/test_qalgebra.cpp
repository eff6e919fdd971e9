// Straightening-presentation tests: the multiparameter relation table, its
// single-parameter specialization, associativity and confluence of the
// rewriting machinery, subalgebra closure, grading, and the cocycle twist.

#include <gtest/gtest.h>

#include <random>

#include "qma/element.hpp"

namespace {

using qma::AlgebraElement;
using qma::Coefficient;
using qma::commutation_scalar;
using qma::cyclo;
using qma::CyclotomicScalar;
using qma::LaurentScalar;
using qma::Monomial;
using qma::ParameterAssignment;
using qma::Presentation;
using qma::PresentationPtr;
using qma::Rational;
using qma::Word;

Coefficient L(const std::string& name, long power = 1) {
    return Coefficient(LaurentScalar::parameter(name, power));
}

AlgebraElement gen(const PresentationPtr& p, const std::string& name) {
    return AlgebraElement::generator(p, name);
}

// ---------------------------------------------------------------------------
// Relation table of the multiparameter algebra, n = 2, generic coefficients.

TEST(Relations, MultiparameterTwoByTwo) {
    PresentationPtr P = Presentation::quantum_matrix_generic(2);
    const Coefficient lam = L("lambda"), p21 = L("p_21"), p12 = L("p_21", -1);
    const auto x11 = gen(P, "x_11"), x12 = gen(P, "x_12"), x21 = gen(P, "x_21"), x22 = gen(P, "x_22");

    // Same row:        x_12 x_11 = p_12 x_11 x_12.
    EXPECT_EQ(x12 * x11, (x11 * x12).scaled(p12));
    EXPECT_EQ(x22 * x21, (x21 * x22).scaled(p12));
    // Same column:     x_21 x_11 = lambda p_21 x_11 x_21.
    EXPECT_EQ(x21 * x11, (x11 * x21).scaled(lam * p21));
    EXPECT_EQ(x22 * x12, (x12 * x22).scaled(lam * p21));
    // Antidiagonal:    x_21 x_12 = lambda p_21^2 x_12 x_21.
    EXPECT_EQ(x21 * x12, (x12 * x21).scaled(lam * p21 * p21));
    // Diagonal:        x_22 x_11 = x_11 x_22 + (lambda - 1) p_21 x_12 x_21.
    const Coefficient one = P->unit();
    EXPECT_EQ(x22 * x11, x11 * x22 + (x12 * x21).scaled((lam - one) * p21));
}

TEST(Relations, SingleParameterSpecialization) {
    PresentationPtr P = Presentation::quantum_matrix_generic_single(2);
    const Coefficient q = L("q"), qi = L("q", -1);
    const auto x11 = gen(P, "x_11"), x12 = gen(P, "x_12"), x21 = gen(P, "x_21"), x22 = gen(P, "x_22");

    EXPECT_EQ(x12 * x11, (x11 * x12).scaled(qi));
    EXPECT_EQ(x21 * x11, (x11 * x21).scaled(qi));
    EXPECT_EQ(x22 * x12, (x12 * x22).scaled(qi));
    EXPECT_EQ(x22 * x21, (x21 * x22).scaled(qi));
    EXPECT_EQ(x21 * x12, x12 * x21);  // antidiagonal pair commutes
    EXPECT_EQ(x22 * x11, x11 * x22 + (x12 * x21).scaled(qi - q));
    // Equivalent form: [x_11, x_22] = (q - q^{-1}) x_12 x_21.
    EXPECT_EQ(commutator(x11, x22), (x12 * x21).scaled(q - qi));
}

TEST(Relations, SingleParameterThreeByThreeSamples) {
    PresentationPtr P = Presentation::quantum_matrix_generic_single(3);
    const Coefficient q = L("q"), qi = L("q", -1);
    const auto x11 = gen(P, "x_11"), x13 = gen(P, "x_13"), x21 = gen(P, "x_21");
    const auto x22 = gen(P, "x_22"), x23 = gen(P, "x_23"), x31 = gen(P, "x_31"), x32 = gen(P, "x_32");

    EXPECT_EQ(x13 * x11, (x11 * x13).scaled(qi));               // same row
    EXPECT_EQ(x31 * x21, (x21 * x31).scaled(qi));               // same column
    EXPECT_EQ(x31 * x23, x23 * x31);                            // l > i, m < j
    EXPECT_EQ(x32 * x21, x21 * x32 + (x22 * x31).scaled(qi - q));
    EXPECT_EQ(x23 * x11, x11 * x23 + (x13 * x21).scaled(qi - q));
}

// ---------------------------------------------------------------------------
// Associativity and confluence.

Coefficient random_cyclo_coeff(std::mt19937& rng, long level) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> pw(0, level - 1);
    CyclotomicScalar s = CyclotomicScalar::zero(level);
    for (int t = 0; t < 2; ++t)
        s = s + CyclotomicScalar::from_rational(Rational(num(rng)), level) * cyclo(level, pw(rng));
    return Coefficient(s);
}

AlgebraElement random_element(std::mt19937& rng, const PresentationPtr& P, long level) {
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

TEST(Multiplication, AssociativityOnRandomTriples) {
    struct Case {
        PresentationPtr P;
        long level;
        int triples;
    };
    std::vector<std::vector<Coefficient>> p9{
        {Coefficient(CyclotomicScalar::one(9)), Coefficient(cyclo(9, -2))},
        {Coefficient(cyclo(9, 2)), Coefficient(CyclotomicScalar::one(9))}};
    std::vector<Case> cases{
        {Presentation::quantum_matrix(2, Coefficient(cyclo(9, 3)), p9), 9, 120},
        {Presentation::quantum_matrix_single(3, Coefficient(cyclo(5, 1))), 5, 80},
    };
    std::mt19937 rng(77001);
    for (const auto& c : cases) {
        for (int t = 0; t < c.triples; ++t) {
            AlgebraElement a = random_element(rng, c.P, c.level);
            AlgebraElement b = random_element(rng, c.P, c.level);
            AlgebraElement d = random_element(rng, c.P, c.level);
            ASSERT_EQ((a * b) * d, a * (b * d)) << c.P->label() << " triple " << t;
        }
    }
}

TEST(Multiplication, GenericCoefficientAssociativity) {
    PresentationPtr P = Presentation::quantum_matrix_generic(2);
    std::mt19937 rng(77002);
    std::uniform_int_distribution<int> gend(0, 3);
    for (int t = 0; t < 40; ++t) {
        Word wa{gend(rng), gend(rng)}, wb{gend(rng), gend(rng)}, wc{gend(rng), gend(rng)};
        AlgebraElement a = AlgebraElement::from_terms(P, P->normalize_word(wa));
        AlgebraElement b = AlgebraElement::from_terms(P, P->normalize_word(wb));
        AlgebraElement c = AlgebraElement::from_terms(P, P->normalize_word(wc));
        ASSERT_EQ((a * b) * c, a * (b * c)) << "triple " << t;
    }
}

TEST(Multiplication, RewriterConfluenceMatchesMemoizedPath) {
    std::vector<PresentationPtr> algebras{
        Presentation::quantum_matrix_single(2, Coefficient(cyclo(3, 1))),
        Presentation::quantum_matrix_single(3, Coefficient(cyclo(7, 1))),
        Presentation::quantum_matrix_generic(2),
    };
    std::mt19937 rng(77003);
    for (const auto& P : algebras) {
        std::uniform_int_distribution<int> gend(0, P->size() - 1);
        std::uniform_int_distribution<int> len(0, 8);
        for (int t = 0; t < 25; ++t) {
            Word w(static_cast<std::size_t>(len(rng)));
            for (auto& letter : w) letter = gend(rng);
            const auto reference = P->normalize_word(w);
            EXPECT_EQ(P->rewrite_word(w, nullptr), reference) << P->label();
            for (unsigned seed = 1; seed <= 4; ++seed) {
                std::mt19937 site_rng(seed * 1000 + static_cast<unsigned>(t));
                EXPECT_EQ(P->rewrite_word(w, &site_rng), reference)
                    << P->label() << " word " << t << " seed " << seed;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Specialization functoriality.

TEST(Specialization, CommutesWithNormalization) {
    PresentationPtr G = Presentation::quantum_matrix_generic(2);
    ParameterAssignment assign(9, {{"lambda", 3}, {"p_21", 2}});
    PresentationPtr S = qma::specialize_presentation(G, assign);
    ASSERT_EQ(S->qma().lambda, Coefficient(cyclo(9, 3)));
    ASSERT_EQ(S->qma().p[1][0], Coefficient(cyclo(9, 2)));

    std::mt19937 rng(77004);
    std::uniform_int_distribution<int> gend(0, 3);
    std::uniform_int_distribution<int> len(1, 6);
    for (int t = 0; t < 30; ++t) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& letter : w) letter = gend(rng);
        AlgebraElement generic = AlgebraElement::from_terms(G, G->normalize_word(w));
        AlgebraElement direct = AlgebraElement::from_terms(S, S->normalize_word(w));
        EXPECT_EQ(generic.specialized(S, assign), direct) << "word " << t;
    }
}

TEST(Specialization, SingleParameterCommutes) {
    PresentationPtr G = Presentation::quantum_matrix_generic_single(2);
    ParameterAssignment assign(7, {{"q", 1}});
    PresentationPtr S = qma::specialize_presentation(G, assign);
    ASSERT_TRUE(S->has_single_parameter());
    ASSERT_EQ(S->single_parameter(), Coefficient(cyclo(7, 1)));
    std::mt19937 rng(77005);
    std::uniform_int_distribution<int> gend(0, 3);
    for (int t = 0; t < 30; ++t) {
        Word w{gend(rng), gend(rng), gend(rng), gend(rng)};
        AlgebraElement generic = AlgebraElement::from_terms(G, G->normalize_word(w));
        AlgebraElement direct = AlgebraElement::from_terms(S, S->normalize_word(w));
        EXPECT_EQ(generic.specialized(S, assign), direct) << "word " << t;
    }
}

// ---------------------------------------------------------------------------
// Subalgebras presented by restrictions of the straightening rules.

std::vector<int> positions(const PresentationPtr& P, std::initializer_list<std::pair<int, int>> ij) {
    std::vector<int> out;
    for (auto [i, j] : ij) out.push_back(P->qma_index(i, j));
    return out;
}

TEST(Subalgebras, ClosedSubsetsOfThreeByThree) {
    PresentationPtr P = Presentation::quantum_matrix_single(3, Coefficient(cyclo(3, 1)));
    // Rows 1-2 (all columns).
    auto B1 = Presentation::subalgebra(
        P, positions(P, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}));
    EXPECT_EQ(B1->size(), 6);
    auto B2 = Presentation::subalgebra(
        P, positions(P, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}));
    EXPECT_EQ(B2->size(), 7);
    auto B3 = Presentation::subalgebra(
        P, positions(P, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}));
    EXPECT_EQ(B3->size(), 8);
    // The antidiagonal-and-below staircase used for trace computations.
    auto C = Presentation::subalgebra(P, positions(P, {{1, 3}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}));
    EXPECT_EQ(C->size(), 6);
    // A diagonal pair is not straightening-closed: x_22 x_11 needs x_12 x_21.
    EXPECT_THROW(Presentation::subalgebra(P, positions(P, {{1, 1}, {2, 2}})), std::domain_error);
}

TEST(Subalgebras, ProductsAgreeWithParent) {
    PresentationPtr P = Presentation::quantum_matrix_single(3, Coefficient(cyclo(5, 2)));
    std::vector<int> keep = positions(P, {{1, 3}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}});
    auto C = Presentation::subalgebra(P, keep);
    std::mt19937 rng(77006);
    std::uniform_int_distribution<int> gend(0, C->size() - 1);
    for (int t = 0; t < 40; ++t) {
        Word w{gend(rng), gend(rng), gend(rng), gend(rng)};
        Word parent_w;
        for (int letter : w) parent_w.push_back(keep[static_cast<std::size_t>(letter)]);
        const auto local = C->normalize_word(w);
        const auto ambient = P->normalize_word(parent_w);
        // Push the local answer into the parent's exponent space and compare.
        Presentation::ElementMap pushed;
        for (const auto& [m, c] : local) {
            Monomial big = P->zero_monomial();
            for (int k = 0; k < C->size(); ++k)
                big[static_cast<std::size_t>(keep[static_cast<std::size_t>(k)])] =
                    m[static_cast<std::size_t>(k)];
            pushed.emplace(std::move(big), c);
        }
        EXPECT_EQ(pushed, ambient) << "word " << t;
    }
}

// ---------------------------------------------------------------------------
// Grading.

TEST(Grading, BidegreeOfMonomialsAndElements) {
    PresentationPtr P = Presentation::quantum_matrix_single(3, Coefficient(cyclo(3, 1)));
    const auto x12 = gen(P, "x_12"), x23 = gen(P, "x_23"), x13 = gen(P, "x_13"), x22 = gen(P, "x_22");
    auto d = (x12 * x23).bidegree();
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->first, (std::vector<long>{1, 1, 0}));
    EXPECT_EQ(d->second, (std::vector<long>{0, 1, 1}));
    // x_12 x_23 and x_13 x_22 share a bidegree, so their difference is
    // homogeneous; x_12 + x_23 is not.
    EXPECT_TRUE((x12 * x23 - x13 * x22).bidegree().has_value());
    EXPECT_FALSE((x12 + x23).bidegree().has_value());
    EXPECT_FALSE(AlgebraElement::zero(P).bidegree().has_value());
}

// ---------------------------------------------------------------------------
// Element arithmetic basics.

TEST(Elements, ArithmeticAndPrinting) {
    PresentationPtr P = Presentation::quantum_matrix_single(2, Coefficient(cyclo(3, 1)));
    const auto x11 = gen(P, "x_11");
    const AlgebraElement one = AlgebraElement::one(P);
    AlgebraElement s = (x11 + one).pow(2);
    EXPECT_EQ(s, x11 * x11 + x11.scaled(Rational(2)) + one);
    EXPECT_EQ(s.degree(), 2);
    EXPECT_EQ(s.term_count(), 3u);
    EXPECT_EQ(s.to_string(), "x_11^2 + 2*x_11 + 1");
    EXPECT_EQ((x11 - x11).to_string(), "0");
    EXPECT_EQ((-x11).to_string(), "-x_11");
    EXPECT_EQ(x11.pow(0), one);
    EXPECT_EQ(AlgebraElement::zero(P).degree(), -1);

    PresentationPtr G = Presentation::quantum_matrix_generic_single(2);
    const auto y12 = gen(G, "x_12"), y21 = gen(G, "x_21");
    EXPECT_EQ((y12 * y21).scaled(L("q") - L("q", -1)).to_string(), "(q - q^-1)*x_12 x_21");

    PresentationPtr other = Presentation::quantum_matrix_single(2, Coefficient(cyclo(3, 1)));
    EXPECT_THROW((void)(x11 + gen(other, "x_11")), std::invalid_argument);
}

TEST(Elements, CommutationScalars) {
    PresentationPtr P = Presentation::quantum_matrix_generic_single(2);
    const auto x11 = gen(P, "x_11"), x12 = gen(P, "x_12"), x22 = gen(P, "x_22");
    auto s = commutation_scalar(x11, x12);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, L("q"));
    EXPECT_FALSE(commutation_scalar(x11, x22).has_value());
}

// ---------------------------------------------------------------------------
// Construction errors.

TEST(Construction, RejectsDegenerateParameters) {
    const Coefficient one(CyclotomicScalar::one(3));
    std::vector<std::vector<Coefficient>> p{{one, Coefficient(cyclo(3, 2))},
                                            {Coefficient(cyclo(3, 1)), one}};
    // lambda^2 = 1 is excluded.
    EXPECT_THROW(Presentation::quantum_matrix(2, one.same_mode_rational(-1), p), std::invalid_argument);
    EXPECT_THROW(Presentation::quantum_matrix(2, one, p), std::invalid_argument);
    // p_ij p_ji != 1 is rejected.
    std::vector<std::vector<Coefficient>> bad{{one, Coefficient(cyclo(3, 1))},
                                              {Coefficient(cyclo(3, 1)), one}};
    EXPECT_THROW(Presentation::quantum_matrix(2, Coefficient(cyclo(3, 1)), bad), std::invalid_argument);
    // p_ii != 1 is rejected.
    std::vector<std::vector<Coefficient>> diag{{Coefficient(cyclo(3, 1)), Coefficient(cyclo(3, 2))},
                                               {Coefficient(cyclo(3, 1)), one}};
    EXPECT_THROW(Presentation::quantum_matrix(2, Coefficient(cyclo(3, 1)), diag), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Cocycle twist of the single-parameter algebra.

TEST(Twist, MultiparameterAlgebraIsATwist) {
    const Coefficient q(cyclo(9, 1));
    const Coefficient one(CyclotomicScalar::one(9));
    {
        std::vector<std::vector<Coefficient>> p{{one, Coefficient(cyclo(9, -2))},
                                                {Coefficient(cyclo(9, 2)), one}};
        auto res = qma::twist_check(2, q, p);
        EXPECT_TRUE(res.match) << res.detail;
    }
    {
        std::vector<std::vector<Coefficient>> p(3, std::vector<Coefficient>(3, one));
        auto set = [&](int i, int j, long e) {
            p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = Coefficient(cyclo(9, e));
            p[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = Coefficient(cyclo(9, -e));
        };
        set(2, 1, 2);
        set(3, 1, 4);
        set(3, 2, 1);
        auto res = qma::twist_check(3, q, p);
        EXPECT_TRUE(res.match) << res.detail;
    }
}

}  // namespace
