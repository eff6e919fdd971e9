// Coefficient-ring tests: exact cyclotomic arithmetic, Laurent polynomials
// in named parameters, and the specialization homomorphism between them.

#include <gtest/gtest.h>

#include <random>

#include "qma/coefficient.hpp"

namespace {

using qma::Coefficient;
using qma::cyclo;
using qma::CyclotomicScalar;
using qma::Integer;
using qma::LaurentScalar;
using qma::order_of;
using qma::ParameterAssignment;
using qma::Rational;

qma::detail::ZPoly zp(std::initializer_list<long> cs) {
    qma::detail::ZPoly p;
    for (long c : cs) p.emplace_back(c);
    return p;
}

TEST(Cyclotomic, PolynomialsMatchKnownTables) {
    using qma::detail::cyclotomic_polynomial;
    EXPECT_EQ(cyclotomic_polynomial(1), zp({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), zp({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(3), zp({1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), zp({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(5), zp({1, 1, 1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), zp({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(9), zp({1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), zp({1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootOrders) {
    for (long L = 1; L <= 24; ++L) {
        for (long k = 0; k < L; ++k) {
            auto ord = order_of(cyclo(L, k));
            ASSERT_TRUE(ord.has_value()) << "L=" << L << " k=" << k;
            EXPECT_EQ(*ord, L / qma::gcd_long(L, k == 0 ? L : k)) << "L=" << L << " k=" << k;
        }
    }
}

TEST(Cyclotomic, OrderOfNonRootsAndSums) {
    EXPECT_FALSE(order_of(CyclotomicScalar::zero(3)).has_value());
    EXPECT_FALSE(order_of(CyclotomicScalar::from_rational(2)).has_value());
    EXPECT_FALSE(order_of(CyclotomicScalar::from_rational(2, 3) * cyclo(3, 1)).has_value());
    EXPECT_EQ(order_of(CyclotomicScalar::one()).value(), 1);
    EXPECT_EQ(order_of(CyclotomicScalar::from_rational(-1)).value(), 2);
    // 1 + zeta_3 = zeta_6 and -zeta_3 = zeta_6^5, both of order 6.
    EXPECT_EQ(order_of(CyclotomicScalar::one(3) + cyclo(3, 1)).value(), 6);
    EXPECT_EQ(order_of(-cyclo(3, 1)).value(), 6);
}

TEST(Cyclotomic, CrossLevelIdentities) {
    EXPECT_EQ(cyclo(2, 1), CyclotomicScalar::from_rational(-1));
    EXPECT_EQ(cyclo(4, 2), CyclotomicScalar::from_rational(-1));
    EXPECT_EQ(cyclo(6, 1), -cyclo(3, 2));
    EXPECT_EQ(cyclo(3, 1).promoted(6), cyclo(6, 2));
    EXPECT_EQ(cyclo(3, 1).promoted(12), cyclo(12, 4));
    EXPECT_EQ(cyclo(5, 7), cyclo(5, 2));
    EXPECT_EQ(cyclo(5, -1), cyclo(5, 4));
    EXPECT_TRUE((CyclotomicScalar::one(3) + cyclo(3, 1) + cyclo(3, 2)).is_zero());
    // zeta_6^2 is a primitive cube root, so it satisfies x^2 + x + 1 = 0.
    CyclotomicScalar s = cyclo(6, 2);
    EXPECT_TRUE((s * s + s + CyclotomicScalar::one(6)).is_zero());
}

CyclotomicScalar random_scalar(std::mt19937& rng, long level) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<long> pw(0, level - 1);
    CyclotomicScalar s = CyclotomicScalar::zero(level);
    for (int t = 0; t < 3; ++t)
        s = s + CyclotomicScalar::from_rational(qma::frac(num(rng), den(rng)), level) * cyclo(level, pw(rng));
    return s;
}

TEST(Cyclotomic, FieldAxiomsOnRandomScalars) {
    std::mt19937 rng(20260823);
    const long level = 12;
    const CyclotomicScalar one = CyclotomicScalar::one(level);
    for (int trial = 0; trial < 200; ++trial) {
        CyclotomicScalar a = random_scalar(rng, level);
        CyclotomicScalar b = random_scalar(rng, level);
        CyclotomicScalar c = random_scalar(rng, level);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, CyclotomicScalar::zero(level));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), one);
            if (!b.is_zero()) {
                EXPECT_EQ((a / b) * b, a);
            }
        }
    }
}

TEST(Cyclotomic, InverseAndPowers) {
    EXPECT_EQ(cyclo(5, 1).inverse(), cyclo(5, 4));
    EXPECT_EQ(cyclo(9, 2).pow(5), cyclo(9, 10));
    CyclotomicScalar s = CyclotomicScalar::from_rational(qma::frac(2, 3), 7) + cyclo(7, 3);
    EXPECT_EQ(s.pow(0), CyclotomicScalar::one(7));
    EXPECT_EQ(s.pow(-3), s.inverse().pow(3));
    EXPECT_EQ(s.pow(4) * s.pow(-4), CyclotomicScalar::one(7));
}

TEST(Cyclotomic, AsRational) {
    EXPECT_EQ(CyclotomicScalar::from_rational(qma::frac(7, 3)).as_rational().value(), qma::frac(7, 3));
    EXPECT_FALSE(cyclo(3, 1).as_rational().has_value());
    EXPECT_EQ((cyclo(3, 1) + cyclo(3, 2)).as_rational().value(), Rational(-1));
    EXPECT_EQ((cyclo(8, 1) * cyclo(8, 3)).as_rational().value(), Rational(-1));
}

TEST(Cyclotomic, Printing) {
    EXPECT_EQ(CyclotomicScalar::zero(5).to_string(), "0");
    EXPECT_EQ(cyclo(3, 1).to_string(), "zeta");
    EXPECT_EQ((-cyclo(3, 1)).to_string(), "-zeta");
    EXPECT_EQ((cyclo(4, 1) + CyclotomicScalar::from_rational(qma::frac(1, 2), 4)).to_string(), "zeta + 1/2");
    EXPECT_EQ((CyclotomicScalar::from_rational(2, 9) * cyclo(9, 3) - cyclo(9, 1)).to_string(),
              "2*zeta^3 - zeta");
}

TEST(Laurent, BasicArithmetic) {
    LaurentScalar q = LaurentScalar::parameter("q");
    LaurentScalar one = LaurentScalar::one();
    EXPECT_TRUE((q * q.inverse() - one).is_zero());
    EXPECT_EQ((q - one) * (q + one), q.pow(2) - one);
    EXPECT_EQ(q.pow(-2) * q.pow(5), q.pow(3));
    EXPECT_TRUE(q.is_unit());
    EXPECT_FALSE((q + one).is_unit());
    EXPECT_THROW((q + one).inverse(), std::domain_error);
    EXPECT_EQ(LaurentScalar::from_rational(qma::frac(3, 2)).as_rational().value(), qma::frac(3, 2));
    EXPECT_FALSE(q.as_rational().has_value());
    EXPECT_EQ(LaurentScalar::parameter("q", 0), one);
}

TEST(Laurent, MultiParameterAndPrinting) {
    LaurentScalar p12 = LaurentScalar::parameter("p_12");
    LaurentScalar p21 = LaurentScalar::parameter("p_21");
    LaurentScalar lam = LaurentScalar::parameter("lambda");
    LaurentScalar expr = lam * p12 * p21.pow(-1) - LaurentScalar::from_rational(2);
    EXPECT_EQ((p12 * p21) * lam, lam * (p21 * p12));
    EXPECT_EQ(expr.to_string(), "lambda*p_12*p_21^-1 - 2");
    EXPECT_EQ(LaurentScalar::parameter("q", -1).to_string(), "q^-1");
    EXPECT_EQ(LaurentScalar::zero().to_string(), "0");
}

TEST(Laurent, SubstituteUnits) {
    // Send p_12 -> q^{-1}, p_21 -> q^{-1}: then p_12 * p_21^{-1} becomes 1.
    LaurentScalar p12 = LaurentScalar::parameter("p_12");
    LaurentScalar p21 = LaurentScalar::parameter("p_21");
    std::map<std::string, LaurentScalar> subs{{"p_12", LaurentScalar::parameter("q", -1)},
                                              {"p_21", LaurentScalar::parameter("q", -1)}};
    EXPECT_EQ((p12 * p21.inverse()).substitute_units(subs), LaurentScalar::one());
    EXPECT_EQ((p12 + p21).substitute_units(subs),
              LaurentScalar::from_rational(2) * LaurentScalar::parameter("q", -1));
    // Parameters without a substitution are passed through unchanged.
    LaurentScalar lam = LaurentScalar::parameter("lambda");
    EXPECT_EQ((lam * p12).substitute_units(subs), lam * LaurentScalar::parameter("q", -1));
}

LaurentScalar random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> exp(-3, 3);
    LaurentScalar s = LaurentScalar::zero();
    for (int t = 0; t < 3; ++t)
        s = s + LaurentScalar::from_rational(Rational(num(rng))) * LaurentScalar::parameter("q", exp(rng));
    return s;
}

TEST(Laurent, SpecializationIsRingHomomorphism) {
    ParameterAssignment a(9, {{"q", 2}});
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentScalar x = random_laurent(rng);
        LaurentScalar y = random_laurent(rng);
        EXPECT_EQ(specialize(x + y, a), specialize(x, a) + specialize(y, a));
        EXPECT_EQ(specialize(x * y, a), specialize(x, a) * specialize(y, a));
    }
    EXPECT_EQ(specialize(LaurentScalar::one(), a), CyclotomicScalar::one(9));
}

TEST(Laurent, SpecializationValues) {
    // q - q^{-1} at q = zeta_3 is zeta_3 - zeta_3^2.
    ParameterAssignment a(3, {{"q", 1}});
    LaurentScalar q = LaurentScalar::parameter("q");
    EXPECT_EQ(specialize(q - q.inverse(), a), cyclo(3, 1) - cyclo(3, 2));
    // Unassigned parameters are an error.
    EXPECT_THROW(specialize(LaurentScalar::parameter("r"), a), std::invalid_argument);
}

TEST(CoefficientVariant, ModesDoNotMix) {
    Coefficient c1(cyclo(3, 1));
    Coefficient c2(LaurentScalar::parameter("q"));
    EXPECT_EQ(c1.mode(), qma::CoefficientMode::cyclotomic);
    EXPECT_EQ(c2.mode(), qma::CoefficientMode::laurent);
    EXPECT_THROW(c1 + c2, std::invalid_argument);
    EXPECT_THROW(c1 * c2, std::invalid_argument);
    EXPECT_THROW((void)(c1 == c2), std::invalid_argument);
}

TEST(CoefficientVariant, ArithmeticDelegates) {
    Coefficient a(cyclo(3, 1));
    Coefficient b(cyclo(3, 2));
    EXPECT_EQ((a * b), Coefficient(CyclotomicScalar::one(3)));
    EXPECT_TRUE((a + b + a.same_mode_rational(1)).is_zero());
    EXPECT_EQ(a.pow(-1), b);
    EXPECT_TRUE(a.is_unit());

    Coefficient q(LaurentScalar::parameter("q"));
    EXPECT_EQ(q.inverse(), Coefficient(LaurentScalar::parameter("q", -1)));
    EXPECT_EQ(q.same_mode_rational(Rational(5)).to_string(), "5");
    EXPECT_FALSE((q + q.same_mode_rational(1)).is_unit());
    EXPECT_EQ(specialize(q, ParameterAssignment(4, {{"q", 1}})), Coefficient(cyclo(4, 1)));
}

TEST(NumberHelpers, EulerPhiAndDivisors) {
    EXPECT_EQ(qma::euler_phi(1), 1);
    EXPECT_EQ(qma::euler_phi(2), 1);
    EXPECT_EQ(qma::euler_phi(3), 2);
    EXPECT_EQ(qma::euler_phi(9), 6);
    EXPECT_EQ(qma::euler_phi(12), 4);
    EXPECT_EQ(qma::euler_phi(24), 8);
    EXPECT_EQ(qma::divisors(12), (std::vector<long>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(qma::divisors(1), (std::vector<long>{1}));
}

}  // namespace
