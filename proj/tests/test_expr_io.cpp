// Expression grammar, element printing, and the JSON file formats for
// algebra and morphism descriptions.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qma/expr.hpp"
#include "qma/io.hpp"
#include "qma/morph.hpp"
#include "qma/qdet.hpp"

namespace {

using namespace qma;

PresentationPtr generic_single(int n) { return Presentation::quantum_matrix_generic_single(n); }

PresentationPtr cyclo_single(int n, long m) {
    return Presentation::quantum_matrix_single(n, Coefficient(cyclo(m, 1)));
}

AlgebraElement gen_rc(const PresentationPtr& p, int row, int col) {
    for (int k = 0; k < p->size(); ++k)
        if (p->gen(k).row == row && p->gen(k).col == col) return AlgebraElement::generator(p, k);
    throw std::logic_error("no such generator");
}

TEST(Parse, DeterminantLaplaceAndTrivialPower) {
    auto p = generic_single(2);
    EXPECT_TRUE(evaluate_expression("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]", p) ==
                quantum_determinant(p));
    AlgebraElement expected =
        (gen_rc(p, 1, 2) * gen_rc(p, 2, 1)).scaled(p->single_parameter()).scaled(Rational(-1));
    EXPECT_TRUE(evaluate_expression("D - x[1,1]*A(1,1)", p) == expected);
    EXPECT_TRUE(evaluate_expression("x[1,1]^0", p) == AlgebraElement::one(p));
}

TEST(Parse, PrecedenceParensAndScalars) {
    auto p = generic_single(2);
    AlgebraElement a = gen_rc(p, 1, 1), b = gen_rc(p, 1, 2), c = gen_rc(p, 2, 1),
                   d = gen_rc(p, 2, 2);
    EXPECT_TRUE(evaluate_expression("x[1,1] + x[1,2]*x[2,1]^2", p) == a + b * c.pow(2));
    EXPECT_TRUE(evaluate_expression("(x[1,1] + x[2,2])^2", p) == (a + d).pow(2));
    EXPECT_TRUE(evaluate_expression("2^-1", p) ==
                AlgebraElement::scalar(p, p->rational_coeff(frac(1, 2))));
    EXPECT_TRUE(evaluate_expression("3/2*x[1,1]", p) == a.scaled(frac(3, 2)));
    EXPECT_TRUE(evaluate_expression("-x[1,1] + 1", p) == AlgebraElement::one(p) - a);
    EXPECT_TRUE(evaluate_expression("q^-2", p) ==
                AlgebraElement::scalar(p, p->qma().lambda));
    EXPECT_TRUE(evaluate_expression("lambda", p) == evaluate_expression("q^-2", p));
    EXPECT_TRUE(evaluate_expression("p[2,1]", p) == evaluate_expression("q", p));
    EXPECT_TRUE(evaluate_expression("p[1,2]", p) == evaluate_expression("q^-1", p));
}

TEST(Parse, CyclotomicShorthands) {
    auto p = cyclo_single(2, 3);
    EXPECT_TRUE(evaluate_expression("Z[1,2]", p) == gen_rc(p, 1, 2).pow(3));
    EXPECT_TRUE(evaluate_expression("D^3", p) ==
                evaluate_expression("Z[1,1]*Z[2,2] - Z[1,2]*Z[2,1]", p));
    EXPECT_TRUE(evaluate_expression("zeta^3", p) == AlgebraElement::one(p));
    EXPECT_TRUE(evaluate_expression("zeta^-1", p) == evaluate_expression("zeta^2", p));
    EXPECT_TRUE(evaluate_expression("Dt(1)", p) == gen_rc(p, 1, 2));
    EXPECT_TRUE(evaluate_expression("A(2,1)", p) == gen_rc(p, 1, 2));

    auto p3 = cyclo_single(3, 3);
    EXPECT_TRUE(evaluate_expression("Dt(2)", p3) ==
                quantum_minor(p3, std::vector<int>{1, 2}, std::vector<int>{2, 3}));
}

TEST(Parse, SyntaxErrorsCarryPositions) {
    EXPECT_THROW(parse_expression(""), ExprError);
    EXPECT_THROW(parse_expression("x[1,1"), ExprError);
    EXPECT_THROW(parse_expression("x[1,1] @"), ExprError);
    EXPECT_THROW(parse_expression("q + "), ExprError);
    EXPECT_THROW(parse_expression("x[1,1]*-3"), ExprError);
    EXPECT_THROW(parse_expression("1/0"), ExprError);
    try {
        parse_expression("x[1,1] + y");
        FAIL() << "expected a syntax error";
    } catch (const ExprError& e) {
        EXPECT_NE(std::string(e.what()).find("position 9"), std::string::npos);
        EXPECT_EQ(e.position(), 9u);
    }
}

TEST(Parse, ModeErrors) {
    auto lp = Presentation::quantum_matrix_generic(2);  // multiparameter, no q
    EXPECT_THROW(evaluate_expression("q", lp), ExprError);
    EXPECT_THROW(evaluate_expression("zeta", lp), ExprError);
    EXPECT_THROW(evaluate_expression("Z[1,1]", lp), ExprError);
    EXPECT_TRUE(evaluate_expression("lambda*p[2,1]", lp) ==
                AlgebraElement::scalar(lp, lp->qma().lambda * lp->qma().p[1][0]));

    auto p = generic_single(2);
    EXPECT_THROW(evaluate_expression("x[3,1]", p), ExprError);
    EXPECT_THROW(evaluate_expression("x[1,2]^-1", p), ExprError);
    EXPECT_THROW(evaluate_expression("Z[1,1]", p), ExprError);  // generic mode
    EXPECT_THROW(evaluate_expression("p[3,1]", p), ExprError);

    auto sub = Presentation::subalgebra(cyclo_single(3, 3), {0, 1, 2, 3, 4, 5});
    EXPECT_THROW(evaluate_expression("D", sub), ExprError);
    EXPECT_TRUE(evaluate_expression("Z[2,3]", sub) == gen_rc(sub, 2, 3).pow(3));
    EXPECT_TRUE(evaluate_expression("q", sub) ==
                AlgebraElement::scalar(sub, Coefficient(cyclo(3, 1))));
}

TEST(RoundTrip, ExpressionCorpus) {
    std::vector<std::string> corpus = {
        "x[1,1]",
        "x[1,2]^3",
        "x[1,1]*x[2,2]",
        "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]",
        "D",
        "D^3",
        "A(1,1)",
        "A(2,1)^2",
        "Dt(1)",
        "Dt(2)^3",
        "Z[1,1]",
        "Z[2,2]^2",
        "q",
        "q^-1",
        "q^-2",
        "lambda",
        "lambda^2",
        "p[2,1]",
        "p[2,1]^-3",
        "zeta",
        "zeta^2",
        "zeta^-1",
        "1",
        "0",
        "42",
        "3/2",
        "-x[1,1]",
        "-1",
        "-q*x[1,2]*x[2,1] + 1",
        "x[1,1] + x[2,2]",
        "x[1,1] - x[2,2]",
        "x[1,1] - x[2,2] + x[1,2] - x[2,1]",
        "(x[1,1] + x[2,2])^2",
        "(x[1,1] - x[2,2])*x[1,2]",
        "x[1,2]*(x[1,1] + x[2,2])",
        "(q - q^-1)*x[1,3]*x[2,1]",
        "x[1,1]*x[2,3] - (q - q^-1)*x[1,3]*x[2,1]",
        "2*x[1,1]^2*x[2,2]",
        "1/2*x[1,2]",
        "x[1,1]^0",
        "(x[1,1]*x[2,2])^2",
        "lambda*p[2,1]^2",
        "D - x[1,1]*A(1,1)",
        "Z[1,1]*Z[2,2] - Z[1,2]*Z[2,1]",
        "x[3,3]*x[2,2]*x[1,1]",
        "(1 + zeta)*x[1,1]",
        "-(x[1,1] + x[2,2])",
        "x[1,1]*(x[2,2] - 1)*(x[2,2] + 1)",
        "q^2 - 2 + q^-2",
        "(D - 1)^2",
        "A(1,2)*A(2,1) - A(1,1)*A(2,2)",
        "x[2,1]^5*x[1,2]^5",
        "7/3",
        "zeta^2*x[1,1] - zeta*x[2,2]",
        "p[3,1]*p[2,1]^-1",
    };
    ASSERT_GE(corpus.size(), 50u);
    for (const std::string& text : corpus) {
        ExprPtr e1 = parse_expression(text);
        std::string printed = print_expression(e1);
        ExprPtr e2 = parse_expression(printed);
        EXPECT_TRUE(expr_equal(e1, e2)) << text << "  ->  " << printed;
        EXPECT_EQ(print_expression(e2), printed) << text;
    }
    // Whitespace is insignificant.
    EXPECT_TRUE(expr_equal(parse_expression("x[1,1]  *   x[2,2]-q * x[1,2] *x[2,1]"),
                           parse_expression("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]")));
}

TEST(ElementPrint, CanonicalFormsAndRoundTrip) {
    auto p2 = generic_single(2);
    EXPECT_EQ(print_element(quantum_determinant(p2)), "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]");
    EXPECT_EQ(print_element(AlgebraElement::zero(p2)), "0");
    EXPECT_EQ(print_element(AlgebraElement::one(p2)), "1");

    auto lp = Presentation::quantum_matrix_generic(2);
    EXPECT_EQ(print_element(quantum_determinant(lp)), "x[1,1]*x[2,2] - p[2,1]*x[1,2]*x[2,1]");

    // x_23 x_11 = x_11 x_23 - (q - q^-1) x_13 x_21: a hoisted multi-term
    // coefficient.
    auto p3 = generic_single(3);
    AlgebraElement prod = gen_rc(p3, 2, 3) * gen_rc(p3, 1, 1);
    EXPECT_EQ(print_element(prod), "x[1,1]*x[2,3] - (q - q^-1)*x[1,3]*x[2,1]");

    // Printed text evaluates back to the element, and printing is a fixed
    // point, across modes and coefficient shapes.
    std::vector<AlgebraElement> elements = {
        quantum_determinant(p2),
        quantum_determinant(p3),
        quantum_determinant(lp),
        prod,
        prod.pow(2),
        gen_rc(p2, 1, 1).scaled(frac(-3, 2)) + AlgebraElement::one(p2).scaled(frac(1, 7)),
        complement_minor(p3, 2, 2),
        evaluate_expression("(D - 1)^2", p2),
    };
    for (const AlgebraElement& e : elements) {
        std::string printed = print_element(e);
        AlgebraElement back = evaluate_expression(printed, e.pres());
        EXPECT_TRUE(back == e) << printed;
        EXPECT_EQ(print_element(back), printed);
    }

    auto pc = cyclo_single(2, 3);
    AlgebraElement mixed = gen_rc(pc, 1, 1).scaled(Coefficient(cyclo(3, 2))) +
                           gen_rc(pc, 2, 2).scaled(Coefficient(cyclo(3, 1)).pow(-1) +
                                                   Coefficient(CyclotomicScalar::one(3)));
    std::string printed = print_element(mixed);
    EXPECT_TRUE(evaluate_expression(printed, pc) == mixed) << printed;
    EXPECT_EQ(print_element(evaluate_expression(printed, pc)), printed);
}

TEST(AlgebraFiles, GenericModes) {
    auto plain = algebra_from_json(nlohmann::json::parse(R"({"rows":2,"mode":"generic"})"));
    EXPECT_EQ(plain.pres->size(), 4);
    EXPECT_FALSE(plain.pres->has_single_parameter());
    EXPECT_EQ(plain.pres->mode(), CoefficientMode::laurent);
    EXPECT_EQ(plain.digest, "rows=2;cols=2;mode=generic");

    auto single = algebra_from_json(nlohmann::json::parse(
        R"({"rows":2,"cols":2,"mode":"generic","lambda_exp":-2,"p_exps":[[0,-1],[1,0]]})"));
    ASSERT_TRUE(single.pres->has_single_parameter());
    EXPECT_TRUE(evaluate_expression("q", single.pres) ==
                AlgebraElement::scalar(single.pres, single.pres->single_parameter()));

    auto powers = algebra_from_json(nlohmann::json::parse(
        R"({"rows":2,"mode":"generic","lambda_exp":-3,"p_exps":[[0,-1],[1,0]]})"));
    EXPECT_FALSE(powers.pres->has_single_parameter());
    Coefficient q{LaurentScalar::parameter("q")};
    EXPECT_TRUE(powers.pres->qma().lambda == q.pow(-3));
    EXPECT_TRUE(powers.pres->qma().p[1][0] == q);
}

TEST(AlgebraFiles, CyclotomicModes) {
    auto single = algebra_from_json(nlohmann::json::parse(
        R"({"rows":2,"mode":"cyclotomic","level":3,"lambda_exp":1,"p_exps":[[0,2],[1,0]]})"));
    ASSERT_TRUE(single.pres->has_single_parameter());
    EXPECT_TRUE(single.pres->single_parameter() == Coefficient(cyclo(3, 1)));

    auto multi = algebra_from_json(nlohmann::json::parse(
        R"({"rows":2,"mode":"cyclotomic","level":3,"lambda_exp":1,"p_exps":[[0,0],[0,0]]})"));
    EXPECT_FALSE(multi.pres->has_single_parameter());
    EXPECT_TRUE(multi.pres->qma().lambda == Coefficient(cyclo(3, 1)));
    EXPECT_TRUE(multi.pres->qma().p[1][0].is_one());

    auto nine = algebra_from_json(nlohmann::json::parse(
        R"({"rows":3,"mode":"cyclotomic","level":9,"lambda_exp":-2,"p_exps":[[0,-1,-1],[1,0,-1],[1,1,0]]})"));
    ASSERT_TRUE(nine.pres->has_single_parameter());
    EXPECT_TRUE(nine.pres->single_parameter() == Coefficient(cyclo(9, 1)));
    EXPECT_TRUE(evaluate_expression("Z[1,1]", nine.pres) ==
                gen_rc(nine.pres, 1, 1).pow(9));
}

TEST(AlgebraFiles, ValidationErrors) {
    auto parse = [](const char* text) { return algebra_from_json(nlohmann::json::parse(text)); };
    EXPECT_THROW(parse(R"({"mode":"generic"})"), SpecError);                    // no rows
    EXPECT_THROW(parse(R"({"rows":0,"mode":"generic"})"), SpecError);
    EXPECT_THROW(parse(R"({"rows":2})"), SpecError);                            // no mode
    EXPECT_THROW(parse(R"({"rows":2,"mode":"weird"})"), SpecError);
    EXPECT_THROW(parse(R"({"rows":2,"mode":"generic","junk":1})"), SpecError);
    EXPECT_THROW(parse(R"({"rows":2,"mode":"generic","level":3})"), SpecError);
    EXPECT_THROW(parse(R"({"rows":2,"mode":"cyclotomic","level":3,"lambda_exp":1})"), SpecError);
    EXPECT_THROW(parse(R"({"rows":2,"mode":"cyclotomic","level":3,"lambda_exp":1,"p_exps":[[0,1],[1,0]]})"),
                 SpecError);  // not antisymmetric
    EXPECT_THROW(parse(R"({"rows":2,"mode":"cyclotomic","level":3,"lambda_exp":1,"p_exps":[[0,0],[0]]})"),
                 SpecError);  // ragged
    EXPECT_THROW(parse(R"({"rows":2,"mode":"cyclotomic","level":4,"lambda_exp":2,"p_exps":[[0,0],[0,0]]})"),
                 SpecError);  // lambda^2 = 1
    EXPECT_THROW(parse(R"({"rows":2,"mode":"generic","lambda_exp":-2})"), SpecError);
}

TEST(AlgebraFiles, RectangularAndSubsets) {
    const char* base =
        R"({"rows":2,"cols":3,"mode":"cyclotomic","level":3,"lambda_exp":1,"p_exps":[[0,2,2],[1,0,2],[1,1,0]]})";
    auto rect = algebra_from_json(nlohmann::json::parse(base));
    EXPECT_EQ(rect.pres->size(), 6);
    EXPECT_EQ(rect.pres->kind(), "subalgebra");
    EXPECT_NO_THROW(evaluate_expression("x[2,3]", rect.pres));
    EXPECT_THROW(evaluate_expression("x[3,1]", rect.pres), ExprError);

    auto corner = algebra_from_json(nlohmann::json::parse(
        R"({"rows":3,"mode":"cyclotomic","level":3,"lambda_exp":1,"p_exps":[[0,2,2],[1,0,2],[1,1,0]],
            "subset":[[1,3],[2,2],[2,3],[3,1],[3,2],[3,3]]})"));
    EXPECT_EQ(corner.pres->size(), 6);
    for (int k = 0; k < corner.pres->size(); ++k)
        EXPECT_GE(corner.pres->gen(k).row + corner.pres->gen(k).col, 4);

    EXPECT_THROW(algebra_from_json(nlohmann::json::parse(
                     R"({"rows":3,"mode":"cyclotomic","level":3,"lambda_exp":1,
                         "p_exps":[[0,2,2],[1,0,2],[1,1,0]],"subset":[[1,1],[2,2]]})")),
                 SpecError);  // not straightening-closed
    EXPECT_THROW(algebra_from_json(nlohmann::json::parse(
                     R"({"rows":2,"cols":3,"mode":"generic","subset":[[3,3]]})")),
                 SpecError);  // outside the grid

    auto full = algebra_from_json(nlohmann::json::parse(
        R"({"rows":2,"mode":"generic","subset":[[1,1],[1,2],[2,1],[2,2]]})"));
    EXPECT_TRUE(full.pres->has_qma());  // subset covering everything is the full algebra

    // Digest is canonical: subset order and repetition do not matter.
    auto d1 = algebra_from_json(nlohmann::json::parse(
        R"({"rows":2,"mode":"generic","subset":[[2,1],[1,1],[1,2]]})"));
    auto d2 = algebra_from_json(nlohmann::json::parse(
        R"({"rows":2,"mode":"generic","subset":[[1,1],[1,2],[2,1],[1,1]]})"));
    EXPECT_EQ(d1.digest, d2.digest);
    EXPECT_EQ(d1.digest, "rows=2;cols=2;mode=generic;subset=[[1,1],[1,2],[2,1]]");
}

TEST(MorphismFiles, ImagesDefaultsAndKeys) {
    nlohmann::json alg = nlohmann::json::parse(
        R"({"rows":3,"mode":"cyclotomic","level":3,"lambda_exp":-2,"p_exps":[[0,-1,-1],[1,0,-1],[1,1,0]]})");
    nlohmann::json m;
    m["algebra"] = alg;
    m["images"]["x11"] = "x[1,1] + A(1,1)^2";
    LoadedMorphism lm = morphism_from_json(m, "");
    const PresentationPtr& pres = lm.algebra.pres;
    ASSERT_EQ(static_cast<int>(lm.images.size()), pres->size());
    EXPECT_TRUE(lm.images[0] ==
                AlgebraElement::generator(pres, 0) + complement_minor(pres, 1, 1).pow(2));
    for (int k = 1; k < pres->size(); ++k)
        EXPECT_TRUE(lm.images[static_cast<std::size_t>(k)] ==
                    AlgebraElement::generator(pres, k));
    EXPECT_EQ(lm.given, std::vector<std::string>{"x_11"});

    // This is the corner-shift map; it verifies and matches the builtin.
    GeneratorMap f = make_endomorphism(pres, lm.images);
    EXPECT_TRUE(f.verified);
    GeneratorMap phi = builtin_on("phi", pres, 3);
    for (int k = 0; k < pres->size(); ++k)
        EXPECT_TRUE(f.images[static_cast<std::size_t>(k)] ==
                    phi.images[static_cast<std::size_t>(k)]);

    // Underscored keys and zero images.
    nlohmann::json m2;
    m2["algebra"] = alg;
    m2["images"]["x_12"] = "0";
    LoadedMorphism lm2 = morphism_from_json(m2, "");
    EXPECT_TRUE(lm2.images[1].is_zero());

    nlohmann::json bad;
    bad["algebra"] = alg;
    bad["images"]["x11"] = "x[1,1]";
    bad["images"]["x_11"] = "x[1,1]";
    EXPECT_THROW(morphism_from_json(bad, ""), SpecError);  // duplicate

    nlohmann::json bad2;
    bad2["algebra"] = alg;
    bad2["images"]["y11"] = "x[1,1]";
    EXPECT_THROW(morphism_from_json(bad2, ""), SpecError);

    nlohmann::json bad3;
    bad3["algebra"] = alg;
    bad3["images"]["x99"] = "x[1,1]";
    EXPECT_THROW(morphism_from_json(bad3, ""), SpecError);

    nlohmann::json bad4;
    bad4["algebra"] = alg;
    bad4["images"]["x11"] = 7;
    EXPECT_THROW(morphism_from_json(bad4, ""), SpecError);

    nlohmann::json bad5;
    bad5["algebra"] = alg;
    bad5["images"]["x11"] = "x[1,1] +";
    EXPECT_THROW(morphism_from_json(bad5, ""), SpecError);
}

TEST(MorphismFiles, AlgebraByRelativePath) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qma_expr_io_test";
    fs::create_directories(dir);
    {
        std::ofstream spec(dir / "algebra.json");
        spec << R"({"rows":2,"mode":"generic","lambda_exp":-2,"p_exps":[[0,-1],[1,0]]})";
    }
    {
        std::ofstream morph(dir / "map.json");
        morph << R"({"algebra":"algebra.json","images":{"x21":"q*x[2,1]","x12":"q^-1*x[1,2]"}})";
    }
    LoadedMorphism lm = load_morphism_file((dir / "map.json").string());
    ASSERT_TRUE(lm.algebra.pres->has_single_parameter());
    const Coefficient& q = lm.algebra.pres->single_parameter();
    EXPECT_TRUE(lm.images[2] == AlgebraElement::generator(lm.algebra.pres, 2).scaled(q));
    GeneratorMap f = make_endomorphism(lm.algebra.pres, lm.images);
    EXPECT_TRUE(f.verified);  // diagonal-constraint scalar map with c11 c22 = c12 c21
    EXPECT_THROW(load_morphism_file((dir / "missing.json").string()), SpecError);
    fs::remove_all(dir);
}

}  // namespace
