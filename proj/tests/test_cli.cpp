// End-to-end tests of the qma binary: spawns the real executable (path from
// QMA_CLI_PATH), parses its JSON reports, and checks the exit-code contract
// (0 = pass, 1 = check failed, 2 = usage or input error) together with
// byte-stability of seeded reports.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    q += "'";
    return q;
}

const char* cli_path() {
    if (const char* p = std::getenv("QMA_CLI_PATH")) return p;
#ifdef QMA_CLI_PATH
    return QMA_CLI_PATH;
#else
    return "";
#endif
}

RunResult run_cli(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(cli_path());
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

json parse_report(const RunResult& r) { return json::parse(r.out); }

class CliTest : public ::testing::Test {
  protected:
    static std::filesystem::path dir_;

    static void SetUpTestSuite() {
        ASSERT_NE(std::string(cli_path()), "") << "QMA_CLI_PATH must point at the binary";
        std::string tmpl = (std::filesystem::temp_directory_path() / "qma_cli_XXXXXX").string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        ASSERT_NE(mkdtemp(buf.data()), nullptr);
        dir_ = buf.data();

        write("n2_generic.json", R"({ "rows": 2, "cols": 2, "mode": "generic",
            "lambda_exp": -2, "p_exps": [[0,-1],[1,0]] })");
        write("n2_z3.json", R"({ "rows": 2, "cols": 2, "mode": "cyclotomic", "level": 3,
            "lambda_exp": -2, "p_exps": [[0,-1],[1,0]] })");
        write("n3_z3.json", R"({ "rows": 3, "cols": 3, "mode": "cyclotomic", "level": 3,
            "lambda_exp": -2, "p_exps": [[0,-1,-1],[1,0,-1],[1,1,0]] })");
        write("mp2_z3.json", R"({ "rows": 2, "cols": 2, "mode": "cyclotomic", "level": 3,
            "lambda_exp": 1, "p_exps": [[0,0],[0,0]] })");
        write("p9.json", R"({ "p_exps": [[0,-2],[2,0]] })");
        write("p9_bad.json", R"({ "p_exps": [[0,1],[1,0]] })");
        write("morph_phi.json", R"({ "algebra": "n2_z3.json",
            "images": { "x11": "x[1,1] + A(1,1)^2" } })");
        write("morph_fail.json", R"({ "algebra": "n2_z3.json",
            "images": { "x11": "x[1,1] + x[1,2]" } })");
        write("morph_other_algebra.json", R"({
            "algebra": { "rows": 2, "cols": 2, "mode": "cyclotomic", "level": 5,
                         "lambda_exp": -2, "p_exps": [[0,-1],[1,0]] },
            "images": { "x11": "x[1,1]" } })");
    }

    static void TearDownTestSuite() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }

    static void write(const std::string& name, const std::string& text) {
        std::ofstream f(dir_ / name);
        f << text;
    }

    static std::string path(const std::string& name) { return (dir_ / name).string(); }
};

std::filesystem::path CliTest::dir_;

TEST_F(CliTest, DeterminantPrintsInGrammarForm) {
    RunResult r = run_cli({"det", path("n2_generic.json")});
    EXPECT_EQ(r.exit_code, 0);
    json rep = parse_report(r);
    EXPECT_EQ(rep["element"], "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]");
    EXPECT_NE(r.out.find("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]"), std::string::npos);
    EXPECT_EQ(rep["inputs"]["algebra_digest"],
              "rows=2;cols=2;mode=generic;lambda_exp=-2;p_exps=[[0,-1],[1,0]]");

    RunResult dt = run_cli({"det", path("n2_z3.json"), "--dt", "1"});
    EXPECT_EQ(dt.exit_code, 0);
    EXPECT_EQ(parse_report(dt)["element"], "x[1,2]");

    RunResult comp = run_cli({"det", path("n2_z3.json"), "--comp", "1", "1"});
    EXPECT_EQ(parse_report(comp)["element"], "x[2,2]");

    RunResult minor = run_cli({"det", path("n3_z3.json"), "--minor", "1,2", "2,3"});
    EXPECT_EQ(minor.exit_code, 0);
    EXPECT_EQ(parse_report(minor)["element"],
              "x[1,2]*x[2,3] - zeta*x[1,3]*x[2,2]");
}

TEST_F(CliTest, NormalFormOfLaplaceRemainder) {
    RunResult r = run_cli({"nf", path("n2_generic.json"), "D - x[1,1]*A(1,1)"});
    EXPECT_EQ(r.exit_code, 0);
    json rep = parse_report(r);
    EXPECT_EQ(rep["element"], "-q*x[1,2]*x[2,1]");
    EXPECT_EQ(rep["term_count"], 1);
    EXPECT_FALSE(rep["is_zero"].get<bool>());

    RunResult one = run_cli({"nf", path("n2_generic.json"), "x[1,1]^0"});
    EXPECT_EQ(parse_report(one)["element"], "1");
}

TEST_F(CliTest, CentralVerdictDrivesExitCode) {
    RunResult yes = run_cli({"central", path("n2_generic.json"), "D"});
    EXPECT_EQ(yes.exit_code, 0);
    EXPECT_TRUE(parse_report(yes)["central"].get<bool>());

    RunResult no = run_cli({"central", path("n2_generic.json"), "x[1,1]"});
    EXPECT_EQ(no.exit_code, 1);
    EXPECT_FALSE(parse_report(no)["central"].get<bool>());
}

TEST_F(CliTest, UsageAndInputErrorsExitTwo) {
    EXPECT_EQ(run_cli({}).exit_code, 2);
    EXPECT_EQ(run_cli({"nosuchcommand"}).exit_code, 2);
    EXPECT_EQ(run_cli({"nf", path("missing.json"), "D"}).exit_code, 2);
    EXPECT_EQ(run_cli({"nf", path("n2_generic.json"), "x[1,1] + y"}).exit_code, 2);
    EXPECT_EQ(run_cli({"jacobian", "2", "3", "--point", "1,1,1,1,1,1,1"}).exit_code, 2);
    EXPECT_EQ(run_cli({"jacobian", "2", "3", "--point", "1,2/0,0"}).exit_code, 2);
    EXPECT_EQ(run_cli({"accept", "--suite", "nope"}).exit_code, 2);
    EXPECT_EQ(run_cli({"center-gens", path("n2_generic.json")}).exit_code, 2);
    EXPECT_EQ(run_cli({"twist", "2", "9", "1", path("p9_bad.json")}).exit_code, 2);
    EXPECT_EQ(run_cli({"auto", "builtin", "nope", "--n", "2", "--m", "3"}).exit_code, 2);
}

TEST_F(CliTest, WordActionExample) {
    RunResult r = run_cli({"auto", "word", "2", "3", "phi psi^-1 phi^2"});
    EXPECT_EQ(r.exit_code, 0);
    json rep = parse_report(r);
    EXPECT_EQ(rep["word"], "phi psi^-1 phi^2");
    EXPECT_TRUE(rep["differs"].get<bool>());
    EXPECT_EQ(rep["lines"][1], "differs from x11: true");
    EXPECT_NE(r.out.find("differs from x11: true"), std::string::npos);

    // A pure psi power genuinely fixes x_11.
    RunResult fixed = run_cli({"auto", "word", "2", "3", "psi^2"});
    EXPECT_EQ(fixed.exit_code, 0);
    json frep = parse_report(fixed);
    EXPECT_FALSE(frep["differs"].get<bool>());
    EXPECT_EQ(frep["image"], "x[1,1]");
}

TEST_F(CliTest, BuiltinMapsAndNegativeControl) {
    RunResult phi = run_cli({"auto", "builtin", "phi", "--n", "2", "--m", "3"});
    EXPECT_EQ(phi.exit_code, 0);
    json rep = parse_report(phi);
    EXPECT_TRUE(rep["verified"].get<bool>());
    EXPECT_FALSE(rep["graded"].get<bool>());
    EXPECT_EQ(rep["inverse"]["name"], "rho");
    EXPECT_TRUE(rep["inverse"]["verified"].get<bool>());
    EXPECT_EQ(rep["images"]["x_11"], "x[1,1] + x[2,2]^2");

    RunResult tau = run_cli({"auto", "builtin", "tau", "--n", "2", "--m", "3"});
    EXPECT_EQ(tau.exit_code, 0);
    EXPECT_TRUE(parse_report(tau)["graded"].get<bool>());

    RunResult b3 = run_cli({"auto", "builtin", "b3_phi", "--n", "3", "--m", "3"});
    EXPECT_EQ(b3.exit_code, 1);
    json brep = parse_report(b3);
    EXPECT_FALSE(brep["verified"].get<bool>());
    std::string err = brep["error"];
    EXPECT_NE(err.find("x_32 * x_11"), std::string::npos);
    EXPECT_NE(err.find("x_32 * x_21"), std::string::npos);
}

TEST_F(CliTest, MorphismFilesVerifyAndReject) {
    RunResult ok = run_cli({"auto", "verify", path("n2_z3.json"), path("morph_phi.json")});
    EXPECT_EQ(ok.exit_code, 0);
    json rep = parse_report(ok);
    EXPECT_TRUE(rep["verified"].get<bool>());
    EXPECT_EQ(rep["given_images"], json::array({"x_11"}));
    EXPECT_FALSE(rep["graded"].get<bool>());

    RunResult bad = run_cli({"auto", "verify", path("n2_z3.json"), path("morph_fail.json")});
    EXPECT_EQ(bad.exit_code, 1);
    json brep = parse_report(bad);
    EXPECT_FALSE(brep["verified"].get<bool>());
    EXPECT_EQ(brep["violations"].size(), 3u);

    RunResult mismatch =
        run_cli({"auto", "verify", path("n2_z3.json"), path("morph_other_algebra.json")});
    EXPECT_EQ(mismatch.exit_code, 2);
}

TEST_F(CliTest, CenterGroebnerHilbertSocle) {
    RunResult cg = run_cli({"center-gens", path("n2_z3.json")});
    EXPECT_EQ(cg.exit_code, 0);
    json crep = parse_report(cg);
    EXPECT_TRUE(crep["pass"].get<bool>());
    EXPECT_EQ(crep["m"], 3);
    EXPECT_EQ(crep["y_count"], 2);
    EXPECT_EQ(crep["generators"]["Z"][0][1], "x[1,2]^3");

    RunResult gb = run_cli({"gb", "2", "3"});
    EXPECT_EQ(gb.exit_code, 0);
    EXPECT_TRUE(parse_report(gb)["pass"].get<bool>());

    RunResult hb = run_cli({"hilbert", "2", "3", "--max-degree", "3"});
    EXPECT_EQ(hb.exit_code, 0);
    json hrep = parse_report(hb);
    EXPECT_EQ(hrep["counts_by_degree"], json::array({"1", "7", "25", "64"}));
    EXPECT_EQ(hrep["hilbert_degree"], 3);
    EXPECT_EQ(hrep["krull_dimension"], 4);
    EXPECT_EQ(hrep["z_free_count"], "9");

    RunResult so = run_cli({"socle", "2", "3"});
    EXPECT_EQ(so.exit_code, 0);
    json srep = parse_report(so);
    EXPECT_EQ(srep["socle_dim"], 2);
    EXPECT_TRUE(srep["first_witness_in_socle"].get<bool>());
}

TEST_F(CliTest, IdentityChecksPassOnSpecFiles) {
    RunResult lap = run_cli({"laplace", path("n3_z3.json")});
    EXPECT_EQ(lap.exit_code, 0);
    EXPECT_TRUE(parse_report(lap)["pass"].get<bool>());

    RunResult mid = run_cli({"minor-ids", path("n3_z3.json")});
    EXPECT_EQ(mid.exit_code, 0);
    json mrep = parse_report(mid);
    EXPECT_TRUE(mrep["pass"].get<bool>());
    EXPECT_EQ(mrep["checks"].size(), 5u);

    RunResult tw = run_cli({"twist", "2", "9", "1", path("p9.json")});
    EXPECT_EQ(tw.exit_code, 0);
    EXPECT_TRUE(parse_report(tw)["pass"].get<bool>());

    RunResult wi = run_cli({"witness", "n2"});
    EXPECT_EQ(wi.exit_code, 0);
    EXPECT_EQ(parse_report(wi)["checks"], 3);

    RunResult da = run_cli({"disc", "affine", "1", "3"});
    EXPECT_EQ(da.exit_code, 0);
    json drep = parse_report(da);
    EXPECT_TRUE(drep["matches_closed_form"].get<bool>());
    EXPECT_EQ(drep["unit"], "-27");
    EXPECT_EQ(drep["y_exponent"], "2");
    EXPECT_EQ(drep["x_exponent"], "6");
}

TEST_F(CliTest, SeededReportsAreByteIdentical) {
    std::vector<std::string> args{"disc",     "check",      path("mp2_z3.json"),
                                  "--claim",  "y_12^54*y_21^54*Omega^54",
                                  "--points", "2",          "--seed",
                                  "20260823"};
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    json rep = parse_report(a);
    EXPECT_TRUE(rep["pass"].get<bool>());
    EXPECT_EQ(rep["inputs"]["seed"], 20260823);
    EXPECT_EQ(rep["l"], 3);

    RunResult c = run_cli({"plocus", "3", "--samples", "4", "--seed", "99"});
    RunResult d = run_cli({"plocus", "3", "--samples", "4", "--seed", "99"});
    EXPECT_EQ(c.exit_code, 0);
    EXPECT_EQ(c.out, d.out);
    EXPECT_EQ(parse_report(c)["inputs"]["seed"], 99);
}

TEST_F(CliTest, JacobianRankAtRationalPoints) {
    RunResult r1 = run_cli({"jacobian", "2", "3", "--point", "1,0,0,1,1,0,0"});
    EXPECT_EQ(r1.exit_code, 0);
    EXPECT_EQ(parse_report(r1)["rank"], 1);

    RunResult r0 = run_cli({"jacobian", "2", "3", "--point", "0,0,0,0,0,0,0"});
    EXPECT_EQ(parse_report(r0)["rank"], 0);

    RunResult rq = run_cli({"jacobian", "2", "3", "--point", "0,0,0,1/2,0,0,0"});
    EXPECT_EQ(rq.exit_code, 0);
    EXPECT_EQ(parse_report(rq)["rank"], 1);
}

}  // namespace
