#include <gtest/gtest.h>

#include <sstream>

#include "fermat/cli.hpp"
#include "fermat/serialization.hpp"

using namespace fermat;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(ComplexSyntax, Parsing) {
    EXPECT_EQ(cli::parse_complex("1+0i"), Complex(1, 0));
    EXPECT_EQ(cli::parse_complex("0+1i"), Complex(0, 1));
    EXPECT_EQ(cli::parse_complex("2"), Complex(2, 0));
    EXPECT_EQ(cli::parse_complex("-0.5i"), Complex(0, -0.5));
    EXPECT_EQ(cli::parse_complex("i"), Complex(0, 1));
    EXPECT_EQ(cli::parse_complex("3e-2-4i"), Complex(0.03, -4));
    EXPECT_EQ(cli::parse_complex("-1.5e1+2.5E-1i"), Complex(-15, 0.25));
    for (const char* bad : {"", "1+", "i2", "1+2", "1+2j", "1 2i", "abc"})
        EXPECT_THROW(cli::parse_complex(bad), std::invalid_argument) << bad;
    const auto list = cli::parse_complex_list("1+0i,0+1i,2+0i");
    EXPECT_EQ(list, (std::vector<Complex>{{1, 0}, {0, 1}, {2, 0}}));
    EXPECT_THROW(cli::parse_complex_list("1,"), std::invalid_argument);
}

TEST(ComplexSyntax, FormatRoundTrip) {
    for (Complex z : {Complex(1, 0), Complex(-0.1, 1e-300), Complex(3.141592653589793, -2.718281828459045)})
        EXPECT_EQ(cli::parse_complex(cli::format_complex(z)), z);
}

TEST(Cli, HeadlineValue) {
    const Invocation r = run({"eddeg", "projective", "-n", "2", "-d", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("general_bound: 25"), std::string::npos);
    EXPECT_NE(r.out.find("term: C(3,2) * delta(1,3) = 3 * 0 = 0"), std::string::npos);
    EXPECT_NE(r.out.find("term: C(3,3) * delta(2,3) = 1 * 2 = 2"), std::string::npos);
    EXPECT_NE(r.out.find("epsilon: 2"), std::string::npos);
    EXPECT_NE(r.out.find("ed_degree: 23\n"), std::string::npos);
}

TEST(Cli, Delta) {
    const Invocation r = run({"delta", "-m", "2", "-p", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "8\n");
    EXPECT_EQ(run({"delta", "-m", "3", "-p", "8", "--closed-form"}).out, "72\n");
    EXPECT_EQ(run({"delta", "-m", "1", "-p", "5", "--a", "1+0i,0+1i"}).out, "1\n");
}

TEST(Cli, ScaledAndAffine) {
    const Invocation s = run({"eddeg", "scaled", "-n", "2", "-d", "5", "--a", "1+0i,0+1i,0.7-1.3i"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("ed_degree: 24\n"), std::string::npos);
    const Invocation a = run({"eddeg", "affine", "-n", "2", "-d", "6"});
    EXPECT_NE(a.out.find("ed_degree: 34\n"), std::string::npos);
}

TEST(Cli, VerifyJsonEnvelope) {
    const Invocation r = run({"verify", "-n", "2", "-d", "5", "--seed", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("command"), "verify");
    EXPECT_EQ(j.at("version"), cli::kVersion);
    EXPECT_EQ(j.at("result").at("agree"), true);
    EXPECT_EQ(j.at("result").at("finite_deduplicated"), 23);
    EXPECT_EQ(j.at("tolerances_and_seeds").at("seed"), 7);
    EXPECT_EQ(j.at("tolerances_and_seeds").at("tracking").at("dedup_tol"), 1e-6);
    EXPECT_EQ(j.at("result").get<VerificationReport>(), verify_eddeg(2, 5, 7));
}

TEST(Cli, JsonOutputIsByteIdentical) {
    const std::vector<std::string> args{"--format", "json", "verify", "-n", "2", "-d", "4", "--seed", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> scan{"real-scan", "-n", "2", "-d", "3", "--trials", "4", "--format", "json"};
    EXPECT_EQ(run(scan).out, run(scan).out);
}

TEST(Cli, EveryToleranceAndSeedIsRecorded) {
    const Json sv = Json::parse(
        run({"scaled-vanishing", "-m", "1", "-p", "5", "--a", "1,i", "--format", "json", "--tol", "1e-5"}).out);
    EXPECT_EQ(sv.at("tolerances_and_seeds").at("tol"), 1e-5);
    EXPECT_EQ(sv.at("result").at("vanishing"), true);
    const Json scan = Json::parse(run({"real-scan", "-n", "1", "-d", "3", "--trials", "2", "--format", "json"}).out);
    EXPECT_TRUE(scan.at("tolerances_and_seeds").contains("seed"));
    EXPECT_TRUE(scan.at("tolerances_and_seeds").contains("imag_tol"));
    EXPECT_TRUE(scan.at("tolerances_and_seeds").contains("borderline_tol"));
    const Json ds = Json::parse(run({"delta", "-m", "1", "-p", "4", "--a", "1,1", "--format", "json"}).out);
    EXPECT_EQ(ds.at("tolerances_and_seeds").at("tol"), 1e-9);
}

TEST(Cli, TableCsv) {
    const Invocation r = run({"table", "-n", "2", "--d-min", "3", "--d-max", "6", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,d,general_bound,epsilon,ed_degree\n2,3,9,0,9\n2,4,16,0,16\n2,5,25,2,23\n2,6,36,6,30\n");
}

TEST(Cli, RealScanCsvAndBounds) {
    EXPECT_EQ(run({"real-scan", "-n", "1", "-d", "5", "--trials", "3", "--format", "csv"}).out, "count,frequency\n1,3\n");
    const Invocation b = run({"bounds", "-n", "1"});
    EXPECT_NE(b.out.find("fewnomial_bound: 995328"), std::string::npos);
}

TEST(Cli, QPolynomials) {
    EXPECT_EQ(run({"qpoly", "-m", "1", "-p", "2"}).out, "x0 - x1\n");
    const Json j = Json::parse(run({"qpoly", "-m", "2", "-p", "3", "--format", "json"}).out);
    EXPECT_EQ(polynomial_from_json(j.at("result").at("polynomial")), build_Q(2, 3));
    const Invocation e = run({"qeval", "-m", "1", "-p", "3", "--point", "1,1"});
    EXPECT_LT(std::abs(cli::parse_complex(e.out.substr(0, e.out.size() - 1)) - 2.0), 1e-12);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    const Invocation unknown = run({"frobnicate"});
    EXPECT_EQ(unknown.code, 1);
    EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({"eddeg", "projective", "-n", "2"}).code, 1);
    EXPECT_EQ(run({"eddeg", "projective", "-n", "2", "-d", "2"}).code, 1);
    EXPECT_EQ(run({"--format", "xml", "delta", "-m", "1", "-p", "4"}).code, 1);
    EXPECT_EQ(run({"delta", "-m", "1", "-p", "4", "--a", "1,0"}).code, 1);
    EXPECT_EQ(run({"delta", "-m", "1", "-p", "4", "--a", "1+i,2,3"}).code, 1);
    EXPECT_EQ(run({"qpoly", "-m", "1", "-p", "2", "--format", "csv"}).code, 1);
    EXPECT_EQ(run({"real-scan", "-n", "1", "-d", "4", "--trials", "1"}).code, 1);
}

TEST(Cli, ComputationalErrors) {
    const Invocation cap = run({"delta", "-m", "4", "-p", "10", "--work-cap", "100"});
    EXPECT_EQ(cap.code, 2);
    EXPECT_NE(cap.err.find("100"), std::string::npos);
    EXPECT_EQ(run({"verify", "-n", "3", "-d", "5", "--path-cap", "10"}).code, 2);
    EXPECT_EQ(run({"qpoly", "-m", "7", "-p", "2"}).code, 2);
    EXPECT_EQ(run({"qpoly", "-m", "4", "-p", "3"}).code, 2);
}

TEST(Cli, HelpAndVersion) {
    const Invocation h = run({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("eddeg"), std::string::npos);
    const Invocation v = run({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find(cli::kVersion), std::string::npos);
}
