#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include "cli.hpp"

using namespace sigmalcd;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(SIGMALCD_SAMPLES) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (l == line) return true;
    return false;
}

std::string strip_elapsed(const std::string& s) { return std::regex_replace(s, std::regex("elapsed=[0-9.]+"), ""); }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("sigmalcd_test_" + name)).string();
}

}  // namespace

TEST(Cli, HammingNotEuclideanLcd) {
    const auto r = run({"lcd", "check", "--code", sample("ham74.code"), "--sigma", "id", "--format", "machine"});
    EXPECT_EQ(r.code, 1) << r.err;
    EXPECT_TRUE(has_line(r.out, "verdict=false"));
    EXPECT_TRUE(has_line(r.out, "hull_dim=3"));
    EXPECT_TRUE(has_line(r.out, "verification=agree"));
    EXPECT_NE(r.out.find("elapsed="), std::string::npos);
}

TEST(Cli, SigmaFileAndTests) {
    auto r = run({"lcd", "check", "--code", sample("gf5.code"), "--sigma", sample("gf5.sigma"), "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "verdict=true"));
    r = run({"--format", "machine", "lcd", "check", "--code", sample("gf5.code"), "--test", "sd"});
    EXPECT_EQ(r.code, 0) << r.err;
    r = run({"lcd", "check", "--code", sample("ham74.code"), "--sigma", "reversal", "--test", "so"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, MachineOutputStable) {
    const std::vector<std::string> args{"lcp", "build", sample("ham74.code"), sample("ham74.code"), "--format", "machine"};
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(strip_elapsed(a.out), strip_elapsed(b.out));
    EXPECT_TRUE(has_line(a.out, "n=8"));
    EXPECT_TRUE(has_line(a.out, "oracle_intersection_dim=0"));
}

TEST(Cli, LcdMakeWritesFiles) {
    const std::string oc = temp_path("out.code"), os = temp_path("out.sigma");
    const auto r = run({"lcd", "make", "--code", sample("even4.code"), "--out-code", oc, "--out-sigma", os});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto c = run({"lcd", "check", "--code", oc, "--sigma", os, "--format", "machine"});
    EXPECT_EQ(c.code, 0) << c.err;
    EXPECT_TRUE(has_line(c.out, "n=5"));
    std::filesystem::remove(oc);
    std::filesystem::remove(os);
}

TEST(Cli, Normalize) {
    const auto r = run({"lcd", "normalize", "--code", sample("ham74.code"), "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "h=3"));
}

TEST(Cli, Cosets) {
    const auto r = run({"gqc", "cosets", "2", "7", "--format", "machine"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "cosets=3"));
    EXPECT_TRUE(has_line(r.out, "coset_0=0"));
    EXPECT_TRUE(has_line(r.out, "coset_1=1 2 4"));
    EXPECT_TRUE(has_line(r.out, "coset_3=3 6 5"));
    EXPECT_EQ(run({"gqc", "cosets", "2", "6"}).code, 2);
}

TEST(Cli, GammaAndConstituents) {
    auto r = run({"gqc", "gamma", "2", "5", "--format", "machine"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "gamma0_minus=1"));
    r = run({"gqc", "constituents", sample("qr7.gqc"), "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "verification=agree"));
}

TEST(Cli, GqcChecks) {
    auto r = run({"gqc", "check", sample("qr7.gqc"), "--a", "-1", "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "verification=agree"));
    r = run({"gqc", "onegen", sample("qr7.gqc"), "--a", "-1", "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "lcd_eval=true"));
    EXPECT_TRUE(has_line(r.out, "lcd_gcd=true"));
    EXPECT_EQ(run({"gqc", "check", sample("qr7.gqc"), "--a", "7"}).code, 2);
    r = run({"gqc", "product", sample("product.spec"), "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "verification=agree"));
}

TEST(Cli, Abelian) {
    auto r = run({"abelian", "check", "--group", "23", "--code", sample("golay23.code"), "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    r = run({"abelian", "idempotent", "--group", "23", "--code", sample("golay23.code")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(run({"abelian", "check", "--group", "7", "--code", sample("even4.code")}).code, 2);
    EXPECT_EQ(run({"abelian", "check", "--group", "4", "--code", sample("even4.code")}).code, 2);
}

TEST(Cli, Oracle) {
    auto r = run({"oracle", "mindist", sample("golay23.code"), "--jobs", "2", "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "d=7"));
    r = run({"oracle", "intersect", sample("ham74.code"), sample("ham74.code"), "--format", "machine"});
    EXPECT_TRUE(has_line(r.out, "dim=4"));
    r = run({"oracle", "search-sigma", sample("even4.code"), "--family", "cyclic-pi2"});
    EXPECT_EQ(r.code, 1);
    r = run({"oracle", "search-sigma", sample("gf5.code"), "--family", "diagonal-lambda"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(run({"oracle", "search-sigma", sample("gf5.code"), "--family", "nope"}).code, 2);
    EXPECT_EQ(run({"oracle", "mindist", sample("golay23.code"), "--budget", "100"}).code, 2);
}

TEST(Cli, Repro) {
    auto r = run({"repro", "golay23", "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "n=23"));
    EXPECT_TRUE(has_line(r.out, "k=12"));
    EXPECT_TRUE(has_line(r.out, "d=7"));
    EXPECT_TRUE(has_line(r.out, "euclidean_hull_dim=11"));
    r = run({"repro", "qr-idempotent-7", "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "disjoint_support_lcd=true"));
    r = run({"repro", "theorem1-binary", "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "code_rows=0 1 1"));
    r = run({"repro", "maximal-qc-count", "--format", "machine"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "distinct_codes=8"));
    EXPECT_EQ(run({"repro", "nonsense"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"lcd", "check"}).code, 2);
    EXPECT_EQ(run({"lcd", "check", "--code", "/nonexistent/file"}).code, 2);
    EXPECT_EQ(run({"lcd", "check", "--code", sample("ham74.code"), "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, HumanFormat) {
    const auto r = run({"lcd", "check", "--code", sample("ham74.code")});
    EXPECT_NE(r.out.find("lcd check\n"), std::string::npos);
    EXPECT_NE(r.out.find("verification"), std::string::npos);
    EXPECT_NE(r.out.find(" s\n"), std::string::npos);
}
