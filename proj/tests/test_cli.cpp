// test_cli.cpp

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(EAB_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(EAB_TEST_DATA) + "/" + name; }

long long lines(const std::string& s) {
    long long n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ClassifyHyperbolic) {
    const auto r = run("classify --mu-table " + data("hyperbolic.json"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "V_{0,1;0,0}, defe=+2")) << r.out;
    EXPECT_TRUE(has(r.out, "kernel_dim: 0")) << r.out;
}

TEST(Cli, ClassifyRankThreeOddIsInvalid) {
    const auto r = run("classify --mu-table " + data("rank3_odd.json"));
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_TRUE(has(r.out, "verdict: invalid")) << r.out;
    EXPECT_TRUE(has(r.out, "parity")) << r.out;
}

TEST(Cli, ClassifyGammaZeroGenerators) {
    const auto r = run("classify --generators " + data("gamma0.json"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "V_{0,1;0,0}")) << r.out;
    EXPECT_TRUE(has(r.out, "m(g0,g1) = -1")) << r.out;
}

TEST(Cli, NonAbelianGeneratorsAreInvalid) {
    const auto r = run("classify --generators " + data("nonabelian.json"));
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_TRUE(has(r.out, "verdict: invalid")) << r.out;
}

TEST(Cli, MalformedInputReportsPosition) {
    const auto r = run("classify --mu-table " + data("malformed.json"));
    EXPECT_EQ(r.code, 2) << r.out;
    EXPECT_TRUE(has(r.out, "line 3, column")) << r.out;
    const auto len = run("classify --mu-table " + data("bad_length.json"));
    EXPECT_EQ(len.code, 2) << len.out;
    EXPECT_EQ(run("classify --mu-table /nonexistent.json").code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("classify --bogus 1").code, 2);
    EXPECT_EQ(run("catalog --type H4").code, 2);
    EXPECT_EQ(run("classify --mu-table a --generators b").code, 2);
    EXPECT_EQ(run("canonical --eps 1 --delta 1").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Canonical) {
    const auto r = run("canonical --r 0 --s 1");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "V_{0,1;0,0}, defe=+2")) << r.out;
    EXPECT_TRUE(has(r.out, "\"mu\":[0,0,0,1]")) << r.out;
}

TEST(Cli, Aut) {
    const auto r = run("aut --s 1 --delta 0");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "order_formula: 2")) << r.out;
    EXPECT_TRUE(has(r.out, "match: yes")) << r.out;
    const auto l = run("aut --mu-table " + data("hyperbolic.json") + " --list");
    EXPECT_EQ(l.code, 0) << l.out;
    EXPECT_TRUE(has(l.out, "order_enumerated: 2")) << l.out;
}

TEST(Cli, CatalogRowCounts) {
    const auto f4 = run("catalog --type F4 --format csv");
    EXPECT_EQ(f4.code, 0);
    EXPECT_EQ(lines(f4.out), 13);
    const auto all = run("catalog --type all");
    EXPECT_EQ(lines(all.out), 212);
    const auto g2 = run("catalog --type G2 --format text");
    EXPECT_EQ(g2.code, 0);
    EXPECT_EQ(g2.out.front(), '[');
}

TEST(Cli, OutputIsDeterministic) {
    EXPECT_EQ(run("catalog --type all --format text").out, run("catalog --type all --format text").out);
    EXPECT_EQ(run("classify --generators " + data("gamma0.json")).out,
              run("classify --generators " + data("gamma0.json")).out);
}

TEST(Cli, VerifyCountsSuite) {
    const auto r = run("verify --suite counts");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "PASS")) << r.out;
    EXPECT_EQ(run("verify --suite nope").code, 2);
}
