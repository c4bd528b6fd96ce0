#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "superdenom/io.hpp"

using namespace superdenom;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run cli(const std::string& args)
{
    const std::string cmd = std::string(SUPERDENOM_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

} // namespace

TEST(Cli, VerifyDenomJson)
{
    const auto r = cli("verify-denom --order 24 --format json");
    ASSERT_EQ(r.status, 0);
    const auto j = ojson::parse(r.out);
    EXPECT_EQ(j["matched"], true);
    EXPECT_EQ(j["cutoff"], 24);
    EXPECT_TRUE(j["first_diffs"].empty());
    EXPECT_FALSE(j.contains("millis"));
}

TEST(Cli, JacobiCsv)
{
    const auto r = cli("jacobi --max-n 64 --format csv");
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 66u);
    EXPECT_EQ(ls[0], "n,r8_enum,r8_theta,r8_formula,match");
    EXPECT_EQ(ls[2], "1,16,16,16,true");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        EXPECT_TRUE(ls[i].ends_with(",true")) << ls[i];
    }
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(cli("verify-denom --order -1").status, 2);
    EXPECT_EQ(cli("verify-denom --order 300").status, 2);
    EXPECT_EQ(cli("no-such-command").status, 2);
    EXPECT_EQ(cli("analytic --q 1.5").status, 2);
    EXPECT_EQ(cli("analytic --tol 0").status, 2);
    EXPECT_EQ(cli("dump --expr nonsense").status, 2);
    EXPECT_EQ(cli("verify-denom --format yaml").status, 2);
    EXPECT_EQ(cli("").status, 2);
}

TEST(Cli, HelpExitsZero)
{
    const auto r = cli("--help");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("verify-denom"), std::string::npos);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns)
{
    for (const char* args : {"verify-sl21 --order 10 --format json", "dump --expr rhs --order 6 --format csv",
                             "analytic --format json"}) {
        const auto a = cli(args);
        const auto b = cli(args);
        EXPECT_EQ(a.status, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, DumpJsonRoundTrips)
{
    const auto r = cli("dump --expr lhs --order 5 --format json");
    ASSERT_EQ(r.status, 0);
    const auto s = deserialize(r.out);
    EXPECT_EQ(s.cutoff(), 5);
    EXPECT_EQ(s.coeff(ExpVec{0, 0, 0, 0}), 1);
    EXPECT_EQ(s.coeff(ExpVec{1, -1, -1, -1}), -1);
}

TEST(Cli, DumpSidesAgree)
{
    const auto lhs = cli("dump --expr lhs --order 9 --format json");
    const auto rhs = cli("dump --expr rhs --order 9 --format json");
    const auto roots = cli("dump --expr rhat-roots --order 9 --format json");
    EXPECT_EQ(lhs.out, rhs.out);
    EXPECT_EQ(lhs.out, roots.out);
}

TEST(Cli, EveryVerifierPassesAtSmallOrder)
{
    for (const char* sub : {"verify-denom", "verify-prefactor", "verify-finite", "verify-sl21",
                            "verify-talpha-tgamma", "ratio-support"}) {
        const auto r = cli(std::string(sub) + " --order 6");
        EXPECT_EQ(r.status, 0) << sub;
        EXPECT_NE(r.out.find("matched    true"), std::string::npos) << sub;
    }
}

TEST(Cli, TimingFlagAddsMillis)
{
    const auto r = cli("verify-finite --order 4 --format json --timing");
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(ojson::parse(r.out).contains("millis"));
}

TEST(Cli, OutputFile)
{
    const std::string path = ::testing::TempDir() + "superdenom_cli_out.json";
    const auto r = cli("verify-sl21 --order 4 --format json --output " + path);
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    FILE* f = std::fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    std::fclose(f);
    std::remove(path.c_str());
}
