#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using gpcert::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, GpPrintsBareRoot)
{
    const auto r = call({"gp", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3\n");
    const auto j = json::parse(call({"gp", "191", "--format", "json"}).out);
    EXPECT_EQ(j["g"], 19);
    EXPECT_EQ(j["p_minus_1"], json::parse("[[2,1],[5,1],[19,1]]"));
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(call({"gp", "8"}).code, 2);
    EXPECT_EQ(call({"gp", "7", "--bogus"}).code, 2);
    EXPECT_EQ(call({"--precision", "10", "gp", "7"}).code, 2);
    EXPECT_EQ(call({"--precision", "5000", "gp", "7"}).code, 2);
    EXPECT_EQ(call({"bound", "nonsense"}).code, 2);
    EXPECT_EQ(call({"certify", "--p", "1000000007", "--h", "177", "--H", "10000000"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, BoundThm1Threshold)
{
    const auto r = call({"bound", "thm1", "--p", "1e56", "--r", "2", "--omega", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["threshold"], true);
    EXPECT_LE(std::stod(j["H"]["lo"].get<std::string>()), 4.194304e27);
    EXPECT_GE(std::stod(j["H"]["hi"].get<std::string>()), 4.194304e27);
}

TEST(Cli, BoundCompareExitsZero)
{
    const auto r = call({"bound", "compare"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 9u);
    EXPECT_EQ(j["pass"], true);
}

TEST(Cli, CertifyKnownPrime)
{
    const auto r = call({"certify", "--p", "1000000007", "--r", "2", "--h", "177", "--H", "121591"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["verdict"], "certified");
    for (const char* key : {"p_spec", "r", "h", "H", "sieve", "lhs", "rhs", "verdict", "provenance"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(call({"certify", "--p", "1000000007", "--r", "2", "--h", "177", "--H", "60000"}).code, 1);
}

TEST(Cli, CasesReportFailureHonestly)
{
    const auto r = call({"verify", "cases", "--target", "cor2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("regime\tomega"), std::string::npos);
}

TEST(Cli, EnvironmentPrecision)
{
    ::setenv("GPCERT_PRECISION", "32", 1);
    EXPECT_EQ(call({"gp", "7"}).code, 2);
    ::setenv("GPCERT_PRECISION", "256", 1);
    EXPECT_EQ(call({"gp", "7"}).code, 0);
    ::unsetenv("GPCERT_PRECISION");
}

TEST(Cli, ByteIdenticalReruns)
{
    const std::vector<std::string> args{"scan", "--from", "100000000", "--to", "100200000", "--limit", "8",
                                        "--random", "4", "--seed", "5"};
    const auto a = call(args);
    const auto b = call(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}
