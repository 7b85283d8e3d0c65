#include <gtest/gtest.h>

#include "gpcert/errors.hpp"
#include "gpcert/win_chain.hpp"
#include "oracle_values.hpp"

using namespace gpcert;
using namespace gpcert::certify;

namespace {

const BigInt kP0 = boost::multiprecision::pow(BigInt(10), 15);

const ChainCheck* find(const WinChainReport& rep, const std::string& name)
{
    for (const auto& c : rep.checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

} // namespace

TEST(WinChain, ConstantsAtRTwo)
{
    const auto rep = theorem_win_derive(kP0, 2, 2);
    EXPECT_TRUE(rep.pass) << rep.first_failure;
    EXPECT_NEAR(rep.c_h.mid_double(), oracle::kWinCh_r2, 1e-12);
    const auto* twelve = find(rep, "chain constant < 4");
    ASSERT_NE(twelve, nullptr);
    EXPECT_NEAR(twelve->lhs.mid_double(), oracle::kTwelve_r2, 1e-9);
    EXPECT_TRUE(twelve->pass);
    const auto* w = find(rep, "W <= r(2r-1)/(r-1)");
    ASSERT_NE(w, nullptr);
    EXPECT_TRUE(w->lhs.contains(Rational(6)));

    const auto sieved = theorem_win2_derive(kP0, 2);
    EXPECT_TRUE(sieved.pass) << sieved.first_failure;
    EXPECT_NEAR(find(sieved, "chain constant < 4")->lhs.mid_double(), oracle::kTwelveSieved_r2, 1e-9);
    EXPECT_NE(find(sieved, "A(X)^2 >= 0.992"), nullptr);
}

TEST(WinChain, FermatStart)
{
    const auto rep = theorem_win_derive(kP0, 2, 1);
    EXPECT_TRUE(rep.fermat);
    EXPECT_EQ(rep.P, (BigInt(1) << 64) + 1);
    EXPECT_TRUE(rep.pass) << rep.first_failure;
}

TEST(WinChain, FailureBranchIsInformational)
{
    const auto rep = theorem_win_derive(kP0, 2, 2);
    const auto* fb = find(rep, "failure branch: sqrt(r/e) kappa^(1/(2r)) >= 1");
    ASSERT_NE(fb, nullptr);
    EXPECT_TRUE(fb->informational);
    EXPECT_FALSE(fb->pass);
}

TEST(WinChain, ArgumentErrors)
{
    EXPECT_THROW(theorem_win_derive(kP0, 1, 2), ParameterError);
    EXPECT_THROW(theorem_win_derive(kP0, 2, 0), ParameterError);
    EXPECT_THROW(theorem_win_derive(BigInt(1000000), 2, 2), ParameterError);
    EXPECT_THROW(theorem_win2_derive(kP0, 2, Rational(3, 2)), ConfigError);
}

TEST(WinChainProperty, SweepSmallR)
{
    const auto sweep = win_chain_sweep(kP0, 2, 12);
    EXPECT_EQ(sweep.reports.size(), 33u);
    EXPECT_TRUE(sweep.pass);
    for (const auto& rep : sweep.reports) {
        EXPECT_TRUE(rep.pass) << rep.variant << " r=" << rep.r << " omega=" << rep.omega << " "
                              << rep.first_failure;
    }
}
