#include <gtest/gtest.h>

#include "gpcert/case_engine.hpp"
#include "oracle_values.hpp"

using namespace gpcert;
using namespace gpcert::certify;

namespace {

const CaseRow* find_row(const CaseReport& rep, const std::string& regime_prefix, unsigned omega)
{
    for (const auto& row : rep.rows) {
        if (row.omega == omega && row.regime.rfind(regime_prefix, 0) == 0) {
            return &row;
        }
    }
    return nullptr;
}

const CaseRow* find_note(const CaseReport& rep, const std::string& note)
{
    for (const auto& row : rep.rows) {
        if (row.note == note) {
            return &row;
        }
    }
    return nullptr;
}

} // namespace

TEST(CaseEngine, DeltaPolicies)
{
    EXPECT_EQ(delta_lower_bound(17, 0, DeltaPolicy::tight), 1);
    EXPECT_EQ(delta_lower_bound(17, 0, DeltaPolicy::literal), 1);
    EXPECT_EQ(delta_lower_bound(17, 14, DeltaPolicy::tight), Rational(oracle::kDeltaTight_17_14));
    EXPECT_EQ(delta_lower_bound(12, 9, DeltaPolicy::literal), Rational(oracle::kDeltaLiteral_12_9));
    EXPECT_LT(delta_lower_bound(12, 9, DeltaPolicy::literal), delta_lower_bound(12, 9, DeltaPolicy::tight));
    EXPECT_LE(delta_lower_bound(29, 26, DeltaPolicy::literal), 0);
}

TEST(CaseEngine, Cor2KnownRows)
{
    const auto rep = corollary_case_engine(CaseTarget::cor2);
    const auto* w8 = find_row(rep, "s=0", 8);
    ASSERT_NE(w8, nullptr);
    EXPECT_TRUE(w8->lhs.contains(Rational(BigInt(oracle::kThirteenTimes2Pow32))));
    EXPECT_TRUE(w8->pass);

    const auto* w17 = find_row(rep, "s=omega-3", 17);
    ASSERT_NE(w17, nullptr);
    EXPECT_EQ(w17->s, 14u);
    EXPECT_NEAR(w17->lhs.mid_double(), oracle::kCor2Omega17Lhs, 1e-9 * oracle::kCor2Omega17Lhs);
    EXPECT_FALSE(w17->pass);

    const auto* w16 = find_row(rep, "s=omega-3", 16);
    ASSERT_NE(w16, nullptr);
    EXPECT_TRUE(w16->pass);

    const auto* constant = find_note(rep, "reduced constant <= 13");
    ASSERT_NE(constant, nullptr);
    EXPECT_TRUE(constant->pass);
    EXPECT_NEAR(constant->lhs.mid_double(), oracle::kCor2Constant, 1e-9 * oracle::kCor2Constant);

    const auto* x = find_note(rep, "X >= 1e7");
    ASSERT_NE(x, nullptr);
    EXPECT_NEAR(x->rhs.mid_double(), oracle::kCor2X, 1e-9 * oracle::kCor2X);
    EXPECT_FALSE(rep.pass);
}

TEST(CaseEngine, LonelyKnownRows)
{
    const auto rep = corollary_case_engine(CaseTarget::lonely);
    const auto* constant = find_note(rep, "reduced constant <= 7");
    ASSERT_NE(constant, nullptr);
    EXPECT_FALSE(constant->pass);
    EXPECT_NEAR(constant->lhs.mid_double(), oracle::kLonelyConstant, 1e-9 * oracle::kLonelyConstant);
    unsigned omega_rows = 0;
    for (const auto& row : rep.rows) {
        if (row.omega >= 1 && row.omega <= 350 && row.regime != "coverage" && row.regime != "robin") {
            EXPECT_TRUE(row.pass) << row.omega;
            ++omega_rows;
        }
    }
    EXPECT_EQ(omega_rows, 350u);
    EXPECT_FALSE(rep.pass);
}

TEST(CaseEngine, DerivedConstantReplacesPrinted)
{
    CaseOptions opt;
    opt.derived_constant = true;
    const auto rep = corollary_case_engine(CaseTarget::lonely, opt);
    EXPECT_NEAR(rep.constant.mid_double(), oracle::kLonelyConstant, 1e-9 * oracle::kLonelyConstant);
    EXPECT_EQ(find_note(rep, "reduced constant <= 7"), nullptr);
}

TEST(CaseEngine, LiteralDeltaPolicyFailsEarlier)
{
    CaseOptions opt;
    opt.delta = DeltaPolicy::literal;
    const auto rep = corollary_case_engine(CaseTarget::cor2, opt);
    const auto* w13 = find_row(rep, "s=omega-3", 13);
    ASSERT_NE(w13, nullptr);
    EXPECT_FALSE(w13->pass);
    const auto tight = corollary_case_engine(CaseTarget::cor2);
    EXPECT_TRUE(find_row(tight, "s=omega-3", 13)->pass);
}

TEST(CaseEngine, TsvLayout)
{
    const auto tsv = to_tsv(corollary_case_engine(CaseTarget::cor2));
    EXPECT_NE(tsv.find("regime\tomega\ts\tdelta_lo\tlhs_hi\trhs_lo\tmargin\tverdict"), std::string::npos);
    EXPECT_NE(tsv.find("# overall\tFAIL"), std::string::npos);
}
