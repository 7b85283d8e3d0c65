#include <gtest/gtest.h>

#include <cmath>

#include "gpcert/certify.hpp"
#include "gpcert/errors.hpp"
#include "gpcert/optimize.hpp"
#include "oracle_values.hpp"

using namespace gpcert;
using namespace gpcert::certify;

namespace {

BigInt ten_pow(unsigned k)
{
    return boost::multiprecision::pow(BigInt(10), k);
}

sieve::SieveSummary unsieved(unsigned omega)
{
    sieve::SieveSummary s;
    s.e_desc = "p-1";
    s.omega = omega;
    return s;
}

} // namespace

TEST(Certify, Theorem1AtThreshold)
{
    const auto b = bound_theorem1(ten_pow(56), 2, 10);
    EXPECT_TRUE(b.contains(Rational(BigInt(4) * (BigInt(1) << 20) * ten_pow(21))));
    EXPECT_NEAR(b.mid_double(), oracle::kThm1_1e56_r2_w10, 1e-12 * oracle::kThm1_1e56_r2_w10);
}

TEST(Certify, SievedWithoutExclusionsIsTheorem1)
{
    for (unsigned r : {2u, 3u, 7u}) {
        for (unsigned omega : {1u, 5u, 12u}) {
            const auto a = bound_theorem1(ten_pow(30), r, omega);
            const auto b = bound_sieved(ten_pow(30), r, omega, 0, Rational(1));
            EXPECT_EQ(a.lo_string(30), b.lo_string(30));
            EXPECT_EQ(a.hi_string(30), b.hi_string(30));
        }
    }
}

TEST(Certify, BurgessTableSelfConsistent)
{
    // Each C(r)^r entry agrees with C(r) up to the 4-decimal rounding of C(r).
    const auto& table = burgess_table();
    ASSERT_EQ(table.size(), 9u);
    EXPECT_STREQ(table.front().c_pow_r, "12.8530");
    EXPECT_STREQ(table.back().c_pow_r, "75.5139");
    for (const auto& row : table) {
        const double c = std::stod(row.c);
        const double cr = std::stod(row.c_pow_r);
        const double tol = row.r * 5e-5 / c * cr + 5e-5;
        EXPECT_NEAR(std::pow(c, row.r), cr, tol) << row.r;
    }
    EXPECT_THROW(burgess_comparison_bound(ten_pow(56), 11, 1), RangeError);
}

TEST(Certify, BurgessRatioMatchesOracle)
{
    const auto thm1 = bound_theorem1(ten_pow(56), 2, 10);
    const auto eq2 = burgess_comparison_bound(ten_pow(56), 2, 10);
    EXPECT_NEAR((thm1 / eq2).mid_double(), oracle::kBurgessRatio_1e56_r2, 1e-12);
    EXPECT_EQ(cert::less(thm1, eq2), cert::Tribool::yes);
}

TEST(Certify, PreconditionsInExactArithmetic)
{
    const auto spec = PSpec::exact(BigInt(1000000007), 2);
    EXPECT_THROW(theorem3_certify(spec, unsieved(2), 2, 177, Rational(353)), ParameterError);
    EXPECT_THROW(theorem3_certify(spec, unsieved(2), 2, 1, Rational(100)), ParameterError);
    EXPECT_THROW(theorem3_certify(spec, unsieved(2), 2, 177, Rational(10000000)), ParameterError);
    auto bad = unsieved(2);
    bad.delta = 0;
    EXPECT_THROW(theorem3_certify(spec, bad, 2, 177, Rational(121591)), ConfigError);
    EXPECT_THROW(theorem3_certify(spec, unsieved(3), 2, 177, Rational(121591)), ConfigError);
    EXPECT_THROW(theorem3_certify(PSpec::threshold(ten_pow(20), 2), unsieved(2), 2, 177, Rational(121591)),
                 ParameterError);
}

TEST(Certify, KnownPrimeVerdicts)
{
    const auto spec = PSpec::exact(BigInt(1000000007), 2);
    const auto ok = theorem3_certify(spec, unsieved(2), 2, 177, Rational(121591));
    EXPECT_EQ(ok.verdict, Verdict::certified);
    EXPECT_EQ(cert::less(ok.lhs, ok.rhs), cert::Tribool::yes);
    const auto no = theorem3_certify(spec, unsieved(2), 2, 177, Rational(60000));
    EXPECT_EQ(no.verdict, Verdict::failed);
}

TEST(Certify, PowerShapeNeedsThreshold)
{
    PowerShape shape;
    EXPECT_THROW(theorem3_certify(PSpec::exact(BigInt(1000000007), 2), unsieved(2), shape), ParameterError);
}

TEST(CertifyProperty, LhsNondecreasingAlongPrimeLadders)
{
    const auto safe = soundness_sample(100000000, 25, 0, 0, 0, 0);
    ASSERT_EQ(safe.size(), 25u);
    for (unsigned r : {2u, 3u}) {
        for (u64 h : {50ULL, 300ULL}) {
            const Rational H(BigInt(h * 40));
            std::optional<Certificate> prev;
            for (u64 p : safe) {
                const auto c = theorem3_certify(PSpec::exact(BigInt(p), 2), unsieved(2), r, h, H);
                if (prev) {
                    ASSERT_GE(c.lhs.lo_double(), prev->lhs.lo_double()) << p;
                    ASSERT_GE(c.lhs.hi_double(), prev->lhs.hi_double()) << p;
                }
                prev = c;
            }
        }
    }
}

TEST(CertifyProperty, BoundsGrowWithP)
{
    for (unsigned r = 2; r <= 10; ++r) {
        CertifiedReal prev = bound_theorem1(ten_pow(20), r, 4);
        for (unsigned k = 21; k <= 80; k += 3) {
            const auto cur = bound_theorem1(ten_pow(k), r, 4);
            ASSERT_EQ(cert::less(prev, cur), cert::Tribool::yes);
            prev = cur;
        }
    }
}
