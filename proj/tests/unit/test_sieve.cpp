#include <gtest/gtest.h>

#include <random>

#include "gpcert/case_engine.hpp"
#include "gpcert/errors.hpp"
#include "gpcert/sieve.hpp"
#include "oracle_values.hpp"

using namespace gpcert;
using namespace gpcert::sieve;

TEST(Sieve, FactorMatchesOracle)
{
    const auto delta = certify::delta_lower_bound(12, 9, certify::DeltaPolicy::literal);
    EXPECT_EQ(delta, Rational(oracle::kDeltaLiteral_12_9));
    EXPECT_EQ(sieve_factor(12, 9, delta), Rational(oracle::kFactor_12_9));
    EXPECT_EQ(sieve_factor(10, 0, Rational(1)), 1024);
    EXPECT_EQ(sieve_factor(10, 1, Rational(1, 2)), 1024);
}

TEST(Sieve, EFreeExamples)
{
    const nt::PrimeContext ctx(13);
    EXPECT_EQ(e_free(ctx, 2, 2), 1);
    EXPECT_EQ(e_free(ctx, 2, 4), 0);
    EXPECT_EQ(e_free(ctx, 12, 2), 1);
    EXPECT_EQ(e_free(ctx, 12, 1), 0);
    EXPECT_LT(fe_character_identity_check(ctx, 2, 2), 1e-6);
    EXPECT_LT(fe_character_identity_check(ctx, 12, 2), 1e-6);
    EXPECT_LT(fe_character_identity_check(ctx, 12, 1), 1e-6);
}

TEST(Sieve, ConfigValidation)
{
    const nt::PrimeContext ctx(61);
    EXPECT_THROW(SieveConfig(ctx, 15), ConfigError);
    EXPECT_THROW(SieveConfig(ctx, 8), ConfigError);
    const SieveConfig c(ctx, 4);
    EXPECT_EQ(c.excluded(), (std::vector<u64>{3, 5}));
    EXPECT_EQ(c.delta(), Rational(7, 15));
    EXPECT_TRUE(c.admissible());
    const auto largest = SieveConfig::excluding_largest(ctx, 1);
    EXPECT_EQ(largest.excluded(), (std::vector<u64>{5}));
    EXPECT_EQ(largest.delta(), Rational(4, 5));
}

TEST(Sieve, LowerBoundRandomPoints)
{
    const nt::PrimeContext ctx(61);
    const SieveConfig c(ctx, 4);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        EXPECT_GE(sieve_lower_bound_check(c, 1 + rng() % 60), -1e-6);
    }
}

TEST(Sieve, IntermediateIdentities)
{
    const nt::PrimeContext ctx(421);
    const chars::OrderClassSums sums(ctx);
    for (u64 e : even_divisors(ctx)) {
        const SieveConfig c(ctx, e);
        if (!c.admissible()) {
            continue;
        }
        for (u64 n = 1; n < 421; n += 13) {
            const auto rep = intermediate_identities_check(c, sums, n);
            EXPECT_TRUE(rep.combinatorial_ok) << e << " " << n;
            EXPECT_TRUE(rep.expansion_ok) << e << " " << n;
        }
    }
}

TEST(SieveProperty, FullRootsAreIndicator)
{
    for (u64 p : {13ULL, 61ULL, 421ULL, 1009ULL}) {
        const nt::PrimeContext ctx(p);
        for (u64 n = 1; n < p; ++n) {
            ASSERT_EQ(e_free(ctx, p - 1, n), nt::is_primitive_root(n, p, ctx.pm1_factors()) ? 1 : 0);
        }
    }
}

TEST(SieveProperty, EFreeMonotoneInDivisibility)
{
    for (u64 p : {61ULL, 421ULL, 2521ULL}) {
        const nt::PrimeContext ctx(p);
        const auto evens = even_divisors(ctx);
        for (u64 e : evens) {
            for (u64 e2 : evens) {
                if (e2 % e != 0) {
                    continue;
                }
                for (u64 n = 1; n < p; n += 5) {
                    ASSERT_LE(e_free(ctx, e2, n), e_free(ctx, e, n)) << p << " " << e << " " << e2 << " " << n;
                }
            }
        }
    }
}

TEST(SieveProperty, SmallSweepClean)
{
    const auto s = sieve_sweep(200);
    EXPECT_EQ(s.violations, 0u);
    EXPECT_LT(s.worst_identity_slack, 1e-6);
    EXPECT_GE(s.worst_bound_slack, -1e-6);
}

TEST(SieveProperty, FactorStepsMatchOracle)
{
    // Dropping the largest remaining prime does not always lower F; the count is frozen.
    int steps = 0;
    int raised = 0;
    for (u64 p : nt::primes_up_to(20000)) {
        if (p < 3) {
            continue;
        }
        const nt::PrimeContext ctx(p, 0);
        std::optional<Rational> prev;
        for (unsigned s = 0; s < ctx.omega(); ++s) {
            const auto c = SieveConfig::excluding_largest(ctx, s);
            if (!c.admissible()) {
                break;
            }
            const Rational f = c.factor();
            const Rational expected = s == 0 ? Rational(BigInt(1) << ctx.omega())
                                             : (2 + Rational(s - 1) / c.delta()) * Rational(BigInt(1) << (ctx.omega() - s));
            ASSERT_EQ(f, expected);
            if (prev) {
                ++steps;
                raised += f > *prev ? 1 : 0;
            }
            prev = f;
        }
    }
    EXPECT_EQ(steps, oracle::kFactorSteps);
    EXPECT_EQ(raised, oracle::kFactorStepsRaised);
}
