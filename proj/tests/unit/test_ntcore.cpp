#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "gpcert/errors.hpp"
#include "gpcert/ntcore.hpp"
#include "gpcert/prime_context.hpp"
#include "oracle_values.hpp"

using namespace gpcert;

namespace {

std::string describe(const nt::Factorization& f)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& pp : f.entries()) {
        os << (first ? "" : " ") << to_string(pp.prime) << "^" << pp.exponent;
        first = false;
    }
    return os.str();
}

} // namespace

TEST(Ntcore, LeastPrimitiveRootMatchesOracle)
{
    for (const auto& row : oracle::kLeastRoots) {
        EXPECT_EQ(nt::least_primitive_root(row.p), row.g) << "p = " << row.p;
    }
}

TEST(Ntcore, FactorizationMatchesOracle)
{
    for (const auto& row : oracle::kFactorizations) {
        const auto f = nt::factorize(parse_u128(row.n));
        EXPECT_EQ(describe(f), row.factors) << row.n;
        EXPECT_EQ(to_string(f.value()), row.n);
    }
}

TEST(Ntcore, PhiMoebiusMatchOracle)
{
    for (const auto& row : oracle::kPhiMu) {
        EXPECT_EQ(nt::euler_phi(row.n), row.phi) << row.n;
        EXPECT_EQ(nt::moebius(row.n), row.mu) << row.n;
    }
    EXPECT_EQ(nt::theta(12), Rational(1, 3));
    EXPECT_EQ(nt::theta(1), Rational(1));
}

TEST(Ntcore, Primorials)
{
    EXPECT_EQ(nt::primorial(17).str(), oracle::kPrimorial17);
    EXPECT_EQ(static_cast<int>(nt::primorial(201).str().size()), oracle::kPrimorial201Digits);
    EXPECT_EQ(static_cast<int>(nt::primorial(351).str().size()), oracle::kPrimorial351Digits);
    EXPECT_EQ(nt::primorial(0), 1);
    for (unsigned k = 0; k < 300; ++k) {
        const BigInt ratio = nt::primorial(k + 1) / nt::primorial(k);
        EXPECT_EQ(ratio, nt::nth_prime(k + 1));
        EXPECT_EQ(ratio * nt::primorial(k), nt::primorial(k + 1));
    }
}

TEST(Ntcore, PrimalityEdgeCases)
{
    EXPECT_FALSE(nt::is_prime(0));
    EXPECT_FALSE(nt::is_prime(1));
    EXPECT_TRUE(nt::is_prime(2));
    EXPECT_FALSE(nt::is_prime(561));
    EXPECT_TRUE(nt::is_prime((u128(1) << 61) - 1));
    EXPECT_FALSE(nt::is_prime(3825123056546413051ULL));
    EXPECT_FALSE(nt::is_prime(parse_u128("318665857834031151167461")));
    EXPECT_TRUE(nt::is_prime(parse_u128("1000000000000000000000007")));
    EXPECT_EQ(to_string(nt::kPrimalityLimit), "3317044064679887385961981");
    EXPECT_THROW(nt::is_prime(nt::kPrimalityLimit), RangeError);
}

TEST(Ntcore, OrderErrors)
{
    EXPECT_THROW(nt::multiplicative_order(13, 13), DomainError);
    EXPECT_EQ(nt::multiplicative_order(2, 13), 12u);
    EXPECT_EQ(nt::multiplicative_order(4, 13), 6u);
}

TEST(Ntcore, BudgetExceeded)
{
    nt::SearchBudget tiny;
    tiny.candidate_limit = 4;
    EXPECT_THROW(nt::least_primitive_root(191, tiny), BudgetExceeded);
}

TEST(NtcoreProperty, DivisorSumsUpTo1e5)
{
    constexpr u64 kN = 100000;
    const auto phi = nt::phi_table(kN);
    const auto mu = nt::moebius_table(kN);
    std::vector<u64> phi_sum(kN + 1, 0);
    std::vector<long> mu_sum(kN + 1, 0);
    for (u64 d = 1; d <= kN; ++d) {
        for (u64 m = d; m <= kN; m += d) {
            phi_sum[m] += phi[d];
            mu_sum[m] += mu[d];
        }
    }
    for (u64 n = 1; n <= kN; ++n) {
        ASSERT_EQ(phi_sum[n], n) << n;
        ASSERT_EQ(mu_sum[n], n == 1 ? 1 : 0) << n;
    }
    for (u64 n : {1ULL, 2ULL, 97ULL, 360ULL, 99991ULL, 100000ULL}) {
        EXPECT_EQ(phi[n], nt::euler_phi(n));
        EXPECT_EQ(mu[n], nt::moebius(n));
    }
}

TEST(NtcoreProperty, LeastRootIsLeastUpTo1e5)
{
    for (u64 p : nt::primes_up_to(100000)) {
        if (p == 2) {
            continue;
        }
        const auto pm1 = nt::factorize(p - 1);
        const u64 g = nt::least_primitive_root(p, pm1);
        ASSERT_EQ(nt::multiplicative_order(g, p, pm1), p - 1) << p;
        for (u64 c = 2; c < g; ++c) {
            ASSERT_LT(nt::multiplicative_order(c, p, pm1), p - 1) << p << " " << c;
        }
    }
}

TEST(NtcoreProperty, FactorizeInvertsMultiply)
{
    std::mt19937_64 rng(7);
    const auto small = nt::primes_up_to(1000);
    for (int trial = 0; trial < 500; ++trial) {
        u128 n = 1;
        std::map<u64, unsigned> expected;
        const int k = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < k; ++i) {
            u64 q = small[rng() % small.size()];
            if (rng() % 4 == 0) {
                do {
                    q = (rng() >> 34) | 1;
                } while (!nt::is_prime(q));
            }
            if ((n * q) >> 80 != 0) {
                break;
            }
            n *= q;
            ++expected[q];
        }
        const auto f = nt::factorize(n);
        ASSERT_EQ(f.value(), n);
        ASSERT_EQ(f.omega(), expected.size());
        for (const auto& pp : f.entries()) {
            ASSERT_EQ(pp.exponent, expected[static_cast<u64>(pp.prime)]);
        }
    }
}

TEST(NtcoreProperty, PrimeContextTables)
{
    const nt::PrimeContext ctx(7489);
    EXPECT_EQ(ctx.generator(), 7u);
    EXPECT_EQ(ctx.omega(), 3u);
    for (u64 n = 1; n < ctx.p(); ++n) {
        ASSERT_EQ(ctx.power(ctx.dlog(n)), n);
    }
    EXPECT_EQ(ctx.pm1_divisors().size(), nt::factorize(7488).divisors().size());
}
