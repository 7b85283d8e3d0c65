#pragma once

// Exact integer number theory: primality, factorization, multiplicative
// functions and the brute-force least-primitive-root oracle.

#include <chrono>
#include <cstddef>
#include <vector>

#include "gpcert/numeric_types.hpp"

namespace gpcert::nt {

struct PrimePower {
    u128 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with entries sorted by strictly increasing prime.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> entries);

    const std::vector<PrimePower>& entries() const { return entries_; }
    std::size_t omega() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Product of prime^exponent; throws RangeError past 128 bits.
    u128 value() const;

    /// Distinct primes in increasing order.
    std::vector<u128> primes() const;

    /// All positive divisors in increasing order. Requires value() < 2^64.
    std::vector<u64> divisors() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> entries_;
};

/// Exclusive bound below which Miller-Rabin with the first 13 prime bases is deterministic.
inline constexpr u128 kPrimalityLimit =
    (static_cast<u128>(179817ULL) << 64) | static_cast<u128>(0x51ADC5B22410A5FDULL);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u128 mulmod(u128 a, u128 b, u128 m);
u128 powmod(u128 base, u128 exp, u128 m);
u128 gcd(u128 a, u128 b);

/// Deterministic for n < kPrimalityLimit; larger n throws RangeError.
bool is_prime(u128 n);

/// Trial division plus Brent's Pollard rho. n >= 1; factorize(1) is empty.
Factorization factorize(u128 n);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);
int moebius(u64 n);
int moebius(const Factorization& f);

/// phi(n)/n as an exact rational.
Rational theta(u64 n);
Rational theta(const Factorization& f);

/// Least k >= 1 with a^k = 1 (mod p), by descent over the divisors of p-1.
u64 multiplicative_order(u64 a, u64 p, const Factorization& pm1);
u64 multiplicative_order(u64 a, u64 p);

bool is_primitive_root(u64 g, u64 p, const Factorization& pm1);

struct SearchBudget {
    /// Largest candidate examined; 0 means "up to p - 1".
    u64 candidate_limit = 0;
    std::chrono::milliseconds time_cap{10'000};
};

/// Smallest g >= 1 of order p-1 (g = 1 for p = 2). Throws BudgetExceeded.
u64 least_primitive_root(u64 p, const SearchBudget& budget = {});
u64 least_primitive_root(u64 p, const Factorization& pm1, const SearchBudget& budget = {});

/// Product of the first k primes.
BigInt primorial(unsigned k);

/// The k-th prime, 1-based (nth_prime(1) == 2).
u64 nth_prime(unsigned k);

/// The first k primes.
std::vector<u64> first_primes(unsigned k);

std::vector<u64> primes_up_to(u64 n);

/// mu(0..n) by a linear sieve; entry 0 is unused.
std::vector<signed char> moebius_table(u64 n);

/// phi(0..n); entry 0 is unused.
std::vector<u64> phi_table(u64 n);

} // namespace gpcert::nt
