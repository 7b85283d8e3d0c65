#include "gpcert/ntcore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "gpcert/errors.hpp"

namespace gpcert::nt {

namespace {

constexpr std::array<u64, 13> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr u128 kU64Limit = static_cast<u128>(1) << 64;

u128 addmod(u128 a, u128 b, u128 m)
{
    // a, b < m; avoid overflow of a + b.
    return a >= m - b ? a - (m - b) : a + b;
}

bool miller_rabin_u64(u64 n, u64 a)
{
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

bool miller_rabin_u128(u128 n, u128 a)
{
    u128 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

u128 addmod_any(u128 a, u128 b, u128 m) { return addmod(a, b, m); }
u64 addmod_any(u64 a, u64 b, u64 m) { return static_cast<u64>(addmod(a, b, m)); }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
template <typename T>
T pollard_brent(T n)
{
    if (n % 2 == 0) {
        return 2;
    }
    for (T c = 1;; ++c) {
        T y = 2;
        T x = 2;
        T q = 1;
        T g = 1;
        T ys = 2;
        constexpr u64 kBatch = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                y = addmod_any(mulmod(y, y, n), c, n);
            }
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const u64 lim = std::min<u64>(kBatch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = addmod_any(mulmod(y, y, n), c, n);
                    const T diff = x > y ? x - y : y - x;
                    q = mulmod(q, diff, n);
                }
                g = static_cast<T>(gcd(static_cast<u128>(q), static_cast<u128>(n)));
            }
        }
        if (g == n) {
            do {
                ys = addmod_any(mulmod(ys, ys, n), c, n);
                const T diff = x > ys ? x - ys : ys - x;
                g = static_cast<T>(gcd(static_cast<u128>(diff), static_cast<u128>(n)));
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(u128 n, std::map<u128, unsigned>& out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u128 d = n < kU64Limit ? static_cast<u128>(pollard_brent<u64>(static_cast<u64>(n)))
                           : pollard_brent<u128>(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

const std::vector<u64>& small_primes()
{
    static const std::vector<u64> primes = primes_up_to(1000);
    return primes;
}

} // namespace

Factorization::Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].exponent == 0 || entries_[i].prime < 2) {
            throw DomainError("factorization entries need prime >= 2 and exponent >= 1");
        }
        if (i > 0 && entries_[i - 1].prime >= entries_[i].prime) {
            throw DomainError("factorization primes must be strictly increasing");
        }
    }
}

u128 Factorization::value() const
{
    u128 v = 1;
    constexpr u128 kMax = ~static_cast<u128>(0);
    for (const auto& [prime, exponent] : entries_) {
        for (unsigned i = 0; i < exponent; ++i) {
            if (v > kMax / prime) {
                throw RangeError("factorization value exceeds 128 bits");
            }
            v *= prime;
        }
    }
    return v;
}

std::vector<u128> Factorization::primes() const
{
    std::vector<u128> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        out.push_back(e.prime);
    }
    return out;
}

std::vector<u64> Factorization::divisors() const
{
    if (value() >= kU64Limit) {
        throw RangeError("divisor enumeration needs a 64-bit value");
    }
    std::vector<u64> divs{1};
    for (const auto& [prime, exponent] : entries_) {
        const std::size_t base = divs.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= exponent; ++k) {
            pk *= static_cast<u64>(prime);
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
    if (m == 1) {
        return 0;
    }
    u64 result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u128 mulmod(u128 a, u128 b, u128 m)
{
    if (m < kU64Limit) {
        return mulmod(static_cast<u64>(a % m), static_cast<u64>(b % m), static_cast<u64>(m));
    }
    a %= m;
    b %= m;
    u128 result = 0;
    while (b != 0) {
        if (b & 1) {
            result = addmod(result, a, m);
        }
        a = addmod(a, a, m);
        b >>= 1;
    }
    return result;
}

u128 powmod(u128 base, u128 exp, u128 m)
{
    if (m == 1) {
        return 0;
    }
    u128 result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u128 gcd(u128 a, u128 b)
{
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(u128 n)
{
    if (n >= kPrimalityLimit) {
        throw RangeError("is_prime: n = " + to_string(n) + " is beyond the deterministic range");
    }
    if (n < 2) {
        return false;
    }
    for (u64 w : kWitnesses) {
        if (n == w) {
            return true;
        }
        if (n % w == 0) {
            return false;
        }
    }
    if (n < 41 * 41) {
        return true;
    }
    if (n < kU64Limit) {
        const auto n64 = static_cast<u64>(n);
        return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                           [n64](u64 a) { return miller_rabin_u64(n64, a); });
    }
    return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                       [n](u64 a) { return miller_rabin_u128(n, a); });
}

Factorization factorize(u128 n)
{
    if (n == 0) {
        throw DomainError("factorize: n must be positive");
    }
    std::map<u128, unsigned> found;
    for (u64 q : small_primes()) {
        if (static_cast<u128>(q) * q > n) {
            break;
        }
        while (n % q == 0) {
            ++found[q];
            n /= q;
        }
    }
    if (n > 1) {
        factor_into(n, found);
    }
    std::vector<PrimePower> entries;
    entries.reserve(found.size());
    for (const auto& [prime, exponent] : found) {
        entries.push_back({prime, exponent});
    }
    return Factorization(std::move(entries));
}

u64 euler_phi(const Factorization& f)
{
    u128 phi = 1;
    for (const auto& [prime, exponent] : f.entries()) {
        phi *= prime - 1;
        for (unsigned i = 1; i < exponent; ++i) {
            phi *= prime;
        }
    }
    if (phi >= kU64Limit) {
        throw RangeError("euler_phi exceeds 64 bits");
    }
    return static_cast<u64>(phi);
}

u64 euler_phi(u64 n)
{
    return euler_phi(factorize(n));
}

int moebius(const Factorization& f)
{
    for (const auto& e : f.entries()) {
        if (e.exponent > 1) {
            return 0;
        }
    }
    return f.omega() % 2 == 0 ? 1 : -1;
}

int moebius(u64 n)
{
    return moebius(factorize(n));
}

Rational theta(const Factorization& f)
{
    Rational result = 1;
    for (const auto& e : f.entries()) {
        const BigInt q = to_bigint(e.prime);
        result *= Rational(q - 1, q);
    }
    return result;
}

Rational theta(u64 n)
{
    return theta(factorize(n));
}

u64 multiplicative_order(u64 a, u64 p, const Factorization& pm1)
{
    if (p < 2) {
        throw DomainError("multiplicative_order: modulus must be prime");
    }
    if (a % p == 0) {
        throw DomainError("multiplicative_order: a is divisible by p");
    }
    u64 order = p - 1;
    for (const auto& e : pm1.entries()) {
        const auto q = static_cast<u64>(e.prime);
        for (unsigned i = 0; i < e.exponent; ++i) {
            if (powmod(a, order / q, p) != 1) {
                break;
            }
            order /= q;
        }
    }
    return order;
}

u64 multiplicative_order(u64 a, u64 p)
{
    return multiplicative_order(a, p, factorize(p - 1));
}

bool is_primitive_root(u64 g, u64 p, const Factorization& pm1)
{
    if (g % p == 0) {
        return false;
    }
    for (const auto& e : pm1.entries()) {
        if (powmod(g, (p - 1) / static_cast<u64>(e.prime), p) == 1) {
            return false;
        }
    }
    return true;
}

u64 least_primitive_root(u64 p, const Factorization& pm1, const SearchBudget& budget)
{
    if (p == 2) {
        return 1;
    }
    const u64 limit = budget.candidate_limit == 0 ? p - 1 : std::min(budget.candidate_limit, p - 1);
    const auto start = std::chrono::steady_clock::now();
    for (u64 g = 2; g <= limit; ++g) {
        if (is_primitive_root(g, p, pm1)) {
            return g;
        }
        if ((g & 0x3FF) == 0 && std::chrono::steady_clock::now() - start > budget.time_cap) {
            throw BudgetExceeded("least_primitive_root: time cap reached at candidate " +
                                 std::to_string(g));
        }
    }
    throw BudgetExceeded("least_primitive_root: no primitive root among candidates <= " +
                         std::to_string(limit));
}

u64 least_primitive_root(u64 p, const SearchBudget& budget)
{
    if (p < 2 || !is_prime(p)) {
        throw DomainError("least_primitive_root: p must be prime");
    }
    return least_primitive_root(p, factorize(p - 1), budget);
}

std::vector<u64> primes_up_to(u64 n)
{
    std::vector<u64> out;
    if (n < 2) {
        return out;
    }
    std::vector<bool> composite(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) {
            continue;
        }
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i) {
            composite[j] = true;
        }
    }
    return out;
}

std::vector<u64> first_primes(unsigned k)
{
    if (k == 0) {
        return {};
    }
    // p_k < k (ln k + ln ln k) for k >= 6.
    const double kk = std::max(6.0, static_cast<double>(k));
    auto bound = static_cast<u64>(kk * (std::log(kk) + std::log(std::log(kk)))) + 16;
    auto primes = primes_up_to(bound);
    primes.resize(k);
    return primes;
}

u64 nth_prime(unsigned k)
{
    if (k == 0) {
        throw DomainError("nth_prime is 1-based");
    }
    static std::mutex mutex;
    static std::vector<u64> cache;
    std::lock_guard lock(mutex);
    if (cache.size() < k) {
        cache = first_primes(std::max<unsigned>(k, 2 * static_cast<unsigned>(cache.size())));
    }
    return cache[k - 1];
}

BigInt primorial(unsigned k)
{
    BigInt result = 1;
    for (u64 q : first_primes(k)) {
        result *= q;
    }
    return result;
}

std::vector<signed char> moebius_table(u64 n)
{
    std::vector<signed char> mu(n + 1, 1);
    std::vector<bool> composite(n + 1, false);
    std::vector<u64> primes;
    mu[0] = 0;
    for (u64 i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (u64 q : primes) {
            const u64 m = i * q;
            if (m > n) {
                break;
            }
            composite[m] = true;
            if (i % q == 0) {
                mu[m] = 0;
                break;
            }
            mu[m] = static_cast<signed char>(-mu[i]);
        }
    }
    return mu;
}

std::vector<u64> phi_table(u64 n)
{
    std::vector<u64> phi(n + 1);
    for (u64 i = 0; i <= n; ++i) {
        phi[i] = i;
    }
    for (u64 i = 2; i <= n; ++i) {
        if (phi[i] == i) {
            for (u64 j = i; j <= n; j += i) {
                phi[j] -= phi[j] / i;
            }
        }
    }
    return phi;
}

} // namespace gpcert::nt
