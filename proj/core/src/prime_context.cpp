#include "gpcert/prime_context.hpp"

#include <limits>

#include "gpcert/errors.hpp"

namespace gpcert::nt {

PrimeContext::PrimeContext(u64 p, u64 table_cap)
    : PrimeContext(p, (p >= 3 ? factorize(p - 1) : Factorization{}), table_cap)
{
}

PrimeContext::PrimeContext(u64 p, Factorization pm1_factors, u64 table_cap)
    : p_(p), pm1_(std::move(pm1_factors)), generator_(0), table_cap_(table_cap),
      tables_(std::make_shared<Tables>())
{
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw DomainError("PrimeContext: p = " + std::to_string(p) + " is not an odd prime");
    }
    if (pm1_.value() != p - 1) {
        throw DomainError("PrimeContext: supplied factorization does not multiply to p-1");
    }
    for (const auto& e : pm1_.entries()) {
        if (!is_prime(e.prime)) {
            throw DomainError("PrimeContext: factorization contains a composite");
        }
    }
    if (table_cap_ > std::numeric_limits<u32>::max()) {
        table_cap_ = std::numeric_limits<u32>::max();
    }
    // Least primitive roots are tiny in practice; the cap only guards pathology.
    generator_ = least_primitive_root(p, pm1_, SearchBudget{0, std::chrono::milliseconds(60'000)});
    divisors_ = pm1_.divisors();
}

const PrimeContext::Tables& PrimeContext::tables() const
{
    if (!enumerable()) {
        throw RegimeError("discrete-log table needs p <= " + std::to_string(table_cap_) +
                          " (p = " + std::to_string(p_) + ")");
    }
    std::call_once(tables_->once, [this] {
        const u64 n = p_ - 1;
        tables_->dlog.assign(p_, 0);
        tables_->power.assign(n, 0);
        u64 x = 1;
        for (u64 k = 0; k < n; ++k) {
            tables_->power[k] = static_cast<u32>(x);
            tables_->dlog[x] = static_cast<u32>(k);
            x = mulmod(x, generator_, p_);
        }
    });
    return *tables_;
}

u32 PrimeContext::dlog(u64 n) const
{
    if (n == 0 || n >= p_) {
        throw DomainError("dlog: argument must lie in [1, p-1]");
    }
    return tables().dlog[n];
}

u64 PrimeContext::power(u64 k) const
{
    k %= (p_ - 1);
    if (enumerable()) {
        return tables().power[k];
    }
    return powmod(generator_, k, p_);
}

} // namespace gpcert::nt
