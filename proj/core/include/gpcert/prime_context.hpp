#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "gpcert/ntcore.hpp"

namespace gpcert::nt {

/// An odd prime p together with the factorization of p-1, omega(p-1) and its
/// least primitive root. The discrete-log table is built on first use and
/// only when p is within the table cap. Immutable once constructed; the lazy
/// table is guarded so a context can be shared between threads.
class PrimeContext {
public:
    static constexpr u64 kDefaultTableCap = 10'000'000;

    explicit PrimeContext(u64 p, u64 table_cap = kDefaultTableCap);
    PrimeContext(u64 p, Factorization pm1_factors, u64 table_cap = kDefaultTableCap);

    u64 p() const { return p_; }
    const Factorization& pm1_factors() const { return pm1_; }
    unsigned omega() const { return static_cast<unsigned>(pm1_.omega()); }
    u64 generator() const { return generator_; }
    u64 table_cap() const { return table_cap_; }

    bool enumerable() const { return p_ <= table_cap_; }

    /// k in [0, p-2] with generator^k = n (mod p); n in [1, p-1].
    u32 dlog(u64 n) const;

    /// generator^k mod p, k taken mod p-1; table-backed in the enumerable regime.
    u64 power(u64 k) const;

    /// Divisors of p-1, ascending.
    const std::vector<u64>& pm1_divisors() const { return divisors_; }

private:
    struct Tables {
        std::once_flag once;
        std::vector<u32> dlog;
        std::vector<u32> power;
    };

    const Tables& tables() const;

    u64 p_;
    Factorization pm1_;
    u64 generator_;
    u64 table_cap_;
    std::vector<u64> divisors_;
    std::shared_ptr<Tables> tables_;
};

} // namespace gpcert::nt
