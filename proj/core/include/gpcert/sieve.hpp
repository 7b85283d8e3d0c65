#pragma once

// The e-free sieve: indicators f_e, their character expansion, and the
// lower-bound inequality used to replace 2^omega by a smaller factor.

#include <string>
#include <vector>

#include "gpcert/characters.hpp"
#include "gpcert/numeric_types.hpp"
#include "gpcert/prime_context.hpp"

namespace gpcert::sieve {

/// F = (2 + (s-1)/delta) 2^(omega-s); s = 0 gives 2^omega.
Rational sieve_factor(unsigned omega, unsigned s, const Rational& delta);

/// The sieve data a certificate needs, detached from any particular prime.
struct SieveSummary {
    std::string e_desc;
    unsigned omega = 0;
    unsigned s = 0;
    Rational delta = 1;

    Rational factor() const { return sieve_factor(omega, s, delta); }
};

/// An even divisor e of p-1 with the primes of p-1 that do not divide e.
class SieveConfig {
public:
    /// Recomputes the excluded set from the factorization of p-1; throws
    /// ConfigError when e is odd or does not divide p-1.
    SieveConfig(const nt::PrimeContext& ctx, u64 e);

    /// Shortcut: e = product of the primes of p-1 minus the s largest, times any
    /// powers kept from p-1 (so e stays even whenever s < omega).
    static SieveConfig excluding_largest(const nt::PrimeContext& ctx, unsigned s);

    const nt::PrimeContext& context() const { return *ctx_; }
    u64 e() const { return e_; }
    const std::vector<u64>& excluded() const { return excluded_; }
    unsigned s() const { return static_cast<unsigned>(excluded_.size()); }
    const Rational& delta() const { return delta_; }
    bool admissible() const { return delta_ > 0; }
    Rational factor() const { return sieve_factor(ctx_->omega(), s(), delta_); }
    SieveSummary summary() const;

private:
    const nt::PrimeContext* ctx_;
    u64 e_;
    std::vector<u64> excluded_;
    Rational delta_;
};

/// Even divisors of p-1, ascending.
std::vector<u64> even_divisors(const nt::PrimeContext& ctx);

/// 1 iff n = g^k has no prime q | e with q | k.
int e_free(const nt::PrimeContext& ctx, u64 e, u64 n);

/// |f_e(n)/theta(e) - Re(R)| + |Im(R)| where R is the character expansion.
/// Throws ConsistencyError above 1e-6.
double fe_character_identity_check(const chars::OrderClassSums& sums, u64 e, u64 n);
double fe_character_identity_check(const nt::PrimeContext& ctx, u64 e, u64 n);

/// Returns f(n)/(delta theta(e)) - RHS, which must be >= -1e-6; throws
/// ConsistencyError otherwise and ConfigError when delta <= 0.
double sieve_lower_bound_check(const SieveConfig& config, const chars::OrderClassSums& sums, u64 n);
double sieve_lower_bound_check(const SieveConfig& config, u64 n);

struct IntermediateReport {
    Rational combinatorial_lhs; ///< f_{p-1}(n)
    Rational combinatorial_rhs; ///< sum_i (f_{p_i e} - theta(p_i) f_e) + delta f_e
    bool combinatorial_ok = false;
    double expansion_error = 0.0; ///< worst |identity residual| over i
    bool expansion_ok = false;
};

IntermediateReport intermediate_identities_check(const SieveConfig& config,
                                                 const chars::OrderClassSums& sums, u64 n);

struct SieveSweepSummary {
    u64 primes_checked = 0;
    u64 configs_checked = 0;
    u64 points_checked = 0;
    u64 violations = 0;
    double worst_identity_slack = 0.0; ///< largest identity residual
    double worst_bound_slack = 0.0;    ///< smallest f/(delta theta) - RHS
};

/// Every prime 3 <= p <= p_max, every even e | p-1 and every n.
SieveSweepSummary sieve_sweep(u64 p_max);

} // namespace gpcert::sieve
