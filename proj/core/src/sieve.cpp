#include "gpcert/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpcert/errors.hpp"

namespace gpcert::sieve {

namespace {

constexpr double kTolerance = 1e-6;

double to_double(const Rational& x)
{
    return x.convert_to<double>();
}

/// Primes of p-1 dividing e.
std::vector<u64> primes_of(const nt::PrimeContext& ctx, u64 e)
{
    std::vector<u64> out;
    for (const auto& pp : ctx.pm1_factors().entries()) {
        const auto q = static_cast<u64>(pp.prime);
        if (e % q == 0) {
            out.push_back(q);
        }
    }
    return out;
}

struct SquarefreeDivisor {
    u64 d;
    int mu;
    u64 phi;
};

std::vector<SquarefreeDivisor> squarefree_divisors(const std::vector<u64>& primes)
{
    std::vector<SquarefreeDivisor> out{{1, 1, 1}};
    for (u64 q : primes) {
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back({out[i].d * q, -out[i].mu, out[i].phi * (q - 1)});
        }
    }
    return out;
}

/// 1 + sum_{d|e, d>1} mu(d)/phi(d) sum_{ord chi = d} chi(n).
chars::Complex expansion(const chars::OrderClassSums& sums, const std::vector<u64>& primes, u64 n)
{
    chars::Complex total{1.0, 0.0};
    for (const auto& sd : squarefree_divisors(primes)) {
        if (sd.d == 1) {
            continue;
        }
        total += static_cast<double>(sd.mu) / static_cast<double>(sd.phi) * sums(sd.d, n);
    }
    return total;
}

Rational theta_of(const std::vector<u64>& primes)
{
    Rational t = 1;
    for (u64 q : primes) {
        t *= Rational(BigInt(q - 1), BigInt(q));
    }
    return t;
}

} // namespace

Rational sieve_factor(unsigned omega, unsigned s, const Rational& delta)
{
    if (s > omega) {
        throw ConfigError("sieve: s exceeds omega");
    }
    if (delta <= 0) {
        throw ConfigError("sieve: delta must be positive");
    }
    Rational f = 2 + (Rational(static_cast<long>(s)) - 1) / delta;
    f *= Rational(BigInt(1) << (omega - s));
    return f;
}

SieveConfig::SieveConfig(const nt::PrimeContext& ctx, u64 e) : ctx_(&ctx), e_(e)
{
    if (e == 0 || e % 2 != 0) {
        throw ConfigError("sieve: e must be even");
    }
    if ((ctx.p() - 1) % e != 0) {
        throw ConfigError("sieve: e must divide p-1");
    }
    Rational reciprocal_sum = 0;
    for (const auto& pp : ctx.pm1_factors().entries()) {
        const auto q = static_cast<u64>(pp.prime);
        if (e % q != 0) {
            excluded_.push_back(q);
            reciprocal_sum += Rational(1, BigInt(q));
        }
    }
    delta_ = 1 - reciprocal_sum;
}

SieveConfig SieveConfig::excluding_largest(const nt::PrimeContext& ctx, unsigned s)
{
    const auto& entries = ctx.pm1_factors().entries();
    if (s >= entries.size() && s > 0) {
        throw ConfigError("sieve: cannot exclude every prime of p-1");
    }
    u64 e = ctx.p() - 1;
    for (std::size_t i = entries.size() - s; i < entries.size(); ++i) {
        for (unsigned k = 0; k < entries[i].exponent; ++k) {
            e /= static_cast<u64>(entries[i].prime);
        }
    }
    return SieveConfig(ctx, e);
}

SieveSummary SieveConfig::summary() const
{
    SieveSummary out;
    out.e_desc = std::to_string(e_);
    out.omega = ctx_->omega();
    out.s = s();
    out.delta = delta_;
    return out;
}

std::vector<u64> even_divisors(const nt::PrimeContext& ctx)
{
    std::vector<u64> out;
    for (u64 d : ctx.pm1_divisors()) {
        if (d % 2 == 0) {
            out.push_back(d);
        }
    }
    return out;
}

int e_free(const nt::PrimeContext& ctx, u64 e, u64 n)
{
    if (n == 0 || n >= ctx.p()) {
        throw DomainError("e_free: n must lie in [1, p-1]");
    }
    if (e == 0 || (ctx.p() - 1) % e != 0) {
        throw DomainError("e_free: e must divide p-1");
    }
    const u64 k = ctx.dlog(n);
    for (u64 q : primes_of(ctx, e)) {
        if (k % q == 0) {
            return 0;
        }
    }
    return 1;
}

double fe_character_identity_check(const chars::OrderClassSums& sums, u64 e, u64 n)
{
    const auto& ctx = sums.context();
    const auto primes = primes_of(ctx, e);
    const double lhs = static_cast<double>(e_free(ctx, e, n)) / to_double(theta_of(primes));
    const auto rhs = expansion(sums, primes, n);
    const double slack = std::abs(lhs - rhs.real()) + std::abs(rhs.imag());
    if (slack > kTolerance) {
        throw ConsistencyError("f_e character identity fails: p = " + std::to_string(ctx.p()) +
                               ", e = " + std::to_string(e) + ", n = " + std::to_string(n));
    }
    return slack;
}

double fe_character_identity_check(const nt::PrimeContext& ctx, u64 e, u64 n)
{
    const chars::OrderClassSums sums(ctx);
    return fe_character_identity_check(sums, e, n);
}

double sieve_lower_bound_check(const SieveConfig& config, const chars::OrderClassSums& sums, u64 n)
{
    if (!config.admissible()) {
        throw ConfigError("sieve: delta must be positive");
    }
    const auto& ctx = config.context();
    const auto primes = primes_of(ctx, config.e());
    const auto divisors = squarefree_divisors(primes);
    const double delta = to_double(config.delta());

    chars::Complex excluded_part{0.0, 0.0};
    for (u64 pi : config.excluded()) {
        chars::Complex inner{0.0, 0.0};
        for (const auto& sd : divisors) {
            const double weight = static_cast<double>(-sd.mu) / static_cast<double>(sd.phi * (pi - 1));
            inner += weight * sums(pi * sd.d, n);
        }
        excluded_part += (static_cast<double>(pi - 1) / static_cast<double>(pi)) * inner;
    }
    const auto rhs = excluded_part / delta + expansion(sums, primes, n);

    const int f = nt::multiplicative_order(n, ctx.p(), ctx.pm1_factors()) == ctx.p() - 1 ? 1 : 0;
    const double lhs = static_cast<double>(f) / (delta * to_double(theta_of(primes)));
    const double slack = lhs - rhs.real();
    if (slack < -kTolerance || std::abs(rhs.imag()) > kTolerance) {
        throw ConsistencyError("sieve inequality fails: p = " + std::to_string(ctx.p()) +
                               ", e = " + std::to_string(config.e()) + ", n = " + std::to_string(n));
    }
    return slack;
}

double sieve_lower_bound_check(const SieveConfig& config, u64 n)
{
    const chars::OrderClassSums sums(config.context());
    return sieve_lower_bound_check(config, sums, n);
}

IntermediateReport intermediate_identities_check(const SieveConfig& config,
                                                 const chars::OrderClassSums& sums, u64 n)
{
    const auto& ctx = config.context();
    const u64 e = config.e();
    const auto primes = primes_of(ctx, e);
    const auto divisors = squarefree_divisors(primes);
    const int fe = e_free(ctx, e, n);

    IntermediateReport rep;
    rep.combinatorial_lhs = e_free(ctx, ctx.p() - 1, n);
    Rational rhs = config.delta() * fe;
    for (u64 pi : config.excluded()) {
        const Rational theta_pi(BigInt(pi - 1), BigInt(pi));
        const int fpe = e_free(ctx, pi * e, n);
        rhs += Rational(fpe) - theta_pi * fe;

        chars::Complex expanded{0.0, 0.0};
        for (const auto& sd : divisors) {
            const double weight = static_cast<double>(-sd.mu) / static_cast<double>(sd.phi * (pi - 1));
            expanded += weight * sums(pi * sd.d, n);
        }
        auto theta_pie = primes;
        theta_pie.push_back(pi);
        expanded *= to_double(theta_of(theta_pie));
        const double direct = fpe - to_double(theta_pi) * fe;
        const double err = std::abs(direct - expanded.real()) + std::abs(expanded.imag());
        rep.expansion_error = std::max(rep.expansion_error, err);
    }
    rep.combinatorial_rhs = rhs;
    rep.combinatorial_ok = rep.combinatorial_lhs >= rhs;
    rep.expansion_ok = rep.expansion_error <= kTolerance;
    return rep;
}

SieveSweepSummary sieve_sweep(u64 p_max)
{
    SieveSweepSummary out;
    double worst_bound = std::numeric_limits<double>::infinity();
    for (u64 p : nt::primes_up_to(p_max)) {
        if (p < 3) {
            continue;
        }
        const nt::PrimeContext ctx(p);
        const chars::OrderClassSums sums(ctx);
        ++out.primes_checked;
        for (u64 e : even_divisors(ctx)) {
            const SieveConfig config(ctx, e);
            ++out.configs_checked;
            for (u64 n = 1; n < p; ++n) {
                ++out.points_checked;
                try {
                    out.worst_identity_slack =
                        std::max(out.worst_identity_slack, fe_character_identity_check(sums, e, n));
                    if (config.admissible()) {
                        const double s = sieve_lower_bound_check(config, sums, n);
                        worst_bound = std::min(worst_bound, s);
                    }
                } catch (const ConsistencyError&) {
                    ++out.violations;
                }
            }
        }
    }
    out.worst_bound_slack = std::isfinite(worst_bound) ? worst_bound : 0.0;
    return out;
}

} // namespace gpcert::sieve
