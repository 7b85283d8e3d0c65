#include "gpcert/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <tuple>

#include "gpcert/characters.hpp"
#include "gpcert/errors.hpp"
#include "gpcert/intervals.hpp"
#include "gpcert/ntcore.hpp"
#include "gpcert/parallel.hpp"
#include "gpcert/sieve.hpp"

namespace gpcert::certify {

namespace {

struct Cell {
    u64 H_int; ///< ceiling of the model optimum
    unsigned r;
    unsigned s;
    u64 h;
};

bool operator<(const Cell& a, const Cell& b)
{
    return std::tie(a.H_int, a.r, a.s, a.h) < std::tie(b.H_int, b.r, b.s, b.h);
}

/// LHS/H^2 in double precision; +inf where A(X) <= 0.
double model_ratio(double lead, unsigned r, double h, double W, double H)
{
    const auto env = intervals::envelopes(H / h, h);
    if (env.a_factor <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double r2 = 2.0 * r;
    return lead * h * W * std::pow(env.b_factor, r2 - 1) / std::pow(env.a_factor, r2) / (H * H);
}

/// Least H in [2h, sqrt(hp/2)) with model_ratio < 1, or nullopt.
std::optional<double> least_H(double p, double lead, unsigned r, double h)
{
    const double W = chars::w_factor(p, h, r);
    double lo = 2.0 * h;
    double hi = std::sqrt(h * p / 2.0) * (1.0 - 1e-9);
    if (hi <= lo || model_ratio(lead, r, h, W, hi) >= 1.0) {
        return std::nullopt;
    }
    if (model_ratio(lead, r, h, W, lo) < 1.0) {
        return lo;
    }
    for (int it = 0; it < 80 && hi - lo > 1e-9 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (model_ratio(lead, r, h, W, mid) < 1.0 ? hi : lo) = mid;
    }
    return hi;
}

std::string decimal_string(const BigInt& m, int k)
{
    return m.str() + "e" + std::to_string(k);
}

/// Smallest m * 10^k >= x with four significant digits.
Rational round_up_4(double x, BigInt* mantissa, int* exponent)
{
    int k = static_cast<int>(std::floor(std::log10(x))) - 3;
    BigInt m(static_cast<long long>(std::ceil(x / std::pow(10.0, k))));
    *mantissa = m;
    *exponent = k;
    return k >= 0 ? Rational(m * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k)))
                  : Rational(m, boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-k)));
}

} // namespace

OptimizeResult optimize_params(const nt::PrimeContext& ctx, const OptimizeOptions& opt)
{
    OptimizeResult out;
    const u64 p = ctx.p();
    const double pd = static_cast<double>(p);
    const unsigned omega = ctx.omega();
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;

    std::vector<sieve::SieveSummary> configs;
    for (unsigned s = 0; s < std::max(omega, 1u); ++s) {
        const auto cfg = sieve::SieveConfig::excluding_largest(ctx, s);
        if (cfg.admissible()) {
            configs.push_back(cfg.summary());
        }
    }

    std::vector<Cell> cells;
    double best_H = std::numeric_limits<double>::infinity();
    for (unsigned r = opt.r_min; r <= opt.r_max; ++r) {
        for (const auto& cfg : configs) {
            const double F = cfg.factor().convert_to<double>();
            const double lead = pi2_6 * std::pow(F, 2.0 * r) * std::sqrt(pd);
            for (double hd = 2.0; hd < pd / 8.0;) {
                const u64 h = static_cast<u64>(hd);
                if (2.0 * static_cast<double>(h) >= best_H) {
                    break;
                }
                ++out.candidates;
                if (const auto H = least_H(pd, lead, r, static_cast<double>(h))) {
                    const u64 H_int = static_cast<u64>(std::ceil(*H * (1.0 + 1e-12)));
                    cells.push_back({H_int, r, cfg.s, h});
                    best_H = std::min(best_H, static_cast<double>(H_int));
                }
                hd = std::max(hd + 1.0, std::floor(hd * opt.h_ratio));
            }
        }
    }
    if (cells.empty()) {
        out.reason = "infeasible at this p: no (r, s, h) satisfies the condition with 2H^2 < hp";
        return out;
    }
    std::sort(cells.begin(), cells.end());

    unsigned attempts = 0;
    for (const auto& cell : cells) {
        if (attempts++ >= opt.certify_attempts) {
            break;
        }
        const auto cfg = std::find_if(configs.begin(), configs.end(), [&](const auto& c) { return c.s == cell.s; });
        // The model is double precision; allow a few small upward steps of H.
        u64 H = cell.H_int;
        for (int bump = 0; bump < 4; ++bump) {
            try {
                auto c = theorem3_certify(PSpec::exact(BigInt(p), omega), *cfg, cell.r, cell.h, Rational(BigInt(H)),
                                          opt.cert);
                if (c.verdict == Verdict::certified) {
                    c.provenance["search"] = "r in [" + std::to_string(opt.r_min) + ", " +
                                             std::to_string(opt.r_max) + "], s from largest primes, h grid x" +
                                             std::to_string(opt.h_ratio);
                    out.best = std::move(c);
                    out.feasible = true;
                    return out;
                }
            } catch (const ParameterError&) {
                break;
            }
            H += std::max<u64>(1, H / 100'000);
        }
    }
    out.reason = "model optimum did not certify within the attempt budget";
    return out;
}

ThresholdOptimizeResult optimize_threshold(const BigInt& p0, unsigned omega, unsigned r_min, unsigned r_max,
                                           const CertifyOptions& opt)
{
    ThresholdOptimizeResult out;
    const auto spec = PSpec::threshold(p0, omega);
    sieve::SieveSummary sv;
    sv.e_desc = "p-1";
    sv.omega = omega;
    sv.s = 0;
    sv.delta = 1;
    const auto F = sieve_factor_certified(sv, opt.precision);

    for (unsigned r = r_min; r <= r_max; ++r) {
        const long rl = static_cast<long>(r);
        std::optional<ThresholdCandidate> best_r;
        for (long k = 2; k <= 32; ++k) {
            PowerShape shape{r, Rational(1), Rational(1, 4) + Rational(1, 4 * rl), Rational(rl * k, 16),
                             Rational(1, 2 * rl)};
            const auto base = analyze_shape(p0, shape, F, 0, opt.precision);
            if (!base.uniform) {
                continue;
            }
            // LHS/H^2 ~ 1/c_H^2, and a larger c_H only helps A and B.
            const double guess = std::sqrt(base.ratio.hi_double()) * (1.0 + 1e-6);
            if (!std::isfinite(guess) || guess <= 0.0) {
                continue;
            }
            BigInt m;
            int e10 = 0;
            shape.c_H = round_up_4(std::max(guess, 1e-6), &m, &e10);
            for (int bump = 0; bump < 3; ++bump) {
                const auto c = theorem3_certify(spec, sv, shape, opt);
                if (c.verdict == Verdict::certified) {
                    if (!best_r || shape.c_H < best_r->shape.c_H) {
                        best_r = ThresholdCandidate{r, shape, c};
                        best_r->certificate.provenance["c_H"] = decimal_string(m, e10);
                    }
                    break;
                }
                m += 1;
                shape.c_H = e10 >= 0 ? Rational(m * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(e10)))
                                     : Rational(m, boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-e10)));
            }
        }
        if (best_r) {
            out.per_r.push_back(*best_r);
        }
    }
    for (const auto& cand : out.per_r) {
        if (!out.best || cand.shape.a < out.best->shape.a ||
            (cand.shape.a == out.best->shape.a && cand.shape.c_H < out.best->shape.c_H)) {
            out.best = cand;
        }
    }
    return out;
}

SoundnessReport soundness_crosscheck(const std::vector<u64>& primes, const OptimizeOptions& opt, unsigned workers)
{
    SoundnessReport rep;
    rep.entries = parallel_map(
        primes,
        [&](u64 p) {
            SoundnessEntry e;
            e.p = p;
            const nt::PrimeContext ctx(p, 0);
            e.omega = ctx.omega();
            e.g = nt::least_primitive_root(p, ctx.pm1_factors());
            const auto res = optimize_params(ctx, opt);
            if (res.best) {
                e.certified = true;
                e.r = res.best->r;
                e.s = res.best->sieve.s;
                e.h = res.best->h.value_or(0);
                e.H = res.best->H.lo_double();
            }
            return e;
        },
        workers == 0 ? default_workers() : workers);

    std::vector<double> ratios;
    for (const auto& e : rep.entries) {
        ++rep.primes;
        if (!e.certified) {
            ++rep.skipped;
            continue;
        }
        ++rep.certified;
        if (!(static_cast<double>(e.g) < e.H)) {
            ++rep.contradictions;
        }
        ratios.push_back(e.H / static_cast<double>(e.g));
    }
    if (!ratios.empty()) {
        std::sort(ratios.begin(), ratios.end());
        rep.min_ratio = ratios.front();
        rep.median_ratio = ratios[ratios.size() / 2];
    }
    rep.pass = rep.contradictions == 0;
    return rep;
}

std::vector<u64> soundness_sample(u64 safe_from, unsigned safe_count, u64 lo, u64 hi, unsigned random_count,
                                  u64 seed)
{
    std::vector<u64> out;
    std::set<u64> seen;
    for (u64 q = safe_from / 2 + 1; out.size() < safe_count; ++q) {
        if (nt::is_prime(q) && nt::is_prime(2 * q + 1)) {
            out.push_back(2 * q + 1);
            seen.insert(2 * q + 1);
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> dist(lo, hi);
    unsigned added = 0;
    while (added < random_count) {
        u64 x = dist(rng) | 1;
        while (!nt::is_prime(x)) {
            x += 2;
        }
        if (seen.insert(x).second) {
            out.push_back(x);
            ++added;
        }
    }
    return out;
}

} // namespace gpcert::certify
