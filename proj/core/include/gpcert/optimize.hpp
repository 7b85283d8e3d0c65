#pragma once

// Parameter search for the smallest certified H, and the end-to-end check
// of certificates against the brute-force least primitive root.

#include <optional>
#include <string>
#include <vector>

#include "gpcert/certify.hpp"
#include "gpcert/prime_context.hpp"

namespace gpcert::certify {

struct OptimizeOptions {
    unsigned r_min = 2;
    unsigned r_max = 20;
    double h_ratio = 1.02; ///< geometric step of the h grid
    /// Candidates handed to the certifier, best first, before giving up.
    unsigned certify_attempts = 32;
    CertifyOptions cert;
};

struct OptimizeResult {
    bool feasible = false;
    std::optional<Certificate> best;
    u64 candidates = 0; ///< (r, s, h) cells evaluated
    std::string reason; ///< why no certificate was issued
};

/// Searches r, the sieve configs that drop the s largest primes of p-1, and h;
/// for each cell the least H with the model condition, then certifies in
/// order (H, r, s). Deterministic.
OptimizeResult optimize_params(const nt::PrimeContext& ctx, const OptimizeOptions& opt = {});

struct ThresholdCandidate {
    unsigned r = 0;
    PowerShape shape;
    Certificate certificate;
};

struct ThresholdOptimizeResult {
    std::vector<ThresholdCandidate> per_r; ///< certified shapes only
    std::optional<ThresholdCandidate> best; ///< smallest exponent, then smallest c_H
};

/// Shapes H = c_H p^{1/4+1/(4r)}, h = ceil(c_h p^{1/(2r)}) for every p >= p0
/// with omega(p-1) <= omega (s = 0, so F = 2^omega is the worst case).
ThresholdOptimizeResult optimize_threshold(const BigInt& p0, unsigned omega, unsigned r_min = 2,
                                           unsigned r_max = 10, const CertifyOptions& opt = {});

struct SoundnessEntry {
    u64 p = 0;
    unsigned omega = 0;
    bool certified = false;
    u64 g = 0;
    unsigned r = 0;
    unsigned s = 0;
    u64 h = 0;
    double H = 0.0; ///< lower end of the certified H enclosure
};

struct SoundnessReport {
    u64 primes = 0;
    u64 certified = 0;
    u64 skipped = 0;
    u64 contradictions = 0;
    double min_ratio = 0.0;    ///< smallest H/g over certified primes
    double median_ratio = 0.0;
    std::vector<SoundnessEntry> entries;
    bool pass = false;
};

SoundnessReport soundness_crosscheck(const std::vector<u64>& primes, const OptimizeOptions& opt = {},
                                     unsigned workers = 0);

/// Safe primes 2q+1 from `from` upward, then random primes in [lo, hi], seeded.
std::vector<u64> soundness_sample(u64 safe_from, unsigned safe_count, u64 lo, u64 hi, unsigned random_count,
                                  u64 seed);

} // namespace gpcert::certify
