#pragma once

// The Burgess interval family I(q,t), J(q,t) around the rationals tp/q, exact
// integer-point counts, the A(X)/B(X) envelopes and the real-X sweeps behind
// them.

#include <optional>
#include <string>
#include <vector>

#include "gpcert/certified_real.hpp"
#include "gpcert/numeric_types.hpp"

namespace gpcert::intervals {

struct IntervalEntry {
    u64 q = 0;
    u64 t = 0;
    Rational i_lo; ///< I(q,t) = (i_lo, i_hi]
    Rational i_hi;
    Rational j_lo; ///< J(q,t) = [j_lo, j_hi)
    Rational j_hi;
};

struct IntervalSystem {
    u64 p = 0;
    Rational H;
    u64 h = 0;
    Rational X;
    std::vector<IntervalEntry> entries;
};

/// Throws ParameterError naming the first violated precondition
/// (h >= 2, 0 < H < p, X >= 2, 2HX < p) and ConsistencyError if the family
/// overlaps or leaves [-H, p-H).
IntervalSystem build_intervals(u64 p, const Rational& H, u64 h);

/// Integers z with lo < z <= hi.
BigInt count_open_closed(const Rational& lo, const Rational& hi);
/// Integers z with lo <= z < hi.
BigInt count_closed_open(const Rational& lo, const Rational& hi);

bool in_I(const IntervalEntry& e, const BigInt& z);
bool in_J(const IntervalEntry& e, const BigInt& z);

/// N(X), the number of integers in the union of all intervals.
BigInt count_points(const IntervalSystem& sys);

/// True when sorted intervals are pairwise disjoint and inside [-H, p-H).
bool check_disjoint(const IntervalSystem& sys);

struct EnvelopePair {
    double a_factor = 0.0;
    double b_factor = 0.0;
};

EnvelopePair envelopes(double X, double h);

struct CertifiedEnvelope {
    cert::CertifiedReal a;
    cert::CertifiedReal b;
};

/// X need not be >= 2 here; callers that require it check separately.
CertifiedEnvelope envelopes_certified(const cert::CertifiedReal& X, const cert::CertifiedReal& h);

/// S(X) = X sum_{q<=X} phi(q)/q - sum_{q<=X} phi(q), exactly.
Rational sum_S(const Rational& X);
/// T(X) = sum_{q<=X} phi(q).
BigInt sum_T(const Rational& X);

struct EnvelopeCheck {
    BigInt count;
    cert::CertifiedReal lower; ///< A(X) (6/pi^2) X^2 h
    cert::CertifiedReal upper; ///< B(X) (6/pi^2) X^2 h
    bool lower_ok = false;
    bool upper_ok = false;
    Rational two_h_S;
    BigInt two_T;
    bool count_lower_ok = false;   ///< 2hS <= N
    bool count_upper_ok = false;   ///< N < 2hS + 4T
    bool literal_upper_ok = false; ///< N <= 2hS + 2T, as printed in the proof
};

EnvelopeCheck check_envelope(const IntervalSystem& sys);

struct GridPoint {
    u64 p = 0;
    Rational H;
    u64 h = 0;
};

/// Triples (p, H, h) with X = H/h in [2, 50] and 2HX < p over three primes.
std::vector<GridPoint> envelope_grid();

struct EnvelopeGridSummary {
    u64 triples = 0;
    u64 envelope_violations = 0; ///< N outside [A (6/pi^2) X^2 h, B (6/pi^2) X^2 h]
    u64 count_violations = 0;    ///< 2hS <= N < 2hS + 4T failed
    u64 literal_failures = 0;    ///< N <= 2hS + 2T failed (reported, not a violation)
    double worst_lower_margin = 0.0; ///< min (N - lower)/N
    double worst_upper_margin = 0.0; ///< min (upper - N)/N
};

EnvelopeGridSummary envelope_grid_check(const std::vector<GridPoint>& grid);

struct ClaimReport {
    std::string claim;
    double x_from = 0.0;
    double x_to = 0.0;
    /// Certified lower bound of the smallest margin seen.
    double worst_slack = 0.0;
    double worst_at = 0.0;
    u64 segments = 0;
    bool pass = false;
};

/// |S - 3X^2/pi^2| <= 2X/3 on [1, x_max), per unit segment.
ClaimReport verify_S_envelope(u64 x_max = 38);
/// |T - 3X^2/pi^2| <= X log X on [2, x_max), per unit segment.
ClaimReport verify_T_envelope(u64 x_max = 1000);

/// The four trusted bounds behind the envelopes, checked on [1, x_max]:
/// Ramare |sum mu(d)/d| <= 1/10 + 2/X, Cipu sum mu^2(d) <= 6X/pi^2 + 0.679091 sqrt X,
/// sum mu^2(d)/d <= 6 log X/pi^2 + 2, and |sum_{d>X} mu(d)/d^2| <= 1/X.
std::vector<ClaimReport> verify_external_inputs(u64 x_max = 1'000'000);

} // namespace gpcert::intervals
