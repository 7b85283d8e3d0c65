#pragma once

// Certified evaluation of the main inequality
//   (pi^2/6) B(X)^{2r-1}/A(X)^{2r} F^{2r} h sqrt(p) W(p,h,r) < H^2   =>   g(p) < H
// for a single prime or uniformly over all p >= P0, plus the closed-form bounds
// derived from it.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpcert/certified_real.hpp"
#include "gpcert/numeric_types.hpp"
#include "gpcert/sieve.hpp"

namespace gpcert::certify {

using cert::CertifiedReal;
using cert::Precision;

/// Either one prime p, or every prime p >= P0 whose p-1 has omega distinct prime factors.
struct PSpec {
    enum class Kind { exact, threshold };

    Kind kind = Kind::exact;
    BigInt p;
    unsigned omega = 0;

    static PSpec exact(const BigInt& p, unsigned omega);
    static PSpec threshold(const BigInt& p0, unsigned omega);
    /// "1e56" style: an exact power of ten used as a threshold.
    static PSpec power_of_ten(unsigned exponent, unsigned omega);

    bool is_threshold() const { return kind == Kind::threshold; }
    std::string describe() const;
};

enum class Verdict { certified, failed, indeterminate };

std::string to_string(Verdict v);

struct Certificate {
    PSpec p_spec;
    unsigned r = 0;
    std::string h_desc;
    std::optional<u64> h; ///< exact h when p is exact
    CertifiedReal H;
    sieve::SieveSummary sieve;
    CertifiedReal lhs;
    CertifiedReal rhs;
    Verdict verdict = Verdict::indeterminate;
    Precision precision = cert::kDefaultPrecision;
    std::map<std::string, std::string> provenance;
    std::vector<std::string> notes;
};

struct CertifyOptions {
    Precision precision = cert::kDefaultPrecision;
    Precision max_precision = cert::kMaxEscalatedPrecision;
};

/// Exact prime p. Throws ConfigError for delta <= 0 and ParameterError when
/// h >= 2, H >= 2h or 2H^2 < hp fails (checked in exact arithmetic).
Certificate theorem3_certify(const PSpec& spec, const sieve::SieveSummary& sieve, unsigned r, u64 h,
                             const Rational& H, const CertifyOptions& opt = {});

/// H = c_H p^a and h = ceil(c_h p^b) for every p >= P0.
struct PowerShape {
    unsigned r = 2;
    Rational c_H = 1;
    Rational a = Rational(1, 2);
    Rational c_h = 1;
    Rational b = Rational(1, 4);

    std::string describe_H() const;
    std::string describe_h() const;
};

/// Threshold version: lhs is an upper bound for sup_{p >= P0} LHS/H^2 and rhs = 1.
/// The bound is uniform only when the exponents make every factor nonincreasing
/// in p; a shape that does not is reported as failed with the offending exponent.
Certificate theorem3_certify(const PSpec& spec, const sieve::SieveSummary& sieve, const PowerShape& shape,
                             const CertifyOptions& opt = {});

/// Worst-case quantities of a power shape over p >= P0.
struct ShapeAnalysis {
    bool uniform = false;       ///< every precondition certified for all p >= P0
    std::string failure;        ///< first precondition that failed or stayed unknown
    bool indeterminate = false; ///< the failure is an unknown comparison, not a no
    CertifiedReal X_lo;
    CertifiedReal h_lo;
    CertifiedReal A_lo;
    CertifiedReal B_hi;
    CertifiedReal W_term;       ///< sup p^gamma h sqrt(p) W / H^2
    std::string w_branch;
    CertifiedReal ratio;        ///< sup p^gamma LHS / H^2
};

/// gamma = 0 gives the plain LHS/H^2 ratio; gamma > 0 measures a reduced constant
/// (e.g. gamma = 1/2 for the p^{5/8} shape, where LHS/H^2 decays like p^{-1/2}).
ShapeAnalysis analyze_shape(const BigInt& p0, const PowerShape& shape, const CertifiedReal& sieve_factor,
                            const Rational& gamma, Precision prec = cert::kDefaultPrecision);

/// W(p,h,r) as an enclosure: min of the two branches when r = 2.
struct WBound {
    CertifiedReal value;
    std::string branch;
};
WBound w_factor_certified(const CertifiedReal& p, const CertifiedReal& h, unsigned r);

CertifiedReal sieve_factor_certified(const sieve::SieveSummary& s, Precision prec = cert::kDefaultPrecision);

/// 2r 2^{r omega} p^{1/4 + 1/(4r)}.
CertifiedReal bound_theorem1(const BigInt& p, unsigned r, unsigned omega,
                             Precision prec = cert::kDefaultPrecision);
/// 2r F^r p^{1/4 + 1/(4r)}; equals bound_theorem1 exactly when s = 0.
CertifiedReal bound_sieved(const BigInt& p, unsigned r, unsigned omega, unsigned s, const Rational& delta,
                           Precision prec = cert::kDefaultPrecision);

struct BurgessConstant {
    unsigned r;
    const char* c;
    const char* c_pow_r;
};

/// Trevino's constants for r = 2..10.
const std::vector<BurgessConstant>& burgess_table();

/// C(r)^r 2^{r omega} p^{1/4 + 1/(4r)} (log p)^{1/2}; throws RangeError outside r = 2..10.
CertifiedReal burgess_comparison_bound(const BigInt& p, unsigned r, unsigned omega,
                                       Precision prec = cert::kDefaultPrecision);

/// p^x for a rational x, in log space.
CertifiedReal pow_rational(const CertifiedReal& p, const Rational& x);

} // namespace gpcert::certify
