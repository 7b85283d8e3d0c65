#pragma once

// omega-by-omega case analysis behind the p^{5/8} (p >= 1e22) and
// 0.999 p^{1/2} (p >= 1e56) corollaries.

#include <string>
#include <vector>

#include "gpcert/certify.hpp"

namespace gpcert::certify {

enum class CaseTarget { cor2, lonely };

/// Worst-case delta when the s largest primes of p-1 are excluded.
/// tight: 1 - sum_{i=omega-s+1}^{omega} 1/q_i (the k-th smallest prime of p-1 is >= q_k).
/// literal: 1 - sum_{i=omega-s}^{omega} 1/q_i, one extra term, as printed.
enum class DeltaPolicy { tight, literal };

std::string to_string(CaseTarget t);
std::string to_string(DeltaPolicy d);

struct CaseOptions {
    DeltaPolicy delta = DeltaPolicy::tight;
    /// Use the certified reduction constant instead of the printed 13 / 7.
    bool derived_constant = false;
    Precision precision = cert::kDefaultPrecision;
};

struct CaseRow {
    std::string regime;
    unsigned omega = 0;
    unsigned s = 0;
    Rational delta_lo = 1;
    CertifiedReal lhs;
    CertifiedReal rhs;
    /// log10(rhs_lo / lhs_hi); positive means the row holds.
    double margin = 0.0;
    bool pass = false;
    std::string note;
};

struct CaseReport {
    CaseTarget target = CaseTarget::cor2;
    DeltaPolicy delta = DeltaPolicy::tight;
    std::string condition;
    CertifiedReal constant; ///< the constant used in the per-omega rows
    std::vector<CaseRow> rows;
    bool pass = false;
};

Rational delta_lower_bound(unsigned omega, unsigned s, DeltaPolicy policy);

CaseReport corollary_case_engine(CaseTarget target, const CaseOptions& opt = {});

/// Columns: regime, omega, s, delta_lo, lhs_hi, rhs_lo, margin, verdict.
std::string to_tsv(const CaseReport& rep);

} // namespace gpcert::certify
