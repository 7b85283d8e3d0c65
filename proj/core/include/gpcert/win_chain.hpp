#pragma once

// The explicit-constant chains proving g(p) < 2r 2^{r omega} p^{1/4+1/(4r)}
// (and its sieved variant), re-derived link by link with enclosures.

#include <optional>
#include <string>
#include <vector>

#include "gpcert/certify.hpp"

namespace gpcert::certify {

struct ChainCheck {
    std::string name;
    std::string relation; ///< "<", "<=" or "in"
    CertifiedReal lhs;
    CertifiedReal rhs;
    bool pass = false;
    /// Informational checks are reported but do not enter the chain verdict.
    bool informational = false;
    std::string note;
};

struct WinChainReport {
    std::string variant; ///< "unsieved" or "sieved"
    unsigned r = 0;
    unsigned omega = 0;     ///< 0 for the sieved chain, which only uses F >= 2
    Rational F_min = 0;     ///< sieved chain only
    BigInt P0;              ///< requested threshold
    BigInt P;               ///< start of the regime actually certified
    bool fermat = false;    ///< omega = 1: P is a Fermat number
    CertifiedReal c_h;
    std::vector<ChainCheck> checks;
    std::vector<std::string> notes;
    bool pass = false;
    std::string first_failure;
};

/// H = 2r 2^{r omega} p^{1/4+1/(4r)}, h = ceil(c_h p^{1/(2r)}) with
/// c_h = (2r/e) (sqrt(2)(r-1)/(2r-1))^{1/r}; every link certified at the worst p.
WinChainReport theorem_win_derive(const BigInt& p0, unsigned r, unsigned omega,
                                  Precision prec = cert::kDefaultPrecision);

/// Same recipe with 2^omega replaced by a sieve factor F >= F_min (F_min = 2 covers every config).
WinChainReport theorem_win2_derive(const BigInt& p0, unsigned r, const Rational& F_min = 2,
                                   Precision prec = cert::kDefaultPrecision);

struct WinSweep {
    std::vector<WinChainReport> reports;
    bool pass = false;
};

/// r in [r_from, r_to]: unsieved with omega = 2 and omega = 1, sieved with F = 2.
WinSweep win_chain_sweep(const BigInt& p0, unsigned r_from, unsigned r_to,
                         Precision prec = cert::kDefaultPrecision);

} // namespace gpcert::certify
