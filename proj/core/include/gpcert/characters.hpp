#pragma once

// Dirichlet characters mod p through a fixed primitive root, exact window
// moment sums S_chi(p,h,r), and the Weil-type bounds that dominate them.

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "gpcert/prime_context.hpp"

namespace gpcert::chars {

using Complex = std::complex<double>;

/// chi_j(g^k) = exp(2 pi i j k / (p-1)) for the context's generator g.
class Character {
public:
    Character(const nt::PrimeContext& ctx, u64 j);

    const nt::PrimeContext& context() const { return *ctx_; }
    u64 index() const { return j_; }
    u64 order() const { return order_; }
    bool is_principal() const { return j_ == 0; }
    Character conjugate() const;

    /// chi(n) for any integer n >= 0 (reduced mod p); zero when p | n.
    Complex operator()(u64 n) const;

    /// chi(n) for every residue 0..p-1; built with one root-of-unity table.
    std::vector<Complex> value_table() const;

private:
    const nt::PrimeContext* ctx_;
    u64 j_;
    u64 order_;
};

Complex char_value(const Character& chi, u64 n);

/// All characters with ord(chi) = d, i.e. j = (p-1)/d * a with gcd(a, d) = 1.
std::vector<Character> characters_of_order(const nt::PrimeContext& ctx, u64 d);

/// sum_{ord(chi) = d} chi(n), by enumerating the characters.
Complex order_class_sum(const nt::PrimeContext& ctx, u64 d, u64 n);

/// Memoized order-class sums. The sum depends on n only through dlog(n) mod d,
/// so each divisor d gets a table of d entries filled by explicit enumeration.
class OrderClassSums {
public:
    explicit OrderClassSums(const nt::PrimeContext& ctx);

    const nt::PrimeContext& context() const { return *ctx_; }
    Complex operator()(u64 d, u64 n) const;

private:
    const std::vector<Complex>& table(u64 d) const;

    const nt::PrimeContext* ctx_;
    mutable std::mutex mutex_;
    mutable std::map<u64, std::unique_ptr<std::vector<Complex>>> tables_;
};

/// f(n) for the primitive-root indicator, computed by the order test and by the
/// character expansion; throws ConsistencyError if they disagree beyond 1e-6.
int indicator_primitive_root(const nt::PrimeContext& ctx, u64 n);
int indicator_primitive_root(const OrderClassSums& sums, u64 n);

struct MomentSumResult {
    double value = 0.0;
    /// Bound on the accumulated floating-point error of `value`.
    double error_bound = 0.0;
    u64 p = 0;
    u64 h = 0;
    unsigned r = 0;
};

/// S_chi(p,h,r) = sum_x |sum_{n<h} chi(x+n)|^{2r} with a sliding window.
MomentSumResult moment_sum_exact(const Character& chi, u64 h, unsigned r,
                                 bool allow_principal = false);

/// The same sum for r = 1..r_max from a single sweep over x.
std::vector<MomentSumResult> moment_sums_exact(const Character& chi, u64 h, unsigned r_max,
                                               bool allow_principal = false);

/// Treviño's count c_r(h, n) of exceptional tuples for a character of order n.
double exception_count_bound(unsigned r, u64 h, unsigned n);

enum class OrderClass { quadratic, higher };

OrderClass order_class(const Character& chi);

/// (2r)!/(2^r r!) p h^r + (2r-1) sqrt(p) h^{2r}. With genus_refinement and a
/// quadratic character the Weil factor 2r-1 becomes 2r-2; never used by certify.
double weil_bound_general(double p, double h, unsigned r, OrderClass cls = OrderClass::higher,
                          bool genus_refinement = false);

/// The r = 2 bound split by order class.
double weil_bound_r2(double p, double h, OrderClass cls);

/// Best applicable bound: the class-split value when r = 2, else the general one.
double weil_bound(double p, double h, unsigned r, OrderClass cls);

/// W(p,h,r) with S_chi <= W sqrt(p) h^{2r}; the smaller branch when r = 2.
double w_factor(double p, double h, unsigned r);
double w_factor_general(double p, double h, unsigned r);
double w_factor_r2(double p, double h);

struct StirlingSandwich {
    unsigned r = 0;
    double log_lower = 0.0; ///< r log(2r/e)
    double log_mid = 0.0;   ///< log((2r)! / (2^r r!))
    double log_upper = 0.0; ///< log(sqrt 2) + r log(2r/e)
    double lower() const;
    double mid() const;
    double upper() const;
    bool strictly_ordered() const { return log_lower < log_mid && log_mid < log_upper; }
};

/// Evaluated in log space; throws ConsistencyError if the ordering fails.
StirlingSandwich stirling_sandwich(unsigned r);

/// One row of a character-sum verification report.
struct CharsumRecord {
    u64 p = 0;
    u64 j = 0;
    u64 order = 0;
    u64 h = 0;
    unsigned r = 0;
    double exact = 0.0;
    double bound = 0.0;
    double slack = 0.0; ///< (bound - exact) / bound
};

struct CharsumSweepSummary {
    u64 primes = 0;
    u64 characters = 0;
    u64 checks = 0;
    u64 violations = 0;
    CharsumRecord tightest; ///< smallest relative slack seen
    std::vector<CharsumRecord> violating;
};

/// Every prime in [p_min, p_max], every non-principal character, 2 <= h <= h_max,
/// 1 <= r <= r_max: exact S against the general bound, and against the
/// class-split bound as well when r = 2. A check fails only when
/// exact - error_bound exceeds the bound.
CharsumSweepSummary charsum_sweep(u64 p_min, u64 p_max, u64 h_max, unsigned r_max);

} // namespace gpcert::chars
