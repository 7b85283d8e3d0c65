#include "gpcert/case_engine.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gpcert/errors.hpp"
#include "gpcert/ntcore.hpp"

namespace gpcert::certify {

using cert::Tribool;

namespace {

struct Target {
    BigInt threshold;         ///< smallest p covered
    Rational exponent;        ///< condition K F^4 < p^exponent
    const char* stated_constant;
    PowerShape shape;
    BigInt reduction_p0;      ///< where the reduction constant is certified
    unsigned last_omega;      ///< largest omega handled by a per-omega row
    unsigned coverage_k;      ///< primorial(coverage_k) > 10^1000 closes the finite range
};

Target target_data(CaseTarget t)
{
    Target d;
    if (t == CaseTarget::cor2) {
        d.threshold = boost::multiprecision::pow(BigInt(10), 22);
        d.exponent = Rational(1, 2);
        d.stated_constant = "13";
        d.shape = {2, Rational(1), Rational(5, 8), Rational(2), Rational(1, 4)};
        d.reduction_p0 = boost::multiprecision::pow(BigInt(10), 20);
        d.last_omega = 199;
        d.coverage_k = 201;
    } else {
        d.threshold = boost::multiprecision::pow(BigInt(10), 56);
        d.exponent = Rational(1, 4);
        d.stated_constant = "7";
        d.shape = {2, Rational(999, 1000), Rational(1, 2), Rational(1), Rational(1, 4)};
        d.reduction_p0 = d.threshold;
        d.last_omega = 350;
        d.coverage_k = 351;
    }
    return d;
}

/// log10(rhs.lo / lhs.hi), computed in MPFR so 10^1000-sized values survive.
double log10_margin(const CertifiedReal& lhs, const CertifiedReal& rhs)
{
    if (mpfr_sgn(lhs.hi()) <= 0) {
        return std::numeric_limits<double>::infinity();
    }
    if (mpfr_sgn(rhs.lo()) <= 0) {
        return -std::numeric_limits<double>::infinity();
    }
    mpfr_t a, b;
    mpfr_inits2(64, a, b, static_cast<mpfr_ptr>(nullptr));
    mpfr_log10(a, rhs.lo(), MPFR_RNDD);
    mpfr_log10(b, lhs.hi(), MPFR_RNDU);
    mpfr_sub(a, a, b, MPFR_RNDD);
    const double out = mpfr_get_d(a, MPFR_RNDD);
    mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
    return out;
}

CaseRow make_row(std::string regime, unsigned omega, unsigned s, const Rational& delta, CertifiedReal lhs,
                 CertifiedReal rhs, bool strict)
{
    CaseRow row;
    row.regime = std::move(regime);
    row.omega = omega;
    row.s = s;
    row.delta_lo = delta;
    const auto t = strict ? cert::less(lhs, rhs) : cert::less_equal(lhs, rhs);
    row.pass = t == Tribool::yes;
    if (t == Tribool::unknown) {
        row.note = "indeterminate at working precision";
    }
    row.margin = log10_margin(lhs, rhs);
    row.lhs = std::move(lhs);
    row.rhs = std::move(rhs);
    return row;
}

/// Smallest p with omega(p-1) = omega at or above the threshold: p - 1 >= primorial(omega).
BigInt worst_p(const BigInt& threshold, unsigned omega)
{
    const BigInt lower = nt::primorial(omega) + 1;
    return lower > threshold ? lower : threshold;
}

/// s minimizing F, ties to the smaller s; s = omega is never useful.
unsigned best_s(unsigned omega, DeltaPolicy policy)
{
    unsigned best = 0;
    Rational best_f = sieve::sieve_factor(omega, 0, 1);
    for (unsigned s = 1; s < omega; ++s) {
        const Rational d = delta_lower_bound(omega, s, policy);
        if (d <= 0) {
            break;
        }
        const Rational f = sieve::sieve_factor(omega, s, d);
        if (f < best_f) {
            best_f = f;
            best = s;
        }
    }
    return best;
}

std::string format_double(double x, const char* fmt)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

} // namespace

std::string to_string(CaseTarget t)
{
    return t == CaseTarget::cor2 ? "cor2" : "lonely";
}

std::string to_string(DeltaPolicy d)
{
    return d == DeltaPolicy::tight ? "tight" : "literal";
}

Rational delta_lower_bound(unsigned omega, unsigned s, DeltaPolicy policy)
{
    if (s > omega) {
        throw ConfigError("delta bound: s exceeds omega");
    }
    if (s == 0) {
        return 1;
    }
    const unsigned first = policy == DeltaPolicy::tight ? omega - s + 1 : omega - s;
    const auto q = nt::first_primes(omega);
    Rational d = 1;
    for (unsigned i = std::max(first, 1u); i <= omega; ++i) {
        d -= Rational(1, BigInt(q[i - 1]));
    }
    return d;
}

CaseReport corollary_case_engine(CaseTarget target, const CaseOptions& opt)
{
    const Precision prec = opt.precision;
    const auto n_int = [&](long v) { return CertifiedReal::from_int(v, prec); };
    const auto n_big = [&](const BigInt& v) { return CertifiedReal::from_bigint(v, prec); };
    const auto n_rat = [&](const Rational& v) { return CertifiedReal::from_rational(v, prec); };

    const Target d = target_data(target);
    CaseReport rep;
    rep.target = target;
    rep.delta = opt.delta;

    // Reduction of the main inequality to K F^4 < p^exponent.
    const Rational gamma = d.exponent;
    const auto sa = analyze_shape(d.reduction_p0, d.shape, n_int(1), gamma, prec);
    const auto stated_k = CertifiedReal::from_decimal(d.stated_constant, prec);
    rep.constant = opt.derived_constant ? sa.ratio : stated_k;
    {
        std::ostringstream cond;
        cond << (opt.derived_constant ? sa.ratio.hi_string(6) : std::string(d.stated_constant))
             << " F^4 < p^(" << d.exponent << "), H = " << d.shape.describe_H() << ", h = "
             << d.shape.describe_h() << ", r = 2";
        rep.condition = cond.str();
    }

    const Rational one = 1;
    auto shape_row = make_row("reduction", 0, 0, one, n_int(0), n_int(0), false);
    shape_row.pass = sa.uniform;
    shape_row.note = sa.uniform ? "preconditions certified for every p >= " + d.reduction_p0.str()
                                : "precondition failed: " + sa.failure;
    rep.rows.push_back(shape_row);

    if (target == CaseTarget::cor2) {
        const auto P = n_big(d.reduction_p0);
        auto x_row = make_row("reduction", 0, 0, one, n_int(10'000'000), sa.X_lo, false);
        x_row.note = "X >= 1e7";
        rep.rows.push_back(x_row);
        // h >= c_h p^{1/4} >= 2e5 because 1e20 is an exact fourth power.
        const Rational h_target = 200'000;
        const Rational q = h_target / d.shape.c_h;
        auto h_row = make_row("reduction", 0, 0, one, n_rat(q * q * q * q), P, false);
        h_row.note = "h >= 2e5";
        rep.rows.push_back(h_row);
        // h^2 >= c_h^2 sqrt(p) gives W <= 3 (1 + 1/c_h^2) exactly.
        const Rational w_bound = 3 * (1 + 1 / (d.shape.c_h * d.shape.c_h));
        auto w_row = make_row("reduction", 0, 0, one, n_rat(w_bound), n_rat(Rational(15, 4)), false);
        w_row.note = "W <= 15/4";
        rep.rows.push_back(w_row);
        auto a_row = make_row("reduction", 0, 0, one, CertifiedReal::from_decimal("0.999999", prec), sa.A_lo,
                              false);
        a_row.note = "A(X) >= 1 - 1e-6";
        rep.rows.push_back(a_row);
        auto b_row = make_row("reduction", 0, 0, one, sa.B_hi, CertifiedReal::from_decimal("1.00001", prec),
                              false);
        b_row.note = "B(X) <= 1 + 1e-5";
        rep.rows.push_back(b_row);
    }
    if (!opt.derived_constant) {
        auto k_row = make_row("reduction", 0, 0, one, sa.ratio, stated_k, false);
        k_row.note = std::string("reduced constant <= ") + d.stated_constant;
        rep.rows.push_back(k_row);
    }

    // Per-omega rows: K F^4 against the smallest admissible p^exponent.
    const auto ten11 = n_big(boost::multiprecision::pow(BigInt(10), 11));
    for (unsigned omega = 1; omega <= d.last_omega; ++omega) {
        unsigned s = 0;
        std::string regime;
        bool fixed_rhs = false;
        if (target == CaseTarget::cor2) {
            if (omega <= 8) {
                regime = "s=0";
                fixed_rhs = true;
            } else if (omega <= 17) {
                s = omega - 3;
                regime = "s=omega-3";
                fixed_rhs = true;
            } else if (omega <= 50) {
                s = omega - 3;
                regime = "s=omega-3, p>primorial";
            } else {
                s = omega - 5;
                regime = "s=omega-5, p>primorial";
            }
        } else {
            s = best_s(omega, opt.delta);
            regime = s == 0 ? "s=0" : "best s, p>primorial";
        }
        const Rational delta = delta_lower_bound(omega, s, opt.delta);
        if (delta <= 0) {
            auto row = make_row(regime, omega, s, delta, n_int(1), n_int(0), true);
            row.pass = false;
            row.note = "delta lower bound is not positive";
            rep.rows.push_back(row);
            continue;
        }
        const auto F = n_rat(sieve::sieve_factor(omega, s, delta));
        const auto lhs = rep.constant * pow(F, 4L);
        const auto rhs = fixed_rhs ? ten11 : pow_rational(n_big(worst_p(d.threshold, omega)), d.exponent);
        auto row = make_row(regime, omega, s, delta, lhs, rhs, true);
        if (fixed_rhs && row.note.empty()) {
            row.note = "LHS < 1e11 <= p^(1/2)";
        }
        rep.rows.push_back(row);
    }

    // The per-omega rows reach 10^1000 only if no p below it has a larger omega.
    {
        const auto lhs = n_big(boost::multiprecision::pow(BigInt(10), 1000));
        const auto rhs = n_big(nt::primorial(d.coverage_k));
        auto row = make_row("coverage", d.coverage_k, 0, one, lhs, rhs, true);
        row.note = "primorial(" + std::to_string(d.coverage_k) + ") > 10^1000, so p <= 10^1000 has omega <= " +
                   std::to_string(d.coverage_k - 1);
        rep.rows.push_back(row);
    }

    // p >= 10^1000 with s = 0 and omega <= 1.39 log p / log log p:
    // phi(L) = c L - 4 (1.39 log 2) L / log L - log K must be positive for L >= L0.
    {
        const auto c = n_rat(d.exponent);
        const auto robin = CertifiedReal::from_decimal("1.39", prec) * n_int(4) * log(n_int(2));
        const auto L0 = n_int(1000) * log(n_int(10));
        const auto logL0 = log(L0);
        const auto lhs = robin * L0 / logL0 + log(rep.constant);
        auto row = make_row("robin", 0, 0, one, lhs, c * L0, true);
        row.note = "phi(L0) > 0 at p = 10^1000";
        rep.rows.push_back(row);

        // (log L - 1)/log^2 L decreases once log L >= 2, so phi' > 0 at L0 is enough.
        const auto slope = robin * (logL0 - n_int(1)) / (logL0 * logL0);
        auto drow = make_row("robin", 0, 0, one, slope, c, true);
        drow.note = "phi'(L) > 0 for L >= L0";
        if (!is_yes(cert::less_equal(n_int(2), logL0))) {
            drow.pass = false;
            drow.note += " (log L0 >= 2 not certified)";
        }
        rep.rows.push_back(drow);
    }

    rep.pass = true;
    for (const auto& row : rep.rows) {
        rep.pass = rep.pass && row.pass;
    }
    return rep;
}

std::string to_tsv(const CaseReport& rep)
{
    std::ostringstream os;
    os << "# target\t" << to_string(rep.target) << "\n";
    os << "# condition\t" << rep.condition << "\n";
    os << "# delta_policy\t" << to_string(rep.delta) << "\n";
    os << "regime\tomega\ts\tdelta_lo\tlhs_hi\trhs_lo\tmargin\tverdict\tnote\n";
    for (const auto& row : rep.rows) {
        os << row.regime << '\t' << row.omega << '\t' << row.s << '\t'
           << format_double(row.delta_lo.convert_to<double>(), "%.10g") << '\t' << row.lhs.hi_string(8) << '\t'
           << row.rhs.lo_string(8) << '\t' << format_double(row.margin, "%.4f") << '\t'
           << (row.pass ? "pass" : "FAIL") << '\t' << row.note << '\n';
    }
    os << "# overall\t" << (rep.pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

} // namespace gpcert::certify
