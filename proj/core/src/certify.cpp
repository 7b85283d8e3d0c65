#include "gpcert/certify.hpp"

#include <sstream>

#include "gpcert/errors.hpp"
#include "gpcert/intervals.hpp"
#include "gpcert/ntcore.hpp"

namespace gpcert::certify {

using cert::is_yes;
using cert::Tribool;

namespace {

std::string rational_string(const Rational& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

struct Num {
    Precision prec;
    CertifiedReal operator()(long v) const { return CertifiedReal::from_int(v, prec); }
    CertifiedReal operator()(const BigInt& v) const { return CertifiedReal::from_bigint(v, prec); }
    CertifiedReal operator()(const Rational& v) const { return CertifiedReal::from_rational(v, prec); }
    CertifiedReal pi() const { return CertifiedReal::pi(prec); }
    CertifiedReal e() const { return CertifiedReal::euler(prec); }
};

Verdict verdict_of(Tribool t)
{
    switch (t) {
    case Tribool::yes:
        return Verdict::certified;
    case Tribool::no:
        return Verdict::failed;
    default:
        return Verdict::indeterminate;
    }
}

/// (pi^2/6) B^{2r-1} / A^{2r}.
CertifiedReal envelope_factor(const Num& n, const CertifiedReal& A, const CertifiedReal& B, unsigned r)
{
    const auto pi = n.pi();
    return pi * pi / n(6L) * pow(B, 2L * r - 1) / pow(A, 2L * r);
}

std::string pow_string(const Rational& x)
{
    const auto s = rational_string(x);
    return s == "1" ? "p" : "p^(" + s + ")";
}

} // namespace

PSpec PSpec::exact(const BigInt& p, unsigned omega)
{
    PSpec s;
    s.kind = Kind::exact;
    s.p = p;
    s.omega = omega;
    return s;
}

PSpec PSpec::threshold(const BigInt& p0, unsigned omega)
{
    PSpec s;
    s.kind = Kind::threshold;
    s.p = p0;
    s.omega = omega;
    return s;
}

PSpec PSpec::power_of_ten(unsigned exponent, unsigned omega)
{
    return threshold(boost::multiprecision::pow(BigInt(10), exponent), omega);
}

std::string PSpec::describe() const
{
    std::string pstr = p.str();
    if (pstr.size() > 24) {
        // Show powers of ten compactly.
        const BigInt ten_k = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(pstr.size() - 1));
        if (ten_k == p) {
            pstr = "1e" + std::to_string(pstr.size() - 1);
        }
    }
    if (kind == Kind::exact) {
        return "p = " + pstr + " (omega = " + std::to_string(omega) + ")";
    }
    return "p >= " + pstr + ", omega(p-1) = " + std::to_string(omega);
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::certified:
        return "certified";
    case Verdict::failed:
        return "failed";
    default:
        return "indeterminate";
    }
}

std::string PowerShape::describe_H() const
{
    return rational_string(c_H) + " * " + pow_string(a);
}

std::string PowerShape::describe_h() const
{
    return "ceil(" + rational_string(c_h) + " * " + pow_string(b) + ")";
}

CertifiedReal pow_rational(const CertifiedReal& p, const Rational& x)
{
    if (x == 0) {
        return CertifiedReal::from_int(1, p.precision());
    }
    return exp(CertifiedReal::from_rational(x, p.precision()) * log(p));
}

CertifiedReal sieve_factor_certified(const sieve::SieveSummary& s, Precision prec)
{
    return CertifiedReal::from_rational(s.factor(), prec);
}

WBound w_factor_certified(const CertifiedReal& p, const CertifiedReal& h, unsigned r)
{
    const Num n{std::max(p.precision(), h.precision())};
    const auto sp = sqrt(p);
    const auto general = sqrt(n(2L)) * pow(n(2L * r) / (n.e() * h), static_cast<long>(r)) * sp + n(2L * r - 1);
    if (r != 2) {
        return {general, "general"};
    }
    const auto r2 = n(3L) * (n(1L) + sp / (h * h));
    const bool r2_smaller = r2.hi_double() < general.hi_double();
    return {min(general, r2), r2_smaller ? "r=2" : "general"};
}

Certificate theorem3_certify(const PSpec& spec, const sieve::SieveSummary& sieve, unsigned r, u64 h,
                             const Rational& H, const CertifyOptions& opt)
{
    if (spec.is_threshold()) {
        throw ParameterError("theorem3_certify: an exact h needs an exact prime");
    }
    if (sieve.delta <= 0) {
        throw ConfigError("theorem3_certify: delta must be positive");
    }
    if (sieve.omega != spec.omega) {
        throw ConfigError("theorem3_certify: sieve omega differs from omega(p-1)");
    }
    if (r == 0) {
        throw ParameterError("theorem3_certify: r >= 1 required");
    }
    if (h < 2) {
        throw ParameterError("theorem3_certify: h >= 2 required");
    }
    const Rational hr{BigInt(h)};
    if (H < 2 * hr) {
        throw ParameterError("theorem3_certify: H >= 2h required");
    }
    if (2 * H * H >= hr * Rational(spec.p)) {
        throw ParameterError("theorem3_certify: 2H^2 < hp required");
    }

    Certificate c;
    for (Precision prec = opt.precision;; prec *= 2) {
        const Num n{prec};
        c = Certificate{};
        c.p_spec = spec;
        c.r = r;
        c.h = h;
        c.h_desc = std::to_string(h);
        c.H = n(H);
        c.sieve = sieve;
        c.precision = prec;

        const auto P = n(spec.p);
        const auto hc = n(BigInt(h));
        const auto X = n(H / hr);
        const auto env = intervals::envelopes_certified(X, hc);
        const auto F = sieve_factor_certified(sieve, prec);
        const auto W = w_factor_certified(P, hc, r);
        c.rhs = n(H * H);
        c.provenance["W_branch"] = W.branch;
        c.provenance["W_hi"] = W.value.hi_string(10);
        c.provenance["A_lo"] = env.a.lo_string(10);
        c.provenance["B_hi"] = env.b.hi_string(10);
        c.provenance["X"] = X.lo_string(10);
        c.provenance["F"] = rational_string(sieve.factor());

        const auto a_pos = cert::less(n(0L), env.a);
        if (a_pos != Tribool::yes) {
            c.lhs = c.rhs;
            c.verdict = a_pos == Tribool::no ? Verdict::failed : Verdict::indeterminate;
            c.notes.push_back("A(X) is not certified positive");
        } else {
            c.lhs = envelope_factor(n, env.a, env.b, r) * pow(F, 2L * r) * hc * sqrt(P) * W.value;
            c.verdict = verdict_of(cert::less(c.lhs, c.rhs));
        }
        if (c.verdict != Verdict::indeterminate || prec * 2 > opt.max_precision) {
            break;
        }
    }
    return c;
}

ShapeAnalysis analyze_shape(const BigInt& p0, const PowerShape& shape, const CertifiedReal& sieve_factor,
                            const Rational& gamma, Precision prec)
{
    const Num n{prec};
    const unsigned r = shape.r;
    ShapeAnalysis out;
    auto fail = [&](const std::string& why, Tribool t) {
        if (out.failure.empty()) {
            out.failure = why;
            out.indeterminate = t == Tribool::unknown;
        }
    };
    if (r == 0 || shape.c_H <= 0 || shape.c_h <= 0 || shape.b < 0) {
        throw ParameterError("power shape needs r >= 1, c_H > 0, c_h > 0, b >= 0");
    }
    if (shape.a < shape.b) {
        fail("a >= b (X nondecreasing in p)", Tribool::no);
    }

    const auto P = n(p0);
    const auto pa = pow_rational(P, shape.a);
    const auto pb = pow_rational(P, shape.b);
    const auto cH = n(shape.c_H);
    const auto ch = n(shape.c_h);
    out.h_lo = ch * pb;
    const auto h_hi = out.h_lo + n(1L);
    const auto H_lo = cH * pa;
    out.X_lo = H_lo / h_hi;

    if (auto t = cert::less_equal(n(2L), out.h_lo); t != Tribool::yes) {
        fail("h >= 2", t);
    }
    if (auto t = cert::less_equal(n(2L) * h_hi, H_lo); t != Tribool::yes) {
        fail("H >= 2h", t);
    }
    const Rational spread = 1 + shape.b - 2 * shape.a;
    const Rational lead = 2 * shape.c_H * shape.c_H / shape.c_h;
    if (spread < 0) {
        fail("2H^2 < hp (exponent 1 + b - 2a < 0)", Tribool::no);
    } else if (spread == 0) {
        // h > c_h p^b strictly: p^b is irrational for prime p when b is not an integer.
        const bool b_integral = boost::multiprecision::denominator(shape.b) == 1;
        if (lead > 1 || (lead == 1 && b_integral)) {
            fail("2H^2 < hp", Tribool::no);
        }
    } else if (auto t = cert::less(n(lead), pow_rational(P, spread)); t != Tribool::yes) {
        fail("2H^2 < hp", t);
    }
    if (auto t = cert::less_equal(n.e(), out.X_lo); t != Tribool::yes) {
        fail("X >= e (B(X) nonincreasing)", t);
    }

    const auto env = intervals::envelopes_certified(out.X_lo, out.h_lo);
    out.A_lo = env.a;
    out.B_hi = env.b;
    if (auto t = cert::less(n(0L), env.a); t != Tribool::yes) {
        fail("A(X) > 0", t);
        out.ratio = n(0L);
        out.W_term = n(0L);
        out.uniform = false;
        return out;
    }

    const Rational rr(static_cast<long>(r));
    const Rational e1 = shape.b * (1 - rr) + 1 - 2 * shape.a + gamma;
    const Rational e2 = shape.b + Rational(1, 2) - 2 * shape.a + gamma;
    const Rational e3 = Rational(1, 2) - 2 * shape.a + gamma;
    const Rational e4 = 1 - shape.b - 2 * shape.a + gamma;
    const auto cH2 = cH * cH;

    std::optional<CertifiedReal> general;
    if (e1 <= 0 && e2 <= 0 && e3 <= 0) {
        general = (sqrt(n(2L)) * pow(n(2L * r) / n.e(), static_cast<long>(r)) *
                       pow(ch, 1L - static_cast<long>(r)) * pow_rational(P, e1) +
                   n(2L * r - 1) * ch * pow_rational(P, e2) + n(2L * r - 1) * pow_rational(P, e3)) /
                  cH2;
    }
    std::optional<CertifiedReal> r2;
    if (r == 2 && e2 <= 0 && e3 <= 0 && e4 <= 0) {
        r2 = (n(3L) * ch * pow_rational(P, e2) + n(3L) * pow_rational(P, e3) +
              n(3L) * pow_rational(P, e4) / ch) /
             cH2;
    }
    if (general && r2) {
        out.W_term = min(*general, *r2);
        out.w_branch = r2->hi_double() < general->hi_double() ? "r=2" : "general";
    } else if (general) {
        out.W_term = *general;
        out.w_branch = "general";
    } else if (r2) {
        out.W_term = *r2;
        out.w_branch = "r=2";
    } else {
        fail("W term nonincreasing in p (exponents)", Tribool::no);
        out.W_term = n(0L);
        out.ratio = n(0L);
        return out;
    }
    out.ratio = envelope_factor(n, env.a, env.b, r) * pow(sieve_factor, 2L * r) * out.W_term;
    out.uniform = out.failure.empty();
    return out;
}

Certificate theorem3_certify(const PSpec& spec, const sieve::SieveSummary& sieve, const PowerShape& shape,
                             const CertifyOptions& opt)
{
    if (!spec.is_threshold()) {
        throw ParameterError("theorem3_certify: a power shape needs a threshold p");
    }
    if (sieve.delta <= 0) {
        throw ConfigError("theorem3_certify: delta must be positive");
    }
    if (sieve.omega != spec.omega) {
        throw ConfigError("theorem3_certify: sieve omega differs from omega(p-1)");
    }

    Certificate c;
    for (Precision prec = opt.precision;; prec *= 2) {
        const Num n{prec};
        c = Certificate{};
        c.p_spec = spec;
        c.r = shape.r;
        c.h_desc = shape.describe_h();
        c.sieve = sieve;
        c.precision = prec;
        c.H = n(shape.c_H) * pow_rational(n(spec.p), shape.a);
        c.rhs = n(1L);

        const auto sa = analyze_shape(spec.p, shape, sieve_factor_certified(sieve, prec), 0, prec);
        c.lhs = sa.ratio;
        c.provenance["H_shape"] = shape.describe_H();
        c.provenance["normalization"] = "lhs bounds LHS/H^2 uniformly over p >= P0";
        c.provenance["W_branch"] = sa.w_branch;
        c.provenance["A_lo"] = sa.A_lo.lo_string(10);
        c.provenance["B_hi"] = sa.B_hi.hi_string(10);
        c.provenance["X_lo"] = sa.X_lo.lo_string(10);
        c.provenance["F"] = rational_string(sieve.factor());
        if (!sa.failure.empty()) {
            c.verdict = sa.indeterminate ? Verdict::indeterminate : Verdict::failed;
            c.notes.push_back("precondition not certified: " + sa.failure);
        } else {
            c.verdict = verdict_of(cert::less(c.lhs, c.rhs));
        }
        if (c.verdict != Verdict::indeterminate || prec * 2 > opt.max_precision) {
            break;
        }
    }
    return c;
}

namespace {

CertifiedReal bound_from_factor(const BigInt& p, unsigned r, const Rational& F, Precision prec)
{
    if (r == 0) {
        throw ParameterError("bound needs r >= 1");
    }
    const Num n{prec};
    const Rational expo = Rational(1, 4) + Rational(1, 4 * static_cast<long>(r));
    return n(2L * r) * pow(n(F), static_cast<long>(r)) * pow_rational(n(p), expo);
}

} // namespace

CertifiedReal bound_theorem1(const BigInt& p, unsigned r, unsigned omega, Precision prec)
{
    return bound_from_factor(p, r, sieve::sieve_factor(omega, 0, 1), prec);
}

CertifiedReal bound_sieved(const BigInt& p, unsigned r, unsigned omega, unsigned s, const Rational& delta,
                           Precision prec)
{
    return bound_from_factor(p, r, sieve::sieve_factor(omega, s, delta), prec);
}

const std::vector<BurgessConstant>& burgess_table()
{
    static const std::vector<BurgessConstant> table{
        {2, "3.5851", "12.8530"}, {3, "2.5144", "15.8966"}, {4, "2.1258", "20.4216"},
        {5, "1.9231", "26.3033"}, {6, "1.7959", "33.5501"}, {7, "1.7066", "42.1621"},
        {8, "1.6384", "51.9230"}, {9, "1.5857", "63.3855"}, {10, "1.5410", "75.5139"},
    };
    return table;
}

CertifiedReal burgess_comparison_bound(const BigInt& p, unsigned r, unsigned omega, Precision prec)
{
    if (r < 2 || r > 10) {
        throw RangeError("Burgess constants are tabulated for 2 <= r <= 10 only");
    }
    const Num n{prec};
    const auto& row = burgess_table()[r - 2];
    const auto P = n(p);
    const Rational expo = Rational(1, 4) + Rational(1, 4 * static_cast<long>(r));
    return CertifiedReal::from_decimal(row.c_pow_r, prec) *
           n(BigInt(1) << (static_cast<unsigned long>(r) * omega)) * pow_rational(P, expo) * sqrt(log(P));
}

} // namespace gpcert::certify
