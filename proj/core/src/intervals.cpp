#include "gpcert/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gpcert/errors.hpp"
#include "gpcert/ntcore.hpp"

namespace gpcert::intervals {

using cert::CertifiedReal;

namespace {

BigInt floor_q(const Rational& x)
{
    const BigInt n = boost::multiprecision::numerator(x);
    const BigInt d = boost::multiprecision::denominator(x);
    BigInt q = n / d;
    if (n < 0 && q * d != n) {
        q -= 1;
    }
    return q;
}

BigInt ceil_q(const Rational& x)
{
    return -floor_q(-x);
}

struct Segment {
    Rational lo;
    Rational hi;
    bool lo_closed;
    bool hi_closed;
};

CertifiedReal three_over_pi_sq()
{
    const auto pi = CertifiedReal::pi();
    return CertifiedReal::from_int(3) / (pi * pi);
}

CertifiedReal cr(const Rational& x)
{
    return CertifiedReal::from_rational(x);
}

CertifiedReal cr(long x)
{
    return CertifiedReal::from_int(x);
}

CertifiedReal cr(const BigInt& x)
{
    return CertifiedReal::from_bigint(x);
}

/// Certified lower bound of a as a double.
double lo(const CertifiedReal& a)
{
    return a.lo_double();
}

void note(ClaimReport& rep, const CertifiedReal& margin, double at)
{
    const double m = lo(margin);
    if (rep.segments == 0 || m < rep.worst_slack) {
        rep.worst_slack = m;
        rep.worst_at = at;
    }
}

CertifiedReal abs_upper(const CertifiedReal& x)
{
    return max(x, -x);
}

} // namespace

BigInt count_open_closed(const Rational& lo, const Rational& hi)
{
    const BigInt n = floor_q(hi) - floor_q(lo);
    return n > 0 ? n : BigInt(0);
}

BigInt count_closed_open(const Rational& lo, const Rational& hi)
{
    const BigInt n = ceil_q(hi) - ceil_q(lo);
    return n > 0 ? n : BigInt(0);
}

bool in_I(const IntervalEntry& e, const BigInt& z)
{
    const Rational zr(z);
    return e.i_lo < zr && zr <= e.i_hi;
}

bool in_J(const IntervalEntry& e, const BigInt& z)
{
    const Rational zr(z);
    return e.j_lo <= zr && zr < e.j_hi;
}

IntervalSystem build_intervals(u64 p, const Rational& H, u64 h)
{
    if (h < 2) {
        throw ParameterError("build_intervals: h >= 2 required");
    }
    if (H <= 0 || H >= Rational(BigInt(p))) {
        throw ParameterError("build_intervals: 0 < H < p required");
    }
    const Rational X = H / Rational(BigInt(h));
    if (X < 2) {
        throw ParameterError("build_intervals: X = H/h >= 2 required");
    }
    if (2 * H * X >= Rational(BigInt(p))) {
        throw ParameterError("build_intervals: 2HX < p required");
    }

    IntervalSystem sys;
    sys.p = p;
    sys.H = H;
    sys.h = h;
    sys.X = X;
    const u64 qmax = static_cast<u64>(floor_q(X));
    const Rational hm1(BigInt(h) - 1);
    for (u64 q = 1; q <= qmax; ++q) {
        const Rational qr{BigInt(q)};
        for (u64 t = 0; t < q; ++t) {
            if (nt::gcd(t, q) != 1) {
                continue;
            }
            const Rational tp{BigInt(t) * BigInt(p)};
            IntervalEntry e;
            e.q = q;
            e.t = t;
            e.i_lo = tp / qr;
            e.i_hi = (tp + H) / qr - hm1;
            e.j_lo = (tp - H) / qr;
            e.j_hi = tp / qr - hm1;
            sys.entries.push_back(std::move(e));
        }
    }
    if (!check_disjoint(sys)) {
        throw ConsistencyError("build_intervals: interval family overlaps or leaves [-H, p-H)");
    }
    return sys;
}

bool check_disjoint(const IntervalSystem& sys)
{
    std::vector<Segment> segs;
    segs.reserve(2 * sys.entries.size());
    for (const auto& e : sys.entries) {
        if (e.i_lo < e.i_hi) {
            segs.push_back({e.i_lo, e.i_hi, false, true});
        }
        if (e.j_lo < e.j_hi) {
            segs.push_back({e.j_lo, e.j_hi, true, false});
        }
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    const Rational left = -sys.H;
    const Rational right = Rational(BigInt(sys.p)) - sys.H;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto& s = segs[i];
        if (s.lo < left) {
            return false;
        }
        if (s.hi > right || (s.hi == right && s.hi_closed)) {
            return false;
        }
        if (i + 1 < segs.size()) {
            const auto& n = segs[i + 1];
            if (s.hi > n.lo || (s.hi == n.lo && s.hi_closed && n.lo_closed)) {
                return false;
            }
        }
    }
    return true;
}

BigInt count_points(const IntervalSystem& sys)
{
    BigInt total = 0;
    for (const auto& e : sys.entries) {
        total += count_open_closed(e.i_lo, e.i_hi);
        total += count_closed_open(e.j_lo, e.j_hi);
    }
    return total;
}

EnvelopePair envelopes(double X, double h)
{
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    EnvelopePair env;
    env.a_factor = 1.0 - 2.0 * pi2 / (9.0 * X);
    env.b_factor = 1.0 + 2.0 * pi2 / (9.0 * X) + 1.0 / h + pi2 / (3.0 * h) * std::log(X) / X;
    return env;
}

CertifiedEnvelope envelopes_certified(const CertifiedReal& X, const CertifiedReal& h)
{
    const auto prec = std::max(X.precision(), h.precision());
    const auto pi = CertifiedReal::pi(prec);
    const auto pi2 = pi * pi;
    const auto one = CertifiedReal::from_int(1, prec);
    const auto k = CertifiedReal::from_int(2, prec) * pi2 / (CertifiedReal::from_int(9, prec) * X);
    CertifiedEnvelope env{one - k, one + k + one / h + pi2 / (CertifiedReal::from_int(3, prec) * h) * log(X) / X};
    return env;
}

Rational sum_S(const Rational& X)
{
    if (X < 1) {
        throw DomainError("sum_S needs X >= 1");
    }
    const u64 qmax = static_cast<u64>(floor_q(X));
    const auto phi = nt::phi_table(qmax);
    Rational ratio_sum = 0;
    BigInt phi_sum = 0;
    for (u64 q = 1; q <= qmax; ++q) {
        ratio_sum += Rational(BigInt(phi[q]), BigInt(q));
        phi_sum += phi[q];
    }
    return X * ratio_sum - Rational(phi_sum);
}

BigInt sum_T(const Rational& X)
{
    if (X < 1) {
        throw DomainError("sum_T needs X >= 1");
    }
    const u64 qmax = static_cast<u64>(floor_q(X));
    const auto phi = nt::phi_table(qmax);
    BigInt total = 0;
    for (u64 q = 1; q <= qmax; ++q) {
        total += phi[q];
    }
    return total;
}

EnvelopeCheck check_envelope(const IntervalSystem& sys)
{
    EnvelopeCheck out;
    out.count = count_points(sys);
    const auto X = cr(sys.X);
    const auto h = cr(static_cast<long>(sys.h));
    const auto env = envelopes_certified(X, h);
    const auto pi = CertifiedReal::pi();
    const auto base = CertifiedReal::from_int(6) / (pi * pi) * X * X * h;
    out.lower = env.a * base;
    out.upper = env.b * base;
    const auto n = cr(out.count);
    out.lower_ok = cert::is_yes(cert::less_equal(out.lower, n));
    out.upper_ok = cert::is_yes(cert::less_equal(n, out.upper));

    const Rational S = sum_S(sys.X);
    const BigInt T = sum_T(sys.X);
    out.two_h_S = 2 * Rational(BigInt(sys.h)) * S;
    out.two_T = 2 * T;
    const Rational N(out.count);
    out.count_lower_ok = out.two_h_S <= N;
    out.count_upper_ok = N < out.two_h_S + Rational(2 * out.two_T);
    out.literal_upper_ok = N <= out.two_h_S + Rational(out.two_T);
    return out;
}

ClaimReport verify_S_envelope(u64 x_max)
{
    ClaimReport rep;
    rep.claim = "|S - 3X^2/pi^2| <= 2X/3";
    rep.x_from = 1.0;
    rep.x_to = static_cast<double>(x_max);
    const auto c = three_over_pi_sq();
    const auto two_thirds = cr(Rational(2, 3));
    const auto phi = nt::phi_table(x_max);
    Rational P = 0;
    BigInt T = 0;
    bool ok = true;
    for (u64 k = 1; k < x_max; ++k) {
        P += Rational(BigInt(phi[k]), BigInt(k));
        T += phi[k];
        const auto Pc = cr(P);
        const auto Tc = cr(T);
        // On [k, k+1]: S = XP - T, d1 = 2X/3 - S + cX^2 convex, d2 = 2X/3 + S - cX^2 concave.
        for (u64 x : {k, k + 1}) {
            const auto X = cr(static_cast<long>(x));
            const auto quad = c * X * X;
            const auto d1 = two_thirds * X - (X * Pc - Tc) + quad;
            const auto d2 = two_thirds * X + (X * Pc - Tc) - quad;
            const auto m = min(d1, d2);
            note(rep, m, static_cast<double>(x));
            ++rep.segments;
            ok = ok && lo(m) > 0;
        }
        const auto slope = Pc - two_thirds;
        const auto xstar = slope / (cr(2L) * c);
        const bool maybe_inside = !(xstar.hi_double() < static_cast<double>(k) ||
                                    xstar.lo_double() > static_cast<double>(k + 1));
        if (maybe_inside) {
            const auto d1_min = Tc - slope * slope / (cr(4L) * c);
            note(rep, d1_min, xstar.mid_double());
            ok = ok && lo(d1_min) > 0;
        }
    }
    rep.pass = ok;
    return rep;
}

ClaimReport verify_T_envelope(u64 x_max)
{
    ClaimReport rep;
    rep.claim = "|T - 3X^2/pi^2| <= X log X";
    rep.x_from = 2.0;
    rep.x_to = static_cast<double>(x_max);
    const auto c = three_over_pi_sq();
    // X log X + T - cX^2 is concave once X > 1/(2c); both endpoints then bound it.
    bool ok = cert::is_yes(cert::less(cr(1L) / (cr(2L) * c), cr(2L)));
    const auto phi = nt::phi_table(x_max);
    BigInt T = 1;
    for (u64 k = 2; k < x_max; ++k) {
        T += phi[k];
        const auto Tc = cr(T);
        for (u64 x : {k, k + 1}) {
            const auto X = cr(static_cast<long>(x));
            const auto xlogx = X * log(X);
            const auto quad = c * X * X;
            auto m = xlogx + Tc - quad;
            if (x == k) {
                // X log X - T + cX^2 is increasing, so its minimum is at the left end.
                m = min(m, xlogx - Tc + quad);
            }
            note(rep, m, static_cast<double>(x));
            ++rep.segments;
            ok = ok && lo(m) > 0;
        }
    }
    rep.pass = ok;
    return rep;
}

std::vector<ClaimReport> verify_external_inputs(u64 x_max)
{
    if (x_max < 2) {
        throw DomainError("verify_external_inputs needs x_max >= 2");
    }
    const auto mu = nt::moebius_table(x_max);
    const auto pi = CertifiedReal::pi();
    const auto six_pi2 = cr(6L) / (pi * pi);
    const auto tenth = cr(Rational(1, 10));
    const auto cipu = CertifiedReal::from_decimal("0.679091");

    ClaimReport ramare{"|sum_{d<=X} mu(d)/d| <= 1/10 + 2/X", 1.0, static_cast<double>(x_max)};
    ClaimReport cipu_rep{"sum_{d<=X} mu^2(d) <= 6X/pi^2 + 0.679091 sqrt(X)", 1.0,
                         static_cast<double>(x_max)};
    ClaimReport t3{"sum_{d<=X} mu^2(d)/d <= 6 log(X)/pi^2 + 2", 1.0, static_cast<double>(x_max)};
    ClaimReport s1{"|sum_{d>X} mu(d)/d^2| <= 1/X", 1.0, static_cast<double>(x_max)};
    bool ok_r = true;
    bool ok_c = true;
    bool ok_t = true;
    bool ok_s = true;

    auto m1 = cr(0L);
    auto m3 = cr(0L);
    auto m4 = cr(0L);
    long squarefree = 0;
    for (u64 k = 1; k < x_max; ++k) {
        const auto K = cr(static_cast<long>(k));
        const auto inv = cr(1L) / K;
        if (mu[k] != 0) {
            ++squarefree;
            m3 += inv;
            if (mu[k] > 0) {
                m1 += inv;
                m4 += inv * inv;
            } else {
                m1 -= inv;
                m4 -= inv * inv;
            }
        }
        // Sums are constant on [k, k+1); decreasing right-hand sides are worst at k+1.
        const auto K1 = cr(static_cast<long>(k + 1));
        const auto mr = tenth + cr(2L) / K1 - abs_upper(m1);
        const auto mc = six_pi2 * K + cipu * sqrt(K) - cr(static_cast<long>(squarefree));
        const auto mt = six_pi2 * log(K) + cr(2L) - m3;
        const auto ms = cr(1L) / K1 - abs_upper(six_pi2 - m4);
        note(ramare, mr, static_cast<double>(k + 1));
        note(cipu_rep, mc, static_cast<double>(k));
        note(t3, mt, static_cast<double>(k));
        note(s1, ms, static_cast<double>(k + 1));
        ++ramare.segments;
        ++cipu_rep.segments;
        ++t3.segments;
        ++s1.segments;
        ok_r = ok_r && lo(mr) >= 0;
        ok_c = ok_c && lo(mc) >= 0;
        ok_t = ok_t && lo(mt) >= 0;
        ok_s = ok_s && lo(ms) >= 0;
    }
    ramare.pass = ok_r;
    cipu_rep.pass = ok_c;
    t3.pass = ok_t;
    s1.pass = ok_s;
    return {ramare, cipu_rep, t3, s1};
}

std::vector<GridPoint> envelope_grid()
{
    static const u64 primes[] = {10'007, 100'003, 1'000'003};
    static const u64 hs[] = {2, 3, 4, 5, 7, 10, 16, 25, 40};
    // X in tenths.
    static const long xs[] = {20, 25, 30, 40, 50, 65, 80, 100, 130, 170, 220, 280, 350, 420, 500};
    std::vector<GridPoint> out;
    for (u64 p : primes) {
        for (u64 h : hs) {
            for (long x : xs) {
                const Rational X(x, 10);
                const Rational H = X * Rational(BigInt(h));
                if (2 * H * X < Rational(BigInt(p)) && H < Rational(BigInt(p))) {
                    out.push_back({p, H, h});
                }
            }
        }
    }
    return out;
}

EnvelopeGridSummary envelope_grid_check(const std::vector<GridPoint>& grid)
{
    EnvelopeGridSummary out;
    out.worst_lower_margin = std::numeric_limits<double>::infinity();
    out.worst_upper_margin = std::numeric_limits<double>::infinity();
    for (const auto& g : grid) {
        const auto sys = build_intervals(g.p, g.H, g.h);
        const auto chk = check_envelope(sys);
        ++out.triples;
        if (!chk.lower_ok || !chk.upper_ok) {
            ++out.envelope_violations;
        }
        if (!chk.count_lower_ok || !chk.count_upper_ok) {
            ++out.count_violations;
        }
        if (!chk.literal_upper_ok) {
            ++out.literal_failures;
        }
        const double n = chk.count.convert_to<double>();
        out.worst_lower_margin = std::min(out.worst_lower_margin, (n - chk.lower.hi_double()) / n);
        out.worst_upper_margin = std::min(out.worst_upper_margin, (chk.upper.lo_double() - n) / n);
    }
    return out;
}

} // namespace gpcert::intervals
