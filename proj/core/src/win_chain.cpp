#include "gpcert/win_chain.hpp"

#include <sstream>

#include "gpcert/errors.hpp"
#include "gpcert/intervals.hpp"

namespace gpcert::certify {

using cert::Tribool;

namespace {

constexpr long kC = 2;

struct Num {
    Precision prec;
    CertifiedReal operator()(long v) const { return CertifiedReal::from_int(v, prec); }
    CertifiedReal operator()(const BigInt& v) const { return CertifiedReal::from_bigint(v, prec); }
    CertifiedReal operator()(const Rational& v) const { return CertifiedReal::from_rational(v, prec); }
    CertifiedReal dec(const char* s) const { return CertifiedReal::from_decimal(s, prec); }
    CertifiedReal pi() const { return CertifiedReal::pi(prec); }
    CertifiedReal e() const { return CertifiedReal::euler(prec); }
};

/// Constants that differ between the unsieved and the sieved chain.
struct ChainConstants {
    const char* x_min;
    const char* a_min;
    const char* y_max; ///< stated bound on rY
    const char* b_max;
};

constexpr ChainConstants kUnsieved{"2000", "0.998", "0.129", "1.145"};
constexpr ChainConstants kSieved{"500", "0.992", "0.138", "1.158"};

void add(WinChainReport& rep, std::string name, std::string relation, CertifiedReal lhs, CertifiedReal rhs,
         bool informational = false, std::string note = {})
{
    ChainCheck c;
    c.name = std::move(name);
    c.relation = relation;
    Tribool t = Tribool::unknown;
    if (relation == "<") {
        t = cert::less(lhs, rhs);
    } else if (relation == "<=") {
        t = cert::less_equal(lhs, rhs);
    }
    c.pass = t == Tribool::yes;
    if (t == Tribool::unknown && relation != "in") {
        note += note.empty() ? "indeterminate" : " (indeterminate)";
    }
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.informational = informational;
    c.note = std::move(note);
    rep.checks.push_back(std::move(c));
}

BigInt regime_start(const BigInt& p0, unsigned r)
{
    const BigInt trivial = (BigInt(1) << (8 * r)) + 1;
    return trivial > p0 ? trivial : p0;
}

/// Smallest Fermat number 2^(2^k) + 1 >= bound.
BigInt fermat_at_least(const BigInt& bound)
{
    for (unsigned k = 0;; ++k) {
        const BigInt f = (BigInt(1) << (1u << k)) + 1;
        if (f >= bound) {
            return f;
        }
    }
}

/// Shared chain for H = C r G p^{1/4+1/(4r)}, G = 2^{r omega} or F^r.
void run_chain(WinChainReport& rep, const CertifiedReal& G, const ChainConstants& k, Precision prec)
{
    const Num n{prec};
    const unsigned r = rep.r;
    const long rl = static_cast<long>(r);
    const auto P = n(rep.P);

    {
        ChainCheck c;
        c.name = "(8 log 2) r < log p";
        c.relation = "<";
        c.lhs = n(BigInt(1) << (8 * r));
        c.rhs = P;
        c.pass = (BigInt(1) << (8 * r)) < rep.P;
        c.note = "2^(8r) < p, exact integer comparison";
        rep.checks.push_back(c);
    }

    const auto kappa = sqrt(n(2L)) * n(rl - 1) / n(2 * rl - 1);
    rep.c_h = n(2 * rl) / n.e() * pow_rational(kappa, Rational(1, rl));
    const auto p_root = pow_rational(P, Rational(1, 2 * rl));
    const auto h_lo = rep.c_h * p_root;
    const auto h_hi = h_lo + n(1L);

    add(rep, "h >= 33", "<", n(32L), h_lo, false, "h = ceil(c_h p^(1/(2r))) >= 33 iff c_h p^(1/(2r)) > 32");
    add(rep, "h >= (r/2) p^(1/(2r))", "<=", n(Rational(rl, 2)), rep.c_h);
    add(rep, "h <= 1.031 c_h p^(1/(2r))", "<=", n(1L) + n(1L) / h_lo, n.dec("1.031"));
    add(rep, "1.031 c_h <= r", "<=", n.dec("1.031") * rep.c_h, n(rl));

    // With h <= r p^{1/(2r)}: X = H/h >= C G p^{1/4 - 1/(4r)}.
    const auto X_lo = n(kC) * G * pow_rational(P, Rational(1, 4) - Rational(1, 4 * rl));
    add(rep, std::string("X >= ") + k.x_min, "<=", n.dec(k.x_min), X_lo);

    const Rational w_value = Rational(rl * (2 * rl - 1), rl - 1);
    {
        ChainCheck c;
        c.name = "W <= r(2r-1)/(r-1)";
        c.relation = "in";
        c.lhs = sqrt(n(2L)) * pow(n(2 * rl) / (n.e() * rep.c_h), rl) + n(2 * rl - 1);
        c.rhs = n(w_value);
        c.pass = c.lhs.contains(w_value);
        c.note = "identity: (2r/(e c_h))^r = 1/kappa, so the bound is attained exactly";
        rep.checks.push_back(c);
    }

    // A and B are evaluated at X = H/h itself, which is larger than the estimate above.
    const auto H_lo = n(kC * rl) * G * pow_rational(P, Rational(1, 4) + Rational(1, 4 * rl));
    const auto X_act = H_lo / h_hi;
    add(rep, "X = H/h >= estimate", "<=", X_lo, X_act, true, "h <= c_h p^(1/(2r)) + 1");
    const auto env = intervals::envelopes_certified(X_act, h_lo);
    const auto A = env.a;
    const auto B = env.b;
    if (!is_yes(cert::less(n(0L), A))) {
        add(rep, "A(X) > 0", "<", n(0L), A);
        return;
    }
    const auto a_min = n.dec(k.a_min);
    const auto b_max = n.dec(k.b_max);
    if (rep.variant == "sieved") {
        add(rep, std::string("A(X)^2 >= ") + k.a_min, "<=", a_min, pow(A, 2L));
    }
    add(rep, std::string("A(X)^r >= ") + k.a_min, "<=", a_min, pow(A, rl));
    add(rep, "Bernoulli: 1 - 2 r pi^2/(9X) >= A-bound", "<=", a_min,
        n(1L) - n(2 * rl) * n.pi() * n.pi() / (n(9L) * X_lo), true, "stated route, at the estimate of X");
    const auto rY = n(rl) * (B - n(1L));
    add(rep, std::string("rY <= ") + k.y_max, "<=", rY, n.dec(k.y_max), true, "stated route to the B bound");
    add(rep, "1 + rY + (rY)^2 at the stated rY bound", "<=",
        n(1L) + n.dec(k.y_max) + n.dec(k.y_max) * n.dec(k.y_max), b_max, true,
        "rounded route; the chain uses B(X)^r directly");
    add(rep, std::string("B(X)^r <= ") + k.b_max, "<=", pow(B, rl), b_max);

    const auto pi2_6 = n.pi() * n.pi() / n(6L);
    const auto twelve = pi2_6 * (b_max * b_max) / (a_min * a_min) * n(2L) / n.e() * n.dec("1.031") *
                        pow_rational(n(2L), Rational(1, 2 * rl)) *
                        pow_rational(n(Rational(2 * rl - 1, rl - 1)), 1 - Rational(1, rl));
    add(rep, "chain constant < 4", "<", twelve, n(4L));

    // sup LHS/H^2 with F^{2r}/H^2 = 1/(C^2 r^2 p^{1/2+1/(2r)}); nonincreasing in p and free of F.
    const auto W_hi = sqrt(n(2L)) * pow(n(2 * rl) / (n.e() * h_lo), rl) * sqrt(P) + n(2 * rl - 1);
    const auto direct = pi2_6 * pow(B, 2 * rl - 1) / pow(A, 2 * rl) * h_hi * sqrt(P) * W_hi /
                        (n(kC * kC * rl * rl) * pow_rational(P, Rational(1, 2) + Rational(1, 2 * rl)));
    add(rep, "direct: sup LHS/H^2 < 1", "<", direct, n(1L));

    add(rep, "failure branch: sqrt(r/e) kappa^(1/(2r)) >= 1", "<=", n(1L),
        sqrt(n(rl) / n.e()) * pow_rational(kappa, Rational(1, 2 * rl)), true,
        "only needed when 2HX < p fails");
}

void finish(WinChainReport& rep)
{
    rep.pass = true;
    for (const auto& c : rep.checks) {
        if (!c.informational && !c.pass) {
            if (rep.pass) {
                rep.first_failure = c.name;
            }
            rep.pass = false;
        }
    }
}

} // namespace

WinChainReport theorem_win_derive(const BigInt& p0, unsigned r, unsigned omega, Precision prec)
{
    if (r < 2) {
        throw ParameterError("win chain needs r >= 2");
    }
    if (omega == 0) {
        throw ParameterError("win chain needs omega >= 1");
    }
    if (p0 < boost::multiprecision::pow(BigInt(10), 15)) {
        throw ParameterError("win chain needs p >= 1e15");
    }
    const Num n{prec};
    WinChainReport rep;
    rep.variant = "unsieved";
    rep.r = r;
    rep.omega = omega;
    rep.P0 = p0;
    rep.P = regime_start(p0, r);
    if (omega == 1) {
        rep.P = fermat_at_least(rep.P);
        rep.fermat = true;
        rep.notes.push_back("omega = 1: p - 1 is a power of two, so p >= the Fermat number " + rep.P.str());
    } else {
        rep.notes.push_back("every link improves with omega; omega = " + std::to_string(omega) +
                            " covers all larger omega");
    }
    rep.notes.push_back("e in the h recipe is Euler's number");

    const auto G = n(BigInt(1) << (r * omega));
    run_chain(rep, G, kUnsieved, prec);

    if (rep.P > p0 || rep.fermat) {
        // p <= 2^{8r}: g(p) < p^{1/2+1/(4r)} <= 2^{r omega} p^{1/4+1/(4r)} once 2^{2r} <= 2^{r omega}.
        add(rep, "trivial regime: 2^(2r) <= 2^(r omega)", "<=", n(BigInt(1) << (2 * r)), G, true,
            "covers p0 <= p <= 2^(8r)");
    }
    finish(rep);
    return rep;
}

WinChainReport theorem_win2_derive(const BigInt& p0, unsigned r, const Rational& F_min, Precision prec)
{
    if (r < 2) {
        throw ParameterError("win chain needs r >= 2");
    }
    if (F_min < 2) {
        throw ConfigError("sieved win chain: every sieve factor is >= 2");
    }
    if (p0 < boost::multiprecision::pow(BigInt(10), 15)) {
        throw ParameterError("win chain needs p >= 1e15");
    }
    const Num n{prec};
    WinChainReport rep;
    rep.variant = "sieved";
    rep.r = r;
    rep.F_min = F_min;
    rep.P0 = p0;
    rep.P = regime_start(p0, r);
    rep.notes.push_back("H uses p^(1/4+1/(4r)); the displayed statement has p^(1/4-1/(4r))");
    rep.notes.push_back("every link improves with F; F = " + F_min.str() + " is the worst case");

    run_chain(rep, pow(n(F_min), static_cast<long>(r)), kSieved, prec);

    add(rep, "consistency: 0.992 <= 0.998^2", "<=", n.dec("0.992"), n.dec("0.998") * n.dec("0.998"), true);
    add(rep, "consistency: 1.145 <= 1.158", "<=", n.dec("1.145"), n.dec("1.158"), true);
    finish(rep);
    return rep;
}

WinSweep win_chain_sweep(const BigInt& p0, unsigned r_from, unsigned r_to, Precision prec)
{
    WinSweep out;
    out.pass = true;
    for (unsigned r = r_from; r <= r_to; ++r) {
        for (auto rep : {theorem_win_derive(p0, r, 2, prec), theorem_win_derive(p0, r, 1, prec),
                         theorem_win2_derive(p0, r, 2, prec)}) {
            out.pass = out.pass && rep.pass;
            out.reports.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace gpcert::certify
