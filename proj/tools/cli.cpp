#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gpcert/case_engine.hpp"
#include "gpcert/certify.hpp"
#include "gpcert/characters.hpp"
#include "gpcert/errors.hpp"
#include "gpcert/intervals.hpp"
#include "gpcert/json_io.hpp"
#include "gpcert/ntcore.hpp"
#include "gpcert/optimize.hpp"
#include "gpcert/prime_context.hpp"
#include "gpcert/sieve.hpp"
#include "gpcert/win_chain.hpp"

namespace gpcert::cli {

namespace {

using io::json;
using cert::CertifiedReal;
using cert::Precision;
using boost::multiprecision::msb;

constexpr long kMinPrecision = 64;
constexpr long kMaxPrecision = 4096;

struct ParsedP {
    BigInt value;
    bool threshold = false; ///< written as 1e56
};

/// "1e56", "3e20" -> threshold m * 10^k; plain digits -> exact integer.
ParsedP parse_p(const std::string& text)
{
    ParsedP out;
    const auto epos = text.find_first_of("eE");
    if (epos == std::string::npos) {
        out.value = BigInt(to_bigint(parse_u128(text)));
        return out;
    }
    const auto mant = parse_u128(text.substr(0, epos));
    const auto expo = parse_u128(text.substr(epos + 1));
    if (expo > 100'000) {
        throw ParseError("exponent too large: " + text);
    }
    out.value = to_bigint(mant) * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(expo));
    out.threshold = true;
    return out;
}

Rational parse_rational(const std::string& text)
{
    try {
        if (text.find('.') != std::string::npos) {
            const auto dot = text.find('.');
            const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            const auto scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(text.size() - dot - 1));
            return Rational(BigInt(digits), scale);
        }
        return Rational(text);
    } catch (const std::exception&) {
        throw ParseError("not a rational number: " + text);
    }
}

u64 parse_u64(const std::string& text)
{
    const u128 v = parse_u128(text);
    if (v > std::numeric_limits<u64>::max()) {
        throw RangeError("value exceeds 64 bits: " + text);
    }
    return static_cast<u64>(v);
}

long default_precision()
{
    if (const char* env = std::getenv("GPCERT_PRECISION")) {
        try {
            return std::stol(env);
        } catch (const std::exception&) {
            return -1;
        }
    }
    return cert::kDefaultPrecision;
}

/// Flattens nested objects into "a.b: value" lines.
void print_human(std::ostream& os, const json& j, const std::string& prefix = {})
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            print_human(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        }
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            print_human(os, j[i], prefix + "[" + std::to_string(i) + "]");
        }
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string format;
    long precision = cert::kDefaultPrecision;
    u64 seed = 0;

    void emit(const json& j, const std::string& fallback = "json") const
    {
        const std::string f = format.empty() ? fallback : format;
        if (f == "human") {
            print_human(out, j);
        } else {
            out << j.dump(2) << "\n";
        }
    }
    const std::string& fmt(const std::string& fallback) const { return format.empty() ? fallback : format; }
};

std::string row_tsv(std::initializer_list<std::string> cells)
{
    std::string s;
    for (const auto& c : cells) {
        if (!s.empty()) {
            s += '\t';
        }
        s += c;
    }
    return s + "\n";
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_gp(const Context& ctx, const std::string& p_text)
{
    const u64 p = parse_u64(p_text);
    if (p < 2 || !nt::is_prime(p)) {
        throw DomainError("gp: p must be prime");
    }
    const auto pm1 = nt::factorize(p - 1);
    const u64 g = nt::least_primitive_root(p, pm1);
    if (ctx.fmt("human") == "human") {
        ctx.out << g << "\n";
    } else {
        ctx.emit({{"p", p}, {"g", g}, {"p_minus_1", io::to_json(pm1)}});
    }
    return kExitOk;
}

struct BoundArgs {
    std::string p = "1e56";
    unsigned r = 2;
    unsigned omega = 0;
    unsigned s = 0;
    std::string delta;
};

int cmd_bound(const Context& ctx, const std::string& kind, const BoundArgs& a)
{
    const auto P = parse_p(a.p);
    const Precision prec = ctx.precision;
    if (kind == "compare") {
        json rows = json::array();
        bool all = true;
        const auto logp = log(CertifiedReal::from_bigint(P.value, prec));
        for (const auto& row : certify::burgess_table()) {
            const auto thm1 = certify::bound_theorem1(P.value, row.r, a.omega, prec);
            const auto eq2 = certify::burgess_comparison_bound(P.value, row.r, a.omega, prec);
            // thm1/eq2 = 2r / (C(r)^r sqrt(log p)), decreasing in p.
            const auto ratio = CertifiedReal::from_int(2L * row.r, prec) /
                               (CertifiedReal::from_decimal(row.c_pow_r, prec) * sqrt(logp));
            const bool below = cert::is_yes(cert::less(thm1, eq2));
            const bool uniform = cert::is_yes(cert::less(ratio, CertifiedReal::from_int(1, prec)));
            all = all && below && uniform;
            rows.push_back({{"r", row.r},
                            {"C", row.c},
                            {"C_pow_r", row.c_pow_r},
                            {"thm1", io::enclosure(thm1, 10)},
                            {"eq2", io::enclosure(eq2, 10)},
                            {"ratio", io::enclosure(ratio, 10)},
                            {"thm1_below_eq2", below},
                            {"for_all_larger_p", uniform}});
        }
        if (ctx.fmt("json") == "tsv") {
            ctx.out << row_tsv({"r", "C(r)", "C(r)^r", "thm1_hi", "eq2_lo", "ratio_hi", "verdict"});
            for (const auto& r : rows) {
                ctx.out << row_tsv({std::to_string(r["r"].get<unsigned>()), r["C"], r["C_pow_r"],
                                    r["thm1"]["hi"], r["eq2"]["lo"], r["ratio"]["hi"],
                                    r["thm1_below_eq2"].get<bool>() && r["for_all_larger_p"].get<bool>() ? "pass"
                                                                                                     : "FAIL"});
            }
        } else {
            ctx.emit({{"p", a.p}, {"omega", a.omega}, {"rows", rows}, {"pass", all}});
        }
        return all ? kExitOk : kExitFail;
    }

    json j{{"bound", kind}, {"p", a.p}, {"threshold", P.threshold}, {"r", a.r}, {"omega", a.omega}};
    CertifiedReal value;
    if (kind == "thm1") {
        value = certify::bound_theorem1(P.value, a.r, a.omega, prec);
    } else if (kind == "sieved") {
        const Rational delta = a.delta.empty() ? certify::delta_lower_bound(a.omega, a.s, certify::DeltaPolicy::tight)
                                               : parse_rational(a.delta);
        if (a.delta.empty() && a.s > 0) {
            j["delta_source"] = "worst case over the s largest primes (i-th prime bound)";
        }
        value = certify::bound_sieved(P.value, a.r, a.omega, a.s, delta, prec);
        j["s"] = a.s;
        j["delta"] = io::rational_string(delta);
        j["F"] = io::rational_string(sieve::sieve_factor(a.omega, a.s, delta));
    } else {
        value = certify::burgess_comparison_bound(P.value, a.r, a.omega, prec);
        j["C_pow_r"] = certify::burgess_table()[a.r - 2].c_pow_r;
    }
    j["H"] = io::enclosure(value);
    const auto sqrt_p = sqrt(CertifiedReal::from_bigint(P.value, prec));
    j["vacuous"] = cert::is_yes(cert::less_equal(CertifiedReal::from_decimal("0.999", prec) * sqrt_p, value));
    ctx.emit(j);
    return kExitOk;
}

struct CertifyArgs {
    std::string p;
    unsigned r = 2;
    u64 h = 0;
    std::string H;
    u64 e = 0;
    int s = -1;
};

int cmd_certify(const Context& ctx, const CertifyArgs& a)
{
    const u64 p = parse_u64(a.p);
    if (p < 3 || !nt::is_prime(p)) {
        throw DomainError("certify: p must be an odd prime");
    }
    const nt::PrimeContext pc(p, 0);
    const auto cfg = a.s >= 0 ? sieve::SieveConfig::excluding_largest(pc, static_cast<unsigned>(a.s))
                              : sieve::SieveConfig(pc, a.e == 0 ? p - 1 : a.e);
    certify::CertifyOptions opt;
    opt.precision = ctx.precision;
    const auto c = certify::theorem3_certify(certify::PSpec::exact(BigInt(p), pc.omega()), cfg.summary(), a.r, a.h,
                                             parse_rational(a.H), opt);
    ctx.emit(io::to_json(c));
    return c.verdict == certify::Verdict::certified ? kExitOk : kExitFail;
}

struct VerifyArgs {
    u64 p_min = 5;
    u64 p_max = 0;
    u64 h_max = 8;
    unsigned r_max = 0;
    unsigned r_min = 2;
    u64 x_max_s = 38;
    u64 x_max_t = 1000;
    u64 x_max_ext = 1'000'000;
    std::string target = "cor2";
    std::string delta = "tight";
    std::string constant = "literal";
    std::string p0 = "1e15";
};

int cmd_verify(const Context& ctx, const std::string& what, const VerifyArgs& a)
{
    const Precision prec = ctx.precision;
    if (what == "charsum") {
        const auto sum = chars::charsum_sweep(a.p_min, a.p_max ? a.p_max : 500, a.h_max, a.r_max ? a.r_max : 4);
        json violating = json::array();
        for (const auto& v : sum.violating) {
            violating.push_back(io::to_json(v));
        }
        ctx.emit({{"primes", sum.primes},
                  {"characters", sum.characters},
                  {"checks", sum.checks},
                  {"violations", sum.violations},
                  {"tightest", io::to_json(sum.tightest)},
                  {"violating", violating},
                  {"pass", sum.violations == 0}});
        return sum.violations == 0 ? kExitOk : kExitFail;
    }
    if (what == "intervals") {
        json claims = json::array();
        bool pass = true;
        for (const auto& c : {intervals::verify_S_envelope(a.x_max_s), intervals::verify_T_envelope(a.x_max_t)}) {
            claims.push_back(io::to_json(c));
            pass = pass && c.pass;
        }
        for (const auto& c : intervals::verify_external_inputs(a.x_max_ext)) {
            claims.push_back(io::to_json(c));
            pass = pass && c.pass;
        }
        const auto grid = intervals::envelope_grid_check(intervals::envelope_grid());
        const bool grid_ok = grid.envelope_violations == 0 && grid.count_violations == 0;
        pass = pass && grid_ok;
        ctx.emit({{"claims", claims},
                  {"envelope_grid",
                   {{"triples", grid.triples},
                    {"envelope_violations", grid.envelope_violations},
                    {"count_violations", grid.count_violations},
                    {"literal_upper_failures", grid.literal_failures},
                    {"worst_lower_margin", grid.worst_lower_margin},
                    {"worst_upper_margin", grid.worst_upper_margin},
                    {"pass", grid_ok}}},
                  {"pass", pass}});
        return pass ? kExitOk : kExitFail;
    }
    if (what == "sieve") {
        const auto s = sieve::sieve_sweep(a.p_max ? a.p_max : 2000);
        auto j = io::to_json(s);
        j["pass"] = s.violations == 0;
        ctx.emit(j);
        return s.violations == 0 ? kExitOk : kExitFail;
    }
    if (what == "cases") {
        certify::CaseOptions opt;
        opt.precision = prec;
        if (a.delta != "tight" && a.delta != "literal") {
            throw ParseError("--delta-bound must be tight or literal");
        }
        if (a.constant != "literal" && a.constant != "derived") {
            throw ParseError("--constant must be literal or derived");
        }
        if (a.target != "cor2" && a.target != "lonely") {
            throw ParseError("--target must be cor2 or lonely");
        }
        opt.delta = a.delta == "tight" ? certify::DeltaPolicy::tight : certify::DeltaPolicy::literal;
        opt.derived_constant = a.constant == "derived";
        const auto target = a.target == "cor2" ? certify::CaseTarget::cor2 : certify::CaseTarget::lonely;
        const auto rep = certify::corollary_case_engine(target, opt);
        if (ctx.fmt("tsv") == "tsv") {
            ctx.out << certify::to_tsv(rep);
        } else {
            ctx.emit(io::to_json(rep));
        }
        return rep.pass ? kExitOk : kExitFail;
    }
    if (what == "stirling") {
        json rows = json::array();
        bool pass = true;
        for (unsigned r = 1; r <= (a.r_max ? a.r_max : 50); ++r) {
            try {
                const auto s = chars::stirling_sandwich(r);
                rows.push_back({{"r", r}, {"log_lower", s.log_lower}, {"log_mid", s.log_mid},
                                {"log_upper", s.log_upper}, {"ordered", s.strictly_ordered()}});
                pass = pass && s.strictly_ordered();
            } catch (const ConsistencyError& e) {
                rows.push_back({{"r", r}, {"ordered", false}, {"error", e.what()}});
                pass = false;
            }
        }
        ctx.emit({{"rows", rows}, {"pass", pass}});
        return pass ? kExitOk : kExitFail;
    }
    // win-chain
    const auto p0 = parse_p(a.p0).value;
    const auto sweep = certify::win_chain_sweep(p0, a.r_min, a.r_max ? a.r_max : 100, prec);
    if (ctx.fmt("json") == "tsv") {
        ctx.out << row_tsv({"variant", "r", "omega_or_F", "regime_start", "checks", "verdict", "first_failure"});
        for (const auto& rep : sweep.reports) {
            ctx.out << row_tsv({rep.variant, std::to_string(rep.r),
                                rep.variant == "sieved" ? "F=" + rep.F_min.str() : std::to_string(rep.omega),
                                rep.P.str().size() > 24 ? "2^" + std::to_string(msb(rep.P)) + "+1" : rep.P.str(),
                                std::to_string(rep.checks.size()), rep.pass ? "pass" : "FAIL", rep.first_failure});
        }
    } else {
        ctx.emit(io::to_json(sweep));
    }
    return sweep.pass ? kExitOk : kExitFail;
}

struct ScanArgs {
    u64 from = 0;
    u64 to = 0;
    std::string shape = "safe-prime";
    unsigned limit = 200;
    unsigned random = 0;
};

int cmd_scan(const Context& ctx, const ScanArgs& a)
{
    if (a.to < a.from) {
        throw ParseError("scan: --to must be >= --from");
    }
    if (a.shape != "safe-prime" && a.shape != "all") {
        throw ParseError("scan: --shape must be safe-prime or all");
    }
    std::vector<u64> primes;
    for (u64 n = std::max<u64>(a.from, 3) | 1; n <= a.to && primes.size() < a.limit; n += 2) {
        if (!nt::is_prime(n)) {
            continue;
        }
        if (a.shape == "safe-prime" && !nt::is_prime((n - 1) / 2)) {
            continue;
        }
        primes.push_back(n);
    }
    if (a.random > 0) {
        const auto extra = certify::soundness_sample(a.from, 0, a.from, a.to, a.random, ctx.seed);
        primes.insert(primes.end(), extra.begin(), extra.end());
    }
    certify::OptimizeOptions opt;
    opt.cert.precision = ctx.precision;
    const auto rep = certify::soundness_crosscheck(primes, opt);
    if (ctx.fmt("json") == "tsv") {
        ctx.out << row_tsv({"p", "omega", "g", "certified", "r", "s", "h", "H_lo", "g<H"});
        for (const auto& e : rep.entries) {
            std::ostringstream H;
            H << std::setprecision(12) << e.H;
            ctx.out << row_tsv({std::to_string(e.p), std::to_string(e.omega), std::to_string(e.g),
                                e.certified ? "yes" : "no", std::to_string(e.r), std::to_string(e.s),
                                std::to_string(e.h), H.str(),
                                e.certified ? (static_cast<double>(e.g) < e.H ? "yes" : "CONTRADICTION") : "-"});
        }
    } else {
        ctx.emit(io::to_json(rep));
    }
    return rep.pass ? kExitOk : kExitFail;
}

struct OptimizeArgs {
    std::string p;
    unsigned omega = 0;
    unsigned r_min = 2;
    unsigned r_max = 0;
};

int cmd_optimize(const Context& ctx, const OptimizeArgs& a)
{
    const auto P = parse_p(a.p);
    certify::CertifyOptions copt;
    copt.precision = ctx.precision;
    if (P.threshold) {
        if (a.omega == 0) {
            throw ParseError("optimize: a threshold p needs --omega (the largest omega(p-1) covered)");
        }
        const auto res = certify::optimize_threshold(P.value, a.omega, a.r_min, a.r_max ? a.r_max : 10, copt);
        json per_r = json::array();
        for (const auto& c : res.per_r) {
            per_r.push_back({{"r", c.r}, {"H", c.shape.describe_H()}, {"h", c.shape.describe_h()},
                             {"certificate", io::to_json(c.certificate)}});
        }
        json j{{"p", a.p}, {"omega_max", a.omega}, {"per_r", per_r}, {"feasible", res.best.has_value()}};
        if (res.best) {
            j["best"] = {{"r", res.best->r}, {"H", res.best->shape.describe_H()}, {"h", res.best->shape.describe_h()}};
        }
        ctx.emit(j);
        return res.best ? kExitOk : kExitFail;
    }
    const u64 p = parse_u64(a.p);
    if (p < 3 || !nt::is_prime(p)) {
        throw DomainError("optimize: p must be an odd prime");
    }
    const nt::PrimeContext pc(p, 0);
    certify::OptimizeOptions opt;
    opt.r_min = a.r_min;
    opt.r_max = a.r_max ? a.r_max : 20;
    opt.cert = copt;
    const auto res = certify::optimize_params(pc, opt);
    ctx.emit(io::to_json(res));
    return res.feasible ? kExitOk : kExitFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certified explicit bounds for the least primitive root", "gpcert"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format;
    long precision = default_precision();
    u64 seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "human"}));
    app.add_option("--precision", precision, "Working precision in bits (env GPCERT_PRECISION)");
    app.add_option("--seed", seed, "Seed for sampled sweeps");

    std::function<int(const Context&)> action;

    auto* gp = app.add_subcommand("gp", "Least primitive root by brute force");
    std::string gp_p;
    gp->add_option("p", gp_p, "Prime")->required();
    gp->callback([&] { action = [&](const Context& c) { return cmd_gp(c, gp_p); }; });

    auto* bound = app.add_subcommand("bound", "Closed-form bounds");
    BoundArgs ba;
    std::string bound_kind;
    bound->add_option("kind", bound_kind, "thm1 | sieved | burgess | compare")
        ->required()
        ->check(CLI::IsMember({"thm1", "sieved", "burgess", "compare"}));
    bound->add_option("--p", ba.p, "Prime or threshold such as 1e56");
    bound->add_option("--r", ba.r, "Moment parameter r");
    bound->add_option("--omega", ba.omega, "omega(p-1)");
    bound->add_option("--s", ba.s, "Sieve: excluded primes");
    bound->add_option("--delta", ba.delta, "Sieve density as a rational");
    bound->callback([&] { action = [&](const Context& c) { return cmd_bound(c, bound_kind, ba); }; });

    auto* certify_cmd = app.add_subcommand("certify", "Certify g(p) < H for one prime");
    CertifyArgs ca;
    certify_cmd->set_help_flag("--help", "Print this help message and exit");
    certify_cmd->add_option("--p", ca.p, "Prime")->required();
    certify_cmd->add_option("--r", ca.r, "Moment parameter r");
    certify_cmd->add_option("--h", ca.h, "Window length h")->required();
    certify_cmd->add_option("--H", ca.H, "Bound H (rational)")->required();
    auto* e_opt = certify_cmd->add_option("--e", ca.e, "Even divisor e of p-1 (default p-1)");
    certify_cmd->add_option("--s", ca.s, "Exclude the s largest primes of p-1")->excludes(e_opt);
    certify_cmd->callback([&] { action = [&](const Context& c) { return cmd_certify(c, ca); }; });

    auto* verify = app.add_subcommand("verify", "Verification suites");
    VerifyArgs va;
    std::string verify_what;
    verify->add_option("suite", verify_what, "charsum | intervals | sieve | cases | stirling | win-chain")
        ->required()
        ->check(CLI::IsMember({"charsum", "intervals", "sieve", "cases", "stirling", "win-chain"}));
    verify->add_option("--pmin", va.p_min, "Smallest prime (charsum)");
    verify->add_option("--pmax", va.p_max, "Largest prime (charsum, sieve)");
    verify->add_option("--hmax", va.h_max, "Largest h (charsum)");
    verify->add_option("--rmin", va.r_min, "Smallest r (win-chain)");
    verify->add_option("--rmax", va.r_max, "Largest r (charsum, stirling, win-chain)");
    verify->add_option("--xmax-s", va.x_max_s, "S sweep range (intervals)");
    verify->add_option("--xmax-t", va.x_max_t, "T sweep range (intervals)");
    verify->add_option("--xmax-ext", va.x_max_ext, "Range for the trusted inputs (intervals)");
    verify->add_option("--target", va.target, "cor2 | lonely (cases)");
    verify->add_option("--delta-bound", va.delta, "tight | literal (cases)");
    verify->add_option("--constant", va.constant, "literal | derived (cases)");
    verify->add_option("--p0", va.p0, "Threshold (win-chain)");
    verify->callback([&] { action = [&](const Context& c) { return cmd_verify(c, verify_what, va); }; });

    auto* scan = app.add_subcommand("scan", "Optimize and cross-check a range of primes");
    ScanArgs sa;
    scan->add_option("--from", sa.from, "Range start")->required();
    scan->add_option("--to", sa.to, "Range end")->required();
    scan->add_option("--shape", sa.shape, "safe-prime | all");
    scan->add_option("--limit", sa.limit, "Most primes taken from the range");
    scan->add_option("--random", sa.random, "Extra random primes from the range (uses --seed)");
    scan->callback([&] { action = [&](const Context& c) { return cmd_scan(c, sa); }; });

    auto* optimize = app.add_subcommand("optimize", "Search parameters for the smallest certified H");
    OptimizeArgs oa;
    optimize->add_option("--p", oa.p, "Prime, or threshold such as 1e56")->required();
    optimize->add_option("--omega", oa.omega, "Largest omega(p-1) for a threshold");
    optimize->add_option("--rmin", oa.r_min, "Smallest r");
    optimize->add_option("--rmax", oa.r_max, "Largest r");
    optimize->callback([&] { action = [&](const Context& c) { return cmd_optimize(c, oa); }; });

    std::vector<const char*> argv{"gpcert"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (precision < kMinPrecision || precision > kMaxPrecision) {
        err << "error: precision must lie in [" << kMinPrecision << ", " << kMaxPrecision << "]\n";
        return kExitUsage;
    }

    const Context ctx{out, err, format, precision, seed};
    try {
        return action(ctx);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

} // namespace gpcert::cli
