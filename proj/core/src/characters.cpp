#include "gpcert/characters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gpcert/errors.hpp"

namespace gpcert::chars {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
constexpr u64 kResyncInterval = u64{1} << 16;
constexpr std::size_t kBlock = 4096;

std::vector<Complex> roots_of_unity(u64 n)
{
    std::vector<Complex> roots(n);
    for (u64 m = 0; m < n; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        roots[m] = {std::cos(angle), std::sin(angle)};
    }
    // Exact values where the identity is obvious.
    roots[0] = {1.0, 0.0};
    if (n % 2 == 0) {
        roots[n / 2] = {-1.0, 0.0};
    }
    if (n % 4 == 0) {
        roots[n / 4] = {0.0, 1.0};
        roots[3 * n / 4] = {0.0, -1.0};
    }
    return roots;
}

double pairwise_sum(std::vector<double>& v)
{
    if (v.empty()) {
        return 0.0;
    }
    while (v.size() > 1) {
        std::size_t half = (v.size() + 1) / 2;
        for (std::size_t i = 0; i + half < v.size(); ++i) {
            v[i] += v[i + half];
        }
        v.resize(half);
    }
    return v.front();
}

double ipow(double x, unsigned n)
{
    double result = 1.0;
    while (n > 0) {
        if (n & 1) {
            result *= x;
        }
        x *= x;
        n >>= 1;
    }
    return result;
}

} // namespace

Character::Character(const nt::PrimeContext& ctx, u64 j) : ctx_(&ctx), j_(j)
{
    const u64 pm1 = ctx.p() - 1;
    if (j >= pm1) {
        throw DomainError("character index must lie in [0, p-2]");
    }
    order_ = pm1 / static_cast<u64>(nt::gcd(j, pm1));
}

Character Character::conjugate() const
{
    const u64 pm1 = ctx_->p() - 1;
    return Character(*ctx_, j_ == 0 ? 0 : pm1 - j_);
}

Complex Character::operator()(u64 n) const
{
    const u64 p = ctx_->p();
    n %= p;
    if (n == 0) {
        return {0.0, 0.0};
    }
    if (j_ == 0) {
        return {1.0, 0.0};
    }
    const u64 step = (p - 1) / order_;
    const u64 jr = j_ / step;
    const u64 k = ctx_->dlog(n) % order_;
    const u64 m = static_cast<u64>((static_cast<u128>(jr) * k) % order_);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(order_);
    return {std::cos(angle), std::sin(angle)};
}

std::vector<Complex> Character::value_table() const
{
    const u64 p = ctx_->p();
    std::vector<Complex> table(p, Complex{0.0, 0.0});
    const auto roots = roots_of_unity(order_);
    const u64 step = (p - 1) / order_;
    const u64 jr = j_ / step;
    for (u64 n = 1; n < p; ++n) {
        const u64 k = ctx_->dlog(n) % order_;
        table[n] = roots[static_cast<u64>((static_cast<u128>(jr) * k) % order_)];
    }
    return table;
}

Complex char_value(const Character& chi, u64 n)
{
    return chi(n);
}

std::vector<Character> characters_of_order(const nt::PrimeContext& ctx, u64 d)
{
    const u64 pm1 = ctx.p() - 1;
    if (d == 0 || pm1 % d != 0) {
        throw DomainError("character order must divide p-1");
    }
    std::vector<Character> out;
    const u64 step = pm1 / d;
    for (u64 a = 0; a < d; ++a) {
        if (nt::gcd(a, d) == 1) {
            out.emplace_back(ctx, a * step);
        }
    }
    if (out.size() != nt::euler_phi(d)) {
        throw ConsistencyError("characters_of_order: count differs from phi(d)");
    }
    return out;
}

Complex order_class_sum(const nt::PrimeContext& ctx, u64 d, u64 n)
{
    Complex sum{0.0, 0.0};
    for (const auto& chi : characters_of_order(ctx, d)) {
        sum += chi(n);
    }
    return sum;
}

OrderClassSums::OrderClassSums(const nt::PrimeContext& ctx) : ctx_(&ctx) {}

const std::vector<Complex>& OrderClassSums::table(u64 d) const
{
    std::lock_guard lock(mutex_);
    auto it = tables_.find(d);
    if (it != tables_.end()) {
        return *it->second;
    }
    const u64 pm1 = ctx_->p() - 1;
    if (d == 0 || pm1 % d != 0) {
        throw DomainError("character order must divide p-1");
    }
    const auto roots = roots_of_unity(d);
    auto t = std::make_unique<std::vector<Complex>>(d, Complex{0.0, 0.0});
    for (u64 a = 0; a < d; ++a) {
        if (nt::gcd(a, d) != 1) {
            continue;
        }
        for (u64 k = 0; k < d; ++k) {
            (*t)[k] += roots[static_cast<u64>((static_cast<u128>(a) * k) % d)];
        }
    }
    return *tables_.emplace(d, std::move(t)).first->second;
}

Complex OrderClassSums::operator()(u64 d, u64 n) const
{
    n %= ctx_->p();
    if (n == 0) {
        return {0.0, 0.0};
    }
    const auto& t = table(d);
    return t[ctx_->dlog(n) % d];
}

int indicator_primitive_root(const OrderClassSums& sums, u64 n)
{
    const auto& ctx = sums.context();
    const u64 p = ctx.p();
    if (n == 0 || n >= p) {
        throw DomainError("indicator_primitive_root: n must lie in [1, p-1]");
    }
    const int by_order = nt::multiplicative_order(n, p, ctx.pm1_factors()) == p - 1 ? 1 : 0;

    Complex inner{0.0, 0.0};
    for (u64 d : ctx.pm1_divisors()) {
        const int mu = nt::moebius(d);
        if (mu == 0) {
            continue;
        }
        inner += static_cast<double>(mu) / static_cast<double>(nt::euler_phi(d)) * sums(d, n);
    }
    const double density =
        static_cast<double>(nt::euler_phi(ctx.pm1_factors())) / static_cast<double>(p - 1);
    const Complex by_characters = density * inner;
    if (std::abs(by_characters.real() - by_order) > 1e-6 || std::abs(by_characters.imag()) > 1e-6) {
        throw ConsistencyError("primitive-root indicator: character expansion gives " +
                               std::to_string(by_characters.real()) + " for n = " +
                               std::to_string(n) + ", order test gives " +
                               std::to_string(by_order));
    }
    return by_order;
}

int indicator_primitive_root(const nt::PrimeContext& ctx, u64 n)
{
    const OrderClassSums sums(ctx);
    return indicator_primitive_root(sums, n);
}

std::vector<MomentSumResult> moment_sums_exact(const Character& chi, u64 h, unsigned r_max,
                                               bool allow_principal)
{
    if (chi.is_principal() && !allow_principal) {
        throw DomainError("moment sum of the principal character needs explicit opt-in");
    }
    if (h == 0 || r_max == 0) {
        throw DomainError("moment sum needs h >= 1 and r >= 1");
    }
    const u64 p = chi.context().p();
    const auto values = chi.value_table();
    auto at = [&](u64 x) { return values[x % p]; };

    // Per-step error of a complex add, times the window length.
    const double fresh_err = 2.0 * kUnitRoundoff * static_cast<double>(h + 1);
    const double step_err = 4.0 * kUnitRoundoff * static_cast<double>(h + 2);

    std::vector<std::vector<double>> blocks(r_max);
    std::vector<std::vector<double>> err_blocks(r_max);
    std::vector<double> acc(r_max, 0.0);
    std::vector<double> err_acc(r_max, 0.0);
    std::size_t in_block = 0;

    Complex window{0.0, 0.0};
    u64 since_resync = 0;
    for (u64 x = 0; x < p; ++x) {
        if (x % kResyncInterval == 0) {
            window = {0.0, 0.0};
            for (u64 n = 0; n < h; ++n) {
                window += at(x + n);
            }
            since_resync = 0;
        } else {
            window += at(x + h - 1) - at(x - 1);
            ++since_resync;
        }
        const double err = fresh_err + step_err * static_cast<double>(since_resync);
        const double mag2 = std::norm(window);
        const double mag = std::sqrt(mag2);
        double term = 1.0;
        double upper = 1.0;
        const double mag_hi = mag + err;
        for (unsigned r = 1; r <= r_max; ++r) {
            term *= mag2;
            upper *= mag_hi * mag_hi;
            acc[r - 1] += term;
            // Propagated window error plus rounding in the power.
            err_acc[r - 1] += (upper - term) + (2.0 * r + 2.0) * kUnitRoundoff * upper;
        }
        if (++in_block == kBlock) {
            for (unsigned r = 0; r < r_max; ++r) {
                blocks[r].push_back(acc[r]);
                err_blocks[r].push_back(err_acc[r]);
                acc[r] = 0.0;
                err_acc[r] = 0.0;
            }
            in_block = 0;
        }
    }

    std::vector<MomentSumResult> out;
    out.reserve(r_max);
    for (unsigned r = 0; r < r_max; ++r) {
        blocks[r].push_back(acc[r]);
        err_blocks[r].push_back(err_acc[r]);
        const double value = pairwise_sum(blocks[r]);
        double error = pairwise_sum(err_blocks[r]);
        // Summation rounding: at most kBlock + log2(blocks) additions per term.
        error += (static_cast<double>(kBlock) + 64.0) * kUnitRoundoff * (value + error);
        out.push_back({std::max(value, 0.0), error, p, h, r + 1});
    }
    return out;
}

MomentSumResult moment_sum_exact(const Character& chi, u64 h, unsigned r, bool allow_principal)
{
    return moment_sums_exact(chi, h, r, allow_principal).back();
}

double exception_count_bound(unsigned r, u64 h, unsigned n)
{
    if (r == 0 || h == 0 || n < 2) {
        throw DomainError("exception_count_bound needs r, h >= 1 and n >= 2");
    }
    const double lr = std::lgamma(static_cast<double>(r) + 1.0);
    const double lh = std::log(static_cast<double>(h));
    const double ln = std::lgamma(static_cast<double>(n) + 1.0);
    double total = 0.0;
    for (unsigned d = 0; n * d <= r; ++d) {
        const double log_term = 2.0 * (lr - std::lgamma(d + 1.0) - d * ln) +
                                (static_cast<double>(r) - static_cast<double>(n - 2) * d) * lh -
                                std::lgamma(static_cast<double>(r - n * d) + 1.0);
        total += std::exp(log_term);
    }
    return total;
}

OrderClass order_class(const Character& chi)
{
    return chi.order() == 2 ? OrderClass::quadratic : OrderClass::higher;
}

double weil_bound_general(double p, double h, unsigned r, OrderClass cls, bool genus_refinement)
{
    const double pairing = stirling_sandwich(r).mid();
    double weil = 2.0 * r - 1.0;
    if (genus_refinement && cls == OrderClass::quadratic) {
        weil = 2.0 * r - 2.0;
    }
    return pairing * p * ipow(h, r) + weil * std::sqrt(p) * ipow(h, 2 * r);
}

double weil_bound_r2(double p, double h, OrderClass cls)
{
    const double sp = std::sqrt(p);
    if (cls == OrderClass::quadratic) {
        return (3 * h * h - 2 * h) * p + 2 * (h * h * h * h - 3 * h * h + 2 * h) * sp;
    }
    return (2 * h * h - h) * p + 3 * (h * h * h * h - 2 * h * h + h) * sp;
}

double weil_bound(double p, double h, unsigned r, OrderClass cls)
{
    if (r == 2) {
        return weil_bound_r2(p, h, cls);
    }
    return weil_bound_general(p, h, r, cls);
}

double w_factor_general(double p, double h, unsigned r)
{
    const double scale = 2.0 * r / (std::numbers::e * h);
    return std::numbers::sqrt2 * ipow(scale, r) * std::sqrt(p) + (2.0 * r - 1.0);
}

double w_factor_r2(double p, double h)
{
    return 3.0 * (1.0 + std::sqrt(p) / (h * h));
}

double w_factor(double p, double h, unsigned r)
{
    if (r == 0 || h < 1) {
        throw DomainError("w_factor needs h, r >= 1");
    }
    const double general = w_factor_general(p, h, r);
    return r == 2 ? std::min(general, w_factor_r2(p, h)) : general;
}

double StirlingSandwich::lower() const { return std::exp(log_lower); }
double StirlingSandwich::mid() const { return std::exp(log_mid); }
double StirlingSandwich::upper() const { return std::exp(log_upper); }

StirlingSandwich stirling_sandwich(unsigned r)
{
    if (r == 0) {
        throw DomainError("stirling_sandwich needs r >= 1");
    }
    const double rd = static_cast<double>(r);
    StirlingSandwich s;
    s.r = r;
    s.log_lower = rd * std::log(2.0 * rd / std::numbers::e);
    s.log_mid = std::lgamma(2.0 * rd + 1.0) - rd * std::numbers::ln2 - std::lgamma(rd + 1.0);
    s.log_upper = 0.5 * std::numbers::ln2 + s.log_lower;
    if (r <= 10) {
        // Exact (2r-1)!! for small r, avoiding lgamma rounding at the integers.
        double dfact = 1.0;
        for (unsigned k = 1; k < 2 * r; k += 2) {
            dfact *= k;
        }
        s.log_mid = std::log(dfact);
    }
    if (!s.strictly_ordered()) {
        throw ConsistencyError("Stirling sandwich ordering fails at r = " + std::to_string(r));
    }
    return s;
}

CharsumSweepSummary charsum_sweep(u64 p_min, u64 p_max, u64 h_max, unsigned r_max)
{
    CharsumSweepSummary out;
    out.tightest.slack = std::numeric_limits<double>::infinity();
    auto record = [&](const Character& chi, const MomentSumResult& m, double bound) {
        ++out.checks;
        CharsumRecord rec{m.p, chi.index(), chi.order(), m.h, m.r, m.value, bound, (bound - m.value) / bound};
        if (m.value - m.error_bound > bound) {
            ++out.violations;
            out.violating.push_back(rec);
        }
        if (rec.slack < out.tightest.slack) {
            out.tightest = rec;
        }
    };
    for (u64 p : nt::primes_up_to(p_max)) {
        if (p < p_min || p < 3) {
            continue;
        }
        const nt::PrimeContext ctx(p);
        ++out.primes;
        for (u64 j = 1; j < p - 1; ++j) {
            const Character chi(ctx, j);
            ++out.characters;
            const auto cls = order_class(chi);
            for (u64 h = 2; h <= h_max; ++h) {
                const auto sums = moment_sums_exact(chi, h, r_max);
                for (const auto& m : sums) {
                    const double pd = static_cast<double>(p);
                    const double hd = static_cast<double>(h);
                    record(chi, m, weil_bound_general(pd, hd, m.r, cls));
                    if (m.r == 2) {
                        record(chi, m, weil_bound_r2(pd, hd, cls));
                    }
                }
            }
        }
    }
    return out;
}

} // namespace gpcert::chars
