#include <benchmark/benchmark.h>

#include "gpcert/case_engine.hpp"
#include "gpcert/characters.hpp"
#include "gpcert/intervals.hpp"
#include "gpcert/optimize.hpp"
#include "gpcert/sieve.hpp"
#include "gpcert/win_chain.hpp"

using namespace gpcert;

static void BM_LeastPrimitiveRoot(benchmark::State& state)
{
    const u64 p = static_cast<u64>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nt::least_primitive_root(p));
    }
}
BENCHMARK(BM_LeastPrimitiveRoot)->Arg(1000000007)->Arg(2147483647)->Arg(998244353);

static void BM_Factorize(benchmark::State& state)
{
    const u128 n = (static_cast<u128>(1) << 89) - 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nt::factorize(n));
    }
}
BENCHMARK(BM_Factorize);

static void BM_MomentSums(benchmark::State& state)
{
    const nt::PrimeContext ctx(static_cast<u64>(state.range(0)));
    const chars::Character chi(ctx, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chars::moment_sums_exact(chi, 8, 4));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MomentSums)->Arg(499)->Arg(10007)->Arg(1000003);

static void BM_CountPoints(benchmark::State& state)
{
    const u64 h = static_cast<u64>(state.range(0));
    const auto sys = intervals::build_intervals(1000003, Rational(BigInt(50 * h)), h);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intervals::count_points(sys));
    }
}
BENCHMARK(BM_CountPoints)->Arg(2)->Arg(10)->Arg(40);

static void BM_SieveSweep(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(sieve::sieve_sweep(static_cast<u64>(state.range(0))));
    }
}
BENCHMARK(BM_SieveSweep)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_CertifyExact(benchmark::State& state)
{
    sieve::SieveSummary s;
    s.e_desc = "p-1";
    s.omega = 2;
    const auto spec = certify::PSpec::exact(BigInt(1000000007), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify::theorem3_certify(spec, s, 2, 177, Rational(121591)));
    }
}
BENCHMARK(BM_CertifyExact);

static void BM_Optimize(benchmark::State& state)
{
    const nt::PrimeContext ctx(1000000007);
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify::optimize_params(ctx));
    }
}
BENCHMARK(BM_Optimize)->Unit(benchmark::kMillisecond);

static void BM_CaseEngine(benchmark::State& state)
{
    const auto target = state.range(0) == 0 ? certify::CaseTarget::cor2 : certify::CaseTarget::lonely;
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify::corollary_case_engine(target));
    }
}
BENCHMARK(BM_CaseEngine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_WinChain(benchmark::State& state)
{
    const BigInt p0 = boost::multiprecision::pow(BigInt(10), 15);
    const unsigned r = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify::theorem_win_derive(p0, r, 2));
    }
}
BENCHMARK(BM_WinChain)->Arg(2)->Arg(20)->Arg(100);
BENCHMARK_MAIN();
