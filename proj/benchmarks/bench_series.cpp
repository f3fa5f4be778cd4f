#include <benchmark/benchmark.h>

#include <random>

#include "mirrormap/coupling.hpp"
#include "mirrormap/models.hpp"
#include "mirrormap/operator.hpp"
#include "mirrormap/series.hpp"

using namespace mirrormap;

namespace {

Series1 dense_series(int order, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-99, 99), den(1, 23);
    std::vector<Rat> v(order + 1);
    for (auto& x : v) x = make_rat(num(rng), den(rng));
    return Series1(std::move(v));
}

RecurrenceSpec quintic() {
    CIModel m;
    m.degrees = {5};
    m.dim = 3;
    return ci_recurrence(m);
}

}  // namespace

static void BM_series_mul(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Series1 a = dense_series(n, 1);
    Series1 b = dense_series(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_mul)->Arg(64)->Arg(128)->Arg(256);

static void BM_series_exp(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Series1 a = dense_series(n, 3);
    std::vector<Rat> v(a.coeffs());
    v[0] = Rat(0);
    Series1 f(std::move(v));
    for (auto _ : state) benchmark::DoNotOptimize(exp(f));
}
BENCHMARK(BM_series_exp)->Arg(64)->Arg(128)->Arg(256);

static void BM_series_revert(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Series1 a = dense_series(n, 4);
    std::vector<Rat> v(a.coeffs());
    v[0] = Rat(0);
    v[1] = Rat(1);
    Series1 f(std::move(v));
    for (auto _ : state) benchmark::DoNotOptimize(revert(f));
}
// random rational inputs are the worst case for exact reversion: coefficient
// bit-length roughly doubles per order doubling
BENCHMARK(BM_series_revert)->Arg(16)->Arg(32)->Arg(64);

// deep-truncation socle solve: coefficients reach ~10^900 at depth 512
static void BM_socle_quintic(benchmark::State& state) {
    RecurrenceSpec spec = quintic();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(socle(spec, Rat(1), n));
}
BENCHMARK(BM_socle_quintic)->Arg(128)->Arg(512);

static void BM_fit_recurrence(benchmark::State& state) {
    CIModel m;
    m.degrees = {5};
    m.dim = 3;
    Series1 a = ci_series(m, 40);
    for (auto _ : state) benchmark::DoNotOptimize(fit_recurrence(a, 1, 4));
}
BENCHMARK(BM_fit_recurrence);

static void BM_full_pipeline_quintic(benchmark::State& state) {
    RecurrenceSpec spec = quintic();
    for (auto _ : state) {
        YukawaFrame fr = run_pipeline(spec, Rat(5), 3, 20);
        benchmark::DoNotOptimize(fr);
    }
}
BENCHMARK(BM_full_pipeline_quintic);

BENCHMARK_MAIN();
