#include "ck/contraction.hpp"
#include "ck/grassmann.hpp"
#include "ck/relcat.hpp"
#include "ck/repkit.hpp"
#include "ck/rootsys.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ck;

static void BM_ScalarMul(benchmark::State& st) {
    Scalar a(ck::Rational(3, 7), 2, ck::Rational(-1, 5), 4), b(1, ck::Rational(5, 3), 2, -1);
    for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMul);

static void BM_PimMul(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    Pim x(n, Scalar(1)), y(n, Scalar(2));
    for (int k = 1; k <= n; ++k) {
        x += Pim::iota(n, k) * Scalar(k);
        y += Pim::iota(n, k) * Scalar(-k);
    }
    for (auto _ : st) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_PimMul)->Arg(2)->Arg(4)->Arg(6);

static void BM_VerifyCartanWeyl(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    JValuation v = JValuation::iota_at(n, {2});
    for (auto _ : st) benchmark::DoNotOptimize(verify_cartan_weyl(so_kind(n), n, v).pass());
}
BENCHMARK(BM_VerifyCartanWeyl)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyDecomposition(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(verify_decomposition(GroupKind::B_soOdd, n, {{2}, {}}).pass());
}
BENCHMARK(BM_VerifyDecomposition)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ComposeGA(benchmark::State& st) {
    std::mt19937_64 rng(1);
    int d = static_cast<int>(st.range(0));
    auto p = random_relation(rng, d, d), q = random_relation(rng, d, d);
    for (auto _ : st) benchmark::DoNotOptimize(compose_GA(q, p));
}
BENCHMARK(BM_ComposeGA)->Arg(3)->Arg(6);

static void BM_SpinOperator(benchmark::State& st) {
    std::mt19937_64 rng(2);
    int r = static_cast<int>(st.range(0));
    auto v = gd_object(r);
    auto p = random_isotropic_morphism(rng, v, v);
    for (auto _ : st) benchmark::DoNotOptimize(spin_operator(p, v, v).solution_dim);
}
BENCHMARK(BM_SpinOperator)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GrassmannExp(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    GrassmannElement q(n);
    for (int i = 0; i + 1 < n; ++i) q = q + GrassmannElement::generator(n, i) * GrassmannElement::generator(n, i + 1);
    for (auto _ : st) benchmark::DoNotOptimize(grassmann_exp(q));
}
BENCHMARK(BM_GrassmannExp)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
