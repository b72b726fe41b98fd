#include "quaddyn/curves.hpp"
#include "quaddyn/dynatomic.hpp"
#include "quaddyn/jacobian.hpp"
#include "quaddyn/modp.hpp"
#include "quaddyn/orbit.hpp"
#include "quaddyn/portrait.hpp"
#include "quaddyn/scan.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace quaddyn;

static void BM_GenDynatomic(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(gen_dynatomic(s.range(0), 2));
}
BENCHMARK(BM_GenDynatomic)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_DynatomicModP(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(dynatomic_mod_p(s.range(0), 5, 10007));
}
BENCHMARK(BM_DynatomicModP)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_PortraitRational(benchmark::State& s) {
    QuadElem c(Rational(-29, 16));
    for (auto _ : s) benchmark::DoNotOptimize(portrait_of(c));
}
BENCHMARK(BM_PortraitRational)->Unit(benchmark::kMicrosecond);

static void BM_PortraitQuadratic(benchmark::State& s) {
    QuadElem c(Integer(-15), Rational(-7, 48), Rational(1, 6));
    for (auto _ : s) benchmark::DoNotOptimize(portrait_of(c, -15));
}
BENCHMARK(BM_PortraitQuadratic)->Unit(benchmark::kMillisecond);

static void BM_BruteForceOracle(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(brute_force_portrait(Rational(-3, 4), s.range(0)));
}
BENCHMARK(BM_BruteForceOracle)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_ScanRational(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(scan_rational(s.range(0)));
}
BENCHMARK(BM_ScanRational)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& s) {
    std::mt19937_64 rng(1);
    std::vector<Portrait> ps;
    for (int i = 0; i < 256; ++i) {
        std::vector<int> succ(static_cast<std::size_t>(s.range(0)));
        for (auto& v : succ) v = static_cast<int>(rng() % succ.size());
        ps.emplace_back(succ);
    }
    std::size_t i = 0;
    for (auto _ : s) benchmark::DoNotOptimize(canonical_form(ps[i++ % ps.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(14);

static void BM_EnumerateGeneric(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(enumerate_generic(static_cast<int>(s.range(0))));
}
BENCHMARK(BM_EnumerateGeneric)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_LiftAndClassify(benchmark::State& s) {
    auto xs = rationals_up_to_height(10);
    std::size_t i = 0;
    for (auto _ : s) {
        auto q = lift_x("8(3)", xs[i++ % xs.size()]);
        if (q.c) benchmark::DoNotOptimize(portrait_of(*q.c, q.d));
    }
}
BENCHMARK(BM_LiftAndClassify)->Unit(benchmark::kMillisecond);

static void BM_HasRootGcd(benchmark::State& s) {
    const IntPoly& f = named_sextic("10(3,1,1)");
    auto p = static_cast<std::uint64_t>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(has_root_mod_p(f, p));
}
BENCHMARK(BM_HasRootGcd)->Arg(1009)->Arg(999983);

static void BM_HasRootNaive(benchmark::State& s) {
    const IntPoly& f = named_sextic("10(3,1,1)");
    auto p = static_cast<std::uint64_t>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(has_root_mod_p_naive(f, p));
}
BENCHMARK(BM_HasRootNaive)->Arg(1009)->Arg(999983);

static void BM_Density(benchmark::State& s) {
    const IntPoly& f = named_sextic("10(3,1,1)");
    for (auto _ : s) benchmark::DoNotOptimize(density_pi_f(f, static_cast<std::uint64_t>(s.range(0))));
}
BENCHMARK(BM_Density)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_JacobianOrder(benchmark::State& s) {
    ReducedDivisor r = eight_three_d0_mod7();
    for (auto _ : s) benchmark::DoNotOptimize(r.jac.order(r.d, 84));
}
BENCHMARK(BM_JacobianOrder);

static void BM_JacobianGroupOrder(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(jacobian_group_order(eight_three_sextic(), static_cast<std::uint64_t>(s.range(0))));
}
BENCHMARK(BM_JacobianGroupOrder)->Arg(7)->Arg(101)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
