#include <benchmark/benchmark.h>

#include "magnitude/magnitude.hpp"

using namespace magnitude;

namespace {

const PosRat kSeven = rat_make(Nat(7), Nat(11));

void BM_MultipleDoubleAndAdd(benchmark::State& state) {
    const Nat n(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(multiple(n, kSeven));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultipleDoubleAndAdd)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity(benchmark::oLogN);

void BM_MultipleNaive(benchmark::State& state) {
    const Nat n(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(multiple_naive(n, kSeven));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultipleNaive)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity(benchmark::oN);

void BM_RatioCompareExact(benchmark::State& state) {
    const Element a(rat_make(Nat(355), Nat(113))), b(PosRat(Nat(1)));
    const Element a2(rat_make(Nat(103993), Nat(33102))), b2(PosRat(Nat(1)));
    for (auto _ : state) benchmark::DoNotOptimize(ratio_compare(a, b, a2, b2));
}
BENCHMARK(BM_RatioCompareExact);

void BM_RatioCompareReal(benchmark::State& state) {
    const Element one(real_from_rat(PosRat(Nat(1))));
    const Element b(real_from_rat(rat_make(Nat(99), Nat(70))));
    for (auto _ : state) {
        // fresh values so every iteration refines from scratch
        const Element a(real_root_of_rat(PosRat(Nat(2)), Nat(2)));
        benchmark::DoNotOptimize(ratio_compare(a, one, b, one, static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_RatioCompareReal)->Arg(64)->Arg(256);

void BM_NthRoot(benchmark::State& state) {
    const unsigned p = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        const MulReal x = into_mul(real_from_rat(PosRat(Nat(10))));
        benchmark::DoNotOptimize(nth_root(x, Nat(3)).value().approx(p));
    }
}
BENCHMARK(BM_NthRoot)->Arg(64)->Arg(256)->Arg(1024);

void BM_RealExponent(benchmark::State& state) {
    const unsigned p = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        const MulReal x = into_mul(real_from_rat(PosRat(Nat(2))));
        benchmark::DoNotOptimize(pow(x, real_root_of_rat(PosRat(Nat(2)), Nat(2))).value().approx(p));
    }
}
BENCHMARK(BM_RealExponent)->Arg(16)->Arg(40)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
