#include <benchmark/benchmark.h>

#include <random>

#include "ncprob/convolutions.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/partitions.hpp"
#include "ncprob/random.hpp"

using namespace ncprob;

namespace {

std::vector<std::vector<MomentSequence>> inputs(ProductKind kind, int degree) {
    std::mt19937_64 rng(7);
    std::vector<std::vector<MomentSequence>> out(2);
    for (auto& f : out) {
        for (int s = 0; s < state_count(kind); ++s) {
            f.push_back(random_moments(rng, degree));
        }
    }
    return out;
}

// transform route against brute-force evaluation on words
void BM_IndentedTransform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto in = inputs(ProductKind::Indented, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(derived_additive(ProductKind::Indented, in));
    }
}
BENCHMARK(BM_IndentedTransform)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_IndentedWords(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto in = inputs(ProductKind::Indented, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve_moments(ProductKind::Indented, in, n));
    }
}
BENCHMARK(BM_IndentedWords)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SingleVariableCumulants(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    const MomentSequence l = random_moments(rng, n);
    const MomentSequence m = random_moments(rng, n);
    const MomentSequence v = random_moments(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(single_variable_cumulants(l, m, v));
    }
}
BENCHMARK(BM_SingleVariableCumulants)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateLNC(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate(PartitionClass::LNC, n));
    }
}
BENCHMARK(BM_EnumerateLNC)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
