#include "prism/bruhat.hpp"
#include "prism/classify.hpp"
#include "prism/enumerate.hpp"
#include "prism/pattern.hpp"
#include "prism/word.hpp"

#include <benchmark/benchmark.h>

using namespace prism;

static void BM_EnumerateReducedWord(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(n, Method::reduced_word, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(factorial(n)));
}
BENCHMARK(BM_EnumerateReducedWord)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_EnumeratePattern(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(n, Method::pattern, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(factorial(n)));
}

static void BM_EnumeratePoset(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(n, Method::poset, 1));
}

static void BM_CatalogScan(benchmark::State& state)
{
    const Permutation w = parse_permutation("3,7,1,9,4,10,2,8,5,6");
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_by_pattern(w, PatternScan::all));
}

static void BM_Occurrences(benchmark::State& state)
{
    const Permutation w = unrank_lexicographic(1234567, 10);
    const CalibratedMeshPattern p = classical(parse_permutation("2413"));
    for (auto _ : state)
        benchmark::DoNotOptimize(occurrences(w, p));
}

static void BM_Ideal(benchmark::State& state)
{
    const Permutation w = parse_permutation(state.range(0) == 5 ? "54321" : "654321");
    for (auto _ : state)
        benchmark::DoNotOptimize(bruhat_ideal(w));
}

static void BM_PrismOracle(benchmark::State& state)
{
    const Permutation w = parse_permutation("2641753");
    for (auto _ : state)
        benchmark::DoNotOptimize(prism_oracle(w));
}

static void BM_IsomorphismSelf(benchmark::State& state)
{
    const Poset b = ideal(parse_permutation("564321"));
    for (auto _ : state)
        benchmark::DoNotOptimize(isomorphic(b, b));
}

static void BM_AllReducedWords(benchmark::State& state)
{
    const Permutation w = parse_permutation("654321");
    for (auto _ : state)
        benchmark::DoNotOptimize(all_reduced_words(w));
}

BENCHMARK(BM_EnumeratePattern)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumeratePoset)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalogScan);
BENCHMARK(BM_Occurrences);
BENCHMARK(BM_Ideal)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrismOracle)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsomorphismSelf)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllReducedWords)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
