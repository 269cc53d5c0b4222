#include <benchmark/benchmark.h>

#include <random>

#include "pfsp/archive.hpp"
#include "pfsp/neighborhoods.hpp"
#include "pfsp/solvers.hpp"

namespace {

pfsp::Instance bench_instance(std::size_t n, std::size_t m)
{
    const auto inst = pfsp::generate_taillard(n, m, 873654221);
    return inst.with_due_dates(pfsp::generate_due_dates(inst, 0.6));
}

void BM_Evaluate(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const auto inst = bench_instance(n, m);
    pfsp::Rng rng(1);
    const auto perm = pfsp::random_permutation(n, rng);
    pfsp::Evaluator eval(inst);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.evaluate(perm));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Evaluate)->Args({20, 5})->Args({50, 10})->Args({100, 20});

void BM_Neighborhood(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto kind = static_cast<pfsp::NeighborhoodKind>(state.range(1));
    pfsp::Rng rng(2);
    const auto perm = pfsp::random_permutation(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfsp::neighbors(kind, perm));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * (n - 1) / 2));
}
BENCHMARK(BM_Neighborhood)->ArgsProduct({{20, 50, 100}, {0, 1, 2}});

void BM_ArchiveUpdate(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<pfsp::Time> value(0, 1000);
    std::vector<pfsp::ObjectiveVector> points(static_cast<std::size_t>(state.range(0)));
    for (auto& p : points) {
        p = pfsp::ObjectiveVector{{value(rng), value(rng)}};
    }
    for (auto _ : state) {
        pfsp::ParetoArchive archive;
        for (std::size_t i = 0; i < points.size(); ++i) {
            archive.update(pfsp::Permutation{static_cast<pfsp::Job>(i)}, points[i]);
        }
        benchmark::DoNotOptimize(archive.size());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ArchiveUpdate)->Arg(1000)->Arg(10000);

void BM_PilsRun(benchmark::State& state)
{
    const auto inst = bench_instance(20, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfsp::pils_run(inst, {20000, 1, false}));
    }
    state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_PilsRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
