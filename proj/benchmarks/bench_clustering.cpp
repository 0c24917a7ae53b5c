#include <benchmark/benchmark.h>

#include "xclust/adaptive.hpp"
#include "xclust/ccia.hpp"
#include "xclust/kmeans.hpp"
#include "xclust/matrix.hpp"
#include "xclust/silhouette.hpp"
#include "xclust/synthetic.hpp"

using namespace xclust;

namespace {

ExpressionMatrix blobs(int n_per_cluster, int dims) {
    SyntheticSpec spec;
    spec.clusters = 5;
    spec.points_per_cluster = n_per_cluster;
    spec.dims = dims;
    spec.separation = 8.0;
    spec.spread = 1.0;
    spec.seed = 42;
    return generate_synthetic(spec).matrix;
}

void BM_kmeans(benchmark::State& state) {
    auto data = blobs(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) {
        auto result = kmeans(data, 10, std::uint64_t{7});
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * data.rows());
}
BENCHMARK(BM_kmeans)->Arg(60)->Arg(200)->Arg(600);

void BM_ccia_seed(benchmark::State& state) {
    auto data = blobs(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) {
        auto seeds = ccia_seed(data, 10);
        benchmark::DoNotOptimize(seeds);
    }
}
BENCHMARK(BM_ccia_seed)->Arg(60)->Arg(200);

void BM_agmfi(benchmark::State& state) {
    auto data = blobs(60, 17);
    AgmfiParams params;
    params.k_init = 10;
    for (auto _ : state) {
        auto result = agmfi(data, params, std::uint64_t{7});
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_agmfi);

void BM_eiagmfi(benchmark::State& state) {
    auto data = blobs(60, 17);
    AgmfiParams params;
    params.k_init = 10;
    for (auto _ : state) {
        auto result = eiagmfi(data, params);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_eiagmfi);

void BM_silhouette(benchmark::State& state) {
    auto data = blobs(static_cast<int>(state.range(0)), 17);
    auto result = kmeans(data, 5, std::uint64_t{7});
    for (auto _ : state) {
        auto report = silhouette(data, result.assignment);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_silhouette)->Arg(60)->Arg(200);

void BM_zscore_normalize(benchmark::State& state) {
    SyntheticSpec spec;
    spec.clusters = 1;
    spec.points_per_cluster = 2882;
    spec.dims = 17;
    spec.separation = 1.0;
    spec.spread = 50.0;
    spec.seed = 3;
    auto data = generate_synthetic(spec).matrix;
    for (auto _ : state) {
        auto normalized = zscore_normalize(data);
        benchmark::DoNotOptimize(normalized);
    }
    state.SetItemsProcessed(state.iterations() * data.rows());
}
BENCHMARK(BM_zscore_normalize);

}  // namespace

BENCHMARK_MAIN();
