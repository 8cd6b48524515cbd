#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "reachkit/bounds.hpp"
#include "reachkit/filtration.hpp"
#include "reachkit/meb.hpp"
#include "reachkit/persistence.hpp"
#include "reachkit/raster.hpp"
#include "reachkit/shapes.hpp"

using namespace reachkit;

namespace {

std::vector<Vec3> random_points(int n, int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng), dim == 3 ? u(rng) : 0.0});
    return pts;
}

void bm_bounds_eval(benchmark::State& state) {
    ReachParams p(1.0, 0.2, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(set_radius_interval(p));
        benchmark::DoNotOptimize(manifold_radius_interval(p));
    }
}
BENCHMARK(bm_bounds_eval);

void bm_min_enclosing_ball(benchmark::State& state) {
    auto pts = random_points(4, 3, 99);
    for (auto _ : state) benchmark::DoNotOptimize(min_enclosing_ball(pts));
}
BENCHMARK(bm_min_enclosing_ball);

void bm_cech_filtration(benchmark::State& state) {
    PointCloud cloud;
    cloud.dim = 2;
    cloud.points = random_points(static_cast<int>(state.range(0)), 2, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(cech_filtration(cloud, 3, 0.5, 10000000));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_cech_filtration)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void bm_persistence(benchmark::State& state) {
    PointCloud cloud;
    cloud.dim = 2;
    cloud.points = random_points(static_cast<int>(state.range(0)), 2, 11);
    Filtration f = cech_filtration(cloud, 3, 0.5, 10000000);
    for (auto _ : state) benchmark::DoNotOptimize(persistence(f));
}
BENCHMARK(bm_persistence)->Arg(16)->Arg(32)->Arg(64);

void bm_raster_circle(benchmark::State& state) {
    ShapeSpec circle = ShapeSpec::make_circle({0, 0, 0}, 1.0);
    PointCloud cloud = sample_shape(circle, 0.2);
    CloudDistance cd(cloud);
    const Box2 box{-1.6, 1.6, -1.6, 1.6};
    const double voxel = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            raster_betti_2d([&](double x, double y) { return cd({x, y, 0.0}); }, box, voxel, 0.3));
    }
}
BENCHMARK(bm_raster_circle)->Arg(100)->Arg(300);

}

BENCHMARK_MAIN();
