#include <benchmark/benchmark.h>

#include "sharpgan/iqa.hpp"
#include "sharpgan/maps.hpp"
#include "sharpgan/maskgen.hpp"
#include "sharpgan/rng.hpp"
#include "sharpgan/segeval.hpp"
#include "sharpgan/sharpness.hpp"

using namespace sharpgan;

namespace {

GrayImage random_gray(uint64_t seed, int side) {
    Rng rng(seed);
    GrayImage img(side, side);
    for (double& v : img.data) v = rng.next_double();
    return img;
}

InstanceMap layout(uint64_t seed, int side) {
    MaskGenConfig cfg;
    cfg.canvas_width = side;
    cfg.canvas_height = side;
    return synthesize_layout(cfg, seed);
}

void BM_synthesize_layout(benchmark::State& state) {
    MaskGenConfig cfg;
    cfg.canvas_width = static_cast<int>(state.range(0));
    cfg.canvas_height = static_cast<int>(state.range(0));
    uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(synthesize_layout(cfg, seed++));
}
BENCHMARK(BM_synthesize_layout)->Arg(128)->Arg(256)->Arg(512);

void BM_distance_map(benchmark::State& state) {
    const InstanceMap m = layout(1, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(distance_map(m, DistanceMode::kCentroid, true));
}
BENCHMARK(BM_distance_map)->Arg(256)->Arg(512);

void BM_contour_map(benchmark::State& state) {
    const InstanceMap m = layout(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(contour_map(m));
}
BENCHMARK(BM_contour_map)->Arg(256)->Arg(512);

void BM_sharpness(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const InstanceMap m = layout(3, side);
    const ContourMap c = contour_map(m);
    const GrayImage g = random_gray(4, side);
    for (auto _ : state) benchmark::DoNotOptimize(sharpness(c, g, {.lambda = 0.3}));
}
BENCHMARK(BM_sharpness)->Arg(256)->Arg(512);

void BM_sharpness_grad(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const InstanceMap m = layout(5, side);
    const ContourMap c = contour_map(m);
    const GrayImage g = random_gray(6, side);
    for (auto _ : state)
        benchmark::DoNotOptimize(sharpness_grad(c, g, {.lambda = 0.3}));
}
BENCHMARK(BM_sharpness_grad)->Arg(256)->Arg(512);

void BM_ssim(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const GrayImage a = random_gray(7, side);
    const GrayImage b = random_gray(8, side);
    for (auto _ : state) benchmark::DoNotOptimize(ssim(a, b));
}
BENCHMARK(BM_ssim)->Arg(128)->Arg(256);

void BM_gmsd(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const GrayImage a = random_gray(9, side);
    const GrayImage b = random_gray(10, side);
    for (auto _ : state) benchmark::DoNotOptimize(gmsd(a, b));
}
BENCHMARK(BM_gmsd)->Arg(256)->Arg(512);

void BM_fsim(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const GrayImage a = random_gray(11, side);
    const GrayImage b = random_gray(12, side);
    for (auto _ : state) benchmark::DoNotOptimize(fsim(a, b));
}
BENCHMARK(BM_fsim)->Arg(128)->Arg(256);

void BM_seg_scores(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const InstanceMap gt = layout(13, side);
    const InstanceMap pred = layout(14, side);
    for (auto _ : state) benchmark::DoNotOptimize(seg_scores(gt, pred));
}
BENCHMARK(BM_seg_scores)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
