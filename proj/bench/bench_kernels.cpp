// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Serial reference vs OpenMP kernels on the heavy paths: full power-grid
// rate evaluation, pinned surface grids, and the symmetric b sweep.

#include <benchmark/benchmark.h>

#include "icregion/channel.hpp"
#include "icregion/crystallize.hpp"
#include "icregion/oracle.hpp"
#include "icregion/power_grid.hpp"

using namespace icregion;

static void BM_rate_grid_2user_serial(benchmark::State& state) {
    const auto ch = two_user_channel({10, 1, 10, 4, 1});
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_rate_grid_serial(ch, m));
}
BENCHMARK(BM_rate_grid_2user_serial)->Arg(201)->Arg(401);

static void BM_rate_grid_2user_omp(benchmark::State& state) {
    const auto ch = two_user_channel({10, 1, 10, 4, 1});
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_rate_grid_omp(ch, m));
}
BENCHMARK(BM_rate_grid_2user_omp)->Arg(201)->Arg(401);

static void BM_rate_grid_3user_serial(benchmark::State& state) {
    const auto ch = symmetric_channel(3, 1.0, 0.4, 1.0);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_rate_grid_serial(ch, m));
}
BENCHMARK(BM_rate_grid_3user_serial)->Arg(41)->Arg(81);

static void BM_rate_grid_3user_omp(benchmark::State& state) {
    const auto ch = symmetric_channel(3, 1.0, 0.4, 1.0);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_rate_grid_omp(ch, m));
}
BENCHMARK(BM_rate_grid_3user_omp)->Arg(41)->Arg(81);

static void BM_pinned_grid_serial(benchmark::State& state) {
    const auto ch = symmetric_channel(4, 1.0, 0.4, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_pinned_grid_serial(ch, 0, 41, nullptr));
}
BENCHMARK(BM_pinned_grid_serial);

static void BM_pinned_grid_omp(benchmark::State& state) {
    const auto ch = symmetric_channel(4, 1.0, 0.4, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(eval_pinned_grid_omp(ch, 0, 41, nullptr));
}
BENCHMARK(BM_pinned_grid_omp);

static void BM_sweep_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sweep_b_symmetric(1.0, 1.0, -20.0, 0.0, 1.0, 512, Exec::Serial));
}
BENCHMARK(BM_sweep_serial);

static void BM_sweep_omp(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sweep_b_symmetric(1.0, 1.0, -20.0, 0.0, 1.0, 512, Exec::Parallel));
}
BENCHMARK(BM_sweep_omp);

static void BM_support_hull_serial(benchmark::State& state) {
    const auto ch = symmetric_channel(5, 1.0, 0.4, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(hull(ch, 1024, Exec::Serial));
}
BENCHMARK(BM_support_hull_serial);

static void BM_support_hull_omp(benchmark::State& state) {
    const auto ch = symmetric_channel(5, 1.0, 0.4, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(hull(ch, 1024, Exec::Parallel));
}
BENCHMARK(BM_support_hull_omp);

BENCHMARK_MAIN();
