// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "dhlut/channel.hpp"
#include "dhlut/lut.hpp"
#include "dhlut/metrics.hpp"
#include "dhlut/rng.hpp"
#include "dhlut/shaping.hpp"

using namespace dhlut;

namespace {

const ShapingDistribution& dist() {
    static const ShapingDistribution d = maxwell_boltzmann(solve_lambda(5.8));
    return d;
}

ChannelModel default_channel(double sigma) {
    return {{1.0, 0.08, -0.03}, {-0.0009, 0.0003, 0.0}, sigma};
}

}  // namespace

static void BM_sample_frame(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto frame = sample_frame(dist(), 1, len, 42);
        benchmark::DoNotOptimize(frame.data.data());
    }
    state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_sample_frame)->Arg(1 << 16)->Arg(1 << 20);

static void BM_apply_channel(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    const auto tx = sample_frame(dist(), 1, len, 42);
    const auto model = default_channel(0.24);
    for (auto _ : state) {
        auto rx = apply_channel(model, tx, 7);
        benchmark::DoNotOptimize(rx.data.data());
    }
    state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_apply_channel)->Arg(1 << 16)->Arg(1 << 20);

static void BM_train_full(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    const auto tx = sample_frame(dist(), 1, len, 42);
    const auto rx = apply_channel(default_channel(0.24), tx, 7);
    for (auto _ : state) {
        auto lut = train_full(tx, rx, BlockConfig{});
        benchmark::DoNotOptimize(lut.entries.data());
    }
    state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_train_full)->Arg(1 << 18)->Arg(1 << 20);

static void BM_train_hlut(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    const auto tx = sample_frame(dist(), 1, len, 42);
    const auto rx = apply_channel(default_channel(0.24), tx, 7);
    for (auto _ : state) {
        auto lut = train_hlut(tx, rx, BlockConfig{}, HlutMode::sequential);
        benchmark::DoNotOptimize(lut.lut2.data());
    }
    state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_train_hlut)->Arg(1 << 18)->Arg(1 << 20);

static void BM_compensate_hlut(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    const auto tx = sample_frame(dist(), 1, len, 42);
    const auto rx = apply_channel(default_channel(0.24), tx, 7);
    const auto lut = train_hlut(tx, rx, BlockConfig{}, HlutMode::sequential);
    for (auto _ : state) {
        auto comp = compensate(rx, lut, BlockConfig{});
        benchmark::DoNotOptimize(comp.data.data());
    }
    state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_compensate_hlut)->Arg(1 << 18);

static void BM_optimize_partition(benchmark::State& state) {
    const auto space =
        state.range(0) == 0 ? PartitionSpace::contiguous : PartitionSpace::all;
    const auto tx = sample_frame(dist(), 1, 1 << 18, 42);
    const auto rx = apply_channel(default_channel(0.24), tx, 7);
    const auto lut = train_hlut(tx, rx, BlockConfig{}, HlutMode::sequential);
    const auto weights = pattern_weights(dist(), BlockConfig{});
    for (auto _ : state) {
        auto result = optimize_partition(lut.lut2[0], weights, 6, space);
        benchmark::DoNotOptimize(result.eta);
    }
}
BENCHMARK(BM_optimize_partition)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
