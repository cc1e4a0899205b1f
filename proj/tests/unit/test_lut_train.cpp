// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "dhlut/channel.hpp"
#include "dhlut/errors.hpp"
#include "dhlut/lut.hpp"
#include "dhlut/metrics.hpp"
#include "dhlut/rng.hpp"
#include "dhlut/shaping.hpp"

using namespace dhlut;

namespace {

std::size_t pattern_index_of(const std::vector<int>& pattern) {
    std::size_t idx = 0;
    for (int level : pattern) idx = idx * 8 + static_cast<std::size_t>(level_index(level));
    return idx;
}

}  // namespace

TEST_CASE("train_full: identity channel yields a zero table with full counts") {
    const auto tx = sample_frame(maxwell_boltzmann(0.0), 2, 1 << 15, 1);
    const auto rx = apply_channel(ChannelModel{}, tx, 2);
    const auto lut = train_full(tx, rx, BlockConfig{});
    for (const auto& lane : lut.entries) {
        for (double v : lane) CHECK(v == 0.0);
    }
    std::int64_t total = 0;
    for (const auto& lane : lut.counts) {
        for (std::int64_t c : lane) total += c;
    }
    CHECK(total == 2 * ((1 << 15) - 2));  // window needs m-1 = 2 predecessors
}

TEST_CASE("train_full: memoryless cubic distortion lands on the current symbol") {
    const auto tx = sample_frame(maxwell_boltzmann(0.0), 1, 1 << 16, 3);
    const auto rx = apply_channel(ChannelModel{{1.0}, {0.002}, 0.0}, tx, 4);
    const auto lut = train_full(tx, rx, BlockConfig{});
    for (std::size_t i = 0; i < lut.entries[0].size(); ++i) {
        if (lut.counts[0][i] < lut.min_count) continue;
        const int cur = kAskLevels[i % 8];
        const double expected = 0.002 * cur * cur * cur;
        CHECK(std::abs(lut.entries[0][i] - expected) <= 1e-12);
    }
    CHECK(std::abs(lut.entries[0][pattern_index_of({1, 1, 7})] - 0.686) <= 1e-12);
}

TEST_CASE("train_full: one-tap memory matches the grouped-average oracle") {
    const auto tx = sample_frame(maxwell_boltzmann(0.0), 1, 1 << 16, 5);
    const auto rx = apply_channel(ChannelModel{{1.0, 0.05}, {0.0, 0.0}, 0.0}, tx, 6);
    const BlockConfig cfg;
    const auto lut = train_full(tx, rx, cfg);

    std::vector<double> tx_lane(tx.lane(0).begin(), tx.lane(0).end());
    std::vector<double> rx_lane(rx.lane(0).begin(), rx.lane(0).end());
    const auto oracle_means = oracle::grouped_mean_full(tx_lane, rx_lane, cfg.m, cfg.m - 1);

    for (const auto& [pattern, mean] : oracle_means.mean) {
        const std::size_t idx = pattern_index_of(pattern);
        if (oracle_means.count.at(pattern) < cfg.min_count) {
            CHECK(lut.entries[0][idx] == 0.0);
            continue;
        }
        CHECK(std::abs(lut.entries[0][idx] - mean) <= 1e-12);
        // The error depends only on the symbol one step back: 0.05 * p1.
        const double expected = 0.05 * pattern[1];
        CHECK(std::abs(mean - expected) <= 1e-12);
        CHECK(lut.counts[0][idx] == oracle_means.count.at(pattern));
    }
}

TEST_CASE("train_hlut: identity channel gives all-zero tables") {
    const auto tx = sample_frame(maxwell_boltzmann(0.0), 2, 1 << 14, 7);
    const auto rx = apply_channel(ChannelModel{}, tx, 8);
    for (auto mode : {HlutMode::sequential, HlutMode::parallel}) {
        const auto lut = train_hlut(tx, rx, BlockConfig{}, mode);
        for (const auto& lane : lut.lut1) {
            for (double v : lane) CHECK(v == 0.0);  // exact: zero errors accumulate to zero
        }
        for (const auto& lane : lut.lut2) {
            for (double v : lane) CHECK(std::abs(v) <= 1e-15);
        }
    }
}

TEST_CASE("train_hlut sequential: memoryless distortion stays out of lut2") {
    const auto tx = sample_frame(maxwell_boltzmann(0.0), 1, 1 << 17, 9);
    const auto rx = apply_channel(ChannelModel{{1.0}, {0.002}, 0.0}, tx, 10);
    const auto lut = train_hlut(tx, rx, BlockConfig{}, HlutMode::sequential);
    for (int i = 0; i < kLevelCount; ++i) {
        const double a = kAskLevels[i];
        CHECK(std::abs(lut.lut1[0][i] - 0.002 * a * a * a) <= 1e-12);
    }
    for (double v : lut.lut2[0]) {
        CHECK(std::abs(v) <= 1e-12);
    }
    // Compensation is exact on a fresh frame through the same channel.
    const auto tx2 = sample_frame(maxwell_boltzmann(0.0), 1, 1 << 14, 11);
    const auto rx2 = apply_channel(ChannelModel{{1.0}, {0.002}, 0.0}, tx2, 12);
    const auto comp = compensate(rx2, lut, BlockConfig{});
    for (int k = 2; k < tx2.length; ++k) {
        CHECK(std::abs(comp.at(0, k) - tx2.at(0, k)) <= 1e-12);
    }
}

TEST_CASE("train_hlut sequential: lut2 matches the residual grouped-mean oracle") {
    const auto tx = sample_frame(maxwell_boltzmann(0.02), 1, 1 << 16, 13);
    const auto rx = apply_channel(ChannelModel{{1.0, 0.04}, {0.001, 0.0}, 0.0}, tx, 14);
    const BlockConfig cfg;
    const auto lut = train_hlut(tx, rx, cfg, HlutMode::sequential);

    std::vector<double> tx_lane(tx.lane(0).begin(), tx.lane(0).end());
    std::vector<double> rx_lane(rx.lane(0).begin(), rx.lane(0).end());
    const auto oracle_means =
        oracle::grouped_mean_past_residual(tx_lane, rx_lane, cfg.m, cfg.m - 1, lut.lut1[0]);

    for (const auto& [past, mean] : oracle_means.mean) {
        const std::size_t q = pattern_index_of(past);
        if (oracle_means.count.at(past) < cfg.min_count) {
            CHECK(lut.lut2[0][q] == 0.0);
        } else {
            CHECK(std::abs(lut.lut2[0][q] - mean) <= 1e-12);
        }
    }
}

TEST_CASE("train_hlut: separable channel compensates to small residual, both modes") {
    // y(k) = x(k) + 0.001 x(k)^3 + 0.04 x(k-1), noise free.
    const ChannelModel model{{1.0, 0.04}, {0.001, 0.0}, 0.0};
    const auto dist = maxwell_boltzmann(0.0);
    const auto tx = sample_frame(dist, 1, 1 << 20, 15);
    const auto rx = apply_channel(model, tx, 16);
    const auto tx_eval = sample_frame(dist, 1, 1 << 14, 17);
    const auto rx_eval = apply_channel(model, tx_eval, 18);

    for (auto mode : {HlutMode::sequential, HlutMode::parallel}) {
        const auto lut = train_hlut(tx, rx, BlockConfig{}, mode);
        const auto comp = compensate(rx_eval, lut, BlockConfig{});
        long double ss = 0.0L;
        int n = 0;
        for (int k = 2; k < tx_eval.length; ++k) {
            const double r = comp.at(0, k) - tx_eval.at(0, k);
            ss += static_cast<long double>(r) * r;
            ++n;
        }
        const double rms = std::sqrt(static_cast<double>(ss) / n);
        CAPTURE(to_string(mode));
        CHECK(rms <= 0.01);
    }
}

TEST_CASE("train: shape and type errors") {
    const auto tx = sample_frame(maxwell_boltzmann(0.0), 1, 64, 1);
    const auto rx_small = apply_channel(ChannelModel{}, sample_frame(maxwell_boltzmann(0.0), 1, 32, 1), 2);
    CHECK_THROWS_AS(train_full(tx, rx_small, BlockConfig{}), InvalidInput);
    CHECK_THROWS_AS(train_hlut(tx, rx_small, BlockConfig{}, HlutMode::sequential), InvalidInput);

    SymbolFrame continuous = apply_channel(ChannelModel{}, tx, 3);
    CHECK_THROWS_AS(train_full(continuous, continuous, BlockConfig{}), InvalidInput);

    BlockConfig bad;
    bad.m = 1;
    CHECK_THROWS_AS(train_full(tx, apply_channel(ChannelModel{}, tx, 4), bad), InvalidParameter);
}

TEST_CASE("pattern_weights: analytic values") {
    const BlockConfig cfg;
    SUBCASE("uniform gives 1/64 everywhere") {
        const auto w = pattern_weights(maxwell_boltzmann(0.0), cfg);
        CHECK(w.w.size() == 64);
        for (double v : w.w) CHECK(v == doctest::Approx(1.0 / 64).epsilon(1e-14));
    }
    SUBCASE("shaped weights are the product of marginals") {
        const auto dist = maxwell_boltzmann(0.05);
        const auto w = pattern_weights(dist, cfg);
        for (std::size_t q = 0; q < w.w.size(); ++q) {
            const double expected = dist.probs[(q / 8) % 8] * dist.probs[q % 8];
            CHECK(std::abs(w.w[q] - expected) <= 1e-12);
        }
    }
}

TEST_CASE("pattern_weights: empirical counts match a counting oracle exactly") {
    const BlockConfig cfg;
    const auto tx = sample_frame(maxwell_boltzmann(0.03), 2, 5000, 19);
    const auto w = pattern_weights(tx, cfg);

    std::map<std::pair<int, int>, std::int64_t> counts;
    std::int64_t total = 0;
    for (int l = 0; l < tx.lanes; ++l) {
        for (int k = cfg.m - 1; k < tx.length; ++k) {
            counts[{static_cast<int>(tx.at(l, k - 2)), static_cast<int>(tx.at(l, k - 1))}] += 1;
            ++total;
        }
    }
    for (const auto& [key, c] : counts) {
        const std::size_t q = pattern_index_of({key.first, key.second});
        CHECK(w.w[q] == static_cast<double>(c) / static_cast<double>(total));
    }
}

TEST_CASE("compensate: all-zero tables pass the frame through") {
    const auto rx = apply_channel(ChannelModel{{1.0}, {0.0}, 0.5},
                                  sample_frame(maxwell_boltzmann(0.0), 2, 256, 20), 21);
    FullLut zero_full;
    zero_full.entries.assign(2, std::vector<double>(512, 0.0));
    zero_full.counts.assign(2, std::vector<std::int64_t>(512, 0));
    const auto comp = compensate(rx, zero_full, BlockConfig{});
    CHECK(comp.data == rx.data);
    CHECK(comp.edge_len == 2);
}

TEST_CASE("compensate: a single lut1 point mass hits exactly the decided +7 samples") {
    HLut lut;
    lut.lut1.assign(1, {});
    lut.counts1.assign(1, {});
    lut.lut2.assign(1, std::vector<double>(64, 0.0));
    lut.counts2.assign(1, std::vector<std::int64_t>(64, 0));
    lut.lut1[0][level_index(7)] = 0.5;

    SymbolFrame rx = SymbolFrame::make(1, 6, false, 0);
    rx.at(0, 0) = 1.1;
    rx.at(0, 1) = -3.0;
    rx.at(0, 2) = 6.9;   // decides to +7
    rx.at(0, 3) = 5.0;
    rx.at(0, 4) = 7.3;   // decides to +7
    rx.at(0, 5) = -1.2;
    const auto comp = compensate(rx, lut, BlockConfig{});
    CHECK(comp.at(0, 0) == 1.1);   // edge: passes through
    CHECK(comp.at(0, 1) == -3.0);  // edge
    CHECK(comp.at(0, 2) == 6.9 - 0.5);
    CHECK(comp.at(0, 3) == 5.0);
    CHECK(comp.at(0, 4) == 7.3 - 0.5);
    CHECK(comp.at(0, 5) == -1.2);
}

TEST_CASE("compensate full: exact recovery on noise-free in-window channels") {
    // Property over random gentle channels with memory <= m and full coverage.
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> lin(-0.02, 0.02);
    std::uniform_real_distribution<double> cub0(-0.0008, 0.0008);
    std::uniform_real_distribution<double> cub(-0.0003, 0.0003);
    const auto dist = maxwell_boltzmann(0.0);
    const BlockConfig cfg;

    for (int trial = 0; trial < 20; ++trial) {
        ChannelModel model;
        model.h_lin = {1.0, lin(gen), lin(gen)};
        model.h_cub = {cub0(gen), cub(gen), cub(gen)};
        model.noise_sigma = 0.0;

        const auto tx = sample_frame(dist, 1, 1 << 18, 100 + trial);
        const auto rx = apply_channel(model, tx, 200 + trial);
        const auto lut = train_full(tx, rx, cfg);
        REQUIRE(lut.coverage == 1.0);

        const auto tx2 = sample_frame(dist, 1, 1 << 14, 300 + trial);
        const auto rx2 = apply_channel(model, tx2, 400 + trial);
        const auto comp = compensate(rx2, lut, cfg);
        double worst = 0.0;
        for (int k = cfg.m - 1; k < tx2.length; ++k) {
            worst = std::max(worst, std::abs(comp.at(0, k) - tx2.at(0, k)));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("table_size_report: published ratios") {
    const BlockConfig cfg;  // m = 3
    const auto full = table_size_report({TableKind::full, 0}, cfg);
    CHECK(full.entries_per_lane == 512);
    CHECK(full.ratio_vs_full == 1.0);

    const auto hlut = table_size_report({TableKind::hlut, 0}, cfg);
    CHECK(hlut.entries_per_lane == 72);
    CHECK(hlut.ratio_vs_full == 0.140625);

    const auto dh6 = table_size_report({TableKind::dh, 6}, cfg);
    CHECK(dh6.entries_per_lane == 44);
    CHECK(dh6.ratio_vs_full == 0.0859375);

    const auto dh4 = table_size_report({TableKind::dh, 4}, cfg);
    CHECK(dh4.entries_per_lane == 24);

    const auto dh2 = table_size_report({TableKind::dh, 2}, cfg);
    CHECK(dh2.entries_per_lane == 12);
    CHECK(dh2.ratio_vs_full == 0.0234375);

    CHECK_THROWS_AS(table_size_report({TableKind::dh, 9}, cfg), InvalidParameter);
}

TEST_CASE("coverage: shrinks when training is too short") {
    const auto tx = sample_frame(maxwell_boltzmann(0.0), 1, 2000, 40);
    const auto rx = apply_channel(ChannelModel{}, tx, 41);
    const auto lut = train_full(tx, rx, BlockConfig{});
    CHECK(lut.coverage < 1.0);   // 512 bins cannot all reach 8 hits in 2000 symbols
    CHECK(lut.coverage > 0.0);
}
