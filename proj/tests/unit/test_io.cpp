// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dhlut/channel.hpp"
#include "dhlut/errors.hpp"
#include "dhlut/experiment.hpp"
#include "dhlut/io.hpp"
#include "dhlut/lut.hpp"
#include "dhlut/shaping.hpp"

using namespace dhlut;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "dhlut_io_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("frame file round-trip is exact") {
    const auto dir = temp_dir();
    const auto tx = sample_frame(maxwell_boltzmann(0.04), 2, 300, 17);
    const auto rx = apply_channel(ChannelModel{{1.0, 0.05, -0.01}, {0.001, 0.0, 0.0}, 0.2}, tx, 18);

    save_frame(rx, dir / "frame.json");
    const auto loaded = load_frame(dir / "frame.json");
    CHECK(loaded.lanes == rx.lanes);
    CHECK(loaded.length == rx.length);
    CHECK(loaded.edge_len == rx.edge_len);
    CHECK(loaded.discrete == rx.discrete);
    CHECK(loaded.seed == rx.seed);
    CHECK(loaded.data == rx.data);  // bit-exact

    save_frame(loaded, dir / "frame2.json");
    CHECK(slurp(dir / "frame.json") == slurp(dir / "frame2.json"));
}

TEST_CASE("table files round-trip bit-exactly for every variant") {
    const auto dir = temp_dir();
    const auto dist = maxwell_boltzmann(solve_lambda(5.8));
    const auto tx = sample_frame(dist, 2, 1 << 15, 3);
    const auto rx = apply_channel(ChannelModel{{1.0, 0.08, -0.03}, {-0.0009, 0.0003, 0.0}, 0.24},
                                  tx, 4);
    const BlockConfig cfg;

    SUBCASE("full") {
        const FullLut lut = train_full(tx, rx, cfg);
        save_table(lut, dir / "full.json");
        const auto loaded = load_table(dir / "full.json");
        const auto& back = std::get<FullLut>(loaded);
        CHECK(back.m == lut.m);
        CHECK(back.entries == lut.entries);
        CHECK(back.counts == lut.counts);
        CHECK(back.coverage == lut.coverage);
        CHECK(back.train_seed == lut.train_seed);
        save_table(loaded, dir / "full2.json");
        CHECK(slurp(dir / "full.json") == slurp(dir / "full2.json"));
    }

    SUBCASE("hlut") {
        const HLut lut = train_hlut(tx, rx, cfg, HlutMode::parallel);
        save_table(lut, dir / "hlut.json");
        const auto loaded = load_table(dir / "hlut.json");
        const auto& back = std::get<HLut>(loaded);
        CHECK(back.mode == HlutMode::parallel);
        CHECK(back.lut1 == lut.lut1);
        CHECK(back.lut2 == lut.lut2);
        CHECK(back.counts1 == lut.counts1);
        CHECK(back.counts2 == lut.counts2);
    }

    SUBCASE("dh") {
        const HLut hlut = train_hlut(tx, rx, cfg, HlutMode::sequential);
        const auto weights = pattern_weights(dist, cfg);
        const auto best = optimize_partition_pooled(hlut.lut2, weights, 6, PartitionSpace::contiguous);
        DhLut dh = build_dhlut(hlut, best.partition, weights);
        dh.weights_mode = "analytic";
        save_table(dh, dir / "dh.json");
        const auto loaded = load_table(dir / "dh.json");
        const auto& back = std::get<DhLut>(loaded);
        CHECK(back.partition == dh.partition);
        CHECK(back.lut1 == dh.lut1);
        CHECK(back.lut2_deg == dh.lut2_deg);
        CHECK(back.eta == dh.eta);
        CHECK(back.eta_pooled == dh.eta_pooled);
        CHECK(back.weights_mode == "analytic");
    }
}

TEST_CASE("table io errors") {
    const auto dir = temp_dir();
    CHECK_THROWS_AS(load_table(dir / "does_not_exist.json"), IoError);

    std::ofstream(dir / "bad.json") << "{ not json";
    CHECK_THROWS_AS(load_table(dir / "bad.json"), IoError);

    std::ofstream(dir / "unknown.json") << R"({"version":1,"variant":"nope"})";
    CHECK_THROWS_AS(load_table(dir / "unknown.json"), IoError);

    std::ofstream(dir / "vers.json") << R"({"version":99,"variant":"full"})";
    CHECK_THROWS_AS(load_table(dir / "vers.json"), IoError);
}

TEST_CASE("config: defaults validate, file round-trip, unknown keys rejected") {
    const auto dir = temp_dir();
    ExperimentConfig cfg;
    cfg.validate();
    cfg.save(dir / "config.json");
    const auto loaded = ExperimentConfig::load(dir / "config.json");
    CHECK(loaded.target_entropy_bits == cfg.target_entropy_bits);
    CHECK(loaded.lanes == cfg.lanes);
    CHECK(loaded.h_lin == cfg.h_lin);
    CHECK(loaded.h_cub == cfg.h_cub);
    CHECK(loaded.snr_sweep_db == cfg.snr_sweep_db);
    CHECK(loaded.schemes == cfg.schemes);
    CHECK(loaded.seeds == cfg.seeds);

    std::ofstream(dir / "unknown_key.json") << R"({"train_len": 100})";
    try {
        ExperimentConfig::load(dir / "unknown_key.json");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field_name == "train_len");
    }

    std::ofstream(dir / "unknown_channel_key.json")
        << R"({"channel": {"h_lin": [1.0], "taps": 3}})";
    try {
        ExperimentConfig::load(dir / "unknown_channel_key.json");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field_name == "channel.taps");
    }

    std::ofstream(dir / "bad_scheme.json") << R"({"schemes": ["full", "dh3"]})";
    CHECK_THROWS_AS(ExperimentConfig::load(dir / "bad_scheme.json"), ConfigError);

    std::ofstream(dir / "empty_sweep.json") << R"({"snr_sweep_db": []})";
    CHECK_THROWS_AS(ExperimentConfig::load(dir / "empty_sweep.json"), ConfigError);
}
