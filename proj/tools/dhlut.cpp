// SPDX-License-Identifier: Apache-2.0
//
// Experiment harness for LUT-based nonlinearity compensation on shaped
// 64-QAM lanes: generate / train / optimize / compensate / sweep / report /
// info, all driven by a JSON config and exchanging JSON frame and table
// files so every stage can be rerun on its own.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dhlut/channel.hpp"
#include "dhlut/errors.hpp"
#include "dhlut/experiment.hpp"
#include "dhlut/io.hpp"
#include "dhlut/lut.hpp"
#include "dhlut/metrics.hpp"

namespace {

using namespace dhlut;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

ShapingDistribution config_distribution(const ExperimentConfig& cfg) {
    return maxwell_boltzmann(solve_lambda(cfg.target_entropy_bits));
}

int cmd_generate(const std::string& config_path, int length, std::uint64_t seed,
                 const std::string& out, const std::string& rx_out,
                 std::optional<double> snr_db_opt, std::uint64_t noise_seed) {
    const ExperimentConfig cfg = ExperimentConfig::load(config_path);
    const ShapingDistribution dist = config_distribution(cfg);
    const int n = length > 0 ? length : cfg.train_length;
    const SymbolFrame tx = sample_frame(dist, cfg.lanes, n, seed);
    save_frame(tx, out);
    std::cout << "wrote " << out << " (" << cfg.lanes << " x " << n << " symbols)\n";
    if (!rx_out.empty()) {
        if (!snr_db_opt) {
            throw ConfigError("snr-db", "required when --rx-out is given");
        }
        ChannelModel model{cfg.h_lin, cfg.h_cub, noise_sigma_for_snr(dist, *snr_db_opt)};
        const SymbolFrame rx = apply_channel(model, tx, noise_seed);
        save_frame(rx, rx_out);
        std::cout << "wrote " << rx_out << " (channel at " << *snr_db_opt << " dB input SNR)\n";
    }
    return kExitOk;
}

int cmd_train(const std::string& config_path, const std::string& tx_path,
              const std::string& rx_path, const std::string& variant, const std::string& out) {
    const ExperimentConfig cfg = ExperimentConfig::load(config_path);
    const SymbolFrame tx = load_frame(tx_path);
    const SymbolFrame rx = load_frame(rx_path);
    AnyLut table;
    if (variant == "full") {
        table = train_full(tx, rx, cfg.block);
    } else if (variant == "hlut") {
        table = train_hlut(tx, rx, cfg.block, cfg.hlut_mode);
    } else {
        throw ConfigError("variant", "must be 'full' or 'hlut' (dh tables come from 'optimize')");
    }
    save_table(table, out);
    std::cout << "wrote " << out << '\n';
    return kExitOk;
}

int cmd_optimize(const std::string& config_path, const std::string& table_path, int n,
                 const std::string& tx_path, const std::string& out) {
    const ExperimentConfig cfg = ExperimentConfig::load(config_path);
    const AnyLut any = load_table(table_path);
    const auto* hlut = std::get_if<HLut>(&any);
    if (hlut == nullptr) {
        throw ConfigError("table", "optimize expects an hlut table file");
    }
    BlockConfig block = cfg.block;
    block.m = hlut->m;
    PatternWeights weights;
    if (cfg.weights_mode == WeightsMode::analytic) {
        weights = pattern_weights(config_distribution(cfg), block);
    } else {
        if (tx_path.empty()) {
            throw ConfigError("tx", "empirical weights need the training frame (--tx)");
        }
        weights = pattern_weights(load_frame(tx_path), block);
    }
    const auto result = optimize_partition_pooled(hlut->lut2, weights, n, cfg.partition_space);
    DhLut dh = build_dhlut(*hlut, result.partition, weights);
    dh.weights_mode = to_string(cfg.weights_mode);
    for (const auto& lane_lut2 : hlut->lut2) {
        dh.eta_lane_optimal.push_back(
            optimize_partition(lane_lut2, weights, n, cfg.partition_space).eta);
    }
    save_table(dh, out);
    std::cout << "wrote " << out << " (eta " << result.eta << ", group_of";
    for (int g : result.partition.group_of) std::cout << ' ' << g;
    std::cout << ")\n";
    return kExitOk;
}

int cmd_compensate(const std::string& table_path, const std::string& rx_path,
                   const std::string& out) {
    const AnyLut table = load_table(table_path);
    const SymbolFrame rx = load_frame(rx_path);
    BlockConfig block;
    std::visit([&](const auto& t) { block.m = t.m; block.min_count = t.min_count; }, table);
    const SymbolFrame comp = compensate(rx, table, block);
    save_frame(comp, out);
    std::cout << "wrote " << out << '\n';
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir) {
    const ExperimentConfig cfg = ExperimentConfig::load(config_path);
    const auto rows = run_sweep(cfg, out_dir);
    std::cout << "wrote " << (std::filesystem::path(out_dir) / "rows.csv").string() << " ("
              << rows.size() << " rows) and " << (std::filesystem::path(out_dir) / "tables").string()
              << "/\n";
    return kExitOk;
}

int cmd_report(const std::string& rows_path, const std::string& format, const std::string& out) {
    const auto rows = read_rows_csv(rows_path);
    if (format == "csv") {
        emit_report(rows, out, ReportFormat::csv);
    } else if (format == "svg") {
        emit_report(rows, out, ReportFormat::svg);
    } else {
        throw ConfigError("format", "must be 'csv' or 'svg'");
    }
    std::cout << "wrote " << out << '\n';
    return kExitOk;
}

int cmd_info(const std::string& table_path) {
    const AnyLut table = load_table(table_path);
    if (const auto* full = std::get_if<FullLut>(&table)) {
        BlockConfig block{full->m, full->min_count};
        const auto info = table_size_report({TableKind::full, 0}, block);
        std::printf("variant        full\n");
        std::printf("m              %d\n", full->m);
        std::printf("lanes          %d\n", full->lane_count());
        std::printf("entries/lane   %lld\n", static_cast<long long>(info.entries_per_lane));
        std::printf("ratio vs full  %.10g\n", info.ratio_vs_full);
        std::printf("eta            -\n");
        std::printf("coverage       %.10g\n", full->coverage);
        std::printf("train_seed     %llu\n", static_cast<unsigned long long>(full->train_seed));
    } else if (const auto* hl = std::get_if<HLut>(&table)) {
        BlockConfig block{hl->m, hl->min_count};
        const auto info = table_size_report({TableKind::hlut, 0}, block);
        std::printf("variant        hlut (%s)\n", to_string(hl->mode));
        std::printf("m              %d\n", hl->m);
        std::printf("lanes          %d\n", hl->lane_count());
        std::printf("entries/lane   %lld\n", static_cast<long long>(info.entries_per_lane));
        std::printf("ratio vs full  %.10g\n", info.ratio_vs_full);
        std::printf("eta            -\n");
        std::printf("coverage       %.10g\n", hl->coverage);
        std::printf("train_seed     %llu\n", static_cast<unsigned long long>(hl->train_seed));
    } else {
        const auto& dh = std::get<DhLut>(table);
        BlockConfig block{dh.m, dh.min_count};
        const auto info = table_size_report({TableKind::dh, dh.partition.n}, block);
        std::printf("variant        dh%d (%s, %s weights)\n", dh.partition.n, to_string(dh.mode),
                    dh.weights_mode.c_str());
        std::printf("m              %d\n", dh.m);
        std::printf("lanes          %d\n", dh.lane_count());
        std::printf("entries/lane   %lld\n", static_cast<long long>(info.entries_per_lane));
        std::printf("ratio vs full  %.10g\n", info.ratio_vs_full);
        std::printf("eta (pooled)   %.10g\n", dh.eta_pooled);
        for (std::size_t l = 0; l < dh.eta.size(); ++l) {
            std::printf("eta lane %zu     %.10g\n", l, dh.eta[l]);
        }
        std::printf("group_of      ");
        for (int g : dh.partition.group_of) std::printf(" %d", g);
        std::printf("\n");
        std::printf("coverage       %.10g\n", dh.coverage);
        std::printf("train_seed     %llu\n", static_cast<unsigned long long>(dh.train_seed));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LUT compensation of transceiver nonlinearities for shaped 64-QAM lanes"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Sample a shaped frame (optionally distorted)");
    std::string gen_config, gen_out, gen_rx_out;
    int gen_length = 0;
    std::uint64_t gen_seed = 1, gen_noise_seed = 1;
    double gen_snr = 0.0;
    gen->add_option("--config", gen_config, "experiment config JSON")->required();
    gen->add_option("--length", gen_length, "symbols per lane (default: config train_length)");
    gen->add_option("--seed", gen_seed, "frame seed");
    gen->add_option("--out", gen_out, "output frame file")->required();
    gen->add_option("--rx-out", gen_rx_out, "also write the channel output here");
    auto* gen_snr_opt = gen->add_option("--snr-db", gen_snr, "input SNR for --rx-out");
    gen->add_option("--noise-seed", gen_noise_seed, "noise seed for --rx-out");

    // train
    auto* train = app.add_subcommand("train", "Train a full or hlut table from tx/rx frames");
    std::string train_config, train_tx, train_rx, train_variant = "hlut", train_out;
    train->add_option("--config", train_config)->required();
    train->add_option("--tx", train_tx, "transmitted (discrete) frame")->required();
    train->add_option("--rx", train_rx, "received frame")->required();
    train->add_option("--variant", train_variant, "full | hlut");
    train->add_option("--out", train_out, "output table file")->required();

    // optimize
    auto* opt = app.add_subcommand("optimize", "Degenerate an hlut table with the best scheme");
    std::string opt_config, opt_table, opt_tx, opt_out;
    int opt_n = 6;
    opt->add_option("--config", opt_config)->required();
    opt->add_option("--table", opt_table, "hlut table file")->required();
    opt->add_option("--n", opt_n, "group count (1..8)");
    opt->add_option("--tx", opt_tx, "training frame (empirical weights only)");
    opt->add_option("--out", opt_out, "output table file")->required();

    // compensate
    auto* comp = app.add_subcommand("compensate", "Apply a table to a received frame");
    std::string comp_table, comp_rx, comp_out;
    comp->add_option("--table", comp_table)->required();
    comp->add_option("--rx", comp_rx)->required();
    comp->add_option("--out", comp_out)->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run the full sweep pipeline from a config");
    std::string sweep_config, sweep_out;
    sweep->add_option("--config", sweep_config)->required();
    sweep->add_option("--out", sweep_out, "output directory")->required();

    // report
    auto* report = app.add_subcommand("report", "Render sweep rows to CSV or SVG");
    std::string report_rows, report_format = "csv", report_out;
    report->add_option("--rows", report_rows, "rows.csv from a sweep")->required();
    report->add_option("--format", report_format, "csv | svg");
    report->add_option("--out", report_out)->required();

    // info
    auto* info = app.add_subcommand("info", "Print size/eta/coverage of a table file");
    std::string info_table;
    info->add_option("--table", info_table)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(gen_config, gen_length, gen_seed, gen_out, gen_rx_out,
                                gen_snr_opt->count() ? std::optional<double>(gen_snr)
                                                     : std::nullopt,
                                gen_noise_seed);
        }
        if (train->parsed()) {
            return cmd_train(train_config, train_tx, train_rx, train_variant, train_out);
        }
        if (opt->parsed()) {
            return cmd_optimize(opt_config, opt_table, opt_n, opt_tx, opt_out);
        }
        if (comp->parsed()) {
            return cmd_compensate(comp_table, comp_rx, comp_out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_config, sweep_out);
        }
        if (report->parsed()) {
            return cmd_report(report_rows, report_format, report_out);
        }
        if (info->parsed()) {
            return cmd_info(info_table);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
