// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dhlut/lut.hpp"

namespace dhlut {

/// Compensation schemes a sweep can evaluate, in canonical report order.
enum class Scheme { none, full, hlut, dh2, dh4, dh6 };

const char* to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& s);

/// Group count of a dh scheme (0 for the others).
int scheme_group_count(Scheme scheme);

enum class WeightsMode { analytic, empirical };

const char* to_string(WeightsMode mode);
WeightsMode weights_mode_from_string(const std::string& s);

/// Everything a sweep run depends on. The JSON schema mirrors the field
/// names; unknown keys are hard errors so typos cannot silently change an
/// experiment.
struct ExperimentConfig {
    double target_entropy_bits = 5.8;  // per 2D symbol
    int lanes = 2;
    int train_length = 1 << 20;
    int eval_length = 1 << 18;
    BlockConfig block{};  // m, min_count
    std::vector<double> h_lin{1.0, 0.08, -0.03};
    std::vector<double> h_cub{-0.0009, 0.0003, 0.0};
    std::vector<double> snr_sweep_db{20.0, 22.0, 24.0, 26.0, 28.0};
    std::vector<Scheme> schemes{Scheme::none, Scheme::full, Scheme::hlut,
                                Scheme::dh2,  Scheme::dh4,  Scheme::dh6};
    PartitionSpace partition_space = PartitionSpace::contiguous;
    HlutMode hlut_mode = HlutMode::sequential;
    WeightsMode weights_mode = WeightsMode::analytic;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};

    void validate() const;

    static ExperimentConfig load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

/// One measurement: a scheme evaluated at one sweep point with one seed.
struct SweepRow {
    Scheme scheme = Scheme::none;
    double snr_in_db = 0.0;
    std::uint64_t seed = 0;
    double ber = 0.0;
    double ser = 0.0;
    double snr_out_db = 0.0;
    std::int64_t table_entries = 0;
    double table_ratio = 0.0;
    std::optional<double> eta;  // dh schemes only
    double coverage = 1.0;
};

/// Runs the full generate/distort/train/optimize/compensate/measure pipeline
/// for every (seed, sweep point, scheme), writes rows.csv plus one table file
/// per trained (scheme, point, seed) under <out_dir>/tables/, and returns the
/// rows ordered by (scheme, snr, seed). Fully deterministic for a fixed
/// config: identical runs produce byte-identical files.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const std::filesystem::path& out_dir);

enum class ReportFormat { csv, svg };

/// CSV columns, exact order:
///   scheme,snr_in_db,seed,ber,ser,snr_out_db,table_entries,table_ratio,eta,coverage
/// Reals carry 10 significant digits; eta is empty for schemes without
/// degeneration.
void write_rows_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
std::vector<SweepRow> read_rows_csv(const std::filesystem::path& path);

/// Standalone SVG with two panels: BER vs input SNR (log scale, floor 1e-6)
/// and output SNR vs input SNR, one polyline per scheme, seeds averaged.
void write_svg_report(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

/// Renders rows to the requested format. Throws InvalidInput on empty rows.
void emit_report(const std::vector<SweepRow>& rows, const std::filesystem::path& path,
                 ReportFormat format);

}  // namespace dhlut
