// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dhlut/ask.hpp"
#include "dhlut/frame.hpp"
#include "dhlut/shaping.hpp"

namespace dhlut {

/// Pattern window configuration shared by every table variant: a correction
/// is indexed by the current symbol plus the (m-1) symbols before it.
struct BlockConfig {
    int m = 3;          // block length, >= 2
    int min_count = 8;  // observations required before an entry is trusted

    void validate() const;

    /// 8^m full-table entries per lane.
    std::size_t full_size() const;
    /// 8^(m-1) past-pattern entries per lane.
    std::size_t past_size() const;
};

/// How the past-pattern table of a hierarchical LUT is trained.
///   sequential: train the current-symbol table first, then train the past
///               table on the residuals it leaves.
///   parallel:   train both as raw grouped means; the global mean error is
///               subtracted from the past table to avoid double counting.
enum class HlutMode { sequential, parallel };

const char* to_string(HlutMode mode);
HlutMode hlut_mode_from_string(const std::string& s);

/// Conventional one-stage table: one correction per full m-symbol pattern.
/// Pattern index digits run oldest..current, base 8 (current symbol is the
/// least significant digit). Entries observed fewer than min_count times are
/// zero and counted against `coverage`.
struct FullLut {
    int m = 3;
    int min_count = 8;
    std::vector<std::vector<double>> entries;        // per lane, 8^m
    std::vector<std::vector<std::int64_t>> counts;   // per lane, 8^m
    double coverage = 0.0;                           // lane-averaged trusted-entry fraction
    std::uint64_t train_seed = 0;

    int lane_count() const { return static_cast<int>(entries.size()); }
};

/// Two-stage table: an 8-entry current-symbol table (lut1) plus an
/// 8^(m-1)-entry past-pattern table (lut2). Past index digits run oldest
/// first, base 8.
struct HLut {
    int m = 3;
    int min_count = 8;
    HlutMode mode = HlutMode::sequential;
    std::vector<std::array<double, 8>> lut1;          // per lane
    std::vector<std::array<std::int64_t, 8>> counts1;
    std::vector<std::vector<double>> lut2;            // per lane, 8^(m-1)
    std::vector<std::vector<std::int64_t>> counts2;
    double coverage = 0.0;
    std::uint64_t train_seed = 0;

    int lane_count() const { return static_cast<int>(lut1.size()); }
};

/// Surjective mapping of the 8 amplitude levels onto n group ids -- the
/// scheme by which past-symbol digits are coarsened.
struct Partition {
    std::array<int, 8> group_of{};  // indexed by level_index(a)
    int n = 0;

    /// Every level its own group.
    static Partition identity();
    /// All levels in one group.
    static Partition single_group();

    int group(int level) const { return group_of[level_index(level)]; }

    /// True when every group is an interval in amplitude order.
    bool is_contiguous() const;

    void validate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Probability weight of each 8^(m-1) past pattern. Sums to 1 (1e-12).
struct PatternWeights {
    int m = 3;
    std::vector<double> w;  // 8^(m-1), same index order as HLut::lut2

    void validate() const;
};

/// Hierarchical table whose past-pattern table has been degenerated: past
/// digits are first mapped through the partition, so lut2_deg has n^(m-1)
/// entries per lane (digits oldest first, base n).
struct DhLut {
    int m = 3;
    int min_count = 8;
    HlutMode mode = HlutMode::sequential;
    std::vector<std::array<double, 8>> lut1;      // copied from the source HLut
    std::vector<std::vector<double>> lut2_deg;    // per lane, n^(m-1)
    Partition partition;
    std::string weights_mode;                     // "analytic" or "empirical"
    std::vector<double> eta;                      // per-lane eta of the applied partition
    std::vector<double> eta_lane_optimal;         // per-lane minimum over the search space
    double eta_pooled = 0.0;
    double coverage = 0.0;
    std::uint64_t train_seed = 0;

    int lane_count() const { return static_cast<int>(lut1.size()); }
};

using AnyLut = std::variant<FullLut, HLut, DhLut>;

// ---------------------------------------------------------------------------
// Training
// ---------------------------------------------------------------------------

/// Trains a full table: for every m-symbol transmit pattern, the mean of the
/// received-minus-transmitted error at the pattern's last position.
/// tx must be discrete and aligned symbol-for-symbol with rx.
FullLut train_full(const SymbolFrame& tx, const SymbolFrame& rx, const BlockConfig& cfg);

/// Trains the two-stage table; see HlutMode for the two training orders.
HLut train_hlut(const SymbolFrame& tx, const SymbolFrame& rx, const BlockConfig& cfg,
                HlutMode mode = HlutMode::sequential);

/// Past-pattern weights as the product of per-level marginals.
PatternWeights pattern_weights(const ShapingDistribution& dist, const BlockConfig& cfg);

/// Past-pattern weights as normalized occurrence counts over the frame
/// (pooled across lanes, same positions training would use).
PatternWeights pattern_weights(const SymbolFrame& tx, const BlockConfig& cfg);

// ---------------------------------------------------------------------------
// Degeneration
// ---------------------------------------------------------------------------

/// Weighted within-cell averaging of a past-pattern table: each degenerated
/// cell holds sum(T(i) P(i)) / sum(P(i)) over the member indexes i. Cells
/// with zero total weight get 0. The same level->group map applies to every
/// digit of the index.
std::vector<double> degenerate_table(std::span<const double> lut2, const Partition& partition,
                                     const PatternWeights& weights);

/// Relative weighted squared error left by degeneration:
///   eta = sum_i P(i) |T(i) - D(cell(i))|^2 / sum_i P(i) |T(i)|^2.
/// 0 for the identity partition; throws DegenerateDenominator when the table
/// is zero almost surely under P (nothing to degenerate).
double eta_metric(std::span<const double> lut2, const Partition& partition,
                  const PatternWeights& weights);

enum class PartitionSpace { contiguous, all };

const char* to_string(PartitionSpace space);
PartitionSpace partition_space_from_string(const std::string& s);

struct PartitionSearchResult {
    Partition partition;
    double eta = 0.0;
};

/// Exhaustive search for the n-group scheme with minimal eta.
///   contiguous: all C(7, n-1) interval splits of the amplitude-ordered levels
///   all:        all set partitions of the 8 levels into exactly n groups
/// Ties break toward the lexicographically smallest group_of array. A table
/// that is zero a.s. under P needs no degeneration: the lexicographically
/// smallest scheme is returned with eta 0.
PartitionSearchResult optimize_partition(std::span<const double> lut2, const PatternWeights& weights,
                                         int n, PartitionSpace space);

/// Same search, minimizing the pooled eta of several lanes that must share
/// one scheme (sum of per-lane numerators over sum of denominators).
PartitionSearchResult optimize_partition_pooled(std::span<const std::vector<double>> lut2_lanes,
                                                const PatternWeights& weights, int n,
                                                PartitionSpace space);

/// Copies lut1 and degenerates every lane's lut2 with the shared partition.
/// Per-lane eta values of the applied partition are recorded (0 for a lane
/// whose table is zero a.s. under the weights).
DhLut build_dhlut(const HLut& hlut, const Partition& partition, const PatternWeights& weights);

// ---------------------------------------------------------------------------
// Compensation
// ---------------------------------------------------------------------------

/// Subtracts the table correction from every symbol with a complete window.
/// Indexing uses hard decisions on the received samples themselves; the first
/// m-1 symbols pass through unchanged and stay flagged as edge.
SymbolFrame compensate(const SymbolFrame& rx, const FullLut& table, const BlockConfig& cfg);
SymbolFrame compensate(const SymbolFrame& rx, const HLut& table, const BlockConfig& cfg);
SymbolFrame compensate(const SymbolFrame& rx, const DhLut& table, const BlockConfig& cfg);
SymbolFrame compensate(const SymbolFrame& rx, const AnyLut& table, const BlockConfig& cfg);

// ---------------------------------------------------------------------------
// Size accounting
// ---------------------------------------------------------------------------

enum class TableKind { full, hlut, dh };

/// Descriptor for size reporting: full, hlut, or dh(n).
struct VariantDescriptor {
    TableKind kind = TableKind::full;
    int n = 0;  // group count, dh only
};

struct TableSizeInfo {
    std::int64_t entries_per_lane = 0;
    double ratio_vs_full = 0.0;
};

/// Entries per lane and the ratio against the full table:
/// full = 8^m, hlut = 8 + 8^(m-1), dh(n) = 8 + n^(m-1).
TableSizeInfo table_size_report(const VariantDescriptor& variant, const BlockConfig& cfg);

}  // namespace dhlut
