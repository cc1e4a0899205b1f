// SPDX-License-Identifier: Apache-2.0
#include "dhlut/lut.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dhlut/errors.hpp"
#include "dhlut/metrics.hpp"

namespace dhlut {

namespace {

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void check_training_pair(const SymbolFrame& tx, const SymbolFrame& rx, const BlockConfig& cfg) {
    cfg.validate();
    tx.validate();
    rx.validate();
    if (!tx.same_shape(rx)) {
        throw InvalidInput("train: tx and rx shapes differ");
    }
    if (!tx.discrete) {
        throw InvalidInput("train: tx must be a discrete frame of known levels");
    }
    if (tx.length < cfg.m) {
        throw InvalidInput("train: frame shorter than the block length");
    }
}

/// First position whose whole window is past the transient region.
int train_start(const SymbolFrame& tx, const SymbolFrame& rx, const BlockConfig& cfg) {
    return std::max(cfg.m - 1, std::max(tx.edge_len, rx.edge_len));
}

/// Base-8 index of the m-symbol window ending at k, oldest digit first.
std::size_t window_index(std::span<const double> lane, int k, int m) {
    std::size_t idx = 0;
    for (int j = k - m + 1; j <= k; ++j) {
        idx = idx * 8 + static_cast<std::size_t>(level_index(static_cast<int>(lane[j])));
    }
    return idx;
}

/// Base-8 index of the (m-1) symbols before k, oldest digit first.
std::size_t past_index(std::span<const double> lane, int k, int m) {
    std::size_t idx = 0;
    for (int j = k - m + 1; j < k; ++j) {
        idx = idx * 8 + static_cast<std::size_t>(level_index(static_cast<int>(lane[j])));
    }
    return idx;
}

/// Decompose a base-8 past index into its group digits and rebuild base-n.
std::size_t degenerate_index(std::size_t idx, int digits, const Partition& partition) {
    std::size_t out = 0;
    std::size_t scale = 1;
    for (int d = 0; d < digits; ++d) {
        const int level_digit = static_cast<int>(idx % 8);
        idx /= 8;
        out += static_cast<std::size_t>(partition.group_of[level_digit]) * scale;
        scale *= static_cast<std::size_t>(partition.n);
    }
    return out;
}

int digits_of(std::size_t size) {
    int d = 0;
    std::size_t s = 1;
    while (s < size) {
        s *= 8;
        ++d;
    }
    if (s != size) {
        throw InvalidInput("table size is not a power of 8");
    }
    return d;
}

struct EtaTerms {
    double numerator = 0.0;
    double denominator = 0.0;
};

/// Accumulates the weighted squared residual of the within-cell projection.
/// Two passes: cell means first, then deviations.
EtaTerms eta_terms(std::span<const double> table, const Partition& partition,
                   const PatternWeights& weights) {
    const int digits = digits_of(table.size());
    const std::size_t cells = ipow(static_cast<std::size_t>(partition.n), digits);
    std::vector<double> cell_w(cells, 0.0);
    std::vector<double> cell_tw(cells, 0.0);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::size_t j = degenerate_index(i, digits, partition);
        cell_w[j] += weights.w[i];
        cell_tw[j] += table[i] * weights.w[i];
    }
    EtaTerms terms;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::size_t j = degenerate_index(i, digits, partition);
        const double d = cell_w[j] > 0.0 ? cell_tw[j] / cell_w[j] : 0.0;
        const double r = table[i] - d;
        terms.numerator += weights.w[i] * r * r;
        terms.denominator += weights.w[i] * table[i] * table[i];
    }
    return terms;
}

void check_table_weights(std::span<const double> table, const PatternWeights& weights) {
    weights.validate();
    if (table.size() != weights.w.size()) {
        throw InvalidInput("table and weights sizes differ");
    }
}

/// Lexicographically smallest group_of array with exactly n groups:
/// everything in group 0, then one forced increment per remaining group.
Partition lex_smallest_partition(int n) {
    Partition p;
    p.n = n;
    for (int i = 0; i < kLevelCount; ++i) {
        p.group_of[i] = std::max(0, n - (kLevelCount - i));
    }
    return p;
}

template <typename Visit>
void for_each_contiguous(int n, Visit&& visit) {
    // Choose n-1 cut positions among the 7 gaps of the amplitude order.
    std::array<int, 8> cuts{};  // gap index before which a new group starts
    std::array<int, 8> group_of{};
    auto emit = [&](int ncuts) {
        int g = 0;
        int next = 0;
        for (int i = 0; i < kLevelCount; ++i) {
            if (next < ncuts && cuts[next] == i) {
                ++g;
                ++next;
            }
            group_of[i] = g;
        }
        Partition p;
        p.n = n;
        p.group_of = group_of;
        visit(p);
    };
    const int ncuts = n - 1;
    if (ncuts == 0) {
        emit(0);
        return;
    }
    // Iterate combinations 1 <= cuts[0] < ... < cuts[ncuts-1] <= 7.
    for (int i = 0; i < ncuts; ++i) cuts[i] = i + 1;
    while (true) {
        emit(ncuts);
        int i = ncuts - 1;
        while (i >= 0 && cuts[i] == 7 - (ncuts - 1 - i)) --i;
        if (i < 0) break;
        ++cuts[i];
        for (int j = i + 1; j < ncuts; ++j) cuts[j] = cuts[j - 1] + 1;
    }
}

template <typename Visit>
void for_each_set_partition(int n, Visit&& visit) {
    // Restricted growth strings with exactly n groups, lexicographic order.
    std::array<int, 8> a{};
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == kLevelCount) {
            if (used == n) {
                Partition p;
                p.n = n;
                p.group_of = a;
                visit(p);
            }
            return;
        }
        const int remaining = kLevelCount - pos;
        const int limit = std::min(used, n - 1);  // may reuse a group or open group `used`
        for (int g = 0; g <= limit; ++g) {
            const int used_after = std::max(used, g + 1);
            if (used_after + remaining - 1 < n) continue;  // cannot reach n groups anymore
            a[pos] = g;
            self(self, pos + 1, used_after);
        }
    };
    a[0] = 0;
    rec(rec, 1, 1);
}

template <typename Eta>
PartitionSearchResult search_partitions(int n, PartitionSpace space, Eta&& eta_of) {
    PartitionSearchResult best;
    bool have = false;
    auto consider = [&](const Partition& p) {
        const double eta = eta_of(p);
        if (!have || eta < best.eta ||
            (eta == best.eta && p.group_of < best.partition.group_of)) {
            best.partition = p;
            best.eta = eta;
            have = true;
        }
    };
    if (space == PartitionSpace::contiguous) {
        for_each_contiguous(n, consider);
    } else {
        for_each_set_partition(n, consider);
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockConfig / Partition / PatternWeights
// ---------------------------------------------------------------------------

void BlockConfig::validate() const {
    if (m < 2) {
        throw InvalidParameter("BlockConfig: m must be >= 2");
    }
    if (m > 10) {
        throw InvalidParameter("BlockConfig: m > 10 is not supported (8^m entries)");
    }
    if (min_count < 1) {
        throw InvalidParameter("BlockConfig: min_count must be >= 1");
    }
}

std::size_t BlockConfig::full_size() const { return ipow(8, m); }
std::size_t BlockConfig::past_size() const { return ipow(8, m - 1); }

Partition Partition::identity() {
    Partition p;
    p.n = kLevelCount;
    for (int i = 0; i < kLevelCount; ++i) p.group_of[i] = i;
    return p;
}

Partition Partition::single_group() {
    Partition p;
    p.n = 1;
    p.group_of.fill(0);
    return p;
}

bool Partition::is_contiguous() const {
    // Groups must be intervals: the group id may change between neighbors,
    // but a group id seen before must never reappear after a change.
    std::array<bool, 8> closed{};
    int cur = group_of[0];
    for (int i = 1; i < kLevelCount; ++i) {
        if (group_of[i] == cur) continue;
        closed[cur] = true;
        cur = group_of[i];
        if (closed[cur]) return false;
    }
    return true;
}

void Partition::validate() const {
    if (n < 1 || n > kLevelCount) {
        throw InvalidParameter("Partition: group count must lie in 1..8");
    }
    std::array<bool, 8> seen{};
    for (int g : group_of) {
        if (g < 0 || g >= n) {
            throw InvalidInput("Partition: group id out of range");
        }
        seen[g] = true;
    }
    for (int g = 0; g < n; ++g) {
        if (!seen[g]) {
            throw InvalidInput("Partition: group " + std::to_string(g) + " is empty");
        }
    }
}

void PatternWeights::validate() const {
    if (w.empty()) {
        throw InvalidInput("PatternWeights: empty");
    }
    double sum = 0.0;
    for (double v : w) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidInput("PatternWeights: weights must be finite and nonnegative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw InvalidInput("PatternWeights: weights do not sum to 1");
    }
}

const char* to_string(HlutMode mode) {
    return mode == HlutMode::sequential ? "sequential" : "parallel";
}

HlutMode hlut_mode_from_string(const std::string& s) {
    if (s == "sequential") return HlutMode::sequential;
    if (s == "parallel") return HlutMode::parallel;
    throw InvalidParameter("unknown hlut mode: " + s);
}

const char* to_string(PartitionSpace space) {
    return space == PartitionSpace::contiguous ? "contiguous" : "all";
}

PartitionSpace partition_space_from_string(const std::string& s) {
    if (s == "contiguous") return PartitionSpace::contiguous;
    if (s == "all") return PartitionSpace::all;
    throw InvalidParameter("unknown partition space: " + s);
}

// ---------------------------------------------------------------------------
// Training
// ---------------------------------------------------------------------------

FullLut train_full(const SymbolFrame& tx, const SymbolFrame& rx, const BlockConfig& cfg) {
    check_training_pair(tx, rx, cfg);
    const std::size_t size = cfg.full_size();
    const int start = train_start(tx, rx, cfg);

    FullLut lut;
    lut.m = cfg.m;
    lut.min_count = cfg.min_count;
    lut.train_seed = tx.seed;
    lut.entries.assign(tx.lanes, std::vector<double>(size, 0.0));
    lut.counts.assign(tx.lanes, std::vector<std::int64_t>(size, 0));

    double covered_lanes = 0.0;
    for (int l = 0; l < tx.lanes; ++l) {
        const auto ref = tx.lane(l);
        const auto got = rx.lane(l);
        std::vector<long double> sums(size, 0.0L);
        auto& counts = lut.counts[l];
        for (int k = start; k < tx.length; ++k) {
            const std::size_t idx = window_index(ref, k, cfg.m);
            sums[idx] += static_cast<long double>(got[k]) - static_cast<long double>(ref[k]);
            ++counts[idx];
        }
        std::size_t trusted = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (counts[i] >= cfg.min_count) {
                lut.entries[l][i] = static_cast<double>(sums[i] / counts[i]);
                ++trusted;
            }
        }
        covered_lanes += static_cast<double>(trusted) / static_cast<double>(size);
    }
    lut.coverage = covered_lanes / tx.lanes;
    return lut;
}

HLut train_hlut(const SymbolFrame& tx, const SymbolFrame& rx, const BlockConfig& cfg,
                HlutMode mode) {
    check_training_pair(tx, rx, cfg);
    const std::size_t size2 = cfg.past_size();
    const int start = train_start(tx, rx, cfg);

    HLut lut;
    lut.m = cfg.m;
    lut.min_count = cfg.min_count;
    lut.mode = mode;
    lut.train_seed = tx.seed;
    lut.lut1.assign(tx.lanes, {});
    lut.counts1.assign(tx.lanes, {});
    lut.lut2.assign(tx.lanes, std::vector<double>(size2, 0.0));
    lut.counts2.assign(tx.lanes, std::vector<std::int64_t>(size2, 0));

    double covered_lanes = 0.0;
    for (int l = 0; l < tx.lanes; ++l) {
        const auto ref = tx.lane(l);
        const auto got = rx.lane(l);

        // Stage 1: mean error grouped by the current symbol.
        std::array<long double, 8> sums1{};
        auto& counts1 = lut.counts1[l];
        long double total = 0.0L;
        std::int64_t total_count = 0;
        for (int k = start; k < tx.length; ++k) {
            const int cur = level_index(static_cast<int>(ref[k]));
            const long double err = static_cast<long double>(got[k]) - static_cast<long double>(ref[k]);
            sums1[cur] += err;
            ++counts1[cur];
            total += err;
            ++total_count;
        }
        auto& lut1 = lut.lut1[l];
        for (int i = 0; i < kLevelCount; ++i) {
            lut1[i] = counts1[i] >= cfg.min_count
                          ? static_cast<double>(sums1[i] / counts1[i])
                          : 0.0;
        }
        const double mean_error =
            total_count > 0 ? static_cast<double>(total / total_count) : 0.0;

        // Stage 2: grouped by the past pattern. Sequential mode works on the
        // residual after stage 1; parallel mode on the raw error, with the
        // global mean removed so the two stages do not both carry it.
        std::vector<long double> sums2(size2, 0.0L);
        auto& counts2 = lut.counts2[l];
        for (int k = start; k < tx.length; ++k) {
            const std::size_t q = past_index(ref, k, cfg.m);
            double err = got[k] - ref[k];
            if (mode == HlutMode::sequential) {
                err -= lut1[level_index(static_cast<int>(ref[k]))];
            }
            sums2[q] += err;
            ++counts2[q];
        }
        std::size_t trusted = 0;
        for (std::size_t i = 0; i < size2; ++i) {
            if (counts2[i] >= cfg.min_count) {
                double v = static_cast<double>(sums2[i] / counts2[i]);
                if (mode == HlutMode::parallel) v -= mean_error;
                lut.lut2[l][i] = v;
                ++trusted;
            }
        }
        for (int i = 0; i < kLevelCount; ++i) {
            if (counts1[i] >= cfg.min_count) ++trusted;
        }
        covered_lanes += static_cast<double>(trusted) / static_cast<double>(size2 + kLevelCount);
    }
    lut.coverage = covered_lanes / tx.lanes;
    return lut;
}

PatternWeights pattern_weights(const ShapingDistribution& dist, const BlockConfig& cfg) {
    cfg.validate();
    dist.validate();
    const std::size_t size = cfg.past_size();
    PatternWeights weights;
    weights.m = cfg.m;
    weights.w.assign(size, 0.0);
    for (std::size_t q = 0; q < size; ++q) {
        double w = 1.0;
        std::size_t rest = q;
        for (int d = 0; d < cfg.m - 1; ++d) {
            w *= dist.probs[rest % 8];
            rest /= 8;
        }
        weights.w[q] = w;
    }
    return weights;
}

PatternWeights pattern_weights(const SymbolFrame& tx, const BlockConfig& cfg) {
    cfg.validate();
    tx.validate();
    if (!tx.discrete) {
        throw InvalidInput("pattern_weights: frame must be discrete");
    }
    if (tx.length < cfg.m) {
        throw InvalidInput("pattern_weights: frame shorter than the block length");
    }
    const std::size_t size = cfg.past_size();
    std::vector<std::int64_t> counts(size, 0);
    std::int64_t total = 0;
    const int start = std::max(cfg.m - 1, tx.edge_len);
    for (int l = 0; l < tx.lanes; ++l) {
        const auto lane = tx.lane(l);
        for (int k = start; k < tx.length; ++k) {
            ++counts[past_index(lane, k, cfg.m)];
            ++total;
        }
    }
    if (total == 0) {
        throw InvalidInput("pattern_weights: no usable positions in frame");
    }
    PatternWeights weights;
    weights.m = cfg.m;
    weights.w.resize(size);
    for (std::size_t q = 0; q < size; ++q) {
        weights.w[q] = static_cast<double>(counts[q]) / static_cast<double>(total);
    }
    return weights;
}

// ---------------------------------------------------------------------------
// Degeneration
// ---------------------------------------------------------------------------

std::vector<double> degenerate_table(std::span<const double> lut2, const Partition& partition,
                                     const PatternWeights& weights) {
    partition.validate();
    check_table_weights(lut2, weights);
    const int digits = digits_of(lut2.size());
    const std::size_t cells = ipow(static_cast<std::size_t>(partition.n), digits);
    std::vector<double> cell_w(cells, 0.0);
    std::vector<double> cell_tw(cells, 0.0);
    for (std::size_t i = 0; i < lut2.size(); ++i) {
        const std::size_t j = degenerate_index(i, digits, partition);
        cell_w[j] += weights.w[i];
        cell_tw[j] += lut2[i] * weights.w[i];
    }
    std::vector<double> out(cells, 0.0);
    for (std::size_t j = 0; j < cells; ++j) {
        out[j] = cell_w[j] > 0.0 ? cell_tw[j] / cell_w[j] : 0.0;
    }
    return out;
}

double eta_metric(std::span<const double> lut2, const Partition& partition,
                  const PatternWeights& weights) {
    partition.validate();
    check_table_weights(lut2, weights);
    const EtaTerms terms = eta_terms(lut2, partition, weights);
    if (terms.denominator <= 0.0) {
        throw DegenerateDenominator("eta_metric: table is zero under the weights");
    }
    return terms.numerator / terms.denominator;
}

PartitionSearchResult optimize_partition(std::span<const double> lut2,
                                         const PatternWeights& weights, int n,
                                         PartitionSpace space) {
    if (n < 1 || n > kLevelCount) {
        throw InvalidParameter("optimize_partition: n must lie in 1..8");
    }
    check_table_weights(lut2, weights);
    double denom = 0.0;
    for (std::size_t i = 0; i < lut2.size(); ++i) {
        denom += weights.w[i] * lut2[i] * lut2[i];
    }
    if (denom <= 0.0) {
        // Nothing to degenerate: every scheme is equivalent.
        return {lex_smallest_partition(n), 0.0};
    }
    return search_partitions(n, space, [&](const Partition& p) {
        return eta_terms(lut2, p, weights).numerator / denom;
    });
}

PartitionSearchResult optimize_partition_pooled(std::span<const std::vector<double>> lut2_lanes,
                                                const PatternWeights& weights, int n,
                                                PartitionSpace space) {
    if (n < 1 || n > kLevelCount) {
        throw InvalidParameter("optimize_partition_pooled: n must lie in 1..8");
    }
    if (lut2_lanes.empty()) {
        throw InvalidInput("optimize_partition_pooled: no lanes");
    }
    double denom = 0.0;
    for (const auto& lane : lut2_lanes) {
        check_table_weights(lane, weights);
        for (std::size_t i = 0; i < lane.size(); ++i) {
            denom += weights.w[i] * lane[i] * lane[i];
        }
    }
    if (denom <= 0.0) {
        return {lex_smallest_partition(n), 0.0};
    }
    return search_partitions(n, space, [&](const Partition& p) {
        double num = 0.0;
        for (const auto& lane : lut2_lanes) {
            num += eta_terms(lane, p, weights).numerator;
        }
        return num / denom;
    });
}

DhLut build_dhlut(const HLut& hlut, const Partition& partition, const PatternWeights& weights) {
    partition.validate();
    if (hlut.lane_count() == 0) {
        throw InvalidInput("build_dhlut: empty source table");
    }
    DhLut dh;
    dh.m = hlut.m;
    dh.min_count = hlut.min_count;
    dh.mode = hlut.mode;
    dh.lut1 = hlut.lut1;
    dh.partition = partition;
    dh.coverage = hlut.coverage;
    dh.train_seed = hlut.train_seed;

    double pooled_num = 0.0;
    double pooled_den = 0.0;
    for (const auto& lane_lut2 : hlut.lut2) {
        dh.lut2_deg.push_back(degenerate_table(lane_lut2, partition, weights));
        const EtaTerms terms = eta_terms(lane_lut2, partition, weights);
        dh.eta.push_back(terms.denominator > 0.0 ? terms.numerator / terms.denominator : 0.0);
        pooled_num += terms.numerator;
        pooled_den += terms.denominator;
    }
    dh.eta_pooled = pooled_den > 0.0 ? pooled_num / pooled_den : 0.0;
    return dh;
}

// ---------------------------------------------------------------------------
// Compensation
// ---------------------------------------------------------------------------

namespace {

void check_compensate(const SymbolFrame& rx, int table_m, int table_lanes, const BlockConfig& cfg) {
    cfg.validate();
    rx.validate();
    if (cfg.m != table_m) {
        throw InvalidInput("compensate: block length does not match the table");
    }
    if (rx.lanes != table_lanes) {
        throw InvalidInput("compensate: lane count does not match the table");
    }
}

/// Hard decisions for one lane, each sample decided once.
std::vector<int> decide_levels(std::span<const double> lane) {
    std::vector<int> levels(lane.size());
    for (std::size_t k = 0; k < lane.size(); ++k) {
        levels[k] = hard_decide(lane[k]);
    }
    return levels;
}

SymbolFrame compensated_shell(const SymbolFrame& rx, int m) {
    SymbolFrame out = rx;
    out.discrete = false;
    out.edge_len = std::max(rx.edge_len, m - 1);
    return out;
}

}  // namespace

SymbolFrame compensate(const SymbolFrame& rx, const FullLut& table, const BlockConfig& cfg) {
    check_compensate(rx, table.m, table.lane_count(), cfg);
    SymbolFrame out = compensated_shell(rx, cfg.m);
    for (int l = 0; l < rx.lanes; ++l) {
        const auto in = rx.lane(l);
        auto dst = out.lane(l);
        const std::vector<int> levels = decide_levels(in);
        const auto& entries = table.entries[l];
        for (int k = cfg.m - 1; k < rx.length; ++k) {
            std::size_t idx = 0;
            for (int j = k - cfg.m + 1; j <= k; ++j) {
                idx = idx * 8 + static_cast<std::size_t>(level_index(levels[j]));
            }
            dst[k] = in[k] - entries[idx];
        }
    }
    return out;
}

SymbolFrame compensate(const SymbolFrame& rx, const HLut& table, const BlockConfig& cfg) {
    check_compensate(rx, table.m, table.lane_count(), cfg);
    SymbolFrame out = compensated_shell(rx, cfg.m);
    for (int l = 0; l < rx.lanes; ++l) {
        const auto in = rx.lane(l);
        auto dst = out.lane(l);
        const std::vector<int> levels = decide_levels(in);
        const auto& lut1 = table.lut1[l];
        const auto& lut2 = table.lut2[l];
        for (int k = cfg.m - 1; k < rx.length; ++k) {
            std::size_t q = 0;
            for (int j = k - cfg.m + 1; j < k; ++j) {
                q = q * 8 + static_cast<std::size_t>(level_index(levels[j]));
            }
            dst[k] = in[k] - lut1[level_index(levels[k])] - lut2[q];
        }
    }
    return out;
}

SymbolFrame compensate(const SymbolFrame& rx, const DhLut& table, const BlockConfig& cfg) {
    check_compensate(rx, table.m, table.lane_count(), cfg);
    table.partition.validate();
    SymbolFrame out = compensated_shell(rx, cfg.m);
    for (int l = 0; l < rx.lanes; ++l) {
        const auto in = rx.lane(l);
        auto dst = out.lane(l);
        const std::vector<int> levels = decide_levels(in);
        const auto& lut1 = table.lut1[l];
        const auto& lut2_deg = table.lut2_deg[l];
        for (int k = cfg.m - 1; k < rx.length; ++k) {
            std::size_t q = 0;
            for (int j = k - cfg.m + 1; j < k; ++j) {
                const int g = table.partition.group_of[level_index(levels[j])];
                q = q * static_cast<std::size_t>(table.partition.n) + static_cast<std::size_t>(g);
            }
            dst[k] = in[k] - lut1[level_index(levels[k])] - lut2_deg[q];
        }
    }
    return out;
}

SymbolFrame compensate(const SymbolFrame& rx, const AnyLut& table, const BlockConfig& cfg) {
    return std::visit([&](const auto& t) { return compensate(rx, t, cfg); }, table);
}

// ---------------------------------------------------------------------------
// Size accounting
// ---------------------------------------------------------------------------

TableSizeInfo table_size_report(const VariantDescriptor& variant, const BlockConfig& cfg) {
    cfg.validate();
    const auto full = static_cast<std::int64_t>(cfg.full_size());
    TableSizeInfo info;
    switch (variant.kind) {
        case TableKind::full:
            info.entries_per_lane = full;
            break;
        case TableKind::hlut:
            info.entries_per_lane = kLevelCount + static_cast<std::int64_t>(cfg.past_size());
            break;
        case TableKind::dh:
            if (variant.n < 1 || variant.n > kLevelCount) {
                throw InvalidParameter("table_size_report: dh group count must lie in 1..8");
            }
            info.entries_per_lane =
                kLevelCount + static_cast<std::int64_t>(ipow(static_cast<std::size_t>(variant.n), cfg.m - 1));
            break;
    }
    info.ratio_vs_full = static_cast<double>(info.entries_per_lane) / static_cast<double>(full);
    return info;
}

}  // namespace dhlut
