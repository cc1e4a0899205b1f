// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "dhlut/frame.hpp"

namespace dhlut {

/// Error rates of a decided frame against the transmitted one.
/// symbols_counted excludes the edge region of both frames.
struct MetricReport {
    double ber = 0.0;
    double ser = 0.0;
    double snr_db = 0.0;
    std::int64_t symbols_counted = 0;
};

/// Nearest ASK level. Samples beyond +-7 clip to +-7; exact midpoints resolve
/// toward the smaller magnitude, and a tie at exactly 0 resolves to +1.
int hard_decide(double sample);

/// hard_decide applied sample-wise; result is discrete with the same edges.
SymbolFrame decide_frame(const SymbolFrame& frame);

/// Error-vector SNR pooled over lanes: 10 log10(sum ref^2 / sum (sig-ref)^2),
/// skipping edge symbols, capped at +200 dB when the error vanishes.
/// Throws DegenerateDenominator if the reference power is zero.
double snr_db(const SymbolFrame& ref, const SymbolFrame& sig);

/// Bit and symbol error ratios under the fixed Gray labeling.
/// `decided` must be discrete. snr_db in the report is NaN; pair with the
/// snr_db() overload when the continuous signal is at hand.
MetricReport ber(const SymbolFrame& tx, const SymbolFrame& decided);

}  // namespace dhlut
