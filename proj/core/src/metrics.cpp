// SPDX-License-Identifier: Apache-2.0
#include "dhlut/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "dhlut/ask.hpp"
#include "dhlut/errors.hpp"

namespace dhlut {

int hard_decide(double sample) {
    if (!std::isfinite(sample)) {
        throw InvalidInput("hard_decide: non-finite sample");
    }
    if (sample <= -7.0) return -7;
    if (sample >= 7.0) return 7;
    const double pos = (sample + 7.0) / 2.0;  // fractional alphabet index
    const double lo = std::floor(pos);
    const double frac = pos - lo;
    int idx = static_cast<int>(lo);
    if (frac > 0.5) {
        ++idx;
    } else if (frac == 0.5) {
        // Midpoint: keep the smaller magnitude; the 0 tie goes to +1.
        const int a = level_from_index(idx);
        const int b = level_from_index(idx + 1);
        if (std::abs(b) <= std::abs(a)) ++idx;
    }
    return level_from_index(std::clamp(idx, 0, 7));
}

SymbolFrame decide_frame(const SymbolFrame& frame) {
    frame.validate();
    SymbolFrame out = frame;
    out.discrete = true;
    for (double& v : out.data) {
        v = static_cast<double>(hard_decide(v));
    }
    return out;
}

double snr_db(const SymbolFrame& ref, const SymbolFrame& sig) {
    ref.validate();
    sig.validate();
    if (!ref.same_shape(sig)) {
        throw InvalidInput("snr_db: frame shapes differ");
    }
    const int skip = std::max(ref.edge_len, sig.edge_len);
    long double ref_power = 0.0L;
    long double err_power = 0.0L;
    for (int l = 0; l < ref.lanes; ++l) {
        const auto r = ref.lane(l);
        const auto s = sig.lane(l);
        for (int k = skip; k < ref.length; ++k) {
            const double e = s[k] - r[k];
            ref_power += static_cast<long double>(r[k]) * r[k];
            err_power += static_cast<long double>(e) * e;
        }
    }
    if (ref_power <= 0.0L) {
        throw DegenerateDenominator("snr_db: zero reference power");
    }
    if (err_power == 0.0L) {
        return 200.0;
    }
    const double value = 10.0 * std::log10(static_cast<double>(ref_power / err_power));
    return std::min(value, 200.0);
}

MetricReport ber(const SymbolFrame& tx, const SymbolFrame& decided) {
    tx.validate();
    decided.validate();
    if (!tx.same_shape(decided)) {
        throw InvalidInput("ber: frame shapes differ");
    }
    if (!tx.discrete || !decided.discrete) {
        throw InvalidInput("ber: both frames must be discrete");
    }
    const int skip = std::max(tx.edge_len, decided.edge_len);
    std::int64_t symbols = 0;
    std::int64_t sym_errors = 0;
    std::int64_t bit_errors = 0;
    for (int l = 0; l < tx.lanes; ++l) {
        const auto a = tx.lane(l);
        const auto b = decided.lane(l);
        for (int k = skip; k < tx.length; ++k) {
            ++symbols;
            const int la = static_cast<int>(a[k]);
            const int lb = static_cast<int>(b[k]);
            if (la != lb) {
                ++sym_errors;
                const unsigned diff = gray_encode(la) ^ gray_encode(lb);
                bit_errors += std::popcount(diff);
            }
        }
    }
    MetricReport rep;
    rep.symbols_counted = symbols;
    rep.ser = symbols > 0 ? static_cast<double>(sym_errors) / symbols : 0.0;
    rep.ber = symbols > 0 ? static_cast<double>(bit_errors) / (symbols * kBitsPerLevel) : 0.0;
    rep.snr_db = std::numeric_limits<double>::quiet_NaN();
    return rep;
}

}  // namespace dhlut
