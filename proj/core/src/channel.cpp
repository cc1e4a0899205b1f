// SPDX-License-Identifier: Apache-2.0
#include "dhlut/channel.hpp"

#include <algorithm>
#include <cmath>

#include "dhlut/errors.hpp"
#include "dhlut/rng.hpp"

namespace dhlut {

void ChannelModel::validate() const {
    if (h_lin.empty()) {
        throw InvalidParameter("ChannelModel: at least one linear tap required");
    }
    if (h_cub.size() != h_lin.size()) {
        throw InvalidParameter("ChannelModel: h_lin and h_cub must have the same length");
    }
    if (h_lin[0] == 0.0) {
        throw InvalidParameter("ChannelModel: h_lin[0] must be nonzero");
    }
    for (double c : h_lin) {
        if (!std::isfinite(c)) throw InvalidParameter("ChannelModel: non-finite linear tap");
    }
    for (double c : h_cub) {
        if (!std::isfinite(c)) throw InvalidParameter("ChannelModel: non-finite cubic tap");
    }
    if (!std::isfinite(noise_sigma) || noise_sigma < 0.0) {
        throw InvalidParameter("ChannelModel: noise_sigma must be finite and >= 0");
    }
}

SymbolFrame apply_channel(const ChannelModel& model, const SymbolFrame& frame,
                          std::uint64_t noise_seed) {
    model.validate();
    frame.validate();
    for (double v : frame.data) {
        if (!std::isfinite(v)) throw InvalidInput("apply_channel: non-finite input sample");
    }

    const int taps = model.memory();
    SymbolFrame out = SymbolFrame::make(frame.lanes, frame.length, false, noise_seed);
    out.edge_len = std::max(frame.edge_len, taps - 1);

    for (int l = 0; l < frame.lanes; ++l) {
        Rng rng(substream_seed(noise_seed, static_cast<std::uint64_t>(l)));
        const auto in = frame.lane(l);
        auto dst = out.lane(l);
        for (int k = 0; k < frame.length; ++k) {
            double y = 0.0;
            const int reach = std::min(taps - 1, k);  // x(k<0) = 0
            for (int m = 0; m <= reach; ++m) {
                const double x = in[k - m];
                y += model.h_lin[m] * x + model.h_cub[m] * x * x * x;
            }
            if (model.noise_sigma > 0.0) {
                y += model.noise_sigma * rng.gaussian();
            }
            dst[k] = y;
        }
    }
    return out;
}

double noise_sigma_for_snr(const ShapingDistribution& dist, double snr_db) {
    if (!std::isfinite(snr_db)) {
        throw InvalidParameter("noise_sigma_for_snr: snr_db must be finite");
    }
    dist.validate();
    return std::sqrt(dist.mean_power() * std::pow(10.0, -snr_db / 10.0));
}

}  // namespace dhlut
