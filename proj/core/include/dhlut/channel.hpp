// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dhlut/frame.hpp"
#include "dhlut/shaping.hpp"

namespace dhlut {

/// Synthetic per-lane nonlinearity with memory: an L-tap linear FIR plus an
/// L-tap cubic memory polynomial plus additive white Gaussian noise,
///
///   y(k) = sum_m h_lin[m] x(k-m) + h_cub[m] x(k-m)^3 + n(k),  x(k<0) = 0.
struct ChannelModel {
    std::vector<double> h_lin{1.0};  // tap 0 = current symbol; h_lin[0] != 0
    std::vector<double> h_cub{0.0};  // same length as h_lin
    double noise_sigma = 0.0;        // per-sample std deviation

    int memory() const { return static_cast<int>(h_lin.size()); }

    void validate() const;
};

/// Runs the frame through the channel. Noise streams are independent per lane
/// and deterministic for a fixed seed. The output frame is continuous and its
/// edge_len covers the first memory()-1 transient symbols.
SymbolFrame apply_channel(const ChannelModel& model, const SymbolFrame& frame, std::uint64_t noise_seed);

/// Noise level that realizes a given input SNR against the shaped symbol
/// power: sigma = sqrt(mean_power(dist) * 10^(-snr_db/10)).
double noise_sigma_for_snr(const ShapingDistribution& dist, double snr_db);

}  // namespace dhlut
