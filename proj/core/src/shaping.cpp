// SPDX-License-Identifier: Apache-2.0
#include "dhlut/shaping.hpp"

#include <cmath>
#include <string>

#include "dhlut/errors.hpp"
#include "dhlut/rng.hpp"

namespace dhlut {

double ShapingDistribution::mean_power() const {
    double p = 0.0;
    for (int i = 0; i < kLevelCount; ++i) {
        const double a = kAskLevels[i];
        p += probs[i] * a * a;
    }
    return p;
}

void ShapingDistribution::validate() const {
    double sum = 0.0;
    for (int i = 0; i < kLevelCount; ++i) {
        if (!(probs[i] > 0.0)) {
            throw InvalidInput("ShapingDistribution: probability not positive");
        }
        sum += probs[i];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw InvalidInput("ShapingDistribution: probabilities do not sum to 1");
    }
    for (int i = 0; i < 4; ++i) {
        if (probs[i] != probs[kLevelCount - 1 - i]) {
            throw InvalidInput("ShapingDistribution: not symmetric");
        }
    }
}

ShapingDistribution maxwell_boltzmann(double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw InvalidParameter("maxwell_boltzmann: lambda must be finite and >= 0");
    }
    ShapingDistribution dist;
    dist.lambda = lambda;
    // Exponents shifted by the smallest a^2 so the dominant weights are O(1).
    std::array<double, 8> w{};
    double z = 0.0;
    for (int i = 0; i < kLevelCount; ++i) {
        const double a = kAskLevels[i];
        w[i] = std::exp(-lambda * (a * a - 1.0));
        z += w[i];
    }
    for (int i = 0; i < kLevelCount; ++i) {
        dist.probs[i] = w[i] / z;
        if (dist.probs[i] == 0.0) {
            throw InvalidParameter(
                "maxwell_boltzmann: lambda too large, tail probability underflows (lambda = " +
                std::to_string(lambda) + ")");
        }
    }
    return dist;
}

double entropy_bits(const ShapingDistribution& dist) {
    double h = 0.0;
    for (double p : dist.probs) {
        h -= p * std::log2(p);
    }
    return 2.0 * h;
}

double solve_lambda(double target_bits) {
    if (!std::isfinite(target_bits) || target_bits <= 2.0 || target_bits > 6.0) {
        throw OutOfRange("solve_lambda: target must lie in (2, 6] bits, got " +
                         std::to_string(target_bits));
    }
    if (target_bits == 6.0) {
        return 0.0;  // uniform attains the maximum exactly
    }
    // Entropy is continuous and strictly decreasing in lambda; lambda = 14
    // already forces entropy to within ~1e-160 of the infimum 2.
    double lo = 0.0;
    double hi = 14.0;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (entropy_bits(maxwell_boltzmann(mid)) > target_bits) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

SymbolFrame sample_frame(const ShapingDistribution& dist, int lanes, int length,
                         std::uint64_t seed) {
    if (lanes < 1 || length < 1) {
        throw InvalidParameter("sample_frame: lanes and length must be positive");
    }
    dist.validate();

    std::array<double, 8> cdf{};
    double acc = 0.0;
    for (int i = 0; i < kLevelCount; ++i) {
        acc += dist.probs[i];
        cdf[i] = acc;
    }

    SymbolFrame frame = SymbolFrame::make(lanes, length, true, seed);
    for (int l = 0; l < lanes; ++l) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(l)));
        auto row = frame.lane(l);
        for (int k = 0; k < length; ++k) {
            row[k] = kAskLevels[rng.level_index_draw(cdf)];
        }
    }
    return frame;
}

}  // namespace dhlut
