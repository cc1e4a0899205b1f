// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace dhlut {

/// Generator family used everywhere randomness is needed. Recorded in output
/// metadata so that any result file documents how to reproduce its streams.
inline constexpr const char* kRngDescription =
    "mt19937_64; substream k of master seed s seeded with splitmix64(s + (k+1)*0x9E3779B97F4A7C15); "
    "uniforms from the top 53 bits; Gaussian via Box-Muller; level draws via inverse CDF";

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of independent sub-stream `stream` derived from a master seed.
constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Seedable generator with the sampling primitives the toolkit needs.
/// All draws are defined in terms of the mt19937_64 output sequence only,
/// so identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal draw (Box-Muller, cosine branch; two uniforms per call).
    double gaussian() {
        const double u = uniform01();
        const double v = uniform01();
        const double r = std::sqrt(-2.0 * std::log1p(-u));
        return r * std::cos(2.0 * std::numbers::pi * v);
    }

    /// Index in [0, 8) drawn from a cumulative distribution over 8 bins.
    int level_index_draw(const std::array<double, 8>& cdf) {
        const double u = uniform01();
        for (int i = 0; i < 7; ++i) {
            if (u < cdf[i]) return i;
        }
        return 7;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace dhlut
