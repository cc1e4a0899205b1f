// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "dhlut/ask.hpp"
#include "dhlut/frame.hpp"

namespace dhlut {

/// Symbol probabilities of the 8-ASK lane alphabet under Maxwell-Boltzmann
/// shaping: p(a) proportional to exp(-lambda * a^2).
///
/// Invariants: probs sum to 1 (1e-12), all positive, symmetric in the level
/// sign, and strictly decreasing in |a| for lambda > 0 (uniform at lambda 0).
struct ShapingDistribution {
    double lambda = 0.0;
    std::array<double, 8> probs{};  // indexed by level_index(a)

    double prob(int level) const { return probs[level_index(level)]; }

    /// Mean per-lane symbol power, sum p(a) * a^2.
    double mean_power() const;

    void validate() const;
};

/// Builds the Maxwell-Boltzmann distribution for a shaping rate lambda >= 0.
/// Throws InvalidParameter for negative or non-finite lambda, and for lambda
/// large enough that a tail probability underflows to zero (~14.7; entropy is
/// within 1e-300 of its infimum long before that point).
ShapingDistribution maxwell_boltzmann(double lambda);

/// Entropy of one 2D 64-QAM symbol in bits (twice the per-lane entropy).
/// Ranges over (2, 6]: 6 at lambda 0, approaching 2 as lambda grows.
double entropy_bits(const ShapingDistribution& dist);

/// Finds lambda with entropy_bits(maxwell_boltzmann(lambda)) within 1e-6 of
/// target_bits, by bisection on the strictly decreasing entropy map.
/// Throws OutOfRange unless 2 < target_bits <= 6.
double solve_lambda(double target_bits);

/// Draws a discrete frame of i.i.d. levels, one independent sub-stream per
/// lane (see kRngDescription). Deterministic for a fixed seed.
SymbolFrame sample_frame(const ShapingDistribution& dist, int lanes, int length, std::uint64_t seed);

}  // namespace dhlut
