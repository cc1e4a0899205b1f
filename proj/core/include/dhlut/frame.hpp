// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dhlut {

/// Multi-lane block of real-valued samples at one sample per symbol.
///
/// The first `edge_len` symbols of every lane are transients (filter warm-up,
/// missing pattern history) and are skipped by training and metrics.
/// `discrete` marks frames whose samples are exact ASK levels.
struct SymbolFrame {
    int lanes = 0;
    int length = 0;
    int edge_len = 0;
    bool discrete = false;
    std::uint64_t seed = 0;    // provenance tag of the generating stream
    std::vector<double> data;  // lane-major, lanes * length

    static SymbolFrame make(int lanes, int length, bool discrete, std::uint64_t seed);

    std::span<double> lane(int l) {
        return {data.data() + static_cast<std::size_t>(l) * length, static_cast<std::size_t>(length)};
    }
    std::span<const double> lane(int l) const {
        return {data.data() + static_cast<std::size_t>(l) * length, static_cast<std::size_t>(length)};
    }

    double at(int l, int k) const { return data[static_cast<std::size_t>(l) * length + k]; }
    double& at(int l, int k) { return data[static_cast<std::size_t>(l) * length + k]; }

    bool same_shape(const SymbolFrame& other) const {
        return lanes == other.lanes && length == other.length;
    }

    /// Throws InvalidInput if dimensions and storage disagree, or if a frame
    /// marked discrete holds anything but valid ASK levels.
    void validate() const;
};

}  // namespace dhlut
