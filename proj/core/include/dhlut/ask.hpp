// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace dhlut {

/// Per-lane amplitude alphabet of 64-QAM (8-ASK), ascending.
inline constexpr std::array<int, 8> kAskLevels = {-7, -5, -3, -1, 1, 3, 5, 7};
inline constexpr int kLevelCount = 8;
inline constexpr int kBitsPerLevel = 3;

constexpr bool is_ask_level(int v) {
    return v >= -7 && v <= 7 && (v % 2) != 0;
}

/// Level -7..+7 to alphabet index 0..7.
constexpr int level_index(int level) { return (level + 7) / 2; }

/// Alphabet index 0..7 to level -7..+7.
constexpr int level_from_index(int idx) { return 2 * idx - 7; }

/// Fixed reflected-Gray 3-bit label, MSB first:
///   -7->000 -5->001 -3->011 -1->010 +1->110 +3->111 +5->101 +7->100
std::uint8_t gray_encode(int level);

/// Inverse of gray_encode.
int gray_decode(std::uint8_t label);

}  // namespace dhlut
