// SPDX-License-Identifier: Apache-2.0
#include "dhlut/ask.hpp"

#include <string>

#include "dhlut/errors.hpp"

namespace dhlut {

std::uint8_t gray_encode(int level) {
    if (!is_ask_level(level)) {
        throw InvalidParameter("gray_encode: not an ASK level: " + std::to_string(level));
    }
    const unsigned idx = static_cast<unsigned>(level_index(level));
    return static_cast<std::uint8_t>(idx ^ (idx >> 1));
}

int gray_decode(std::uint8_t label) {
    if (label > 7) {
        throw InvalidParameter("gray_decode: label out of 3-bit range");
    }
    unsigned idx = label;
    idx ^= idx >> 1;
    idx ^= idx >> 2;
    return level_from_index(static_cast<int>(idx));
}

}  // namespace dhlut
