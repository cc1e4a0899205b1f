// SPDX-License-Identifier: Apache-2.0
#include "dhlut/frame.hpp"

#include <cmath>
#include <string>

#include "dhlut/ask.hpp"
#include "dhlut/errors.hpp"

namespace dhlut {

SymbolFrame SymbolFrame::make(int lanes, int length, bool discrete, std::uint64_t seed) {
    if (lanes < 1 || length < 1) {
        throw InvalidParameter("SymbolFrame: lanes and length must be positive");
    }
    SymbolFrame f;
    f.lanes = lanes;
    f.length = length;
    f.discrete = discrete;
    f.seed = seed;
    f.data.assign(static_cast<std::size_t>(lanes) * length, 0.0);
    return f;
}

void SymbolFrame::validate() const {
    if (lanes < 1 || length < 1) {
        throw InvalidInput("SymbolFrame: non-positive dimensions");
    }
    if (data.size() != static_cast<std::size_t>(lanes) * length) {
        throw InvalidInput("SymbolFrame: data size does not match lanes * length");
    }
    if (edge_len < 0 || edge_len > length) {
        throw InvalidInput("SymbolFrame: edge_len out of range");
    }
    if (discrete) {
        for (double v : data) {
            const int iv = static_cast<int>(v);
            if (static_cast<double>(iv) != v || !is_ask_level(iv)) {
                throw InvalidInput("SymbolFrame: discrete frame holds a non-level sample " +
                                   std::to_string(v));
            }
        }
    } else {
        for (double v : data) {
            if (!std::isfinite(v)) {
                throw InvalidInput("SymbolFrame: non-finite sample");
            }
        }
    }
}

}  // namespace dhlut
