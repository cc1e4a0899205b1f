// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include "dhlut/frame.hpp"
#include "dhlut/lut.hpp"

namespace dhlut {

/// Versioned JSON table file. Arrays are serialized in index order and
/// doubles round-trip exactly (shortest representation that reparses to the
/// same value). Identical tables serialize to identical bytes.
void save_table(const AnyLut& table, const std::filesystem::path& path);
AnyLut load_table(const std::filesystem::path& path);

/// Frame files carry lanes/length/edge/discrete/seed plus full-precision data.
void save_frame(const SymbolFrame& frame, const std::filesystem::path& path);
SymbolFrame load_frame(const std::filesystem::path& path);

}  // namespace dhlut
