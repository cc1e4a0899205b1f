// SPDX-License-Identifier: Apache-2.0
#include "dhlut/io.hpp"

#include <fstream>

#include <json.hpp>

#include "dhlut/errors.hpp"
#include "dhlut/rng.hpp"

namespace dhlut {

namespace {

using nlohmann::json;

constexpr int kTableFileVersion = 1;
constexpr int kFrameFileVersion = 1;

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("cannot parse " + path.string() + ": " + e.what());
    }
    return j;
}

void write_json_file(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

std::vector<int> lane_ids(int lanes) {
    std::vector<int> ids(lanes);
    for (int i = 0; i < lanes; ++i) ids[i] = i;
    return ids;
}

template <typename T>
T get_field(const json& j, const char* key, const std::filesystem::path& path) {
    if (!j.contains(key)) {
        throw IoError(path.string() + ": missing field '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": bad field '" + key + "': " + e.what());
    }
}

std::vector<std::array<double, 8>> to_lut1(const std::vector<std::vector<double>>& rows,
                                           const std::filesystem::path& path) {
    std::vector<std::array<double, 8>> out;
    for (const auto& row : rows) {
        if (row.size() != 8) {
            throw IoError(path.string() + ": lut1 lane must hold 8 entries");
        }
        std::array<double, 8> a{};
        std::copy(row.begin(), row.end(), a.begin());
        out.push_back(a);
    }
    return out;
}

std::vector<std::array<std::int64_t, 8>> to_counts1(
    const std::vector<std::vector<std::int64_t>>& rows, const std::filesystem::path& path) {
    std::vector<std::array<std::int64_t, 8>> out;
    for (const auto& row : rows) {
        if (row.size() != 8) {
            throw IoError(path.string() + ": counts1 lane must hold 8 entries");
        }
        std::array<std::int64_t, 8> a{};
        std::copy(row.begin(), row.end(), a.begin());
        out.push_back(a);
    }
    return out;
}

}  // namespace

void save_table(const AnyLut& table, const std::filesystem::path& path) {
    json j;
    j["version"] = kTableFileVersion;
    j["rng"] = kRngDescription;
    if (const auto* full = std::get_if<FullLut>(&table)) {
        j["variant"] = "full";
        j["m"] = full->m;
        j["min_count"] = full->min_count;
        j["lanes"] = lane_ids(full->lane_count());
        j["lut"] = full->entries;
        j["counts"] = full->counts;
        j["coverage"] = full->coverage;
        j["train_seed"] = full->train_seed;
    } else if (const auto* hl = std::get_if<HLut>(&table)) {
        j["variant"] = "hlut";
        j["m"] = hl->m;
        j["min_count"] = hl->min_count;
        j["mode"] = to_string(hl->mode);
        j["lanes"] = lane_ids(hl->lane_count());
        j["lut1"] = hl->lut1;
        j["counts1"] = hl->counts1;
        j["lut2"] = hl->lut2;
        j["counts2"] = hl->counts2;
        j["coverage"] = hl->coverage;
        j["train_seed"] = hl->train_seed;
    } else {
        const auto& dh = std::get<DhLut>(table);
        j["variant"] = "dh";
        j["m"] = dh.m;
        j["min_count"] = dh.min_count;
        j["mode"] = to_string(dh.mode);
        j["lanes"] = lane_ids(dh.lane_count());
        j["lut1"] = dh.lut1;
        j["lut2_deg"] = dh.lut2_deg;
        j["partition"] = {{"n", dh.partition.n},
                          {"group_of", dh.partition.group_of}};
        j["weights_mode"] = dh.weights_mode;
        j["eta"] = dh.eta;
        j["eta_lane_optimal"] = dh.eta_lane_optimal;
        j["eta_pooled"] = dh.eta_pooled;
        j["coverage"] = dh.coverage;
        j["train_seed"] = dh.train_seed;
    }
    write_json_file(j, path);
}

AnyLut load_table(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    const int version = get_field<int>(j, "version", path);
    if (version != kTableFileVersion) {
        throw IoError(path.string() + ": unsupported table file version");
    }
    const auto variant = get_field<std::string>(j, "variant", path);
    if (variant == "full") {
        FullLut full;
        full.m = get_field<int>(j, "m", path);
        full.min_count = get_field<int>(j, "min_count", path);
        full.entries = get_field<std::vector<std::vector<double>>>(j, "lut", path);
        full.counts = get_field<std::vector<std::vector<std::int64_t>>>(j, "counts", path);
        full.coverage = get_field<double>(j, "coverage", path);
        full.train_seed = get_field<std::uint64_t>(j, "train_seed", path);
        return full;
    }
    if (variant == "hlut") {
        HLut hl;
        hl.m = get_field<int>(j, "m", path);
        hl.min_count = get_field<int>(j, "min_count", path);
        hl.mode = hlut_mode_from_string(get_field<std::string>(j, "mode", path));
        hl.lut1 = to_lut1(get_field<std::vector<std::vector<double>>>(j, "lut1", path), path);
        hl.counts1 =
            to_counts1(get_field<std::vector<std::vector<std::int64_t>>>(j, "counts1", path), path);
        hl.lut2 = get_field<std::vector<std::vector<double>>>(j, "lut2", path);
        hl.counts2 = get_field<std::vector<std::vector<std::int64_t>>>(j, "counts2", path);
        hl.coverage = get_field<double>(j, "coverage", path);
        hl.train_seed = get_field<std::uint64_t>(j, "train_seed", path);
        return hl;
    }
    if (variant == "dh") {
        DhLut dh;
        dh.m = get_field<int>(j, "m", path);
        dh.min_count = get_field<int>(j, "min_count", path);
        dh.mode = hlut_mode_from_string(get_field<std::string>(j, "mode", path));
        dh.lut1 = to_lut1(get_field<std::vector<std::vector<double>>>(j, "lut1", path), path);
        dh.lut2_deg = get_field<std::vector<std::vector<double>>>(j, "lut2_deg", path);
        if (!j.contains("partition")) {
            throw IoError(path.string() + ": missing field 'partition'");
        }
        const json& p = j.at("partition");
        dh.partition.n = get_field<int>(p, "n", path);
        const auto groups = get_field<std::vector<int>>(p, "group_of", path);
        if (groups.size() != 8) {
            throw IoError(path.string() + ": partition group_of must hold 8 entries");
        }
        std::copy(groups.begin(), groups.end(), dh.partition.group_of.begin());
        dh.partition.validate();
        dh.weights_mode = get_field<std::string>(j, "weights_mode", path);
        dh.eta = get_field<std::vector<double>>(j, "eta", path);
        dh.eta_lane_optimal = get_field<std::vector<double>>(j, "eta_lane_optimal", path);
        dh.eta_pooled = get_field<double>(j, "eta_pooled", path);
        dh.coverage = get_field<double>(j, "coverage", path);
        dh.train_seed = get_field<std::uint64_t>(j, "train_seed", path);
        return dh;
    }
    throw IoError(path.string() + ": unknown table variant '" + variant + "'");
}

void save_frame(const SymbolFrame& frame, const std::filesystem::path& path) {
    frame.validate();
    json j;
    j["version"] = kFrameFileVersion;
    j["kind"] = "frame";
    j["rng"] = kRngDescription;
    j["lanes"] = frame.lanes;
    j["length"] = frame.length;
    j["edge_len"] = frame.edge_len;
    j["discrete"] = frame.discrete;
    j["seed"] = frame.seed;
    json data = json::array();
    for (int l = 0; l < frame.lanes; ++l) {
        const auto row = frame.lane(l);
        data.push_back(std::vector<double>(row.begin(), row.end()));
    }
    j["data"] = std::move(data);
    write_json_file(j, path);
}

SymbolFrame load_frame(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    if (get_field<int>(j, "version", path) != kFrameFileVersion) {
        throw IoError(path.string() + ": unsupported frame file version");
    }
    SymbolFrame frame;
    frame.lanes = get_field<int>(j, "lanes", path);
    frame.length = get_field<int>(j, "length", path);
    frame.edge_len = get_field<int>(j, "edge_len", path);
    frame.discrete = get_field<bool>(j, "discrete", path);
    frame.seed = get_field<std::uint64_t>(j, "seed", path);
    const auto rows = get_field<std::vector<std::vector<double>>>(j, "data", path);
    if (static_cast<int>(rows.size()) != frame.lanes) {
        throw IoError(path.string() + ": data lane count mismatch");
    }
    frame.data.reserve(static_cast<std::size_t>(frame.lanes) * frame.length);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != frame.length) {
            throw IoError(path.string() + ": data length mismatch");
        }
        frame.data.insert(frame.data.end(), row.begin(), row.end());
    }
    frame.validate();
    return frame;
}

}  // namespace dhlut
