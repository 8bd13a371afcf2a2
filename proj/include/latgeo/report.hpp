#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latgeo {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 786431;

// Everything a rerun needs to reproduce a report byte for byte. Thread
// count and timings are execution details, not results; they are emitted
// separately on stderr so reports stay schedule-independent.
struct RunManifest {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::uint64_t seed = kDefaultSeed;
    std::string version = kToolkitVersion;
};

struct RegressionEntry {
    std::string key;
    std::string value;
    std::string provenance;  // e.g. exact-formula, exhaustive-search, cited-literature
};

struct RegressionTable {
    std::string name;
    std::vector<RegressionEntry> entries;

    void add(std::string key, std::string value, std::string provenance) {
        if (provenance.empty())
            throw std::invalid_argument("regression entry requires provenance");
        for (const auto& e : entries)
            if (e.key == key)
                throw std::invalid_argument("regression entry would overwrite: " + key);
        entries.push_back({std::move(key), std::move(value), std::move(provenance)});
    }
};

// Flat key=value report body; insertion order is emission order.
struct Report {
    RunManifest manifest;
    std::vector<std::pair<std::string, std::string>> lines;

    void add(std::string key, std::string value) {
        lines.emplace_back(std::move(key), std::move(value));
    }
};

std::string render_text(const Report& report);
std::string render_json(const Report& report);
std::string render_table_text(const RegressionTable& table, const RunManifest& manifest);
std::string render_table_json(const RegressionTable& table, const RunManifest& manifest);

}  // namespace latgeo
