#include "latgeo/report.hpp"

#include <nlohmann/json.hpp>

namespace latgeo {

namespace {

std::string manifest_text(const RunManifest& m) {
    std::string out;
    out += "manifest.subcommand=" + m.subcommand + "\n";
    for (const auto& [k, v] : m.parameters) out += "manifest.param." + k + "=" + v + "\n";
    out += "manifest.seed=" + std::to_string(m.seed) + "\n";
    out += "manifest.version=" + std::string(m.version) + "\n";
    return out;
}

nlohmann::ordered_json manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["subcommand"] = m.subcommand;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    j["parameters"] = params;
    j["seed"] = m.seed;
    j["version"] = m.version;
    j["schema"] = 1;
    return j;
}

}  // namespace

std::string render_text(const Report& report) {
    std::string out = manifest_text(report.manifest);
    for (const auto& [k, v] : report.lines) out += k + "=" + v + "\n";
    return out;
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json j;
    j["manifest"] = manifest_json(report.manifest);
    nlohmann::ordered_json body = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.lines) body[k] = v;
    j["report"] = body;
    return j.dump(2) + "\n";
}

std::string render_table_text(const RegressionTable& table, const RunManifest& manifest) {
    std::string out = manifest_text(manifest);
    out += "table=" + table.name + "\n";
    for (const auto& e : table.entries)
        out += e.key + "=" + e.value + " [" + e.provenance + "]\n";
    return out;
}

std::string render_table_json(const RegressionTable& table, const RunManifest& manifest) {
    nlohmann::ordered_json j;
    j["manifest"] = manifest_json(manifest);
    j["table"] = table.name;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& e : table.entries)
        rows.push_back({{"key", e.key}, {"value", e.value}, {"provenance", e.provenance}});
    j["entries"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace latgeo
