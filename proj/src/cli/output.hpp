#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/scenario.hpp"

namespace magnonkin::cli {

struct OutputFormats {
    bool csv = true;  // always written
    bool json = false;
    bool svg = false;
};

// Parses "csv,json,svg" (any subset). Throws InvalidArgument on unknown names.
OutputFormats parse_formats(const std::string& list);

std::string to_csv(const ScenarioResult& r);
std::string to_json(const ScenarioResult& r);
// One document per plot; heat plots produce one per series.
std::vector<std::pair<std::string, std::string>> to_svg(const ScenarioResult& r);

struct RunInfo {
    std::string status = "ok";
    std::string error_kind;
    std::string error_message;
    unsigned threads = 1;
    double wall_time_s = 0.0;
    std::vector<std::string> outputs;
};

std::string manifest_json(const ScenarioConfig& cfg, const ScenarioResult* r, const RunInfo& info);

// Writes the data files plus resolved.cfg and manifest.json into dir; returns
// the file names written. Throws IoError.
std::vector<std::string> write_outputs(const std::filesystem::path& dir, const ScenarioConfig& cfg,
                                       const ScenarioResult& r, const OutputFormats& formats,
                                       RunInfo info);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace magnonkin::cli
