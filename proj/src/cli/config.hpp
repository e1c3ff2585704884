#pragma once

// Scenario configuration: a flat, sectioned key = value format.
//
//   scenario = magnetisation-relaxation
//   [thermal]
//   temperature = 0.5, 1, 2
//
// Comma-separated values on series keys expand into one output series each.

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magnonkin/bath.hpp"
#include "magnonkin/core_model.hpp"
#include "magnonkin/correlation.hpp"
#include "magnonkin/magnetisation.hpp"

namespace magnonkin::cli {

enum class Scenario {
    decay_rate_map,
    decay_rate_diagonal,
    structure_factor,
    magnetisation_relaxation,
    equilibrium_vs_temperature,
    ferro_antiferro_compare,
};

const std::vector<std::string>& scenario_names();
const char* to_string(Scenario s) noexcept;

struct ConfigIssue {
    int line = 0;    // 0 when the issue is not tied to a line
    int column = 0;
    std::string path;  // "section.key"
    std::string message;

    std::string to_string() const;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<ConfigIssue> issues);
    const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }

private:
    std::vector<ConfigIssue> issues_;
};

enum class CorrelationType { uncorrelated, nearest_neighbour, gaussian, custom };

struct CorrelationSeries {
    CorrelationModel model;
    std::string label;
};

struct ScenarioConfig {
    Scenario scenario = Scenario::magnetisation_relaxation;

    // [model]
    MagnetKind kind = MagnetKind::ferro;
    double spin = 0.5;
    double field = 0.0;
    double exchange = 1.0;

    // [correlation]
    std::vector<CorrelationType> correlation_types{CorrelationType::uncorrelated};
    std::vector<double> etas{0.2};
    std::vector<double> xis{1.0};
    std::vector<std::string> profiles;  // tabulated profile paths, as written
    std::optional<double> u_max;
    std::optional<int> quad_steps;
    QuadratureRule quad_rule = QuadratureRule::adaptive;

    // [bath]
    double alpha = 1.0;
    std::vector<double> exponents{1.0};
    double cutoff = 100.0;

    // [thermal]
    std::vector<double> temperatures{1.0};

    // [initial]
    bool initial_thermal = false;
    double initial_field = 0.0;
    double initial_temperature = 0.0;

    // [grid]
    std::array<int, 3> sites{64, 64, 64};
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    bool offset = true;
    GridMode mode = GridMode::integral;
    bool refine = true;
    int refine_block = 8;
    int refine_levels = 20;

    // [time]
    double t_min = 1e-4;
    double t_max = 1e2;
    int per_decade = 10;

    // [map]
    int diagonal_points = 101;
    int map_resolution = 64;
    double map_kz = 0.0;

    // Directory that relative profile paths are resolved against.
    std::filesystem::path base_dir;

    ModelParams model() const;
    LatticeSpec lattice() const;
    SpectralDensity bath(double exponent) const;
    InitialCondition initial() const;
    std::vector<CorrelationSeries> correlations() const;
    BrillouinGrid magnetisation_grid() const;
    BrillouinGrid magnetisation_grid(const LatticeSpec& l) const;
    std::vector<double> times() const;

    // Canonical config text with every key spelled out; parses back to an
    // identical config.
    std::string resolved_text() const;
};

// Throws ConfigError listing every syntax and validation issue found.
ScenarioConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace magnonkin::cli
