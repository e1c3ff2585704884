#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "magnonkin/parallel.hpp"

namespace magnonkin::cli {

struct Column {
    std::string name;
    std::string unit;
    std::vector<double> values;
};

struct Series {
    std::string label;
    std::vector<Column> columns;
    int plot_x = 0;  // column indices used by the SVG plot
    int plot_y = 1;
};

enum class PlotKind { line, log_time, heat };

struct ConvergenceReport {
    bool checked = false;
    bool applicable = false;
    double tolerance = 0.005;
    double max_change = 0.0;  // see README for the metric per scenario
    bool passed = true;
    std::string refined_sites;
};

struct ScenarioResult {
    Scenario scenario{};
    std::vector<Series> series;
    PlotKind plot = PlotKind::line;
    std::string x_label;
    std::string y_label;
    ConvergenceReport convergence;
    std::vector<std::string> notes;
};

struct RunOptions {
    Execution exec;
    bool check_convergence = false;
};

ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts = {});

}  // namespace magnonkin::cli
