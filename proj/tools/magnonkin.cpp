// magnonkin run <config-file> [--out DIR] [--format csv,json,svg] [--check-convergence] [--threads N]

#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "cli/output.hpp"
#include "cli/scenario.hpp"
#include "json.hpp"
#include "magnonkin/errors.hpp"
#include "magnonkin/version.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int report(int code, const std::string& kind, const std::string& message,
           const std::vector<std::string>& details = {}) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    if (!details.empty()) j["details"] = details;
    j["exit_code"] = code;
    std::cerr << j.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace magnonkin;

    CLI::App app{"Magnon relaxation kinetics in a spatially correlated thermal bath"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::string formats = "csv";
    bool check_convergence = false;
    unsigned threads = 0;

    auto* run = app.add_subcommand("run", "Run the scenario described by a config file");
    run->add_option("config", config_path, "Config file")->required();
    run->add_option("--out", out_dir, "Output directory")->capture_default_str();
    run->add_option("--format", formats, "Comma-separated subset of csv,json,svg")->capture_default_str();
    run->add_flag("--check-convergence", check_convergence, "Repeat grid-dependent runs on a 2N grid");
    run->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitConfig;
    }

    cli::OutputFormats fmt;
    try {
        fmt = cli::parse_formats(formats);
    } catch (const Error& e) {
        return report(kExitConfig, "ConfigError", e.what());
    }

    std::optional<cli::ScenarioConfig> cfg;
    try {
        cfg = cli::load_config(config_path);
    } catch (const cli::ConfigError& e) {
        std::vector<std::string> details;
        for (const auto& i : e.issues()) details.push_back(i.to_string());
        return report(kExitConfig, "ConfigError", "invalid configuration in " + config_path, details);
    } catch (const IoError& e) {
        return report(kExitIo, e.kind(), e.what());
    }

    cli::RunOptions opts;
    opts.exec.threads = threads;
    opts.check_convergence = check_convergence;
    cli::RunInfo info;
    info.threads = opts.exec.resolved_threads();

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    auto fail = [&](int code, const char* kind, const std::string& message) {
        info.status = "error";
        info.error_kind = kind;
        info.error_message = message;
        info.wall_time_s = elapsed();
        try {
            std::filesystem::create_directories(out_dir);
            cli::write_text(std::filesystem::path(out_dir) / "manifest.json",
                            cli::manifest_json(*cfg, nullptr, info));
        } catch (const std::exception&) {
        }
        return report(code, kind, message);
    };

    try {
        const cli::ScenarioResult result = cli::run_scenario(*cfg, opts);
        info.wall_time_s = elapsed();
        cli::write_outputs(out_dir, *cfg, result, fmt, info);
        if (result.convergence.applicable && !result.convergence.passed)
            std::cerr << "warning: grid convergence check exceeded tolerance (max change "
                      << result.convergence.max_change << ")\n";
    } catch (const IoError& e) {
        return report(kExitIo, e.kind(), e.what());
    } catch (const Error& e) {
        return fail(kExitNumeric, e.kind(), e.what());
    } catch (const std::exception& e) {
        return fail(kExitNumeric, "Error", e.what());
    }
    return 0;
}
