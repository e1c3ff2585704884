#include "cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "magnonkin/errors.hpp"
#include "magnonkin/version.hpp"

namespace magnonkin::cli {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '"' || c == '\n') c = '_';
    return s;
}

std::string header(const Column& c, const std::string& label) {
    return sanitize(c.name + "[" + label + "](" + c.unit + ")");
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

const char* palette(std::size_t i) {
    static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    return colours[i % 8];
}

std::string svg_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

constexpr double kWidth = 720, kHeight = 480, kLeft = 80, kRight = 180, kTop = 30, kBottom = 60;

std::string line_plot(const ScenarioResult& r) {
    const bool logx = r.plot == PlotKind::log_time;
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    auto xmap = [&](double x) { return logx ? std::log10(x) : x; };
    for (const auto& s : r.series) {
        const auto& xs = s.columns[s.plot_x].values;
        const auto& ys = s.columns[s.plot_y].values;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (logx && !(xs[i] > 0)) continue;
            x0 = std::min(x0, xmap(xs[i]));
            x1 = std::max(x1, xmap(xs[i]));
            y0 = std::min(y0, ys[i]);
            y1 = std::max(y1, ys[i]);
        }
    }
    if (!(x1 > x0)) x1 = x0 + 1;
    if (!(y1 > y0)) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (xmap(x) - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = x0 + (x1 - x0) * i / 4.0;
        const double fy = y0 + (y1 - y0) * i / 4.0;
        const double sx = kLeft + pw * i / 4.0, sy = kTop + ph * (1.0 - i / 4.0);
        o << "<text x=\"" << svg_number(sx) << "\" y=\"" << kTop + ph + 18
          << "\" text-anchor=\"middle\">" << tick_label(logx ? std::pow(10.0, fx) : fx) << "</text>\n";
        o << "<text x=\"" << kLeft - 6 << "\" y=\"" << svg_number(sy + 4) << "\" text-anchor=\"end\">"
          << tick_label(fy) << "</text>\n";
    }
    o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
      << xml_escape(r.x_label) << "</text>\n";
    o << "<text transform=\"translate(18," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << xml_escape(r.y_label) << "</text>\n";
    for (std::size_t si = 0; si < r.series.size(); ++si) {
        const auto& s = r.series[si];
        const auto& xs = s.columns[s.plot_x].values;
        const auto& ys = s.columns[s.plot_y].values;
        o << "<polyline fill=\"none\" stroke=\"" << palette(si) << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (logx && !(xs[i] > 0)) continue;
            o << svg_number(px(xs[i])) << "," << svg_number(py(ys[i])) << " ";
        }
        o << "\"/>\n";
        const double ly = kTop + 10 + 18.0 * si;
        o << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly << "\" x2=\"" << kWidth - kRight + 30
          << "\" y2=\"" << ly << "\" stroke=\"" << palette(si) << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << kWidth - kRight + 35 << "\" y=\"" << ly + 4 << "\">" << xml_escape(s.label)
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string heat_plot(const ScenarioResult& r, const Series& s) {
    const auto& v = s.columns[static_cast<std::size_t>(s.plot_y)].values;
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    const double side = std::min(kWidth - kLeft - kRight, kHeight - kTop - kBottom);
    const double cell = side / static_cast<double>(n);

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double f = hi > lo ? (v[i * n + j] - lo) / (hi - lo) : 0.0;
            const int red = static_cast<int>(std::lround(255 * f));
            const int blue = static_cast<int>(std::lround(255 * (1.0 - f)));
            const int green = static_cast<int>(std::lround(255 * (1.0 - std::fabs(2.0 * f - 1.0)) * 0.8));
            o << "<rect x=\"" << svg_number(kLeft + cell * i) << "\" y=\""
              << svg_number(kTop + side - cell * (j + 1)) << "\" width=\"" << svg_number(cell + 0.3)
              << "\" height=\"" << svg_number(cell + 0.3) << "\" fill=\"rgb(" << red << "," << green << ","
              << blue << ")\"/>\n";
        }
    o << "<text x=\"" << kLeft + side / 2 << "\" y=\"" << kTop + side + 30 << "\" text-anchor=\"middle\">"
      << xml_escape(r.x_label) << "</text>\n";
    o << "<text transform=\"translate(30," << kTop + side / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << xml_escape(r.y_label) << "</text>\n";
    o << "<text x=\"" << kLeft + side + 20 << "\" y=\"" << kTop + 15 << "\">" << xml_escape(s.label)
      << "</text>\n";
    o << "<text x=\"" << kLeft + side + 20 << "\" y=\"" << kTop + 35 << "\">max " << tick_label(hi)
      << " (red)</text>\n";
    o << "<text x=\"" << kLeft + side + 20 << "\" y=\"" << kTop + 55 << "\">min " << tick_label(lo)
      << " (blue)</text>\n";
    o << "</svg>\n";
    return o.str();
}

std::string file_safe(std::string s) {
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-') c = '_';
    return s;
}

}  // namespace

OutputFormats parse_formats(const std::string& list) {
    OutputFormats f;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "csv") f.csv = true;
        else if (item == "json") f.json = true;
        else if (item == "svg") f.svg = true;
        else if (!item.empty()) throw InvalidArgument("unknown output format '" + item + "' (csv, json, svg)");
    }
    return f;
}

std::string to_csv(const ScenarioResult& r) {
    std::ostringstream o;
    std::size_t rows = 0;
    bool first = true;
    for (const auto& s : r.series)
        for (const auto& c : s.columns) {
            o << (first ? "" : ",") << header(c, s.label);
            first = false;
            rows = std::max(rows, c.values.size());
        }
    o << "\n";
    for (std::size_t i = 0; i < rows; ++i) {
        first = true;
        for (const auto& s : r.series)
            for (const auto& c : s.columns) {
                if (!first) o << ",";
                first = false;
                if (i < c.values.size()) o << num17(c.values[i]);
            }
        o << "\n";
    }
    return o.str();
}

std::string to_json(const ScenarioResult& r) {
    nlohmann::ordered_json j;
    j["scenario"] = to_string(r.scenario);
    j["series"] = nlohmann::ordered_json::array();
    for (const auto& s : r.series) {
        nlohmann::ordered_json js;
        js["label"] = s.label;
        js["columns"] = nlohmann::ordered_json::array();
        for (const auto& c : s.columns)
            js["columns"].push_back({{"name", c.name}, {"unit", c.unit}, {"values", c.values}});
        j["series"].push_back(js);
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump(1) + "\n";
}

std::vector<std::pair<std::string, std::string>> to_svg(const ScenarioResult& r) {
    std::vector<std::pair<std::string, std::string>> out;
    if (r.series.empty()) return out;
    if (r.plot == PlotKind::heat) {
        for (std::size_t i = 0; i < r.series.size(); ++i)
            out.emplace_back("plot_" + std::to_string(i) + "_" + file_safe(r.series[i].label) + ".svg",
                             heat_plot(r, r.series[i]));
    } else {
        out.emplace_back("plot.svg", line_plot(r));
    }
    return out;
}

std::string manifest_json(const ScenarioConfig& cfg, const ScenarioResult* r, const RunInfo& info) {
    nlohmann::ordered_json j;
    j["tool"] = "magnonkin";
    j["version"] = kVersion;
    j["status"] = info.status;
    if (info.status != "ok") j["error"] = {{"kind", info.error_kind}, {"message", info.error_message}};
    j["scenario"] = to_string(cfg.scenario);
    j["config"] = cfg.resolved_text();
    j["config_file"] = "resolved.cfg";
    j["threads"] = info.threads;
    j["wall_time_s"] = info.wall_time_s;
    if (r) {
        const auto& cv = r->convergence;
        nlohmann::ordered_json c;
        c["checked"] = cv.checked;
        c["applicable"] = cv.applicable;
        if (cv.applicable) {
            c["refined_sites"] = cv.refined_sites;
            c["max_change"] = cv.max_change;
            c["tolerance"] = cv.tolerance;
            c["converged"] = cv.passed;
        }
        j["convergence"] = c;
        std::vector<std::string> labels;
        for (const auto& s : r->series) labels.push_back(s.label);
        j["series"] = labels;
        if (!r->notes.empty()) j["notes"] = r->notes;
    }
    j["outputs"] = info.outputs;
    return j.dump(1) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

std::vector<std::string> write_outputs(const std::filesystem::path& dir, const ScenarioConfig& cfg,
                                       const ScenarioResult& r, const OutputFormats& formats,
                                       RunInfo info) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

    std::vector<std::string> written;
    const std::string stem = to_string(r.scenario);
    write_text(dir / (stem + ".csv"), to_csv(r));
    written.push_back(stem + ".csv");
    if (formats.json) {
        write_text(dir / (stem + ".json"), to_json(r));
        written.push_back(stem + ".json");
    }
    if (formats.svg)
        for (const auto& [name, doc] : to_svg(r)) {
            write_text(dir / name, doc);
            written.push_back(name);
        }
    write_text(dir / "resolved.cfg", cfg.resolved_text());
    written.push_back("resolved.cfg");
    written.push_back("manifest.json");
    info.outputs = written;
    write_text(dir / "manifest.json", manifest_json(cfg, &r, info));
    return written;
}

}  // namespace magnonkin::cli
