#include "cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "magnonkin/errors.hpp"

namespace magnonkin::cli {

namespace {

const std::vector<std::pair<Scenario, std::string>>& scenario_table() {
    static const std::vector<std::pair<Scenario, std::string>> table{
        {Scenario::decay_rate_map, "decay-rate-map"},
        {Scenario::decay_rate_diagonal, "decay-rate-diagonal"},
        {Scenario::structure_factor, "structure-factor"},
        {Scenario::magnetisation_relaxation, "magnetisation-relaxation"},
        {Scenario::equilibrium_vs_temperature, "equilibrium-vs-temperature"},
        {Scenario::ferro_antiferro_compare, "ferro-antiferro-compare"},
    };
    return table;
}

const std::vector<std::pair<CorrelationType, std::string>>& correlation_table() {
    static const std::vector<std::pair<CorrelationType, std::string>> table{
        {CorrelationType::uncorrelated, "uncorrelated"},
        {CorrelationType::nearest_neighbour, "nearest-neighbour"},
        {CorrelationType::gaussian, "gaussian"},
        {CorrelationType::custom, "custom"},
    };
    return table;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Shortest decimal text that parses back to the same double.
std::string format_number(double v) {
    char buf[40];
    int prec = 1;
    for (; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    // Prefer "100" over "1e+02" for moderate integers.
    while (prec < 17 && std::fabs(v) >= 1.0 && std::fabs(v) < 1e15 && std::strchr(buf, 'e'))
        std::snprintf(buf, sizeof buf, "%.*g", ++prec, v);
    return buf;
}

struct Item {
    std::string text;
    int column = 0;
};

struct Entry {
    std::string path;
    int line = 0;
    int column = 0;
    std::vector<Item> items;
};

class Parser {
public:
    std::vector<ConfigIssue> issues;

    void error(const Entry& e, const Item& it, std::string msg) {
        issues.push_back({e.line, it.column, e.path, std::move(msg)});
    }
    void error(const Entry& e, std::string msg) {
        issues.push_back({e.line, e.column, e.path, std::move(msg)});
    }

    bool single(const Entry& e) {
        if (e.items.size() == 1) return true;
        error(e, "expects a single value, got " + std::to_string(e.items.size()));
        return false;
    }

    std::optional<double> number(const Entry& e, const Item& it) {
        const char* begin = it.text.c_str();
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(begin, &end);
        if (it.text.empty() || end != begin + it.text.size() || errno == ERANGE || !std::isfinite(v)) {
            error(e, it, "'" + it.text + "' is not a finite number");
            return std::nullopt;
        }
        return v;
    }

    std::optional<int> integer(const Entry& e, const Item& it) {
        const char* begin = it.text.c_str();
        char* end = nullptr;
        errno = 0;
        const long v = std::strtol(begin, &end, 10);
        if (it.text.empty() || end != begin + it.text.size() || errno == ERANGE || v < -1000000000 ||
            v > 1000000000) {
            error(e, it, "'" + it.text + "' is not an integer");
            return std::nullopt;
        }
        return static_cast<int>(v);
    }

    std::optional<bool> boolean(const Entry& e, const Item& it) {
        if (it.text == "true" || it.text == "yes" || it.text == "on") return true;
        if (it.text == "false" || it.text == "no" || it.text == "off") return false;
        error(e, it, "'" + it.text + "' is not a boolean (true/false)");
        return std::nullopt;
    }

    void scalar(const Entry& e, double& out) {
        if (!single(e)) return;
        if (auto v = number(e, e.items[0])) out = *v;
    }
    void scalar(const Entry& e, int& out) {
        if (!single(e)) return;
        if (auto v = integer(e, e.items[0])) out = *v;
    }
    void scalar(const Entry& e, bool& out) {
        if (!single(e)) return;
        if (auto v = boolean(e, e.items[0])) out = *v;
    }
    void list(const Entry& e, std::vector<double>& out) {
        std::vector<double> values;
        for (const auto& it : e.items)
            if (auto v = number(e, it)) values.push_back(*v);
        if (values.size() == e.items.size()) out = std::move(values);
    }
    template <std::size_t N, class T>
    void axes(const Entry& e, std::array<T, N>& out) {
        if (e.items.size() != 1 && e.items.size() != N) {
            error(e, "expects 1 or " + std::to_string(N) + " values");
            return;
        }
        std::array<T, N> values{};
        for (std::size_t i = 0; i < N; ++i) {
            const Item& it = e.items[e.items.size() == 1 ? 0 : i];
            if constexpr (std::is_same_v<T, int>) {
                auto v = integer(e, it);
                if (!v) return;
                values[i] = *v;
            } else {
                auto v = number(e, it);
                if (!v) return;
                values[i] = *v;
            }
        }
        out = values;
    }
};

using Handler = std::function<void(Parser&, const Entry&, ScenarioConfig&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"scenario",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) {
             if (!ps.single(e)) return;
             for (const auto& [s, name] : scenario_table())
                 if (name == e.items[0].text) {
                     c.scenario = s;
                     return;
                 }
             std::string valid;
             for (const auto& name : scenario_names()) valid += (valid.empty() ? "" : ", ") + name;
             ps.error(e, e.items[0], "unknown scenario '" + e.items[0].text + "'; valid: " + valid);
         }},
        {"model.kind",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) {
             if (!ps.single(e)) return;
             const auto& t = e.items[0].text;
             if (t == "ferro") c.kind = MagnetKind::ferro;
             else if (t == "antiferro") c.kind = MagnetKind::antiferro;
             else ps.error(e, e.items[0], "kind must be ferro or antiferro");
         }},
        {"model.spin", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.spin); }},
        {"model.field", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.field); }},
        {"model.exchange",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.exchange); }},
        {"correlation.type",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) {
             std::vector<CorrelationType> types;
             for (const auto& it : e.items) {
                 auto found = std::find_if(correlation_table().begin(), correlation_table().end(),
                                           [&](const auto& p) { return p.second == it.text; });
                 if (found == correlation_table().end())
                     ps.error(e, it,
                              "unknown correlation type '" + it.text +
                                  "'; valid: uncorrelated, nearest-neighbour, gaussian, custom");
                 else
                     types.push_back(found->first);
             }
             if (types.size() == e.items.size()) c.correlation_types = types;
         }},
        {"correlation.eta", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.list(e, c.etas); }},
        {"correlation.xi", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.list(e, c.xis); }},
        {"correlation.profile",
         [](Parser&, const Entry& e, ScenarioConfig& c) {
             c.profiles.clear();
             for (const auto& it : e.items) c.profiles.push_back(it.text);
         }},
        {"correlation.u_max",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) {
             double v = 0.0;
             const std::size_t before = ps.issues.size();
             ps.scalar(e, v);
             if (ps.issues.size() == before) c.u_max = v;
         }},
        {"correlation.steps",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) {
             int v = 0;
             const std::size_t before = ps.issues.size();
             ps.scalar(e, v);
             if (ps.issues.size() == before) c.quad_steps = v;
         }},
        {"correlation.rule",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) {
             if (!ps.single(e)) return;
             const auto& t = e.items[0].text;
             if (t == "adaptive") c.quad_rule = QuadratureRule::adaptive;
             else if (t == "simpson") c.quad_rule = QuadratureRule::fixed_simpson;
             else ps.error(e, e.items[0], "rule must be adaptive or simpson");
         }},
        {"bath.alpha", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.alpha); }},
        {"bath.s", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.list(e, c.exponents); }},
        {"bath.cutoff", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.cutoff); }},
        {"thermal.temperature",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.list(e, c.temperatures); }},
        {"initial.state",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) {
             if (!ps.single(e)) return;
             const auto& t = e.items[0].text;
             if (t == "saturated") c.initial_thermal = false;
             else if (t == "thermal") c.initial_thermal = true;
             else ps.error(e, e.items[0], "state must be saturated or thermal");
         }},
        {"initial.field",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.initial_field); }},
        {"initial.temperature",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.initial_temperature); }},
        {"grid.sites", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.axes(e, c.sites); }},
        {"grid.spacing", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.axes(e, c.spacing); }},
        {"grid.offset", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.offset); }},
        {"grid.mode",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) {
             if (!ps.single(e)) return;
             const auto& t = e.items[0].text;
             if (t == "sum") c.mode = GridMode::sum;
             else if (t == "integral") c.mode = GridMode::integral;
             else ps.error(e, e.items[0], "mode must be sum or integral");
         }},
        {"grid.refine", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.refine); }},
        {"grid.refine_block",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.refine_block); }},
        {"grid.refine_levels",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.refine_levels); }},
        {"time.t_min", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.t_min); }},
        {"time.t_max", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.t_max); }},
        {"time.per_decade",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.per_decade); }},
        {"map.diagonal_points",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.diagonal_points); }},
        {"map.resolution",
         [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.map_resolution); }},
        {"map.kz", [](Parser& ps, const Entry& e, ScenarioConfig& c) { ps.scalar(e, c.map_kz); }},
    };
    return table;
}

const std::set<std::string>& sections() {
    static const std::set<std::string> s{"model", "correlation", "bath", "thermal",
                                         "initial", "grid",        "time", "map"};
    return s;
}

template <class F>
void check(std::vector<ConfigIssue>& issues, const std::string& path, F&& f) {
    try {
        f();
    } catch (const std::exception& ex) {
        issues.push_back({0, 0, path, ex.what()});
    }
}

void validate(const ScenarioConfig& c, std::vector<ConfigIssue>& issues) {
    auto fail = [&](const std::string& path, const std::string& msg) {
        issues.push_back({0, 0, path, msg});
    };
    check(issues, "model", [&] { (void)c.model(); });
    check(issues, "grid", [&] { (void)c.lattice(); });
    for (double s : c.exponents) check(issues, "bath", [&] { (void)c.bath(s); });
    if (c.exponents.empty()) fail("bath.s", "needs at least one value");
    for (double t : c.temperatures) check(issues, "thermal.temperature", [&] { (void)Temperature(t); });
    if (c.temperatures.empty()) fail("thermal.temperature", "needs at least one value");
    check(issues, "initial", [&] {
        if (c.initial_thermal) {
            if (!(c.initial_field >= 0.0)) throw InvalidArgument("initial field energy must be >= 0");
            (void)Temperature(c.initial_temperature);
        }
    });
    if (c.correlation_types.empty()) fail("correlation.type", "needs at least one value");
    const auto has = [&](CorrelationType t) {
        return std::find(c.correlation_types.begin(), c.correlation_types.end(), t) !=
               c.correlation_types.end();
    };
    if (has(CorrelationType::nearest_neighbour)) {
        if (c.etas.empty()) fail("correlation.eta", "needs at least one value");
        for (double eta : c.etas) check(issues, "correlation.eta", [&] { (void)NearestNeighbor(eta); });
    }
    if (has(CorrelationType::gaussian)) {
        if (c.xis.empty()) fail("correlation.xi", "needs at least one value");
        for (double xi : c.xis) check(issues, "correlation.xi", [&] { (void)GaussianDecay(xi); });
    }
    if (has(CorrelationType::custom)) {
        if (c.profiles.empty()) fail("correlation.profile", "custom correlation needs a profile file");
        else check(issues, "correlation.profile", [&] { (void)c.correlations(); });
    }
    if ((c.scenario == Scenario::magnetisation_relaxation ||
         c.scenario == Scenario::equilibrium_vs_temperature) &&
        c.kind != MagnetKind::ferro)
        fail("model.kind", "magnetisation scenarios support ferromagnets only");
    if (!(c.t_min > 0.0 && c.t_max > c.t_min)) fail("time", "need 0 < t_min < t_max");
    if (c.per_decade < 1) fail("time.per_decade", "must be >= 1");
    if (c.diagonal_points < 2) fail("map.diagonal_points", "must be >= 2");
    if (c.map_resolution < 2) fail("map.resolution", "must be >= 2");
    const bool uses_grid = c.scenario == Scenario::magnetisation_relaxation ||
                           c.scenario == Scenario::equilibrium_vs_temperature;
    if (uses_grid && c.refine && c.offset && c.mode == GridMode::integral) {
        const int smallest = *std::min_element(c.sites.begin(), c.sites.end());
        if (c.refine_block < 2 || c.refine_block % 2 != 0 || c.refine_block > smallest)
            fail("grid.refine_block", "must be even, >= 2 and no larger than the smallest grid axis");
        if (c.refine_levels < 1) fail("grid.refine_levels", "must be >= 1");
    }
}

}  // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& p : scenario_table()) v.push_back(p.second);
        return v;
    }();
    return names;
}

const char* to_string(Scenario s) noexcept {
    for (const auto& p : scenario_table())
        if (p.first == s) return p.second.c_str();
    return "?";
}

std::string ConfigIssue::to_string() const {
    std::string out;
    if (line > 0) out += std::to_string(line) + ":" + std::to_string(column) + ": ";
    if (!path.empty()) out += path + ": ";
    return out + message;
}

namespace {
std::string join_issues(const std::vector<ConfigIssue>& issues) {
    std::string out = "invalid configuration";
    for (const auto& i : issues) out += "\n  " + i.to_string();
    return out;
}
}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

ModelParams ScenarioConfig::model() const { return ModelParams(kind, spin, field, exchange); }

LatticeSpec ScenarioConfig::lattice() const { return LatticeSpec(sites, spacing); }

SpectralDensity ScenarioConfig::bath(double exponent) const {
    return SpectralDensity(alpha, exponent, cutoff);
}

InitialCondition ScenarioConfig::initial() const {
    if (!initial_thermal) return Saturated{};
    return ThermalAtField{initial_field, Temperature(initial_temperature)};
}

std::vector<CorrelationSeries> ScenarioConfig::correlations() const {
    std::vector<CorrelationSeries> out;
    for (CorrelationType t : correlation_types) {
        switch (t) {
        case CorrelationType::uncorrelated:
            out.push_back({Uncorrelated{}, "uncorrelated"});
            break;
        case CorrelationType::nearest_neighbour:
            for (double eta : etas) {
                CorrelationModel m = NearestNeighbor(eta);
                out.push_back({m, describe(m)});
            }
            break;
        case CorrelationType::gaussian:
            for (double xi : xis) {
                CorrelationModel m = GaussianDecay(xi);
                out.push_back({m, describe(m)});
            }
            break;
        case CorrelationType::custom:
            for (const auto& file : profiles) {
                std::filesystem::path path(file);
                if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
                auto table = std::make_shared<TabulatedProfile>(TabulatedProfile::load(path));
                QuadratureConfig q;
                q.u_max = u_max.value_or(std::max(q.u_max, table->last_node()));
                if (quad_steps) q.n_steps = *quad_steps;
                q.rule = quad_rule;
                const std::string label = "custom:" + std::filesystem::path(file).stem().string();
                out.push_back({CustomRadial([table](double u) { return (*table)(u); }, q, label), label});
            }
            break;
        }
    }
    return out;
}

BrillouinGrid ScenarioConfig::magnetisation_grid(const LatticeSpec& l) const {
    BrillouinGrid g = bz_grid(l, offset, mode);
    if (refine && offset && mode == GridMode::integral)
        g = refine_goldstone_region(g, refine_block, refine_levels);
    return g;
}

BrillouinGrid ScenarioConfig::magnetisation_grid() const { return magnetisation_grid(lattice()); }

std::vector<double> ScenarioConfig::times() const { return log_time_grid(t_min, t_max, per_decade); }

std::string ScenarioConfig::resolved_text() const {
    std::ostringstream o;
    auto list = [](const std::vector<double>& v) {
        std::string s;
        for (double x : v) s += (s.empty() ? "" : ", ") + format_number(x);
        return s;
    };
    auto name_of = [](CorrelationType t) {
        for (const auto& p : correlation_table())
            if (p.first == t) return p.second;
        return std::string("?");
    };
    o << "scenario = " << to_string(scenario) << "\n\n";
    o << "[model]\n"
      << "kind = " << magnonkin::to_string(kind) << "\n"
      << "spin = " << format_number(spin) << "\n"
      << "field = " << format_number(field) << "\n"
      << "exchange = " << format_number(exchange) << "\n\n";
    o << "[correlation]\ntype = ";
    for (std::size_t i = 0; i < correlation_types.size(); ++i)
        o << (i ? ", " : "") << name_of(correlation_types[i]);
    o << "\neta = " << list(etas) << "\nxi = " << list(xis) << "\n";
    if (!profiles.empty()) {
        o << "profile = ";
        for (std::size_t i = 0; i < profiles.size(); ++i) o << (i ? ", " : "") << profiles[i];
        o << "\n";
    }
    if (u_max) o << "u_max = " << format_number(*u_max) << "\n";
    if (quad_steps) o << "steps = " << *quad_steps << "\n";
    o << "rule = " << (quad_rule == QuadratureRule::adaptive ? "adaptive" : "simpson") << "\n\n";
    o << "[bath]\n"
      << "alpha = " << format_number(alpha) << "\n"
      << "s = " << list(exponents) << "\n"
      << "cutoff = " << format_number(cutoff) << "\n\n";
    o << "[thermal]\ntemperature = " << list(temperatures) << "\n\n";
    o << "[initial]\nstate = " << (initial_thermal ? "thermal" : "saturated") << "\n"
      << "field = " << format_number(initial_field) << "\n"
      << "temperature = " << format_number(initial_temperature) << "\n\n";
    o << "[grid]\n"
      << "sites = " << sites[0] << ", " << sites[1] << ", " << sites[2] << "\n"
      << "spacing = " << format_number(spacing[0]) << ", " << format_number(spacing[1]) << ", "
      << format_number(spacing[2]) << "\n"
      << "offset = " << (offset ? "true" : "false") << "\n"
      << "mode = " << magnonkin::to_string(mode) << "\n"
      << "refine = " << (refine ? "true" : "false") << "\n"
      << "refine_block = " << refine_block << "\n"
      << "refine_levels = " << refine_levels << "\n\n";
    o << "[time]\n"
      << "t_min = " << format_number(t_min) << "\n"
      << "t_max = " << format_number(t_max) << "\n"
      << "per_decade = " << per_decade << "\n\n";
    o << "[map]\n"
      << "diagonal_points = " << diagonal_points << "\n"
      << "resolution = " << map_resolution << "\n"
      << "kz = " << format_number(map_kz) << "\n";
    return o.str();
}

ScenarioConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    Parser ps;
    ScenarioConfig cfg;
    cfg.base_dir = base_dir;
    std::string section;
    std::set<std::string> seen;
    bool have_scenario = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);

        std::size_t first = 0;
        while (first < raw.size() && std::isspace(static_cast<unsigned char>(raw[first]))) ++first;
        if (first == raw.size()) continue;
        const int col = static_cast<int>(first) + 1;
        const std::string body = trim(raw);

        if (body.front() == '[') {
            if (body.back() != ']') {
                ps.issues.push_back({line_no, col, "", "syntax error: section header must end with ']'"});
                continue;
            }
            section = trim(std::string_view(body).substr(1, body.size() - 2));
            if (!sections().count(section)) {
                ps.issues.push_back({line_no, col + 1, section, "unknown section '" + section + "'"});
                section = "?";
            }
            continue;
        }

        const std::size_t eq = raw.find('=');
        if (eq == std::string_view::npos) {
            ps.issues.push_back({line_no, col, "", "syntax error: expected 'key = value'"});
            continue;
        }
        const std::string key = trim(raw.substr(0, eq));
        const bool key_ok = !key.empty() && std::all_of(key.begin(), key.end(), [](char ch) {
            return std::islower(static_cast<unsigned char>(ch)) || std::isdigit(static_cast<unsigned char>(ch)) ||
                   ch == '_';
        });
        if (!key_ok) {
            ps.issues.push_back({line_no, col, "", "syntax error: invalid key '" + key + "'"});
            continue;
        }
        if (section == "?") continue;

        Entry e;
        e.path = section.empty() ? key : section + "." + key;
        e.line = line_no;
        e.column = col;
        std::size_t item_start = eq + 1;
        while (true) {
            const std::size_t comma = raw.find(',', item_start);
            const std::string_view piece =
                raw.substr(item_start, comma == std::string_view::npos ? std::string_view::npos : comma - item_start);
            std::size_t lead = 0;
            while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
            e.items.push_back({trim(piece), static_cast<int>(item_start + lead) + 1});
            if (comma == std::string_view::npos) break;
            item_start = comma + 1;
        }
        if (std::any_of(e.items.begin(), e.items.end(), [](const Item& it) { return it.text.empty(); })) {
            ps.error(e, "syntax error: empty value");
            continue;
        }

        const auto h = handlers().find(e.path);
        if (h == handlers().end()) {
            ps.error(e, "unknown key '" + e.path + "'");
            continue;
        }
        if (!seen.insert(e.path).second) {
            ps.error(e, "duplicate key '" + e.path + "'");
            continue;
        }
        if (e.path == "scenario") have_scenario = true;
        h->second(ps, e, cfg);
    }

    if (!have_scenario) {
        std::string valid;
        for (const auto& name : scenario_names()) valid += (valid.empty() ? "" : ", ") + name;
        ps.issues.push_back({0, 0, "scenario", "missing scenario; valid: " + valid});
    }
    if (ps.issues.empty()) validate(cfg, ps.issues);
    else {
        // Still report semantic problems of the parts that did parse.
        std::vector<ConfigIssue> semantic;
        validate(cfg, semantic);
        ps.issues.insert(ps.issues.end(), semantic.begin(), semantic.end());
    }
    if (!ps.issues.empty()) throw ConfigError(std::move(ps.issues));
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.parent_path());
}

}  // namespace magnonkin::cli
