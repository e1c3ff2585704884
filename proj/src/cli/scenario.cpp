#include "cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "magnonkin/errors.hpp"
#include "magnonkin/kinetics.hpp"
#include "magnonkin/magnetisation.hpp"

namespace magnonkin::cli {

namespace {

const char* kUnitRate = "alpha*J";
const char* kUnitWave = "1/d";
const char* kUnitTime = "1/(alpha*J)";
const char* kUnitSpin = "hbar";
const char* kUnitEnergy = "J";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<double> norms(const std::vector<WaveVector>& ks) {
    std::vector<double> out;
    out.reserve(ks.size());
    for (const auto& k : ks) out.push_back(std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
    return out;
}

std::vector<double> rates_along(const ModelParams& p, const CorrelationModel& m, const SpectralDensity& sd,
                                const std::vector<WaveVector>& ks, const LatticeSpec& l,
                                const Execution& exec) {
    std::vector<double> out(ks.size());
    parallel_for(ks.size(), exec, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out[i] = decay_rate(p, m, sd, ks[i], l);
    });
    return out;
}

// Labels are only qualified by the parameters that actually vary.
std::string series_label(const std::string& corr, std::size_t n_corr, double s, std::size_t n_s,
                         double t, std::size_t n_t) {
    std::string label;
    auto add = [&](const std::string& part) { label += (label.empty() ? "" : ";") + part; };
    if (n_corr > 1 || (n_s <= 1 && n_t <= 1)) add(corr);
    if (n_s > 1) add("s=" + fmt(s));
    if (n_t > 1) add("T=" + fmt(t));
    return label;
}

ScenarioResult decay_rate_map(const ScenarioConfig& cfg, const RunOptions& opts) {
    ScenarioResult r;
    r.plot = PlotKind::heat;
    r.x_label = "kx (1/d)";
    r.y_label = "ky (1/d)";
    const LatticeSpec l = cfg.lattice();
    const ModelParams p = cfg.model();
    const int n = cfg.map_resolution;
    std::vector<WaveVector> ks;
    ks.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double kx = -M_PI / l.spacing()[0] + 2.0 * M_PI / l.spacing()[0] * i / (n - 1);
            const double ky = -M_PI / l.spacing()[1] + 2.0 * M_PI / l.spacing()[1] * j / (n - 1);
            ks.push_back({kx, ky, cfg.map_kz});
        }
    std::vector<double> kx, ky, kz;
    for (const auto& k : ks) {
        kx.push_back(k[0]);
        ky.push_back(k[1]);
        kz.push_back(k[2]);
    }
    const auto corrs = cfg.correlations();
    for (const auto& c : corrs)
        for (double s : cfg.exponents) {
            Series se;
            se.label = series_label(c.label, corrs.size(), s, cfg.exponents.size(), 0, 0);
            se.columns = {{"kx", kUnitWave, kx},
                          {"ky", kUnitWave, ky},
                          {"kz", kUnitWave, kz},
                          {"gamma", kUnitRate, rates_along(p, c.model, cfg.bath(s), ks, l, opts.exec)}};
            se.plot_x = 0;
            se.plot_y = 3;
            r.series.push_back(std::move(se));
        }
    return r;
}

ScenarioResult diagonal_rates(const ScenarioConfig& cfg, const RunOptions& opts,
                              const std::vector<MagnetKind>& kinds) {
    ScenarioResult r;
    r.x_label = "|k| (1/d)";
    r.y_label = "gamma (alpha*J)";
    const LatticeSpec l = cfg.lattice();
    const auto ks = diagonal_path(l, cfg.diagonal_points);
    const auto kn = norms(ks);
    const auto corrs = cfg.correlations();
    for (double s : cfg.exponents)
        for (MagnetKind kind : kinds)
            for (const auto& c : corrs) {
                const ModelParams p = cfg.model().with_kind(kind);
                Series se;
                se.label = series_label(c.label, corrs.size(), s, cfg.exponents.size(), 0, 0);
                if (kinds.size() > 1) se.label = std::string(to_string(kind)) + ";" + se.label;
                se.columns = {{"|k|", kUnitWave, kn},
                              {"gamma", kUnitRate, rates_along(p, c.model, cfg.bath(s), ks, l, opts.exec)}};
                r.series.push_back(std::move(se));
            }
    return r;
}

ScenarioResult structure_factor_scan(const ScenarioConfig& cfg, const RunOptions& opts) {
    ScenarioResult r;
    r.x_label = "|k| (1/d)";
    r.y_label = "F";
    const LatticeSpec l = cfg.lattice();
    const auto ks = diagonal_path(l, cfg.diagonal_points);
    const auto kn = norms(ks);
    for (const auto& c : cfg.correlations()) {
        Series se;
        se.label = c.label;
        se.columns = {{"|k|", kUnitWave, kn}, {"F", "1", structure_factors(c.model, ks, l, opts.exec)}};
        r.series.push_back(std::move(se));
    }
    return r;
}

struct CurveSet {
    std::vector<RelaxationCurve> curves;
    std::vector<double> m_inf;
};

CurveSet relaxation_curves(const ScenarioConfig& cfg, const LatticeSpec& l, const RunOptions& opts,
                           std::vector<std::string>* labels) {
    CurveSet out;
    const ModelParams p = cfg.model();
    const BrillouinGrid grid = cfg.magnetisation_grid(l);
    const auto times = cfg.times();
    const auto corrs = cfg.correlations();
    for (const auto& c : corrs)
        for (double s : cfg.exponents)
            for (double t : cfg.temperatures) {
                const DecayRateField field =
                    decay_rate_field(p, c.model, cfg.bath(s), grid, Temperature(t), opts.exec);
                RelaxationCurve curve = magnetisation_curve(field, p, cfg.initial(), times, opts.exec);
                curve.metadata.correlation = c.label;
                out.m_inf.push_back(equilibrium_magnetisation(field, p));
                out.curves.push_back(std::move(curve));
                if (labels)
                    labels->push_back(series_label(c.label, corrs.size(), s, cfg.exponents.size(), t,
                                                   cfg.temperatures.size()));
            }
    return out;
}

LatticeSpec doubled(const LatticeSpec& l) {
    const auto& n = l.sites();
    return LatticeSpec({2 * n[0], 2 * n[1], 2 * n[2]}, l.spacing());
}

std::string sites_text(const LatticeSpec& l) {
    const auto& n = l.sites();
    return std::to_string(n[0]) + "x" + std::to_string(n[1]) + "x" + std::to_string(n[2]);
}

ScenarioResult magnetisation_relaxation(const ScenarioConfig& cfg, const RunOptions& opts) {
    ScenarioResult r;
    r.plot = PlotKind::log_time;
    r.x_label = "t (1/(alpha*J))";
    r.y_label = "M";
    std::vector<std::string> labels;
    const LatticeSpec l = cfg.lattice();
    const CurveSet set = relaxation_curves(cfg, l, opts, &labels);

    for (std::size_t i = 0; i < set.curves.size(); ++i) {
        const auto& curve = set.curves[i];
        Series se;
        se.label = labels[i];
        se.columns = {{"t", kUnitTime, curve.times}, {"m", kUnitSpin, curve.values}};
        try {
            se.columns.push_back({"M", "1", relative_magnetisation(curve, set.m_inf[i]).values});
            se.plot_y = 2;
        } catch (const DegenerateNormalization&) {
            r.notes.push_back(se.label + ": no relaxation (m(0) = m(inf)); M column omitted");
        }
        se.columns.push_back({"m_inf", kUnitSpin, std::vector<double>(curve.times.size(), set.m_inf[i])});
        r.series.push_back(std::move(se));
    }
    if (r.series.size() && r.series.front().plot_y == 1) r.y_label = "m (hbar)";

    if (opts.check_convergence) {
        // max over series, sampled t and t = inf of |dm| / |m(0) - m(inf)|, and of |dM|
        auto& cv = r.convergence;
        cv.checked = cv.applicable = true;
        const LatticeSpec fine = doubled(l);
        cv.refined_sites = sites_text(fine);
        const CurveSet ref = relaxation_curves(cfg, fine, opts, nullptr);
        for (std::size_t i = 0; i < set.curves.size(); ++i) {
            const auto& a = set.curves[i];
            const auto& b = ref.curves[i];
            const double span = std::fabs(b.initial_value - ref.m_inf[i]);
            const double scale = span > 1e-12 * cfg.spin ? span : cfg.spin;
            double worst = std::fabs(a.initial_value - b.initial_value) / scale;
            worst = std::max(worst, std::fabs(set.m_inf[i] - ref.m_inf[i]) / scale);
            for (std::size_t j = 0; j < a.values.size(); ++j)
                worst = std::max(worst, std::fabs(a.values[j] - b.values[j]) / scale);
            if (span > 1e-12 * cfg.spin) {
                const auto ra = relative_magnetisation(a, set.m_inf[i]);
                const auto rb = relative_magnetisation(b, ref.m_inf[i]);
                for (std::size_t j = 0; j < ra.values.size(); ++j)
                    worst = std::max(worst, std::fabs(ra.values[j] - rb.values[j]));
            }
            cv.max_change = std::max(cv.max_change, worst);
        }
        cv.passed = cv.max_change < cv.tolerance;
    }
    return r;
}

ScenarioResult equilibrium_vs_temperature(const ScenarioConfig& cfg, const RunOptions& opts) {
    ScenarioResult r;
    r.x_label = "T (J)";
    r.y_label = "m_inf (hbar)";
    const ModelParams p = cfg.model();
    auto sweep = [&](const LatticeSpec& l) {
        const BrillouinGrid grid = cfg.magnetisation_grid(l);
        std::vector<double> m;
        for (double t : cfg.temperatures)
            m.push_back(equilibrium_magnetisation(p, Temperature(t), grid, opts.exec));
        return m;
    };
    const LatticeSpec l = cfg.lattice();
    const auto m = sweep(l);
    Series se;
    se.label = "equilibrium";
    se.columns = {{"T", kUnitEnergy, cfg.temperatures}, {"m_inf", kUnitSpin, m}};
    r.series.push_back(std::move(se));

    if (opts.check_convergence) {
        // max |dm_inf| / S
        auto& cv = r.convergence;
        cv.checked = cv.applicable = true;
        const LatticeSpec fine = doubled(l);
        cv.refined_sites = sites_text(fine);
        const auto ref = sweep(fine);
        for (std::size_t i = 0; i < m.size(); ++i)
            cv.max_change = std::max(cv.max_change, std::fabs(m[i] - ref[i]) / cfg.spin);
        cv.passed = cv.max_change < cv.tolerance;
    }
    return r;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts) {
    ScenarioResult r;
    switch (cfg.scenario) {
    case Scenario::decay_rate_map:
        r = decay_rate_map(cfg, opts);
        break;
    case Scenario::decay_rate_diagonal:
        r = diagonal_rates(cfg, opts, {cfg.kind});
        break;
    case Scenario::structure_factor:
        r = structure_factor_scan(cfg, opts);
        break;
    case Scenario::magnetisation_relaxation:
        r = magnetisation_relaxation(cfg, opts);
        break;
    case Scenario::equilibrium_vs_temperature:
        r = equilibrium_vs_temperature(cfg, opts);
        break;
    case Scenario::ferro_antiferro_compare:
        r = diagonal_rates(cfg, opts, {MagnetKind::ferro, MagnetKind::antiferro});
        break;
    }
    r.scenario = cfg.scenario;
    if (opts.check_convergence && !r.convergence.checked) r.convergence.checked = true;
    return r;
}

}  // namespace magnonkin::cli
