#include "magnonkin/magnetisation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "magnonkin/compensated_sum.hpp"
#include "magnonkin/errors.hpp"

namespace magnonkin {

namespace {

double reduction_prefactor(const BrillouinGrid& grid) {
    if (grid.mode == GridMode::sum) return 1.0 / static_cast<double>(grid.size());
    return 1.0 / grid.lattice.zone_volume();
}

void check_times(const std::vector<double>& times) {
    if (times.empty()) throw InvalidArgument("magnetisation_curve: empty time list");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0)) throw InvalidArgument("magnetisation_curve: times must be >= 0");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw InvalidArgument("magnetisation_curve: times must be strictly increasing");
    }
}

std::string describe_k(const WaveVector& k) {
    std::ostringstream os;
    os.precision(17);
    os << '(' << k[0] << ", " << k[1] << ", " << k[2] << ')';
    return os.str();
}

}  // namespace

std::string describe(const InitialCondition& init) {
    if (std::holds_alternative<Saturated>(init)) return "saturated";
    const auto& th = std::get<ThermalAtField>(init);
    std::ostringstream os;
    os << "thermal(field=" << th.field_energy << ",T=" << th.temperature.value() << ')';
    return os.str();
}

std::vector<double> log_time_grid(double t_min, double t_max, int points_per_decade) {
    if (!(t_min > 0.0) || !(t_max > t_min))
        throw InvalidArgument("log_time_grid: need 0 < t_min < t_max");
    if (points_per_decade < 1) throw InvalidArgument("log_time_grid: points_per_decade must be >= 1");
    const double decades = std::log10(t_max / t_min);
    const auto steps = static_cast<int>(std::ceil(decades * points_per_decade - 1e-9));
    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i < steps; ++i)
        t.push_back(t_min * std::pow(10.0, static_cast<double>(i) / points_per_decade));
    t.push_back(t_max);
    return t;
}

double initial_occupation(const InitialCondition& init, const ModelParams& p, const LatticeSpec& l,
                          const WaveVector& k) {
    if (std::holds_alternative<Saturated>(init)) return 0.0;
    const auto& th = std::get<ThermalAtField>(init);
    return bose_einstein(th.temperature, ferro_dispersion(k, p.with_field(th.field_energy), l));
}

double equilibrium_magnetisation(const ModelParams& p, Temperature temp, const BrillouinGrid& grid,
                                 const Execution& exec) {
    if (!grid.offset && p.field_energy() == 0.0 && temp.value() > 0.0)
        throw DivergentOccupation(
            "equilibrium_magnetisation: unshifted grid contains k = 0 with zero field");
    std::vector<double> n(grid.size());
    parallel_for(grid.size(), exec, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            n[i] = grid.weights[i] * bose_einstein(temp, ferro_dispersion(grid.points[i], p, grid.lattice));
    });
    return p.spin() - reduction_prefactor(grid) * compensated_sum(n);
}

double equilibrium_magnetisation(const DecayRateField& field, const ModelParams& p) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < field.rates.size(); ++i)
        acc.add(field.grid.weights[i] * field.rates[i].n_eq);
    return p.spin() - reduction_prefactor(field.grid) * acc.value();
}

RelaxationCurve magnetisation_curve(const DecayRateField& field, const ModelParams& p,
                                    const InitialCondition& init, const std::vector<double>& times,
                                    const Execution& exec) {
    if (p.kind() != MagnetKind::ferro)
        throw InvalidArgument("magnetisation_curve: only ferromagnets are supported");
    check_times(times);
    const BrillouinGrid& grid = field.grid;
    const std::size_t n = field.rates.size();

    std::vector<double> n0(n);
    parallel_for(n, exec, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            n0[i] = initial_occupation(init, p, grid.lattice, field.rates[i].k);
            const ModeRate& r = field.rates[i];
            if (!std::isfinite(n0[i]) || !std::isfinite(r.n_eq) || !std::isfinite(r.gamma) ||
                r.gamma < 0.0)
                throw NumericalError("magnetisation_curve: non-finite mode data at k = " +
                                     describe_k(r.k));
        }
    });

    const double pref = reduction_prefactor(grid);
    auto magnetisation_at = [&](double t) {
        CompensatedSum acc;
        for (std::size_t i = 0; i < n; ++i) {
            const ModeRate& r = field.rates[i];
            double occ = n0[i];
            if (r.gamma > 0.0) {
                const double x = r.gamma * t;
                occ = n0[i] * std::exp(-x) - r.n_eq * std::expm1(-x);
            }
            acc.add(grid.weights[i] * occ);
        }
        return p.spin() - pref * acc.value();
    };

    RelaxationCurve curve;
    curve.times = times;
    curve.values.resize(times.size());
    parallel_for(times.size(), exec, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) curve.values[i] = magnetisation_at(times[i]);
    });
    curve.initial_value = magnetisation_at(0.0);
    for (double v : curve.values)
        if (!std::isfinite(v)) throw NumericalError("magnetisation_curve: non-finite magnetisation");

    curve.metadata.spin = p.spin();
    curve.metadata.field_energy = p.field_energy();
    curve.metadata.initial = describe(init);
    curve.metadata.sites = grid.lattice.sites();
    curve.metadata.offset = grid.offset;
    curve.metadata.mode = grid.mode;
    curve.metadata.grid_points = grid.size();
    return curve;
}

RelaxationCurve magnetisation_curve(const ModelParams& p, const CorrelationModel& m,
                                    const SpectralDensity& sd, Temperature temp,
                                    const InitialCondition& init, const std::vector<double>& times,
                                    const BrillouinGrid& grid, const Execution& exec) {
    if (p.kind() != MagnetKind::ferro)
        throw InvalidArgument("magnetisation_curve: only ferromagnets are supported");
    check_times(times);
    const DecayRateField field = decay_rate_field(p, m, sd, grid, temp, exec);
    RelaxationCurve curve = magnetisation_curve(field, p, init, times, exec);
    curve.metadata.temperature = temp.value();
    curve.metadata.correlation = describe(m);
    return curve;
}

RelaxationCurve relative_magnetisation(const RelaxationCurve& curve, double m_inf) {
    const double span = curve.initial_value - m_inf;
    if (std::fabs(span) < 1e-12 * curve.metadata.spin)
        throw DegenerateNormalization(
            "relative_magnetisation: m(0) and m(inf) coincide, nothing relaxes");
    RelaxationCurve out = curve;
    for (double& v : out.values) v = (v - m_inf) / span;
    out.initial_value = 1.0;
    out.metadata.relative = true;
    return out;
}

}  // namespace magnonkin
