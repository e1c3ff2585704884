#include "magnonkin/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "magnonkin/errors.hpp"

namespace magnonkin {

namespace {

// D - Sigma and D + Sigma as sums of squares, exact at both zone ends.
std::pair<double, double> cosine_deficits(const WaveVector& k, const LatticeSpec& l) noexcept {
    const auto& d = l.spacing();
    double minus = 0.0;
    double plus = 0.0;
    for (int mu = 0; mu < kDimension; ++mu) {
        const double s = std::sin(0.5 * k[mu] * d[mu]);
        const double c = std::cos(0.5 * k[mu] * d[mu]);
        minus += 2.0 * s * s;
        plus += 2.0 * c * c;
    }
    return {minus, plus};
}

std::string describe_k(const WaveVector& k) {
    std::ostringstream os;
    os.precision(17);
    os << '(' << k[0] << ", " << k[1] << ", " << k[2] << ')';
    return os.str();
}

double rate_with_factor(const ModelParams& p, double f, const SpectralDensity& sd,
                        const WaveVector& k, const LatticeSpec& l) {
    if (p.kind() == MagnetKind::ferro)
        return 2.0 * p.spin() * f * f * spectral_density(sd, ferro_dispersion(k, p, l));

    const auto [minus, plus] = cosine_deficits(k, l);
    if (minus == 0.0) return 0.0;
    // J(omega) * Theta = alpha omega_c^(s-1) omega^(s-1) e^{-omega/omega_c} * (omega Theta)
    // with omega Theta = 2|J|S (D - Sigma).
    const double omega = antiferro_dispersion(k, p, l);
    const double s = sd.exponent();
    const double omega_theta = 2.0 * p.j_mag() * p.spin() * minus;
    const double rate = 2.0 * p.spin() * f * f * sd.alpha() * std::pow(sd.cutoff(), s - 1.0) *
                        std::pow(omega, s - 1.0) * std::exp(-omega / sd.cutoff()) * omega_theta;
    if (!std::isfinite(rate))
        throw NumericalError("antiferro_decay_rate: non-finite rate at k = " + describe_k(k));
    return rate;
}

}  // namespace

double magnon_decay_rate(const ModelParams& p, const CorrelationModel& m, const SpectralDensity& sd,
                         const WaveVector& k, const LatticeSpec& l) {
    if (p.kind() != MagnetKind::ferro)
        throw InvalidArgument("magnon_decay_rate called with an antiferromagnet");
    return rate_with_factor(p, structure_factor(m, k, l), sd, k, l);
}

double log_magnon_decay_rate(const ModelParams& p, const CorrelationModel& m,
                             const SpectralDensity& sd, const WaveVector& k, const LatticeSpec& l) {
    if (p.kind() != MagnetKind::ferro)
        throw InvalidArgument("log_magnon_decay_rate called with an antiferromagnet");
    return std::log(2.0 * p.spin()) + 2.0 * log_abs_structure_factor(m, k, l) +
           log_spectral_density(sd, ferro_dispersion(k, p, l));
}

double antiferro_vertex(const WaveVector& k, const LatticeSpec& l) noexcept {
    const auto [minus, plus] = cosine_deficits(k, l);
    return std::sqrt(minus / plus);
}

double antiferro_decay_rate(const ModelParams& p, const CorrelationModel& m,
                            const SpectralDensity& sd, const WaveVector& k, const LatticeSpec& l) {
    if (p.kind() != MagnetKind::antiferro)
        throw InvalidArgument("antiferro_decay_rate called with a ferromagnet");
    return rate_with_factor(p, structure_factor(m, k, l), sd, k, l);
}

double decay_rate(const ModelParams& p, const CorrelationModel& m, const SpectralDensity& sd,
                  const WaveVector& k, const LatticeSpec& l) {
    return rate_with_factor(p, structure_factor(m, k, l), sd, k, l);
}

double occupation_at(double t, double n0, double gamma, double n_eq) {
    if (!(t >= 0.0)) throw InvalidArgument("occupation_at: t must be >= 0");
    if (!(n0 >= 0.0)) throw InvalidArgument("occupation_at: n0 must be >= 0");
    if (!(gamma >= 0.0)) throw InvalidArgument("occupation_at: gamma must be >= 0");
    if (gamma == 0.0) return n0;
    const double x = gamma * t;
    return n0 * std::exp(-x) - n_eq * std::expm1(-x);
}

std::vector<double> structure_factors(const CorrelationModel& m, const std::vector<WaveVector>& ks,
                                      const LatticeSpec& l, const Execution& exec) {
    std::vector<double> out(ks.size());
    if (!std::holds_alternative<CustomRadial>(m)) {
        parallel_for(ks.size(), exec, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) out[i] = structure_factor(m, ks[i], l);
        });
        return out;
    }

    // Quadrature per distinct |k|^2; grids repeat |k| many times over.
    std::vector<double> k2(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i)
        k2[i] = ks[i][0] * ks[i][0] + ks[i][1] * ks[i][1] + ks[i][2] * ks[i][2];
    std::vector<double> unique = k2;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    std::vector<double> values(unique.size());
    parallel_for(unique.size(), exec, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            values[i] = structure_factor(m, {std::sqrt(unique[i]), 0.0, 0.0}, l);
    });
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const auto it = std::lower_bound(unique.begin(), unique.end(), k2[i]);
        out[i] = values[static_cast<std::size_t>(it - unique.begin())];
    }
    return out;
}

DecayRateField decay_rate_field(const ModelParams& p, const CorrelationModel& m,
                                const SpectralDensity& sd, const BrillouinGrid& grid, Temperature temp,
                                const Execution& exec) {
    if (!grid.offset && p.field_energy() == 0.0 && temp.value() > 0.0)
        throw DivergentOccupation(
            "decay_rate_field: unshifted grid contains k = 0 with zero field; "
            "use an offset grid or a field > 0");

    const std::vector<double> factors = structure_factors(m, grid.points, grid.lattice, exec);
    DecayRateField field{grid, std::vector<ModeRate>(grid.size())};
    parallel_for(grid.size(), exec, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const WaveVector& k = grid.points[i];
            ModeRate& r = field.rates[i];
            r.k = k;
            r.omega = dispersion(k, p, grid.lattice);
            r.gamma = rate_with_factor(p, factors[i], sd, k, grid.lattice);
            r.n_eq = bose_einstein(temp, r.omega);
            if (!std::isfinite(r.gamma) || !std::isfinite(r.n_eq))
                throw NumericalError("decay_rate_field: non-finite value at k = " + describe_k(k));
        }
    });
    return field;
}

}  // namespace magnonkin
