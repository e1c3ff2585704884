// Randomised invariants: symmetry and periodicity of the dispersions and
// structure factors, positivity and monotonicity of rates and curves.

#include <cmath>
#include <random>

#include "doctest.h"
#include "magnonkin/kinetics.hpp"
#include "magnonkin/magnetisation.hpp"

using namespace magnonkin;

namespace {

const double pi = M_PI;

struct Sampler {
    std::mt19937_64 rng{20240611};
    std::uniform_real_distribution<double> u{-pi, pi};
    WaveVector k() { return {u(rng), u(rng), u(rng)}; }
};

const std::vector<CorrelationModel>& models() {
    static const std::vector<CorrelationModel> m{
        Uncorrelated{}, NearestNeighbor(0.2), NearestNeighbor(-0.7), GaussianDecay(1.0), GaussianDecay(3.0)};
    return m;
}

}  // namespace

TEST_CASE("dispersion symmetries") {
    Sampler s;
    const LatticeSpec l = LatticeSpec::cubic(8);
    const ModelParams f(MagnetKind::ferro, 1.5, 0.4);
    const ModelParams af(MagnetKind::antiferro, 1.0);
    for (int i = 0; i < 500; ++i) {
        const WaveVector k = s.k();
        const WaveVector minus{-k[0], -k[1], -k[2]};
        const WaveVector shifted{k[0] + 2 * pi, k[1] - 2 * pi, k[2]};
        const WaveVector permuted{k[2], k[0], k[1]};
        const WaveVector nested{k[0] + pi, k[1] + pi, k[2] + pi};
        const double w = ferro_dispersion(k, f, l);
        CHECK(w >= f.field_energy());
        CHECK(ferro_dispersion(minus, f, l) == doctest::Approx(w).epsilon(1e-13));
        CHECK(ferro_dispersion(shifted, f, l) == doctest::Approx(w).epsilon(1e-12));
        CHECK(ferro_dispersion(permuted, f, l) == doctest::Approx(w).epsilon(1e-13));
        const double wa = antiferro_dispersion(k, af, l);
        CHECK(wa >= 0.0);
        CHECK(wa <= 2 * 1.0 * 3 + 1e-12);
        CHECK(antiferro_dispersion(nested, af, l) == doctest::Approx(wa).epsilon(1e-9));
    }
}

TEST_CASE("structure factor symmetries") {
    Sampler s;
    const LatticeSpec l = LatticeSpec::cubic(8);
    for (int i = 0; i < 200; ++i) {
        const WaveVector k = s.k();
        const WaveVector minus{-k[0], -k[1], -k[2]};
        const WaveVector permuted{k[1], k[2], k[0]};
        for (const auto& m : models()) {
            const double f = structure_factor(m, k, l);
            CHECK(structure_factor(m, minus, l) == doctest::Approx(f).epsilon(1e-13));
            CHECK(structure_factor(m, permuted, l) == doctest::Approx(f).epsilon(1e-13));
        }
        // positive-definite profiles have non-negative transforms
        CHECK(structure_factor(GaussianDecay(2.0), k, l) >= 0.0);
        CHECK(structure_factor(NearestNeighbor(0.2), k, l) > 0.0);
    }
}

TEST_CASE("rates are non-negative, finite and even in k") {
    Sampler s;
    const LatticeSpec l = LatticeSpec::cubic(8);
    const ModelParams f(MagnetKind::ferro, 0.5, 0.1);
    const ModelParams af(MagnetKind::antiferro);
    for (double exponent : {0.5, 1.0, 3.0}) {
        const SpectralDensity sd(0.7, exponent, 100.0);
        for (int i = 0; i < 100; ++i) {
            const WaveVector k = s.k();
            const WaveVector minus{-k[0], -k[1], -k[2]};
            for (const auto& m : models()) {
                const double g = magnon_decay_rate(f, m, sd, k, l);
                CHECK(std::isfinite(g));
                CHECK(g >= 0.0);
                CHECK(magnon_decay_rate(f, m, sd, minus, l) == doctest::Approx(g).epsilon(1e-12));
                const double ga = antiferro_decay_rate(af, m, sd, k, l);
                CHECK(std::isfinite(ga));
                CHECK(ga >= 0.0);
            }
        }
    }
}

TEST_CASE("occupation moves monotonically toward equilibrium") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double n0 = u(rng), neq = u(rng), gamma = u(rng) + 0.01;
        double prev = n0;
        for (double t = 0.01; t < 100; t *= 1.7) {
            const double n = occupation_at(t, n0, gamma, neq);
            CHECK(std::fabs(n - neq) <= std::fabs(prev - neq) + 1e-15);
            CHECK(std::min(n0, neq) - 1e-15 <= n);
            CHECK(n <= std::max(n0, neq) + 1e-15);
            prev = n;
        }
    }
}

TEST_CASE("saturated curves are non-increasing and start at S") {
    const auto grid = refine_goldstone_region(bz_grid(LatticeSpec::cubic(16), true, GridMode::integral));
    const auto times = log_time_grid(1e-3, 1e2, 5);
    for (const auto& m : models())
        for (double temp : {0.5, 2.0}) {
            const auto c = magnetisation_curve(ModelParams(), m, SpectralDensity(), Temperature(temp), Saturated{},
                                               times, grid);
            CHECK(c.initial_value == 0.5);
            for (std::size_t i = 1; i < c.values.size(); ++i) CHECK(c.values[i] <= c.values[i - 1]);
        }
}

TEST_CASE("equilibrium magnetisation decreases with temperature") {
    const auto grid = refine_goldstone_region(bz_grid(LatticeSpec::cubic(16), true, GridMode::integral));
    double prev = 0.5;
    for (double temp : {0.05, 0.1, 0.3, 0.7, 1.5, 3.0}) {
        const double m = equilibrium_magnetisation(ModelParams(), Temperature(temp), grid);
        CHECK(m < prev);
        prev = m;
    }
}
