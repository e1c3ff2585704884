#include <cmath>
#include <sstream>

#include "doctest.h"
#include "magnonkin/correlation.hpp"
#include "magnonkin/errors.hpp"

using namespace magnonkin;

namespace {
const double pi = M_PI;
const double pi32 = std::pow(M_PI, 1.5);
const LatticeSpec unit = LatticeSpec::cubic(64);

CustomRadial gaussian_profile(double xi) {
    return CustomRadial([xi](double u) { return std::exp(-u * u / (xi * xi)); }, default_quadrature(xi));
}
}  // namespace

TEST_CASE("model construction") {
    CHECK_THROWS_WITH_AS(NearestNeighbor(1.5), "NearestNeighbor requires |eta| <= 1", InvalidArgument);
    CHECK_NOTHROW(NearestNeighbor(-1.0));
    CHECK_THROWS_AS(GaussianDecay(0.0), InvalidArgument);
    CHECK_THROWS_AS(CustomRadial([](double) { return 1.0; }, QuadratureConfig{}), InvalidArgument);
    CHECK_THROWS_AS(CustomRadial([](double u) { return u == 0 ? INFINITY : 0.0; }, QuadratureConfig{}),
                    InvalidArgument);
    QuadratureConfig odd;
    odd.n_steps = 33;
    CHECK_THROWS_AS(odd.validate(), InvalidArgument);
}

TEST_CASE("describe") {
    CHECK(describe(Uncorrelated{}) == "uncorrelated");
    CHECK(describe(NearestNeighbor(0.2)) == "eta=0.2");
    CHECK(describe(GaussianDecay(10)) == "xi=10");
}

TEST_CASE("closed-form structure factors") {
    CHECK(structure_factor(Uncorrelated{}, {1.0, 2.0, 0.3}, unit) == 1.0);
    CHECK(structure_factor(NearestNeighbor(0.2), {0, 0, 0}, unit) == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(structure_factor(NearestNeighbor(0.2), {pi, pi, pi}, unit) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(structure_factor(GaussianDecay(10), {0, 0, 0}, unit) ==
          doctest::Approx(5568.3279968317078).epsilon(1e-14));
    CHECK(structure_factor(GaussianDecay(10), {0.05, 0, 0}, unit) ==
          doctest::Approx(5230.9600582537009).epsilon(1e-14));
    // lattice spacing rescales the per-cell normalisation
    const LatticeSpec coarse = LatticeSpec::cubic(8, 2.0);
    CHECK(structure_factor(GaussianDecay(2), {0, 0, 0}, coarse) == doctest::Approx(pi32).epsilon(1e-14));
}

TEST_CASE("log structure factor stays finite where the value underflows") {
    const WaveVector corner{pi, pi, pi};
    const double log_f = log_abs_structure_factor(GaussianDecay(10), corner, unit);
    CHECK(log_f == doctest::Approx(std::log(1000 * pi32) - 3 * pi * pi * 100 / 4).epsilon(1e-13));
    CHECK(structure_factor(GaussianDecay(10), corner, unit) < 1e-300);
    CHECK(log_abs_structure_factor(NearestNeighbor(0.2), {0, 0, 0}, unit) ==
          doctest::Approx(std::log(1.6)).epsilon(1e-15));
}

TEST_CASE("hankel transform") {
    const RadialProfile g = [](double u) { return std::exp(-u * u); };
    const auto q = default_quadrature(1.0);
    CHECK(hankel_transform_3d(g, 0.0, q) == doctest::Approx(pi32).epsilon(1e-9));
    CHECK(hankel_transform_3d(g, 2.0, q) == doctest::Approx(pi32 * std::exp(-1.0)).epsilon(1e-9));
    CHECK(hankel_transform_3d([](double) { return 0.0; }, 1.3, q) == 0.0);
    CHECK_THROWS_AS(hankel_transform_3d(g, -1.0, q), InvalidArgument);

    QuadratureConfig fixed = q;
    fixed.rule = QuadratureRule::fixed_simpson;
    fixed.n_steps = 2048;
    CHECK(hankel_transform_3d(g, 2.0, fixed) == doctest::Approx(pi32 * std::exp(-1.0)).epsilon(1e-8));

    QuadratureConfig starved = q;
    starved.max_refinements = 1;
    starved.n_steps = 16;
    CHECK_THROWS_AS(hankel_transform_3d([](double u) { return std::exp(-u * u) * std::cos(40 * u); }, 0.5,
                                        starved),
                    QuadratureNonConvergence);
}

TEST_CASE("custom radial reproduces the gaussian closed form") {
    for (double xi : {1.0, 3.0}) {
        const auto custom = gaussian_profile(xi);
        for (double k : {0.0, 0.1, 0.7, 1.5}) {
            const WaveVector kv{k, 0, 0};
            CHECK(structure_factor(custom, kv, unit) ==
                  doctest::Approx(structure_factor(GaussianDecay(xi), kv, unit)).epsilon(1e-7));
        }
    }
}

TEST_CASE("discrete lattice transform") {
    const LatticeSpec l = LatticeSpec::cubic(64);
    SUBCASE("nearest neighbour matches 1 + eta sum cos") {
        for (const WaveVector& k : {WaveVector{0.3, -1.1, 2.0}, WaveVector{pi, 0, pi / 3}}) {
            const double closed = structure_factor(NearestNeighbor(0.2), k, l);
            CHECK(std::fabs(discrete_lattice_ft(NearestNeighbor(0.2), k, l) - closed) < 1e-12);
        }
    }
    SUBCASE("uncorrelated is a Kronecker delta") {
        CHECK(discrete_lattice_ft(Uncorrelated{}, {0.4, 0.1, 2.2}, l) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("gaussian lattice sums, reference from a direct numpy triple sum") {
        CHECK(discrete_lattice_ft(GaussianDecay(2), {0, 0, 0}, l) ==
              doctest::Approx(44.54662397465365).epsilon(1e-11));
        CHECK(discrete_lattice_ft(GaussianDecay(2), {0.3, 0, 0}, l) ==
              doctest::Approx(40.71254884898694).epsilon(1e-11));
        CHECK(discrete_lattice_ft(GaussianDecay(2), {0.5, 0.5, 0.5}, l) ==
              doctest::Approx(21.04233520315763).epsilon(1e-11));
    }
    SUBCASE("correlation offsets") {
        CHECK(correlation_at_offset(NearestNeighbor(0.3), {0, 0, 0}, l) == 1.0);
        CHECK(correlation_at_offset(NearestNeighbor(0.3), {0, -1, 0}, l) == 0.15);
        CHECK(correlation_at_offset(NearestNeighbor(0.3), {1, 1, 0}, l) == 0.0);
        CHECK(correlation_at_offset(GaussianDecay(2), {1, 1, 0}, l) == doctest::Approx(std::exp(-0.5)));
    }
}

TEST_CASE("tabulated profile") {
    std::istringstream in("# u f\n0 1\n1 0.5\n\n2 0   # tail\n");
    const auto t = TabulatedProfile::parse(in);
    CHECK(t(0.0) == 1.0);
    CHECK(t(0.5) == doctest::Approx(0.75));
    CHECK(t(1.5) == doctest::Approx(0.25));
    CHECK(t(3.0) == 0.0);
    CHECK(t.last_node() == 2.0);

    std::istringstream unordered("0 1\n2 0\n1 0.5\n");
    CHECK_THROWS_AS(TabulatedProfile::parse(unordered), InvalidArgument);
    std::istringstream offset_start("0.5 1\n2 0\n");
    CHECK_THROWS_AS(TabulatedProfile::parse(offset_start), InvalidArgument);
    std::istringstream garbage("0 1\nx y\n");
    CHECK_THROWS_AS(TabulatedProfile::parse(garbage), InvalidArgument);
    CHECK_THROWS_AS(TabulatedProfile::load("/nonexistent/profile.txt"), IoError);
}
