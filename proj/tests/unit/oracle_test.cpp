#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "magnonkin/errors.hpp"
#include "magnonkin/kinetics.hpp"
#include "magnonkin/oracle.hpp"

using namespace magnonkin;
using namespace magnonkin::oracle;

TEST_CASE("hopping matrix structure") {
    const ModelParams p(MagnetKind::ferro, 0.5, 0.3);
    const auto h = hopping_matrix({4, 4, 4}, p);
    CHECK(h.rows() == 64);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (Eigen::Index i = 0; i < h.rows(); ++i) CHECK(h.row(i).sum() == doctest::Approx(0.3).epsilon(1e-14));
    // a two-site axis doubles the bond between the pair
    const auto h2 = hopping_matrix({2, 1, 1}, p);
    CHECK(h2(0, 1) == -1.0);
    CHECK(h2(0, 0) == doctest::Approx(1.3));
}

TEST_CASE("hopping spectrum on a 2^3 lattice") {
    const auto ev = hopping_matrix_spectrum(LatticeSpec::cubic(2), ModelParams());
    REQUIRE(ev.size() == 8);
    // omega = 2 * (number of pi components)
    const std::vector<double> expected{0, 2, 2, 2, 4, 4, 4, 6};
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::fabs(ev[i] - expected[i]) < 1e-12);
}

TEST_CASE("degenerate axes carry no hopping") {
    const auto ev = hopping_matrix_spectrum(std::array<int, 3>{4, 1, 1}, ModelParams());
    REQUIRE(ev.size() == 4);
    // 1D ring: 1 - cos(2 pi n / 4) for S = 1/2
    const std::vector<double> expected{0, 1, 1, 2};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(ev[i] - expected[i]) < 1e-12);
}

TEST_CASE("size budget") {
    CHECK_THROWS_AS(hopping_matrix_spectrum(std::array<int, 3>{18, 16, 16}, ModelParams()), SizeBudgetExceeded);
    CHECK_THROWS_AS(hopping_matrix({4, 4, 4}, ModelParams(MagnetKind::antiferro)), InvalidArgument);
}

TEST_CASE("fock truncation") {
    CHECK(FockTruncation::for_occupation(0.0).n_max == 8);
    for (double nbar : {0.1, 1.0, 2.0, 5.0}) {
        const int n = FockTruncation::for_occupation(nbar).n_max;
        const double r = nbar / (1 + nbar);
        CHECK(std::pow(r, n) / (1 + nbar) < 1e-8);
        CHECK(std::pow(r, n + 1) * (n + 1 + nbar) < 1e-10 * (nbar + 1));
        CHECK(n >= 8);
    }
}

TEST_CASE("single-mode master equation") {
    const std::vector<double> times{0.0, 0.5, 1.0, 2.0};
    SUBCASE("vacuum stays empty at zero temperature") {
        const auto tr = single_mode_lindblad(1.0, 0.0, 0.0, FockTruncation{}, times);
        for (double n : tr.occupations) CHECK(n == 0.0);
    }
    SUBCASE("heating from vacuum") {
        const auto tr = single_mode_lindblad(1.0, 1.0, 0.0, FockTruncation::for_occupation(1.0), times);
        CHECK(std::fabs(tr.occupations[2] - (1.0 - std::exp(-1.0))) < 1e-6);
        CHECK(tr.max_norm_error < 1e-9);
    }
    SUBCASE("detailed-balance fixed point") {
        const auto tr = single_mode_lindblad(1.0, 2.0, 2.0, FockTruncation::for_occupation(2.0), times);
        for (double n : tr.occupations) {
            CHECK(std::fabs(n - tr.occupations.front()) < 1e-7);
            CHECK(std::fabs(n - 2.0) < 1e-9);
        }
    }
    SUBCASE("leak detection") {
        CHECK_THROWS_AS(single_mode_lindblad(1.0, 5.0, 0.0, FockTruncation{8}, {0.0, 10.0}), TruncationLeak);
    }
    SUBCASE("cooling matches the closed form") {
        const auto tr = single_mode_lindblad(0.3, 0.1, 3.0, FockTruncation::for_occupation(3.0), times);
        for (std::size_t i = 0; i < times.size(); ++i)
            CHECK(std::fabs(tr.occupations[i] / occupation_at(times[i], 3.0, 0.3, 0.1) - 1.0) < 1e-6);
    }
    CHECK_THROWS_AS(single_mode_lindblad(1.0, 1.0, 0.0, FockTruncation{4}, times), InvalidArgument);
    CHECK_THROWS_AS(single_mode_lindblad(1.0, 1.0, 0.0, FockTruncation{}, {1.0, 0.5}), InvalidArgument);
}
