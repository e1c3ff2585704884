#include "magnonkin/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "magnonkin/errors.hpp"

namespace magnonkin {

namespace {

constexpr double kAfClamp = 1e-12;

double sin_half_sq(double x) noexcept {
    const double s = std::sin(0.5 * x);
    return s * s;
}

double cos_half_sq(double x) noexcept {
    const double c = std::cos(0.5 * x);
    return c * c;
}

}  // namespace

const char* to_string(MagnetKind kind) noexcept {
    return kind == MagnetKind::ferro ? "ferro" : "antiferro";
}

const char* to_string(GridMode mode) noexcept {
    return mode == GridMode::sum ? "sum" : "integral";
}

LatticeSpec::LatticeSpec(std::array<int, 3> sites, std::array<double, 3> spacing)
    : sites_(sites), spacing_(spacing) {
    for (int mu = 0; mu < kDimension; ++mu) {
        if (sites_[mu] < 2 || sites_[mu] % 2 != 0)
            throw InvalidArgument("lattice: site count on axis " + std::to_string(mu) +
                                  " must be even and >= 2, got " + std::to_string(sites_[mu]));
        if (!(spacing_[mu] > 0.0) || !std::isfinite(spacing_[mu]))
            throw InvalidArgument("lattice: spacing on axis " + std::to_string(mu) +
                                  " must be positive");
    }
}

std::size_t LatticeSpec::total_sites() const noexcept {
    return static_cast<std::size_t>(sites_[0]) * static_cast<std::size_t>(sites_[1]) *
           static_cast<std::size_t>(sites_[2]);
}

double LatticeSpec::zone_volume() const noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return two_pi * two_pi * two_pi / cell_volume();
}

ModelParams::ModelParams(MagnetKind kind, double spin, double field_energy, double j_mag)
    : kind_(kind), spin_(spin), field_energy_(field_energy), j_mag_(j_mag) {
    const double twice = 2.0 * spin_;
    if (!(spin_ >= 0.5) || std::fabs(twice - std::round(twice)) > 1e-12)
        throw InvalidArgument("model: spin must be a half-integer >= 1/2");
    if (!(field_energy_ >= 0.0) || !std::isfinite(field_energy_))
        throw InvalidArgument("model: field energy gamma*B must be >= 0");
    if (!(j_mag_ > 0.0) || !std::isfinite(j_mag_))
        throw InvalidArgument("model: |J| must be > 0");
}

double cosine_sum(const WaveVector& k, const LatticeSpec& l) noexcept {
    const auto& d = l.spacing();
    return std::cos(k[0] * d[0]) + std::cos(k[1] * d[1]) + std::cos(k[2] * d[2]);
}

double ferro_dispersion(const WaveVector& k, const ModelParams& p, const LatticeSpec& l) {
    if (p.kind() != MagnetKind::ferro)
        throw InvalidArgument("ferro_dispersion called with an antiferromagnet");
    const auto& d = l.spacing();
    // 1 - cos x = 2 sin^2(x/2), exact near the zone centre
    double deficit = 0.0;
    for (int mu = 0; mu < kDimension; ++mu) deficit += 2.0 * sin_half_sq(k[mu] * d[mu]);
    return p.field_energy() + 2.0 * p.j_mag() * p.spin() * deficit;
}

double antiferro_dispersion(const WaveVector& k, const ModelParams& p, const LatticeSpec& l) {
    if (p.kind() != MagnetKind::antiferro)
        throw InvalidArgument("antiferro_dispersion called with a ferromagnet");
    const auto& d = l.spacing();
    // D^2 - Sigma^2 = (D - Sigma)(D + Sigma), both factors as sums of squares
    double minus = 0.0;
    double plus = 0.0;
    for (int mu = 0; mu < kDimension; ++mu) {
        minus += 2.0 * sin_half_sq(k[mu] * d[mu]);
        plus += 2.0 * cos_half_sq(k[mu] * d[mu]);
    }
    double arg = minus * plus;
    if (arg < 0.0) {
        if (arg < -kAfClamp) throw NumericalError("antiferro_dispersion: negative radicand");
        arg = 0.0;
    }
    return 2.0 * p.j_mag() * p.spin() * std::sqrt(arg);
}

double dispersion(const WaveVector& k, const ModelParams& p, const LatticeSpec& l) {
    return p.kind() == MagnetKind::ferro ? ferro_dispersion(k, p, l)
                                         : antiferro_dispersion(k, p, l);
}

BrillouinGrid bz_grid(const LatticeSpec& l, bool offset, GridMode mode) {
    const auto& n = l.sites();
    const auto& d = l.spacing();
    std::array<std::vector<double>, 3> axis;
    double cell = 1.0;
    for (int mu = 0; mu < kDimension; ++mu) {
        const double step = 2.0 * std::numbers::pi / (n[mu] * d[mu]);
        cell *= step;
        axis[mu].reserve(static_cast<std::size_t>(n[mu]));
        for (int i = -n[mu] / 2; i < n[mu] / 2; ++i)
            axis[mu].push_back(step * (offset ? i + 0.5 : static_cast<double>(i)));
    }

    BrillouinGrid grid{l, offset, mode, {}, {}, 0};
    grid.points.reserve(l.total_sites());
    for (double kx : axis[0])
        for (double ky : axis[1])
            for (double kz : axis[2]) grid.points.push_back({kx, ky, kz});
    grid.weights.assign(grid.points.size(), mode == GridMode::sum ? 1.0 : cell);
    return grid;
}

BrillouinGrid refine_goldstone_region(const BrillouinGrid& grid, int block_cells, int levels) {
    if (!grid.offset || grid.mode != GridMode::integral)
        throw InvalidArgument("refine_goldstone_region needs an offset integral-mode grid");
    if (grid.refined_points != 0)
        throw InvalidArgument("refine_goldstone_region: grid is already refined");
    const auto& n = grid.lattice.sites();
    if (block_cells < 2 || block_cells % 2 != 0 ||
        block_cells > *std::min_element(n.begin(), n.end()))
        throw InvalidArgument("refine_goldstone_region: block_cells must be even and fit the grid");
    if (levels < 1) throw InvalidArgument("refine_goldstone_region: levels must be >= 1");

    const auto& d = grid.lattice.spacing();
    std::array<double, 3> half{};
    for (int mu = 0; mu < kDimension; ++mu)
        half[mu] = 0.5 * block_cells * 2.0 * std::numbers::pi / (n[mu] * d[mu]);

    auto inside = [](const WaveVector& k, const std::array<double, 3>& h) {
        return std::fabs(k[0]) < h[0] && std::fabs(k[1]) < h[1] && std::fabs(k[2]) < h[2];
    };

    BrillouinGrid out{grid.lattice, grid.offset, grid.mode, {}, {}, 0};
    out.points.reserve(grid.size());
    out.weights.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (inside(grid.points[i], half)) continue;
        out.points.push_back(grid.points[i]);
        out.weights.push_back(grid.weights[i]);
    }
    const std::size_t base = out.points.size();

    // Each level splits the current block into (2*block_cells)^3 cells.
    const int per_axis = 2 * block_cells;
    for (int level = 0; level < levels; ++level) {
        std::array<double, 3> step{};
        std::array<double, 3> inner{};
        for (int mu = 0; mu < kDimension; ++mu) {
            step[mu] = 2.0 * half[mu] / per_axis;
            inner[mu] = 0.5 * half[mu];
        }
        const double w = step[0] * step[1] * step[2];
        const bool last = level + 1 == levels;
        for (int ix = 0; ix < per_axis; ++ix)
            for (int iy = 0; iy < per_axis; ++iy)
                for (int iz = 0; iz < per_axis; ++iz) {
                    const WaveVector k{-half[0] + (ix + 0.5) * step[0],
                                       -half[1] + (iy + 0.5) * step[1],
                                       -half[2] + (iz + 0.5) * step[2]};
                    if (!last && inside(k, inner)) continue;
                    out.points.push_back(k);
                    out.weights.push_back(w);
                }
        half = inner;
    }
    out.refined_points = out.points.size() - base;
    return out;
}

std::vector<WaveVector> diagonal_path(const LatticeSpec& l, int n_points) {
    if (n_points < 2) throw InvalidArgument("diagonal_path: n_points must be >= 2");
    const auto& d = l.spacing();
    std::vector<WaveVector> path;
    path.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double t = i == n_points - 1 ? 1.0 : static_cast<double>(i) / (n_points - 1);
        path.push_back({t * std::numbers::pi / d[0], t * std::numbers::pi / d[1],
                        t * std::numbers::pi / d[2]});
    }
    return path;
}

}  // namespace magnonkin
