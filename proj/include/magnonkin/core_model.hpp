#pragma once

// Cubic lattice geometry, magnetic model constants, Brillouin-zone grids and
// the linear spin-wave dispersion relations.
//
// Units throughout: hbar = k_B = 1, energies in |J|, lengths in the reference
// lattice spacing d, wave vectors in 1/d.

#include <array>
#include <cstddef>
#include <vector>

namespace magnonkin {

inline constexpr int kDimension = 3;

using WaveVector = std::array<double, 3>;

enum class MagnetKind { ferro, antiferro };

const char* to_string(MagnetKind kind) noexcept;

// Sites and spacings per axis. Site counts must be even and >= 2 so that the
// index range -N/2 .. N/2-1 is centred on zero.
class LatticeSpec {
public:
    explicit LatticeSpec(std::array<int, 3> sites, std::array<double, 3> spacing = {1.0, 1.0, 1.0});

    static LatticeSpec cubic(int n, double d = 1.0) { return LatticeSpec({n, n, n}, {d, d, d}); }

    const std::array<int, 3>& sites() const noexcept { return sites_; }
    const std::array<double, 3>& spacing() const noexcept { return spacing_; }
    std::size_t total_sites() const noexcept;
    double cell_volume() const noexcept { return spacing_[0] * spacing_[1] * spacing_[2]; }
    // (2 pi)^3 / (d_x d_y d_z)
    double zone_volume() const noexcept;

    bool operator==(const LatticeSpec&) const = default;

private:
    std::array<int, 3> sites_;
    std::array<double, 3> spacing_;
};

// Exchange magnitude |J| is stored together with the magnet kind instead of a
// signed J. field_energy is the product gamma*B.
class ModelParams {
public:
    explicit ModelParams(MagnetKind kind = MagnetKind::ferro, double spin = 0.5,
                         double field_energy = 0.0, double j_mag = 1.0);

    MagnetKind kind() const noexcept { return kind_; }
    double spin() const noexcept { return spin_; }
    double field_energy() const noexcept { return field_energy_; }
    double j_mag() const noexcept { return j_mag_; }

    ModelParams with_field(double field_energy) const {
        return ModelParams(kind_, spin_, field_energy, j_mag_);
    }
    ModelParams with_kind(MagnetKind kind) const {
        return ModelParams(kind, spin_, field_energy_, j_mag_);
    }

private:
    MagnetKind kind_;
    double spin_;
    double field_energy_;
    double j_mag_;
};

enum class GridMode { sum, integral };

const char* to_string(GridMode mode) noexcept;

struct BrillouinGrid {
    LatticeSpec lattice;
    bool offset = false;
    GridMode mode = GridMode::sum;
    std::vector<WaveVector> points;
    std::vector<double> weights;
    // Number of trailing points added by refine_goldstone_region.
    std::size_t refined_points = 0;

    std::size_t size() const noexcept { return points.size(); }
};

// sum_mu cos(k_mu d_mu)
double cosine_sum(const WaveVector& k, const LatticeSpec& l) noexcept;

// gamma*B + 2|J|S sum_mu (1 - cos k_mu d_mu). Requires a ferromagnet.
double ferro_dispersion(const WaveVector& k, const ModelParams& p, const LatticeSpec& l);

// 2|J|S sqrt(D^2 - (sum_mu cos k_mu d_mu)^2). Requires an antiferromagnet.
double antiferro_dispersion(const WaveVector& k, const ModelParams& p, const LatticeSpec& l);

// Dispatches on p.kind().
double dispersion(const WaveVector& k, const ModelParams& p, const LatticeSpec& l);

// Points k_mu = 2 pi n / (N_mu d_mu), n = -N_mu/2 .. N_mu/2-1 (n + 1/2 when
// offset), lexicographic in (n_x, n_y, n_z) with n_z fastest. Weights are 1
// in sum mode and prod_mu 2 pi/(N_mu d_mu) in integral mode.
BrillouinGrid bz_grid(const LatticeSpec& l, bool offset, GridMode mode);

// Graded midpoint refinement around the k = 0 pole of an offset integral
// grid. The central block of block_cells^3 cells is removed and replaced by
// cells half as wide, keeping only those outside the next, twice smaller
// block; this repeats `levels` times and the last level keeps its whole block.
// Weight sum is unchanged. Refined points are appended after the base grid.
BrillouinGrid refine_goldstone_region(const BrillouinGrid& grid, int block_cells = 8,
                                      int levels = 20);

// Uniformly spaced k_x = k_y = k_z from 0 to pi/d_mu inclusive.
std::vector<WaveVector> diagonal_path(const LatticeSpec& l, int n_points);

}  // namespace magnonkin
