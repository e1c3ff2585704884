#pragma once

// Spatial noise-correlation profiles f(|u|) and their structure factors F(k).
// Radial distances are in units of the lattice spacing; the unit-cell volume
// V_d = d_x d_y d_z enters the continuum transforms.

#include <array>
#include <filesystem>
#include <functional>
#include <istream>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "magnonkin/core_model.hpp"

namespace magnonkin {

enum class QuadratureRule { adaptive, fixed_simpson };

struct QuadratureConfig {
    double u_max = 20.0;
    int n_steps = 64;
    QuadratureRule rule = QuadratureRule::adaptive;
    double rel_tol = 1e-8;
    int max_refinements = 22;

    void validate() const;
};

// u_max = max(10 * decay_length, 20), other fields default.
QuadratureConfig default_quadrature(double decay_length);

using RadialProfile = std::function<double(double)>;

struct Uncorrelated {};

class NearestNeighbor {
public:
    explicit NearestNeighbor(double eta);
    double eta() const noexcept { return eta_; }

private:
    double eta_;
};

// f(u) = exp(-u^2 / xi^2)
class GaussianDecay {
public:
    explicit GaussianDecay(double xi);
    double xi() const noexcept { return xi_; }
    double operator()(double u) const noexcept;

private:
    double xi_;
};

// Arbitrary radial profile, transformed with the 3D Hankel integral. The
// profile must be finite at 0 and below 1e-12 in magnitude at u_max.
class CustomRadial {
public:
    CustomRadial(RadialProfile f, QuadratureConfig quad, std::string label = "custom");

    double operator()(double u) const { return (*profile_)(u); }
    const RadialProfile& profile() const noexcept { return *profile_; }
    const QuadratureConfig& quadrature() const noexcept { return quad_; }
    const std::string& label() const noexcept { return label_; }

private:
    std::shared_ptr<const RadialProfile> profile_;
    QuadratureConfig quad_;
    std::string label_;
};

using CorrelationModel = std::variant<Uncorrelated, NearestNeighbor, GaussianDecay, CustomRadial>;

// Short label such as "uncorrelated", "eta=0.2", "xi=10".
std::string describe(const CorrelationModel& m);

// Closed form for Uncorrelated / NearestNeighbor / GaussianDecay, Hankel
// quadrature for CustomRadial.
double structure_factor(const CorrelationModel& m, const WaveVector& k, const LatticeSpec& l);

// ln|F(k)|; analytic for the Gaussian so it stays finite where F underflows.
double log_abs_structure_factor(const CorrelationModel& m, const WaveVector& k,
                                const LatticeSpec& l);

// f at the lattice offset u = (n_x d_x, n_y d_y, n_z d_z).
double correlation_at_offset(const CorrelationModel& m, const std::array<int, 3>& n,
                             const LatticeSpec& l);

// Direct lattice sum over n_mu in -N_mu/2 .. N_mu/2-1 of f(u) exp(i k.u).
// Throws NumericalError when the imaginary residue exceeds 1e-10 |result|.
double discrete_lattice_ft(const CorrelationModel& m, const WaveVector& k, const LatticeSpec& l);

// (4 pi / k) int_0^inf f(u) u sin(k u) du with V_d = 1; for k < 1e-8 the
// limit 4 pi int f(u) u^2 du. Throws QuadratureNonConvergence when the
// adaptive rule runs out of refinements.
double hankel_transform_3d(const RadialProfile& f, double k_mag, const QuadratureConfig& q);

// Two-column (u, f) table, '#' comments, linear interpolation, zero beyond
// the last node.
class TabulatedProfile {
public:
    explicit TabulatedProfile(std::vector<std::pair<double, double>> nodes);

    static TabulatedProfile parse(std::istream& in);
    static TabulatedProfile load(const std::filesystem::path& path);

    double operator()(double u) const noexcept;
    double last_node() const noexcept { return nodes_.back().first; }

private:
    std::vector<std::pair<double, double>> nodes_;
};

}  // namespace magnonkin
