#pragma once

// Per-mode magnon decay rates and the exact single-exponential relaxation of
// the mode occupation <a_k^dag a_k>(t). Rates are in units of alpha|J|.

#include <vector>

#include "magnonkin/bath.hpp"
#include "magnonkin/core_model.hpp"
#include "magnonkin/correlation.hpp"
#include "magnonkin/parallel.hpp"

namespace magnonkin {

struct ModeRate {
    WaveVector k{};
    double gamma = 0.0;
    double n_eq = 0.0;
    double omega = 0.0;
};

struct DecayRateField {
    BrillouinGrid grid;
    std::vector<ModeRate> rates;  // same order as grid.points
};

// gamma_k = 2S F(k)^2 J(omega(k)) for a ferromagnet.
double magnon_decay_rate(const ModelParams& p, const CorrelationModel& m, const SpectralDensity& sd,
                         const WaveVector& k, const LatticeSpec& l);

// ln gamma_k; finite where the Gaussian structure factor underflows.
double log_magnon_decay_rate(const ModelParams& p, const CorrelationModel& m,
                             const SpectralDensity& sd, const WaveVector& k, const LatticeSpec& l);

// sqrt((D - Sigma)/(D + Sigma)), Sigma = sum_mu cos k_mu d_mu. Infinite at
// the zone corner.
double antiferro_vertex(const WaveVector& k, const LatticeSpec& l) noexcept;

// 2S F(k)^2 J(omega_AF(k)) * antiferro_vertex(k). Finite at the zone corner
// for s >= 1 (the 0 * inf product is resolved analytically).
double antiferro_decay_rate(const ModelParams& p, const CorrelationModel& m,
                            const SpectralDensity& sd, const WaveVector& k, const LatticeSpec& l);

// Dispatches on p.kind().
double decay_rate(const ModelParams& p, const CorrelationModel& m, const SpectralDensity& sd,
                  const WaveVector& k, const LatticeSpec& l);

// n0 e^{-gamma t} + n_eq (1 - e^{-gamma t}); returns n0 for gamma = 0.
// t may be +infinity.
double occupation_at(double t, double n0, double gamma, double n_eq);

// F(k) at each point. CustomRadial transforms are evaluated once per
// distinct |k|.
std::vector<double> structure_factors(const CorrelationModel& m, const std::vector<WaveVector>& ks,
                                      const LatticeSpec& l, const Execution& exec = {});

// Rates, equilibrium occupations and energies over a grid. Unshifted grids
// with zero field at T > 0 throw DivergentOccupation.
DecayRateField decay_rate_field(const ModelParams& p, const CorrelationModel& m,
                                const SpectralDensity& sd, const BrillouinGrid& grid, Temperature temp,
                                const Execution& exec = {});

}  // namespace magnonkin
