#pragma once

// Macroscopic magnetisation m_z(t) = S - <n>(t), reduced over the Brillouin
// zone from the exact per-mode relaxation. Values are in units of the spin
// (0.5 = saturated for S = 1/2); times in 1/(alpha|J|).

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "magnonkin/bath.hpp"
#include "magnonkin/core_model.hpp"
#include "magnonkin/correlation.hpp"
#include "magnonkin/kinetics.hpp"
#include "magnonkin/parallel.hpp"

namespace magnonkin {

// Fully magnetised start: no magnons in any mode.
struct Saturated {};

// Thermal equilibrium at a different field gamma*B0 and temperature T0.
struct ThermalAtField {
    double field_energy = 0.0;
    Temperature temperature;
};

using InitialCondition = std::variant<Saturated, ThermalAtField>;

std::string describe(const InitialCondition& init);

struct CurveMetadata {
    double spin = 0.5;
    double field_energy = 0.0;
    double temperature = 0.0;
    std::string correlation;
    std::string initial;
    std::array<int, 3> sites{};
    bool offset = true;
    GridMode mode = GridMode::integral;
    std::size_t grid_points = 0;
    bool relative = false;
};

struct RelaxationCurve {
    std::vector<double> times;
    std::vector<double> values;
    double initial_value = 0.0;  // m at t = 0
    CurveMetadata metadata;
};

// Logarithmic grid from t_min to t_max (both included), points_per_decade
// samples per factor of ten.
std::vector<double> log_time_grid(double t_min, double t_max, int points_per_decade);

double initial_occupation(const InitialCondition& init, const ModelParams& p, const LatticeSpec& l,
                          const WaveVector& k);

// S - (1/N) sum_k n(omega_k) in sum mode, S - V_d/(2pi)^3 sum_k w_k n(omega_k)
// in integral mode.
double equilibrium_magnetisation(const ModelParams& p, Temperature temp, const BrillouinGrid& grid,
                                 const Execution& exec = {});
double equilibrium_magnetisation(const DecayRateField& field, const ModelParams& p);

RelaxationCurve magnetisation_curve(const ModelParams& p, const CorrelationModel& m,
                                    const SpectralDensity& sd, Temperature temp,
                                    const InitialCondition& init, const std::vector<double>& times,
                                    const BrillouinGrid& grid, const Execution& exec = {});

// Same reduction from a precomputed rate field; metadata carries only the
// grid-derived fields plus spin, field and initial condition.
RelaxationCurve magnetisation_curve(const DecayRateField& field, const ModelParams& p,
                                    const InitialCondition& init, const std::vector<double>& times,
                                    const Execution& exec = {});

// (m(t) - m_inf) / (m(0) - m_inf). Throws DegenerateNormalization when
// |m(0) - m_inf| < 1e-12 S.
RelaxationCurve relative_magnetisation(const RelaxationCurve& curve, double m_inf);

}  // namespace magnonkin
