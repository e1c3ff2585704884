#include "magnonkin/bath.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "magnonkin/errors.hpp"

namespace magnonkin {

namespace {
constexpr double kUnderflowRatio = 700.0;
}

SpectralDensity::SpectralDensity(double alpha, double s, double omega_c)
    : alpha_(alpha), s_(s), omega_c_(omega_c) {
    if (!(alpha_ >= 0.0) || !std::isfinite(alpha_))
        throw InvalidArgument("bath: alpha must be >= 0");
    if (!(s_ > 0.0) || !std::isfinite(s_)) throw InvalidArgument("bath: exponent s must be > 0");
    if (!(omega_c_ > 0.0) || !std::isfinite(omega_c_))
        throw InvalidArgument("bath: cutoff omega_c must be > 0");
}

Temperature::Temperature(double t) : t_(t) {
    if (!(t_ >= 0.0) || !std::isfinite(t_)) throw InvalidArgument("temperature must be >= 0");
}

double spectral_density(const SpectralDensity& sd, double omega) {
    if (!(omega >= 0.0))
        throw InvalidArgument("spectral_density: negative frequency " + std::to_string(omega));
    if (omega == 0.0) return 0.0;
    return sd.alpha() * std::pow(omega, sd.exponent()) * std::pow(sd.cutoff(), sd.exponent() - 1.0) *
           std::exp(-omega / sd.cutoff());
}

double log_spectral_density(const SpectralDensity& sd, double omega) {
    if (!(omega >= 0.0))
        throw InvalidArgument("log_spectral_density: negative frequency " + std::to_string(omega));
    if (omega == 0.0 || sd.alpha() == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(sd.alpha()) + sd.exponent() * std::log(omega) +
           (sd.exponent() - 1.0) * std::log(sd.cutoff()) - omega / sd.cutoff();
}

double bose_einstein(Temperature temp, double omega) {
    if (!(omega >= 0.0))
        throw InvalidArgument("bose_einstein: negative frequency " + std::to_string(omega));
    const double t = temp.value();
    if (t == 0.0) return 0.0;
    if (omega == 0.0)
        throw DivergentOccupation("Bose-Einstein occupation diverges at omega = 0 for T = " +
                                  std::to_string(t) + "; use an offset grid or a field > 0");
    const double x = omega / t;
    if (x > kUnderflowRatio) return 0.0;
    return 1.0 / std::expm1(x);
}

}  // namespace magnonkin
