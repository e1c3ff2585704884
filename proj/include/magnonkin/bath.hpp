#pragma once

namespace magnonkin {

// J(omega) = alpha omega^s omega_c^(s-1) exp(-omega/omega_c)
class SpectralDensity {
public:
    explicit SpectralDensity(double alpha = 1.0, double s = 1.0, double omega_c = 100.0);

    double alpha() const noexcept { return alpha_; }
    double exponent() const noexcept { return s_; }
    double cutoff() const noexcept { return omega_c_; }

private:
    double alpha_;
    double s_;
    double omega_c_;
};

// k_B T in units of |J|.
class Temperature {
public:
    explicit Temperature(double t = 0.0);
    double value() const noexcept { return t_; }

private:
    double t_;
};

// Throws InvalidArgument for omega < 0. Exactly 0 at omega = 0.
double spectral_density(const SpectralDensity& sd, double omega);

// ln J(omega); -inf at omega = 0 or alpha = 0.
double log_spectral_density(const SpectralDensity& sd, double omega);

// 1 / (exp(omega/T) - 1). Zero for T = 0 and for omega/T > 700. Throws
// DivergentOccupation at omega = 0 with T > 0.
double bose_einstein(Temperature temp, double omega);

}  // namespace magnonkin
