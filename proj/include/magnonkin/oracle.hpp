#pragma once

// Independent numerical references: exact diagonalisation of the real-space
// one-magnon hopping matrix, and direct integration of the single-mode
// thermal master equation in the Fock basis.

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "magnonkin/core_model.hpp"

namespace magnonkin::oracle {

inline constexpr std::size_t kMaxDenseSites = 4096;

// One-magnon block of the linear spin-wave Hamiltonian with periodic wrap,
// constant E0 dropped. Extents may be 1; such axes carry no hopping and no
// onsite exchange term. Ferromagnets only.
Eigen::MatrixXd hopping_matrix(const std::array<int, 3>& extents, const ModelParams& p);

// Sorted eigenvalues of hopping_matrix.
std::vector<double> hopping_matrix_spectrum(const std::array<int, 3>& extents, const ModelParams& p);
std::vector<double> hopping_matrix_spectrum(const LatticeSpec& l, const ModelParams& p);

struct FockTruncation {
    int n_max = 8;

    // Smallest n_max >= 8 whose thermal weight at mean occupation nbar is
    // below 1e-8 and whose discarded tail shifts <n> by less than
    // 1e-10 (nbar + 1).
    static FockTruncation for_occupation(double nbar);
};

struct LindbladTrajectory {
    std::vector<double> times;
    std::vector<double> occupations;
    double max_norm_error = 0.0;      // max |sum_n p_n - 1| over accepted steps
    double max_top_population = 0.0;  // max p_{n_max} over accepted steps
};

struct LindbladTolerances {
    double rel = 1e-9;
    double abs = 1e-14;
};

// Integrates the level populations p_n of one damped mode,
//   dp_n/dt = gamma (n_eq+1) [(n+1) p_{n+1} - n p_n] + gamma n_eq [n p_{n-1} - (n+1) p_n],
// from a thermal (geometric) state of mean n0 and returns <n>(t) at the
// requested (non-decreasing, >= 0) times. Throws TruncationLeak when p_{n_max}
// exceeds 1e-7.
LindbladTrajectory single_mode_lindblad(double gamma, double n_eq, double n0, FockTruncation trunc,
                                        const std::vector<double>& times,
                                        LindbladTolerances tol = {});

}  // namespace magnonkin::oracle
