#include "magnonkin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

#include "magnonkin/errors.hpp"

namespace magnonkin::oracle {

namespace {

constexpr double kLeakThreshold = 1e-7;
constexpr double kThermalTail = 1e-8;
constexpr double kMeanTail = 1e-10;

using State = std::vector<double>;

}  // namespace

Eigen::MatrixXd hopping_matrix(const std::array<int, 3>& extents, const ModelParams& p) {
    if (p.kind() != MagnetKind::ferro)
        throw InvalidArgument("hopping_matrix: ferromagnets only");
    for (int e : extents)
        if (e < 1) throw InvalidArgument("hopping_matrix: extents must be >= 1");
    const std::size_t total = static_cast<std::size_t>(extents[0]) * extents[1] * extents[2];
    if (total > kMaxDenseSites)
        throw SizeBudgetExceeded("hopping_matrix: " + std::to_string(total) +
                                 " sites exceed the dense budget of " + std::to_string(kMaxDenseSites));

    const double js = p.j_mag() * p.spin();
    int active_axes = 0;
    for (int e : extents) active_axes += e > 1 ? 1 : 0;

    auto index = [&](int x, int y, int z) {
        return static_cast<Eigen::Index>((x * extents[1] + y) * extents[2] + z);
    };

    const auto n = static_cast<Eigen::Index>(total);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int x = 0; x < extents[0]; ++x)
        for (int y = 0; y < extents[1]; ++y)
            for (int z = 0; z < extents[2]; ++z) {
                const Eigen::Index i = index(x, y, z);
                h(i, i) = p.field_energy() + 2.0 * js * active_axes;
                const std::array<Eigen::Index, 3> forward{
                    index((x + 1) % extents[0], y, z),
                    index(x, (y + 1) % extents[1], z),
                    index(x, y, (z + 1) % extents[2]),
                };
                // One bond per site and axis; on a 2-site axis both bonds
                // join the same pair and accumulate.
                for (int mu = 0; mu < kDimension; ++mu) {
                    if (extents[mu] < 2) continue;
                    h(i, forward[mu]) -= js;
                    h(forward[mu], i) -= js;
                }
            }
    return h;
}

std::vector<double> hopping_matrix_spectrum(const std::array<int, 3>& extents, const ModelParams& p) {
    const Eigen::MatrixXd h = hopping_matrix(extents, p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("hopping_matrix_spectrum: eigen-solver failed");
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<double> hopping_matrix_spectrum(const LatticeSpec& l, const ModelParams& p) {
    return hopping_matrix_spectrum(l.sites(), p);
}

FockTruncation FockTruncation::for_occupation(double nbar) {
    if (!(nbar >= 0.0)) throw InvalidArgument("FockTruncation: occupation must be >= 0");
    FockTruncation t;
    if (nbar == 0.0) return t;
    // p_n = (1 - r) r^n with r = nbar / (1 + nbar). Besides the weight of the
    // top level, the truncated tail's share of <n> is kept below 1e-10 (nbar + 1).
    const double r = nbar / (1.0 + nbar);
    for (;; ++t.n_max) {
        const double top = (1.0 - r) * std::pow(r, t.n_max);
        const double tail_mean = std::pow(r, t.n_max + 1) * (t.n_max + 1 + nbar);
        if (top < kThermalTail && tail_mean < kMeanTail * (nbar + 1.0)) return t;
    }
}

LindbladTrajectory single_mode_lindblad(double gamma, double n_eq, double n0, FockTruncation trunc,
                                        const std::vector<double>& times, LindbladTolerances tol) {
    if (!(gamma >= 0.0) || !(n_eq >= 0.0) || !(n0 >= 0.0))
        throw InvalidArgument("single_mode_lindblad: gamma, n_eq and n0 must be >= 0");
    if (trunc.n_max < 8) throw InvalidArgument("single_mode_lindblad: n_max must be >= 8");
    for (std::size_t i = 0; i < times.size(); ++i)
        if (!(times[i] >= 0.0) || (i > 0 && times[i] < times[i - 1]))
            throw InvalidArgument("single_mode_lindblad: times must be non-decreasing and >= 0");

    const int top = trunc.n_max;
    const auto levels = static_cast<std::size_t>(top) + 1;

    State p(levels, 0.0);
    if (n0 == 0.0) {
        p[0] = 1.0;
    } else {
        const double r = n0 / (1.0 + n0);
        double norm = 0.0;
        for (std::size_t n = 0; n < levels; ++n) {
            p[n] = (1.0 - r) * std::pow(r, static_cast<double>(n));
            norm += p[n];
        }
        for (double& x : p) x /= norm;
    }

    const double down = gamma * (n_eq + 1.0);
    const double up = gamma * n_eq;
    auto rhs = [&](const State& x, State& dxdt, double) {
        for (std::size_t n = 0; n < levels; ++n) {
            const double dn = static_cast<double>(n);
            double v = -down * dn * x[n];
            if (n + 1 < levels) v += down * (dn + 1.0) * x[n + 1] - up * (dn + 1.0) * x[n];
            if (n > 0) v += up * dn * x[n - 1];
            dxdt[n] = v;
        }
    };

    LindbladTrajectory out;
    out.times = times;
    out.occupations.reserve(times.size());
    auto observe = [&](const State& x, double) {
        double norm = 0.0;
        for (double v : x) norm += v;
        out.max_norm_error = std::max(out.max_norm_error, std::fabs(norm - 1.0));
        out.max_top_population = std::max(out.max_top_population, x[levels - 1]);
        if (x[levels - 1] > kLeakThreshold)
            throw TruncationLeak("single_mode_lindblad: top level population " +
                                 std::to_string(x[levels - 1]) + " exceeds 1e-7 at n_max = " +
                                 std::to_string(top));
    };
    auto mean = [&](const State& x) {
        double m = 0.0;
        for (std::size_t n = 1; n < levels; ++n) m += static_cast<double>(n) * x[n];
        return m;
    };

    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled(tol.abs, tol.rel, ode::runge_kutta_dopri5<State>());
    observe(p, 0.0);
    double t = 0.0;
    for (double target : times) {
        if (target > t) {
            const double dt0 = std::min(target - t, gamma > 0.0 ? 1e-3 / gamma : target - t);
            ode::integrate_adaptive(stepper, rhs, p, t, target, dt0, observe);
            t = target;
        }
        out.occupations.push_back(mean(p));
    }
    return out;
}

}  // namespace magnonkin::oracle
