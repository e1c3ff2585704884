#include "magnonkin/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "magnonkin/compensated_sum.hpp"
#include "magnonkin/errors.hpp"

namespace magnonkin {

namespace {

constexpr double kSmallK = 1e-8;
constexpr double kImagTol = 1e-10;
// Successive estimates closer than this fraction of int |g| are at roundoff
// level; relative agreement is unreachable when F itself cancels to ~0.
constexpr double kNoiseFloor = 1e-14;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_number(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

double norm_sq(const WaveVector& k) noexcept { return k[0] * k[0] + k[1] * k[1] + k[2] * k[2]; }

struct TrapezoidState {
    double sum = 0.0;      // trapezoid estimate of int g
    double abs_sum = 0.0;  // trapezoid estimate of int |g|
};

// Progressive trapezoid on [0, b]: refine() halves the step reusing all
// previous evaluations.
class Trapezoid {
public:
    Trapezoid(const std::function<double(double)>& g, double b, int n)
        : g_(g), b_(b), n_(n) {
        const double h = b_ / n_;
        CompensatedSum s;
        CompensatedSum a;
        for (int i = 0; i <= n_; ++i) {
            const double v = g_(i * h);
            const double w = (i == 0 || i == n_) ? 0.5 : 1.0;
            s.add(w * v);
            a.add(w * std::fabs(v));
        }
        raw_ = s;
        raw_abs_ = a;
    }

    TrapezoidState estimate() const {
        const double h = b_ / n_;
        return {raw_.value() * h, raw_abs_.value() * h};
    }

    void refine() {
        const double h = b_ / (2.0 * n_);
        for (long i = 0; i < n_; ++i) {
            const double v = g_((2 * i + 1) * h);
            raw_.add(v);
            raw_abs_.add(std::fabs(v));
        }
        n_ *= 2;
    }

    long steps() const noexcept { return n_; }

private:
    const std::function<double(double)>& g_;
    double b_;
    long n_;
    CompensatedSum raw_;
    CompensatedSum raw_abs_;
};

void check_finite_profile(const RadialProfile& f, double u_max) {
    const double f0 = f(0.0);
    if (!std::isfinite(f0)) throw InvalidArgument("custom correlation: f(0) is not finite");
    const double tail = f(u_max);
    if (!std::isfinite(tail) || std::fabs(tail) >= 1e-12)
        throw InvalidArgument("custom correlation: |f(u_max)| = " + format_number(std::fabs(tail)) +
                              " is not below 1e-12 at u_max = " + format_number(u_max));
}

// Simpson integral of g over [0, b] per the quadrature config.
double simpson(const std::function<double(double)>& g, double b, const QuadratureConfig& q) {
    if (q.rule == QuadratureRule::fixed_simpson) {
        Trapezoid coarse(g, b, q.n_steps / 2);
        const double t_coarse = coarse.estimate().sum;
        coarse.refine();
        return (4.0 * coarse.estimate().sum - t_coarse) / 3.0;
    }

    Trapezoid trap(g, b, q.n_steps / 2);
    double t_prev = trap.estimate().sum;
    trap.refine();
    TrapezoidState cur = trap.estimate();
    double s_prev = (4.0 * cur.sum - t_prev) / 3.0;
    t_prev = cur.sum;
    for (int r = 0; r < q.max_refinements; ++r) {
        trap.refine();
        cur = trap.estimate();
        const double s = (4.0 * cur.sum - t_prev) / 3.0;
        const double diff = std::fabs(s - s_prev);
        if (diff <= q.rel_tol * std::fabs(s) || diff <= kNoiseFloor * cur.abs_sum)
            return s + (s - s_prev) / 15.0;
        s_prev = s;
        t_prev = cur.sum;
    }
    throw QuadratureNonConvergence("hankel_transform_3d: no convergence to " +
                                   format_number(q.rel_tol) + " after " +
                                   std::to_string(trap.steps()) + " steps");
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(u_max > 0.0) || !std::isfinite(u_max))
        throw InvalidArgument("quadrature: u_max must be > 0");
    if (n_steps < 16 || n_steps % 2 != 0)
        throw InvalidArgument("quadrature: n_steps must be even and >= 16");
    if (!(rel_tol > 0.0)) throw InvalidArgument("quadrature: rel_tol must be > 0");
    if (max_refinements < 1) throw InvalidArgument("quadrature: max_refinements must be >= 1");
}

QuadratureConfig default_quadrature(double decay_length) {
    QuadratureConfig q;
    q.u_max = std::max(10.0 * decay_length, 20.0);
    return q;
}

NearestNeighbor::NearestNeighbor(double eta) : eta_(eta) {
    if (!(std::fabs(eta_) <= 1.0)) throw InvalidArgument("NearestNeighbor requires |eta| <= 1");
}

GaussianDecay::GaussianDecay(double xi) : xi_(xi) {
    if (!(xi_ > 0.0) || !std::isfinite(xi_)) throw InvalidArgument("GaussianDecay requires xi > 0");
}

double GaussianDecay::operator()(double u) const noexcept {
    const double r = u / xi_;
    return std::exp(-r * r);
}

CustomRadial::CustomRadial(RadialProfile f, QuadratureConfig quad, std::string label)
    : profile_(std::make_shared<const RadialProfile>(std::move(f))),
      quad_(quad),
      label_(std::move(label)) {
    if (!*profile_) throw InvalidArgument("custom correlation: empty profile");
    quad_.validate();
    check_finite_profile(*profile_, quad_.u_max);
}

std::string describe(const CorrelationModel& m) {
    return std::visit(overloaded{
                          [](const Uncorrelated&) { return std::string("uncorrelated"); },
                          [](const NearestNeighbor& nn) { return "eta=" + format_number(nn.eta()); },
                          [](const GaussianDecay& g) { return "xi=" + format_number(g.xi()); },
                          [](const CustomRadial& c) { return c.label(); },
                      },
                      m);
}

double structure_factor(const CorrelationModel& m, const WaveVector& k, const LatticeSpec& l) {
    return std::visit(
        overloaded{
            [](const Uncorrelated&) { return 1.0; },
            [&](const NearestNeighbor& nn) { return 1.0 + nn.eta() * cosine_sum(k, l); },
            [&](const GaussianDecay& g) {
                const double xi = g.xi();
                return std::pow(std::numbers::pi, 1.5) * xi * xi * xi *
                       std::exp(-0.25 * norm_sq(k) * xi * xi) / l.cell_volume();
            },
            [&](const CustomRadial& c) {
                return hankel_transform_3d(c.profile(), std::sqrt(norm_sq(k)), c.quadrature()) /
                       l.cell_volume();
            },
        },
        m);
}

double log_abs_structure_factor(const CorrelationModel& m, const WaveVector& k,
                                const LatticeSpec& l) {
    if (const auto* g = std::get_if<GaussianDecay>(&m)) {
        const double xi = g->xi();
        return 1.5 * std::log(std::numbers::pi) + 3.0 * std::log(xi) - 0.25 * norm_sq(k) * xi * xi -
               std::log(l.cell_volume());
    }
    return std::log(std::fabs(structure_factor(m, k, l)));
}

double correlation_at_offset(const CorrelationModel& m, const std::array<int, 3>& n,
                             const LatticeSpec& l) {
    const auto& d = l.spacing();
    const bool origin = n[0] == 0 && n[1] == 0 && n[2] == 0;
    auto radius = [&] {
        double r2 = 0.0;
        for (int mu = 0; mu < kDimension; ++mu) r2 += (n[mu] * d[mu]) * (n[mu] * d[mu]);
        return std::sqrt(r2);
    };
    return std::visit(overloaded{
                          [&](const Uncorrelated&) { return origin ? 1.0 : 0.0; },
                          [&](const NearestNeighbor& nn) {
                              if (origin) return 1.0;
                              // eta/2 on each of the six neighbours, so the lattice
                              // sum reproduces 1 + eta sum_mu cos(k_mu d_mu)
                              const int manhattan = std::abs(n[0]) + std::abs(n[1]) + std::abs(n[2]);
                              return manhattan == 1 ? 0.5 * nn.eta() : 0.0;
                          },
                          [&](const GaussianDecay& g) { return g(radius()); },
                          [&](const CustomRadial& c) { return c(radius()); },
                      },
                      m);
}

double discrete_lattice_ft(const CorrelationModel& m, const WaveVector& k, const LatticeSpec& l) {
    const auto& n = l.sites();
    const auto& d = l.spacing();
    CompensatedSum re;
    CompensatedSum im;
    CompensatedSum magnitude;
    for (int nx = -n[0] / 2; nx < n[0] / 2; ++nx)
        for (int ny = -n[1] / 2; ny < n[1] / 2; ++ny)
            for (int nz = -n[2] / 2; nz < n[2] / 2; ++nz) {
                const double f = correlation_at_offset(m, {nx, ny, nz}, l);
                if (f == 0.0) continue;
                const double phase = k[0] * d[0] * nx + k[1] * d[1] * ny + k[2] * d[2] * nz;
                re.add(f * std::cos(phase));
                im.add(f * std::sin(phase));
                magnitude.add(std::fabs(f));
            }
    const double real = re.value();
    const double imag = im.value();
    const double tol = std::max(kImagTol * std::fabs(real), 1e-13 * magnitude.value());
    if (std::fabs(imag) > tol)
        throw NumericalError("discrete_lattice_ft: imaginary residue " + format_number(imag) +
                             " exceeds tolerance; k is not on the unshifted grid or f is not even");
    return real;
}

double hankel_transform_3d(const RadialProfile& f, double k_mag, const QuadratureConfig& q) {
    q.validate();
    if (!(k_mag >= 0.0)) throw InvalidArgument("hankel_transform_3d: k must be >= 0");
    if (k_mag < kSmallK) {
        const std::function<double(double)> g = [&](double u) { return f(u) * u * u; };
        return 4.0 * std::numbers::pi * simpson(g, q.u_max, q);
    }
    const std::function<double(double)> g = [&](double u) { return f(u) * u * std::sin(k_mag * u); };
    return 4.0 * std::numbers::pi / k_mag * simpson(g, q.u_max, q);
}

TabulatedProfile::TabulatedProfile(std::vector<std::pair<double, double>> nodes)
    : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw InvalidArgument("tabulated profile needs at least two rows");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i].first) || !std::isfinite(nodes_[i].second))
            throw InvalidArgument("tabulated profile: non-finite entry");
        if (i > 0 && !(nodes_[i].first > nodes_[i - 1].first))
            throw InvalidArgument("tabulated profile: u must be strictly increasing");
    }
    if (nodes_.front().first != 0.0) throw InvalidArgument("tabulated profile must start at u = 0");
}

TabulatedProfile TabulatedProfile::parse(std::istream& in) {
    std::vector<std::pair<double, double>> nodes;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        double u = 0.0;
        double f = 0.0;
        if (!(row >> u)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw InvalidArgument("tabulated profile line " + std::to_string(line_no) +
                                  ": expected two numbers");
        }
        std::string extra;
        if (!(row >> f) || (row >> extra))
            throw InvalidArgument("tabulated profile line " + std::to_string(line_no) +
                                  ": expected two numbers");
        nodes.emplace_back(u, f);
    }
    return TabulatedProfile(std::move(nodes));
}

TabulatedProfile TabulatedProfile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open profile file " + path.string());
    return parse(in);
}

double TabulatedProfile::operator()(double u) const noexcept {
    if (u < 0.0) u = -u;
    if (u >= nodes_.back().first) return u == nodes_.back().first ? nodes_.back().second : 0.0;
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), u,
                                     [](double x, const auto& node) { return x < node.first; });
    const auto& [u1, f1] = *it;
    const auto& [u0, f0] = *(it - 1);
    return f0 + (f1 - f0) * (u - u0) / (u1 - u0);
}

}  // namespace magnonkin
