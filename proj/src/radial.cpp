#include "robinlab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "robinlab/error.hpp"

namespace robinlab {

void RadialParams::validate() const {
    if (n < 2) throw InvalidInput("n must be >= 2");
    if (!(q >= 1.0 && q <= 2.0)) throw InvalidInput("q must lie in [1, 2]");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidInput("beta must be > 0");
    if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidInput("c must be >= 0");
    if (!(eps >= 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in [0, 1)");
}

std::string_view to_string(BoundaryMode m) {
    switch (m) {
        case BoundaryMode::robin: return "robin";
        case BoundaryMode::obstacle_contact: return "obstacle_contact";
        case BoundaryMode::modified_robin: return "modified_robin";
    }
    return "unknown";
}

double unit_ball_volume(int n) {
    if (n < 1) throw InvalidInput("dimension must be >= 1");
    // omega_n = omega_{n-2} * 2 pi / n
    double w = (n % 2 == 1) ? 2.0 : std::numbers::pi;
    for (int k = (n % 2 == 1) ? 3 : 4; k <= n; k += 2) w *= 2.0 * std::numbers::pi / k;
    return w;
}

double ball_volume(int n, double radius) { return unit_ball_volume(n) * std::pow(radius, n); }

double sphere_area(int n, double radius) {
    return n * unit_ball_volume(n) * std::pow(radius, n - 1);
}

double bulk_density(const RadialParams& p, double v) {
    return (std::pow(p.c + v, p.q) - std::pow(p.c, p.q)) / p.q;
}

namespace {

/// psi^(1+eps) and psi^eps with the conventions 0^0 = 1 and negative values
/// clamped to zero.
double trace_power(double psi, double e) {
    psi = std::max(psi, 0.0);
    if (e == 0.0) return 1.0;
    return std::pow(psi, e);
}

}  // namespace

double boundary_residual(const RadialParams& p, double psi, double dpsi) {
    return dpsi + p.beta * (psi + p.c * (1.0 + p.eps) * trace_power(psi, p.eps));
}

namespace {

struct Ode {
    int n;
    double q;
    double c;
    double mu;

    /// (psi + c)^(q-1) extended to nonpositive arguments for shooting.
    double source(double psi) const {
        const double s = psi + c;
        if (q == 1.0) return mu;
        if (q == 2.0) return mu * s;
        return s > 0.0 ? mu * std::pow(s, q - 1.0) : 0.0;
    }
    double dsource(double psi) const {
        const double s = psi + c;
        if (q == 1.0) return 0.0;
        if (q == 2.0) return mu;
        return s > 0.0 ? mu * (q - 1.0) * std::pow(s, q - 2.0) : 0.0;
    }
    void rhs(double r, double psi, double p, double& dpsi, double& dp) const {
        dpsi = p;
        dp = -(n - 1) * p / r - source(psi);
    }
};

struct Trajectory {
    std::vector<double> r, psi, dpsi;
};

struct Endpoint {
    double psi;
    double dpsi;
    double min_psi;
};

/// Classical RK4 from (r0, psi, p) over `steps` steps of size h.
Endpoint rk4(const Ode& ode, double r0, double h, int steps, double psi, double p,
             Trajectory* out) {
    double min_psi = psi;
    for (int i = 0; i < steps; ++i) {
        const double r = r0 + h * i;
        double k1x, k1p, k2x, k2p, k3x, k3p, k4x, k4p;
        ode.rhs(r, psi, p, k1x, k1p);
        ode.rhs(r + 0.5 * h, psi + 0.5 * h * k1x, p + 0.5 * h * k1p, k2x, k2p);
        ode.rhs(r + 0.5 * h, psi + 0.5 * h * k2x, p + 0.5 * h * k2p, k3x, k3p);
        ode.rhs(r + h, psi + h * k3x, p + h * k3p, k4x, k4p);
        psi += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        min_psi = std::min(min_psi, psi);
        if (out) {
            out->r.push_back(r0 + h * (i + 1));
            out->psi.push_back(psi);
            out->dpsi.push_back(p);
        }
    }
    return {psi, p, min_psi};
}

/// Integrates from the center with psi(0) = a. The first step uses the
/// series a + b2 r^2 + b4 r^4 to clear the (n-1)/r singularity.
Endpoint shoot_center(const Ode& ode, double radius, int steps, double a, Trajectory* out) {
    const double h = radius / steps;
    const double b2 = -ode.source(a) / (2.0 * ode.n);
    const double b4 = -ode.dsource(a) * b2 / (4.0 * (ode.n + 2));
    const double psi1 = a + b2 * h * h + b4 * h * h * h * h;
    const double p1 = 2.0 * b2 * h + 4.0 * b4 * h * h * h;
    if (out) {
        out->r.assign({0.0, h});
        out->psi.assign({a, psi1});
        out->dpsi.assign({0.0, p1});
        out->r.reserve(steps + 1);
        out->psi.reserve(steps + 1);
        out->dpsi.reserve(steps + 1);
    }
    Endpoint e = rk4(ode, h, h, steps - 1, psi1, p1, out);
    e.min_psi = std::min({e.min_psi, a, psi1});
    if (out) {
        // Grid nodes are recomputed as i*h so that the grid is exactly uniform.
        for (int i = 0; i <= steps; ++i) out->r[i] = radius * i / steps;
    }
    return e;
}

/// Bisection for a root of f on (lo, hi], assuming f(lo) < 0 <= f(hi).
/// Returns the end of the final bracket where f >= 0.
template <class F>
double bisect(F&& f, double lo, double hi, int max_iter) {
    for (int i = 0; i < max_iter; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return hi;
}

/// Fourth-order central difference of `v` at interior node i.
double central4(std::span<const double> v, std::size_t i, double h) {
    return (-v[i + 2] + 8.0 * v[i + 1] - 8.0 * v[i - 1] + v[i - 2]) / (12.0 * h);
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

}  // namespace

RadialProfile::RadialProfile(RadialParams params, double radius, std::vector<double> r,
                             std::vector<double> psi, std::vector<double> dpsi, BoundaryMode mode,
                             double source_scale)
    : params_(params),
      radius_(radius),
      r_(std::move(r)),
      psi_(std::move(psi)),
      dpsi_(std::move(dpsi)),
      mode_(mode),
      source_scale_(source_scale) {
    params_.validate();
    if (!(radius_ > 0.0)) throw InvalidInput("profile radius must be positive");
    const std::size_t m = r_.size();
    if (m < 9 || psi_.size() != m || dpsi_.size() != m) {
        throw InvalidInput("profile needs at least 8 intervals and matching arrays");
    }
    const double h = radius_ / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (std::abs(r_[i] - h * static_cast<double>(i)) > 1e-12 * radius_) {
            throw InvalidInput("profile grid must be uniform on [0, R]");
        }
        if (!(psi_[i] >= 0.0) || !std::isfinite(dpsi_[i])) {
            throw InvalidInput("profile value at r=" + fmt(r_[i]) + " is negative or not finite");
        }
    }
    if (dpsi_[0] != 0.0) throw InvalidInput("profile must satisfy psi'(0) = 0");

    const Ode ode{params_.n, params_.q, params_.c, source_scale_};
    double scale = 1.0;
    for (double v : psi_) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 2; i + 2 < m; ++i) {
        const double d2 = central4(dpsi_, i, h);
        const double res = d2 + (params_.n - 1) * dpsi_[i] / r_[i] + ode.source(psi_[i]);
        ode_residual_ = std::max(ode_residual_, std::abs(res));
        if (std::abs(central4(psi_, i, h) - dpsi_[i]) > 1e-7 * scale) {
            throw InvalidInput("profile derivative inconsistent with values at r=" + fmt(r_[i]));
        }
    }
    if (ode_residual_ > ode_tolerance) {
        throw InvalidInput("profile violates the radial ODE: residual " + fmt(ode_residual_));
    }

    bc_residual_ = mode_ == BoundaryMode::obstacle_contact
                       ? psi_.back()
                       : boundary_residual(params_, psi_.back(), dpsi_.back());
    if (std::abs(bc_residual_) > bc_tolerance) {
        throw InvalidInput("profile boundary residual " + fmt(bc_residual_) + " too large");
    }
    if (mode_ == BoundaryMode::obstacle_contact && complementarity() < -bc_tolerance) {
        throw InvalidInput("obstacle contact with psi'(R) + beta c < 0");
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (hamiltonian(i + 1) > hamiltonian(i) + monotonicity_slack) {
            throw InvalidInput("profile Hamiltonian increases at r=" + fmt(r_[i]));
        }
    }
}

double RadialProfile::hamiltonian(std::size_t i) const {
    return 0.5 * dpsi_[i] * dpsi_[i] +
           source_scale_ / params_.q * std::pow(params_.c + psi_[i], params_.q);
}

std::vector<double> RadialProfile::hamiltonian() const {
    std::vector<double> h(r_.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = hamiltonian(i);
    return h;
}

double RadialProfile::complementarity() const {
    return dpsi_.back() + params_.beta * params_.c;
}

double eigenvalue_q2_ball(int n, double beta, double radius, const RadialOptions& opts) {
    if (n < 2) throw InvalidInput("n must be >= 2");
    if (!(beta > 0.0)) throw InvalidInput("beta must be > 0");
    if (!(radius > 0.0)) throw InvalidInput("radius must be > 0");
    // Rayleigh quotient of R^2 - r^2 bounds the first Dirichlet eigenvalue,
    // which bounds the first Robin one; the second radial Robin eigenvalue
    // lies above it.
    const double dn = n;
    const double upper = 4.0 / (dn + 2.0) /
                         (1.0 / dn - 2.0 / (dn + 2.0) + 1.0 / (dn + 4.0)) / (radius * radius);
    auto residual = [&](double lambda) {
        const Ode ode{n, 2.0, 0.0, lambda};
        const auto e = shoot_center(ode, radius, opts.steps, 1.0, nullptr);
        return e.dpsi + beta * e.psi;
    };
    if (!(residual(upper) < 0.0)) {
        throw SolverFailure("eigenvalue_q2_ball: no sign change on [0, " + fmt(upper) + "]");
    }
    // residual(0) = beta > 0; bisect on the negated residual.
    return bisect([&](double l) { return -residual(l); }, 0.0, upper, opts.max_bisection);
}

RadialProfile solve_ball(const RadialParams& params, double radius, const RadialOptions& opts) {
    params.validate();
    if (!(radius > 0.0)) throw InvalidInput("ball radius must be positive");
    if (opts.steps < 8 || opts.steps % 2 != 0) throw InvalidInput("steps must be even and >= 8");

    const BoundaryMode robin_mode =
        params.eps > 0.0 ? BoundaryMode::modified_robin : BoundaryMode::robin;

    auto build = [&](const Ode& ode, double a, BoundaryMode mode) {
        Trajectory t;
        const auto e = shoot_center(ode, radius, opts.steps, a, &t);
        if (e.min_psi < 0.0) {
            throw SolverFailure("solve_ball: psi becomes negative in the interior (psi(0)=" +
                                fmt(a) + "); parameter regime not admissible");
        }
        return RadialProfile(params, radius, std::move(t.r), std::move(t.psi), std::move(t.dpsi),
                             mode, ode.mu);
    };

    if (params.q == 2.0 && params.c == 0.0) {
        // Linear homogeneous case: the profile is the first Robin eigenfunction.
        const double lambda = eigenvalue_q2_ball(params.n, params.beta, radius, opts);
        return build(Ode{params.n, 2.0, 0.0, lambda}, 1.0, robin_mode);
    }

    const Ode ode{params.n, params.q, params.c, 1.0};
    auto endpoint = [&](double a) { return shoot_center(ode, radius, opts.steps, a, nullptr); };
    auto dirichlet = [&](double a) { return endpoint(a).psi; };
    auto robin = [&](double a) {
        const auto e = endpoint(a);
        return boundary_residual(params, e.psi, e.dpsi);
    };

    const double n = params.n;
    double hi = 10.0 * (radius / (n * params.beta) + radius * radius / (2.0 * n) + params.c);
    int widen = 0;
    while (!(dirichlet(hi) > 0.0 && robin(hi) > 0.0)) {
        if (++widen > opts.max_widen) {
            throw SolverFailure("solve_ball: bracket exhausted at [0, " + fmt(hi) + "]");
        }
        hi *= 2.0;
    }

    // Center value at which psi(R) = 0; the Robin root lies above it unless
    // the obstacle binds.
    const double a_contact = bisect(dirichlet, 0.0, hi, opts.max_bisection);
    if (robin(a_contact) >= 0.0) {
        if (params.eps == 0.0 && params.c > 0.0) {
            return build(ode, a_contact, BoundaryMode::obstacle_contact);
        }
        throw SolverFailure("solve_ball: boundary law has no root with psi(R) > 0");
    }
    const double a = bisect(robin, a_contact, hi, opts.max_bisection);
    return build(ode, a, robin_mode);
}

BallEnergy radial_energy(const RadialParams& params, double radius, std::span<const double> r,
                         std::span<const double> psi, std::span<const double> dpsi) {
    const std::size_t m = r.size();
    if (m < 3 || (m - 1) % 2 != 0 || psi.size() != m || dpsi.size() != m) {
        throw InvalidInput("radial_energy needs an even number of uniform intervals");
    }
    const double h = radius / static_cast<double>(m - 1);
    const double surface = sphere_area(params.n, 1.0);
    double dir = 0.0, bulk = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double w = (i == 0 || i == m - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double jac = surface * std::pow(r[i], params.n - 1);
        dir += w * jac * dpsi[i] * dpsi[i];
        bulk += w * jac * bulk_density(params, psi[i]);
    }
    BallEnergy e;
    e.dirichlet = 0.5 * dir * h / 3.0;
    e.bulk = -bulk * h / 3.0;
    const double pr = std::max(psi.back(), 0.0);
    e.boundary = 0.5 * params.beta * sphere_area(params.n, radius) *
                 (pr * pr + 2.0 * params.c * pr * trace_power(pr, params.eps));
    e.E = e.dirichlet + e.boundary + e.bulk;
    return e;
}

BallEnergy ball_energy(const RadialProfile& profile) {
    const auto& p = profile.params();
    BallEnergy e = radial_energy(p, profile.radius(), profile.r(), profile.psi(), profile.dpsi());
    if (p.q < 2.0 && p.c == 0.0 && e.E < 0.0) e.lambda_q = lambda_from_energy(e.E, p.q);
    return e;
}

double lambda_from_energy(double energy, double q) {
    if (!(q >= 1.0 && q < 2.0)) throw InvalidInput("lambda_from_energy requires q in [1, 2)");
    if (!(energy < 0.0)) throw InvalidInput("lambda_from_energy requires E < 0");
    return std::pow(2.0 * q / (q - 2.0) * energy, (q - 2.0) / q);
}

double energy_from_lambda(double lambda, double q) {
    if (!(q >= 1.0 && q < 2.0)) throw InvalidInput("energy_from_lambda requires q in [1, 2)");
    if (!(lambda > 0.0)) throw InvalidInput("energy_from_lambda requires lambda > 0");
    return (q - 2.0) / (2.0 * q) * std::pow(lambda, q / (q - 2.0));
}

BallEnergy ball_minimum(const RadialParams& params, double radius, const RadialOptions& opts) {
    return ball_energy(solve_ball(params, radius, opts));
}

double ball_lambda_q(int n, double q, double beta, double radius, const RadialOptions& opts) {
    if (q == 2.0) return eigenvalue_q2_ball(n, beta, radius, opts);
    RadialParams p{n, q, beta, 0.0, 0.0};
    const auto e = ball_minimum(p, radius, opts);
    return lambda_from_energy(e.E, q);
}

InequalityReport hamiltonian_monotonicity(const RadialProfile& profile) {
    const auto h = profile.hamiltonian();
    const auto r = profile.r();
    const auto dpsi = profile.dpsi();
    const int n = profile.params().n;
    double min_drop = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i + 1 < h.size(); ++i) min_drop = std::min(min_drop, h[i] - h[i + 1]);

    const double step = profile.radius() / static_cast<double>(profile.steps());
    double identity_error = 0.0;
    for (std::size_t i = 2; i + 2 < h.size(); ++i) {
        const double exact = -(n - 1) / r[i] * dpsi[i] * dpsi[i];
        identity_error = std::max(identity_error, std::abs(central4(h, i, step) - exact));
    }

    auto report = InequalityReport::make("hamiltonian_monotonicity", min_drop, 0.0,
                                         RadialProfile::monotonicity_slack);
    report.with_input("n", n)
        .with_input("q", profile.params().q)
        .with_input("beta", profile.params().beta)
        .with_input("c", profile.params().c)
        .with_input("eps", profile.params().eps)
        .with_input("R", profile.radius())
        .with_term("H", Provenance::radial);
    // Allowed error 1e-6 against the observed identity error.
    report.add_part(InequalityReport::make("dH/dr identity", 1e-6, identity_error, 1e-15)
                        .with_term("dH/dr", Provenance::radial));
    return report;
}

InequalityReport annulus_exclusion(const RadialParams& params, double r1, double r2,
                                   const AnnulusOptions& opts) {
    params.validate();
    if (!(r1 > 0.0 && r2 > r1)) throw InvalidInput("annulus requires 0 < r1 < r2");
    const Ode ode{params.n, params.q, params.c, 1.0};
    const double h = (r2 - r1) / opts.steps;
    auto inner_slope = [&](double a) {
        return params.beta * (a + params.c * (1.0 + params.eps) * trace_power(a, params.eps));
    };
    auto shoot = [&](double a) { return rk4(ode, r1, h, opts.steps, a, inner_slope(a), nullptr); };
    auto residual = [&](const Endpoint& e) { return boundary_residual(params, e.psi, e.dpsi); };

    const double n = params.n;
    const double scale = r2 / (n * params.beta) + r2 * r2 / (2.0 * n) + params.c;
    std::optional<double> root;
    double prev_a = 0.0, prev_f = 0.0;
    bool prev_ok = false;
    for (int k = 0; k < opts.scan_points && !root; ++k) {
        const double a = scale * std::pow(10.0, -8.0 + 11.0 * k / (opts.scan_points - 1));
        const auto e = shoot(a);
        const bool ok = e.min_psi > 0.0;
        const double f = ok ? residual(e) : 0.0;
        if (ok && prev_ok && prev_f < 0.0 && f >= 0.0) {
            root = bisect([&](double x) { return residual(shoot(x)); }, prev_a, a, 200);
        }
        prev_a = a;
        prev_f = f;
        prev_ok = ok;
    }

    auto report = InequalityReport::make("annulus_exclusion", 0.0, 0.0, 1e-12);
    report.with_input("n", params.n)
        .with_input("q", params.q)
        .with_input("beta", params.beta)
        .with_input("c", params.c)
        .with_input("eps", params.eps)
        .with_input("r1", r1)
        .with_input("r2", r2)
        .with_term("stationarity residual", Provenance::radial);
    if (!root || shoot(*root).min_psi <= 0.0) {
        report.note = "no admissible annulus profile";
        report.finalize();
        return report;
    }

    const auto e = shoot(*root);
    const double psi1 = *root, dpsi1 = inner_slope(psi1);
    const double psi2 = e.psi, dpsi2 = e.dpsi;
    const double c = params.c, q = params.q, beta = params.beta, eps = params.eps;
    auto trace = [&](double v) { return v * v + 2.0 * c * v * trace_power(v, eps); };
    auto ham = [&](double v, double dv) { return 0.5 * dv * dv + std::pow(c + v, q) / q; };
    const double curvature = 0.5 * beta * (n - 1) * (trace(psi1) / r1 + trace(psi2) / r2);
    // First-variation identity before the boundary law is substituted.
    const double raw = 0.5 * (dpsi2 * dpsi2 - dpsi1 * dpsi1) +
                       (bulk_density(params, psi1) - bulk_density(params, psi2)) + curvature +
                       beta * (psi1 + c * (1.0 + eps) * trace_power(psi1, eps)) * dpsi1 +
                       beta * (psi2 + c * (1.0 + eps) * trace_power(psi2, eps)) * dpsi2;
    const double residual_h = ham(psi1, dpsi1) - ham(psi2, dpsi2) + curvature;

    report.lhs = residual_h;
    report.rhs = opts.threshold;
    report.with_input("psi1", psi1).with_input("psi2", psi2).with_input("raw_residual", raw);
    report.finalize();
    return report;
}

PenalizedBallResult penalized_ball_argmin(const RadialParams& params, double m, double k,
                                          const PenalizedOptions& opts) {
    params.validate();
    if (params.c != 0.0 || params.eps != 0.0) {
        throw InvalidInput("penalized_ball_argmin requires c = 0 and eps = 0");
    }
    if (!(m > 0.0)) throw InvalidInput("penalized_ball_argmin requires m > 0");
    if (!(k >= 0.0)) throw InvalidInput("penalized_ball_argmin requires k >= 0");
    if (opts.grid < 4) throw InvalidInput("penalized_ball_argmin needs at least 4 grid points");

    PenalizedBallResult out;
    const int n = params.n;
    out.r_m = std::pow(m / unit_ball_volume(n), 1.0 / n);
    const int g = opts.grid;
    out.rho.resize(g);
    out.energy.resize(g);
    std::vector<double> f(g);
    for (int j = 0; j < g; ++j) {
        out.rho[j] = out.r_m * (j + 1) / g;
        out.energy[j] = ball_minimum(params, out.rho[j], opts.radial).E;
        f[j] = out.energy[j] + 2.0 * k * ball_volume(n, out.rho[j]);
    }
    const auto best = std::min_element(f.begin(), f.end()) - f.begin();
    out.rho_star = out.rho[best];
    out.threshold = -out.energy.back() / (2.0 * ball_volume(n, out.r_m));

    double min_drop = std::numeric_limits<double>::max();
    for (int j = 0; j + 1 < g; ++j) min_drop = std::min(min_drop, out.energy[j] - out.energy[j + 1]);
    double min_slack = std::numeric_limits<double>::max();
    const double d = out.r_m / g;
    for (int j = 1; j + 1 < g; ++j) {
        const double de = (out.energy[j + 1] - out.energy[j - 1]) / (2.0 * d);
        min_slack = std::min(min_slack, n * out.energy[j] / out.rho[j] - de);
    }

    out.report = InequalityReport::make("penalized_ball", 0.0, 0.0, 1e-15);
    out.report.with_input("n", n)
        .with_input("q", params.q)
        .with_input("beta", params.beta)
        .with_input("m", m)
        .with_input("k", k)
        .with_input("k0", out.threshold)
        .with_input("rho_star", out.rho_star)
        .with_term("E(B_rho)", Provenance::radial);
    out.report.add_part(InequalityReport::make("E(B_rho) strictly decreasing", min_drop, 0.0, 1e-15,
                                               true));
    out.report.add_part(InequalityReport::make("dE/drho <= n E / rho", min_slack, 0.0, 1e-6));
    if (k < out.threshold) {
        const double gap = out.r_m - out.rho_star;
        out.report.add_part(
            InequalityReport::make("argmin at r_m", -gap, 0.0, 1e-12 * out.r_m));
    } else {
        out.report.note = "k above threshold k0; argmin not required to be r_m";
    }
    return out;
}

void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::setprecision(12);
    os << "r,psi,dpsi,H\n";
    for (std::size_t i = 0; i < profile.r().size(); ++i) {
        os << profile.r()[i] << ',' << profile.psi()[i] << ',' << profile.dpsi()[i] << ','
           << profile.hamiltonian(i) << '\n';
    }
    os.flags(flags);
    os.precision(prec);
}

}  // namespace robinlab
