#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "robinlab/report.hpp"

namespace robinlab {

/// Parameters of the semilinear Robin problem on a ball (and of its obstacle
/// and epsilon-regularised variants).
struct RadialParams {
    int n = 2;          // dimension
    double q = 1.0;     // exponent of the bulk term, in [1, 2]
    double beta = 1.0;  // Robin coefficient
    double c = 0.0;     // obstacle level
    double eps = 0.0;   // regularisation exponent of the trace term, in [0, 1)

    /// Throws InvalidInput naming the offending field.
    void validate() const;
};

enum class BoundaryMode { robin, obstacle_contact, modified_robin };

std::string_view to_string(BoundaryMode m);

double unit_ball_volume(int n);
double ball_volume(int n, double radius);
double sphere_area(int n, double radius);

/// Normalised bulk nonlinearity ((c + v)^q - c^q) / q.
double bulk_density(const RadialParams& p, double v);

/// Outer boundary law psi'(R) + beta (psi(R) + c (1 + eps) psi(R)^eps).
/// The trace term uses max(psi, 0); with eps = 0 it reduces to c.
double boundary_residual(const RadialParams& p, double psi, double dpsi);

/// Sampled solution of
///     psi'' + (n - 1) psi' / r + mu (psi + c)^(q - 1) = 0,   psi'(0) = 0,
/// on [0, R], where mu = `source_scale` (1 except for the linear eigenproblem
/// q = 2, c = 0, where mu is the first Robin eigenvalue of B_R).
///
/// Construction checks every invariant: nonnegativity, psi'(0) = 0, the ODE
/// residual (finite differences on the stored grid), consistency of dpsi
/// with psi, monotonicity of the Hamiltonian, and the boundary residual.
/// A violation raises InvalidInput.
class RadialProfile {
public:
    static constexpr double ode_tolerance = 1e-8;
    static constexpr double bc_tolerance = 1e-9;
    static constexpr double monotonicity_slack = 1e-10;

    RadialProfile(RadialParams params, double radius, std::vector<double> r,
                  std::vector<double> psi, std::vector<double> dpsi, BoundaryMode mode,
                  double source_scale = 1.0);

    const RadialParams& params() const { return params_; }
    double radius() const { return radius_; }
    std::span<const double> r() const { return r_; }
    std::span<const double> psi() const { return psi_; }
    std::span<const double> dpsi() const { return dpsi_; }
    BoundaryMode mode() const { return mode_; }
    double source_scale() const { return source_scale_; }
    double bc_residual() const { return bc_residual_; }
    double ode_residual() const { return ode_residual_; }
    std::size_t steps() const { return r_.size() - 1; }

    double hamiltonian(std::size_t i) const;
    std::vector<double> hamiltonian() const;

    /// psi'(R) + beta c: nonnegative whenever the obstacle binds.
    double complementarity() const;

private:
    RadialParams params_;
    double radius_;
    std::vector<double> r_, psi_, dpsi_;
    BoundaryMode mode_;
    double source_scale_;
    double bc_residual_ = 0.0;
    double ode_residual_ = 0.0;
};

struct RadialOptions {
    int steps = 4096;        // must be even (composite Simpson)
    int max_bisection = 400;
    int max_widen = 60;
};

/// Shooting on psi(0) for the minimiser on the ball B_R.
RadialProfile solve_ball(const RadialParams& params, double radius, const RadialOptions& opts = {});

struct BallEnergy {
    double E = 0.0;
    double dirichlet = 0.0;  // 1/2 int |psi'|^2
    double boundary = 0.0;   // beta/2 Per (psi(R)^2 + 2 c psi(R)^(1+eps))
    double bulk = 0.0;       // -int Theta(psi)
    std::optional<double> lambda_q;
};

/// Energy of the profile by composite Simpson with weight n omega_n r^(n-1).
/// lambda_q is filled only for q < 2 and c = 0.
BallEnergy ball_energy(const RadialProfile& profile);

/// Same functional evaluated on raw samples (uniform grid on [0, radius],
/// even number of intervals). Used for profiles that are not ODE solutions,
/// e.g. dilations.
BallEnergy radial_energy(const RadialParams& params, double radius, std::span<const double> r,
                         std::span<const double> psi, std::span<const double> dpsi);

/// lambda_q = ((2q / (q - 2)) E)^((q - 2) / q); requires q < 2 and E < 0.
double lambda_from_energy(double energy, double q);
/// Inverse relation E = ((q - 2) / (2q)) lambda^(q / (q - 2)).
double energy_from_lambda(double lambda, double q);

/// Convenience: E(B_R) (or E^c(B_R) for c > 0) through solve_ball.
BallEnergy ball_minimum(const RadialParams& params, double radius, const RadialOptions& opts = {});

/// First Robin eigenvalue of the Laplacian on B_R, by bisection on the
/// spectral parameter of the radial shooting problem.
double eigenvalue_q2_ball(int n, double beta, double radius, const RadialOptions& opts = {});

/// lambda_q(B_R) for q in [1, 2]: through the energy for q < 2 and the
/// eigenvalue for q = 2.
double ball_lambda_q(int n, double q, double beta, double radius, const RadialOptions& opts = {});

/// H(r) = 1/2 psi'^2 + (mu/q)(c + psi)^q must be nonincreasing with
/// dH/dr = -((n - 1)/r) psi'^2.
InequalityReport hamiltonian_monotonicity(const RadialProfile& profile);

struct AnnulusOptions {
    int steps = 2048;
    int scan_points = 200;
    double threshold = 1e-4;
};

/// Stationarity residual of the annulus B_{r2} \ B_{r1} for the regularised
/// functional. Passes when no admissible profile exists or the residual is at
/// least `threshold`.
InequalityReport annulus_exclusion(const RadialParams& params, double r1, double r2,
                                   const AnnulusOptions& opts = {});

struct PenalizedOptions {
    int grid = 128;
    RadialOptions radial{1024};
};

struct PenalizedBallResult {
    double rho_star = 0.0;
    double r_m = 0.0;
    double threshold = 0.0;  // k0 = -E(B_{r_m}) / (2 |B_{r_m}|)
    std::vector<double> rho;
    std::vector<double> energy;  // E(B_rho)
    InequalityReport report;
};

/// Grid argmin of rho -> E(B_rho) + 2k|B_rho| over (0, r_m], |B_{r_m}| = m.
PenalizedBallResult penalized_ball_argmin(const RadialParams& params, double m, double k,
                                          const PenalizedOptions& opts = {});

/// Columns r, psi, dpsi, H.
void write_profile_csv(std::ostream& os, const RadialProfile& profile);

}  // namespace robinlab
